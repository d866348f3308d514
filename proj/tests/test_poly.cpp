#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symbreak/polynomial.hpp"
#include "symbreak/ratmat.hpp"

using namespace symbreak;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> QP = {"q1", "p1", "q2", "p2"};

Polynomial P(const std::string& s, const std::vector<std::string>& names = XY) {
    return Polynomial::parse(s, names);
}

Polynomial random_poly(std::mt19937_64& rng, int dim, int max_deg, int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(1, max_terms), coef(-6, 6), den(1, 4);
    Polynomial p(dim);
    const int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        std::vector<int> e(dim, 0);
        int left = std::uniform_int_distribution<int>(0, max_deg)(rng);
        for (int i = 0; i < dim && left > 0; ++i) {
            e[i] = std::uniform_int_distribution<int>(0, left)(rng);
            left -= e[i];
        }
        int c = coef(rng);
        if (c == 0) c = 1;
        Monomial m(e);
        p.set_coeff(m, p.coeff(m) + Rat(c, den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    CHECK(P("(x + y) + (x - y)") == P("2*x"));
    CHECK(P("(x^2 + y^2) * (x^2 + y^2)") == P("x^4 + 2*x^2*y^2 + y^4"));
    CHECK(P("x^2 + y^2").scaled(Rat(3, 2)) == P("3/2*x^2 + 3/2*y^2"));
    CHECK_THROWS(P("x") + Polynomial::variable(3, 0));
}

TEST_CASE("differentiate") {
    CHECK(P("x^2 + y^2").differentiate(0) == P("2*x"));
    CHECK(P("x^2 + y^2").differentiate(1) == P("2*y"));
    CHECK(P("x^3*y - x*y").differentiate(0) == P("3*x^2*y - y"));
    CHECK_THROWS(P("x").differentiate(2));
}

TEST_CASE("evaluate") {
    CHECK(P("x^2 + y^2").evaluate(std::vector<Rat>{Rat(3), Rat(4)}) == Rat(25));
    CHECK(P("x^2 + y^2").evaluate(std::vector<Rat>{Rat(0), Rat(0)}) == Rat(0));
    CHECK(P("x^3*y - x*y").evaluate(std::vector<Rat>{Rat(2), Rat(1)}) == Rat(6));
    CHECK(P("x^2 + y^2").evaluate(std::vector<double>{3.0, 4.0}) == doctest::Approx(25.0));
}

TEST_CASE("compose") {
    const std::vector<std::string> T1 = {"t"};
    Polynomial sq = Polynomial::parse("t^2", T1);
    PolyMap subs({P("x^2 + y^2")});
    CHECK(sq.compose(subs) == P("x^4 + 2*x^2*y^2 + y^4"));
    CHECK(Polynomial::parse("t", T1).compose(subs) == P("x^2 + y^2"));
    const std::vector<std::string> T2 = {"t1", "t2"};
    CHECK(Polynomial::parse("t1*t2", T2).compose(PolyMap({P("x^2"), P("y^2")})) == P("x^2*y^2"));
}

TEST_CASE("gradient") {
    PolyMap g = P("x^2 + y^2").gradient();
    CHECK(g[0] == P("2*x"));
    CHECK(g[1] == P("2*y"));
    PolyMap gc = P("5").gradient();
    CHECK(gc[0].is_zero());
    CHECK(gc[1].is_zero());
    PolyMap g4 = Polynomial::parse("q1*q2 + p1*p2", QP).gradient();
    CHECK(g4[0] == Polynomial::parse("q2", QP));
    CHECK(g4[1] == Polynomial::parse("p2", QP));
    CHECK(g4[2] == Polynomial::parse("q1", QP));
    CHECK(g4[3] == Polynomial::parse("p1", QP));
}

TEST_CASE("poisson bracket") {
    const Pairing pair2 = {{0, 1}};
    CHECK(poisson_bracket(P("x"), P("y"), pair2) == P("1"));
    const Pairing pair4 = {{0, 1}, {2, 3}};
    Polynomial th1 = Polynomial::parse("1/2*q1^2 + 1/2*p1^2", QP);
    Polynomial th3 = Polynomial::parse("q1*q2 + p1*p2", QP);
    Polynomial th4 = Polynomial::parse("q1*p2 - p1*q2", QP);
    CHECK(poisson_bracket(th1, th3, pair4) == th4);
    CHECK(poisson_bracket(th3, th3, pair4).is_zero());
    CHECK_THROWS(poisson_bracket(P("x"), P("y"), Pairing{{0, 0}}));
}

TEST_CASE("bracket axioms on random polynomials") {
    std::mt19937_64 rng(20240901);
    const Pairing pair4 = {{0, 1}, {2, 3}};
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial p = random_poly(rng, 4, 3), q = random_poly(rng, 4, 3), r = random_poly(rng, 4, 3);
        CHECK(poisson_bracket(p, q, pair4) == -poisson_bracket(q, p, pair4));
        // Jacobi identity, exact
        Polynomial jac = poisson_bracket(p, poisson_bracket(q, r, pair4), pair4) +
                         poisson_bracket(q, poisson_bracket(r, p, pair4), pair4) +
                         poisson_bracket(r, poisson_bracket(p, q, pair4), pair4);
        CHECK(jac.is_zero());
        // Leibniz via differentiate
        for (int k = 0; k < 4; ++k)
            CHECK((p * q).differentiate(k) == p * q.differentiate(k) + q * p.differentiate(k));
    }
}

TEST_CASE("evaluate commutes with compose at random rational points") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial outer = random_poly(rng, 2, 3);
        PolyMap subs({random_poly(rng, 2, 2), random_poly(rng, 2, 2)});
        std::vector<Rat> x = {Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
        CHECK(outer.compose(subs).evaluate(x) == outer.evaluate(subs.evaluate(x)));
    }
}

TEST_CASE("canonical serialization round-trips byte-identically") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = random_poly(rng, 2, 4);
        const std::string s = p.to_string(XY);
        Polynomial q = Polynomial::parse(s, XY);
        CHECK(q == p);
        CHECK(q.to_string(XY) == s);
    }
    CHECK(Polynomial::zero(2).to_string(XY) == "0");
    CHECK(P("2*x").to_string(XY) == "2 * x");
    CHECK(P("x^2 - 1/2*y").to_string(XY) == "1 * x^2 + -1/2 * y");
}

TEST_CASE("parser errors carry positions") {
    CHECK_THROWS_AS(P("x + z"), std::invalid_argument);
    CHECK_THROWS_AS(P("1.5*x"), std::invalid_argument);
    CHECK_THROWS_AS(P("x^"), std::invalid_argument);
    CHECK_THROWS_AS(P("(x"), std::invalid_argument);
}

TEST_CASE("exact rational matrices") {
    RatMat a = RatMat::from_rows({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}});
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK((a * *inv).is_identity());
    RatMat sing = RatMat::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
    CHECK(!inverse(sing).has_value());
    CHECK(rank(sing) == 1);
    auto ns = nullspace(sing);
    REQUIRE(ns.size() == 1);
    CHECK(sing.apply(ns[0]) == std::vector<Rat>{Rat(0), Rat(0)});
    auto sol = solve(a, {Rat(5), Rat(11)});
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == std::vector<Rat>{Rat(5), Rat(11)});
    CHECK(!solve(sing, {Rat(1), Rat(0)}).has_value());
}
