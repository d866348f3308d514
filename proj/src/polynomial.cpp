#include "symbreak/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symbreak {

bool grevlex_greater(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    const int n = static_cast<int>(a.exp.size());
    for (int i = n - 1; i >= 0; --i) {
        const int d = a.exp[i] - b.exp[i];
        if (d != 0) return d < 0;
    }
    return false;
}

Polynomial Polynomial::constant(int dim, const Rat& c) {
    Polynomial p(dim);
    if (c != 0) p.terms_[Monomial(dim)] = c;
    return p;
}

Polynomial Polynomial::variable(int dim, int index) {
    if (index < 0 || index >= dim) throw std::out_of_range("variable index out of range");
    Polynomial p(dim);
    Monomial m(dim);
    m.exp[index] = 1;
    p.terms_[m] = 1;
    return p;
}

Polynomial Polynomial::linear_form(const std::vector<Rat>& c) {
    const int dim = static_cast<int>(c.size());
    Polynomial p(dim);
    for (int i = 0; i < dim; ++i) {
        if (c[i] == 0) continue;
        Monomial m(dim);
        m.exp[i] = 1;
        p.terms_[m] = c[i];
    }
    return p;
}

Polynomial Polynomial::from_terms(int dim, const std::vector<std::pair<std::vector<int>, Rat>>& terms) {
    Polynomial p(dim);
    for (const auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != dim) throw std::invalid_argument("exponent arity mismatch");
        Monomial m(e);
        p.set_coeff(m, p.coeff(m) + c);
    }
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();  // leading term has maximal degree
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Rat Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::set_coeff(const Monomial& m, const Rat& c) {
    if (static_cast<int>(m.exp.size()) != dim_) throw std::invalid_argument("monomial arity mismatch");
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

void Polynomial::check_dim(const Polynomial& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("polynomial dimension mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_dim(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.set_coeff(m, r.coeff(m) + c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_dim(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.set_coeff(m, r.coeff(m) - c);
    return r;
}

Polynomial Polynomial::operator-() const { return scaled(Rat(-1)); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_dim(o);
    Polynomial r(dim_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(dim_);
            for (int i = 0; i < dim_; ++i) m.exp[i] = ma.exp[i] + mb.exp[i];
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                Rat c = ca * cb;
                if (c != 0) r.terms_[m] = c;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r(dim_);
    if (c == 0) return r;
    for (const auto& [m, a] : terms_) r.terms_[m] = a * c;
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial r = Polynomial::constant(dim_, 1);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

Polynomial Polynomial::differentiate(int var_index) const {
    if (var_index < 0 || var_index >= dim_) throw std::out_of_range("derivative index out of range");
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_) {
        const int e = m.exp[var_index];
        if (e == 0) continue;
        Monomial d = m;
        d.exp[var_index] = e - 1;
        r.terms_[d] = c * e;
    }
    return r;
}

Rat Polynomial::evaluate(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("evaluation point dimension mismatch");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < dim_; ++i)
            for (int e = 0; e < m.exp[i]; ++e) t *= x[i];
        acc += t;
    }
    return acc;
}

double Polynomial::evaluate(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("evaluation point dimension mismatch");
    // Power tables per variable up to the maximal exponent actually used.
    std::vector<int> maxe(dim_, 0);
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < dim_; ++i) maxe[i] = std::max(maxe[i], m.exp[i]);
    std::vector<std::vector<double>> pw(dim_);
    for (int i = 0; i < dim_; ++i) {
        pw[i].resize(maxe[i] + 1);
        pw[i][0] = 1.0;
        for (int e = 1; e <= maxe[i]; ++e) pw[i][e] = pw[i][e - 1] * x[i];
    }
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = rat_to_double(c);
        for (int i = 0; i < dim_; ++i) t *= pw[i][m.exp[i]];
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::compose(const PolyMap& subs) const {
    if (subs.size() != dim_) throw std::invalid_argument("compose arity mismatch");
    const int n = subs.dim();
    for (int i = 0; i < subs.size(); ++i)
        if (subs[i].dim() != n) throw std::invalid_argument("compose: mixed substitution dimensions");
    // Cache powers of each substituted component.
    std::vector<int> maxe(dim_, 0);
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < dim_; ++i) maxe[i] = std::max(maxe[i], m.exp[i]);
    std::vector<std::vector<Polynomial>> pw(dim_);
    for (int i = 0; i < dim_; ++i) {
        pw[i].reserve(maxe[i] + 1);
        pw[i].push_back(Polynomial::constant(n, 1));
        for (int e = 1; e <= maxe[i]; ++e) pw[i].push_back(pw[i].back() * subs[i]);
    }
    Polynomial acc(n);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(n, c);
        for (int i = 0; i < dim_; ++i)
            if (m.exp[i] > 0) t = t * pw[i][m.exp[i]];
        acc = acc + t;
    }
    return acc;
}

Polynomial Polynomial::substitute_linear(const std::vector<std::vector<Rat>>& m) const {
    if (static_cast<int>(m.size()) != dim_) throw std::invalid_argument("matrix size mismatch");
    std::vector<Polynomial> rows;
    rows.reserve(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (static_cast<int>(m[i].size()) != dim_) throw std::invalid_argument("matrix not square");
        rows.push_back(Polynomial::linear_form(m[i]));
    }
    return compose(PolyMap(std::move(rows)));
}

Polynomial Polynomial::extend_dim(int new_dim) const {
    if (new_dim < dim_) throw std::invalid_argument("extend_dim shrinks polynomial");
    Polynomial r(new_dim);
    for (const auto& [m, c] : terms_) {
        Monomial e(new_dim);
        std::copy(m.exp.begin(), m.exp.end(), e.exp.begin());
        r.terms_[e] = c;
    }
    return r;
}

PolyMap Polynomial::gradient() const {
    std::vector<Polynomial> comps;
    comps.reserve(dim_);
    for (int i = 0; i < dim_; ++i) comps.push_back(differentiate(i));
    return PolyMap(std::move(comps));
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != dim_) throw std::invalid_argument("name list arity mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << rat_to_string(c);
        bool any = false;
        for (int i = 0; i < dim_; ++i) any = any || m.exp[i] > 0;
        if (any) {
            out << " * ";
            bool sep = false;
            for (int i = 0; i < dim_; ++i) {
                if (m.exp[i] == 0) continue;
                if (sep) out << "*";
                sep = true;
                out << names[i];
                if (m.exp[i] > 1) out << "^" << m.exp[i];
            }
        }
    }
    return out.str();
}

namespace {

// Recursive-descent parser over named variables.
struct Parser {
    const std::string& s;
    const std::vector<std::string>& names;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        for (;;) {
            if (accept('+'))
                acc = acc + parse_term();
            else if (accept('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        skip_ws();
        if (accept('-')) return -parse_factor();
        if (accept('+')) return parse_factor();
        Polynomial base = parse_base();
        if (accept('^')) {
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected non-negative integer exponent");
            base = base.pow(std::stoi(s.substr(start, pos - start)));
        }
        return base;
    }

    Polynomial parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        const char c = s[pos];
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos < s.size() && s[pos] == '.') fail("decimal literals are not exact; use num/den");
            std::string num = s.substr(start, pos - start);
            if (accept('/')) {
                skip_ws();
                size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == dstart) fail("expected denominator digits");
                num += "/" + s.substr(dstart, pos - dstart);
            }
            return Polynomial::constant(static_cast<int>(names.size()), rat_from_string(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            const std::string id = s.substr(start, pos - start);
            for (size_t i = 0; i < names.size(); ++i)
                if (names[i] == id)
                    return Polynomial::variable(static_cast<int>(names.size()), static_cast<int>(i));
            pos = start;
            fail("unknown variable '" + id + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, const std::vector<std::string>& names) {
    Parser p{text, names};
    Polynomial r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

void validate_pairing(const Pairing& pairing, int dim) {
    if (dim % 2 != 0) throw std::invalid_argument("Poisson bracket needs even ambient dimension");
    if (static_cast<int>(pairing.size()) * 2 != dim)
        throw std::invalid_argument("pairing must cover all coordinates");
    std::vector<bool> seen(dim, false);
    for (const auto& [q, p] : pairing) {
        if (q < 0 || q >= dim || p < 0 || p >= dim || q == p)
            throw std::invalid_argument("pairing index out of range");
        if (seen[q] || seen[p]) throw std::invalid_argument("pairing reuses a coordinate");
        seen[q] = seen[p] = true;
    }
}

Polynomial poisson_bracket(const Polynomial& p, const Polynomial& q, const Pairing& pairing) {
    if (p.dim() != q.dim()) throw std::invalid_argument("polynomial dimension mismatch");
    validate_pairing(pairing, p.dim());
    Polynomial acc(p.dim());
    for (const auto& [qi, pi] : pairing) {
        acc = acc + p.differentiate(qi) * q.differentiate(pi) - p.differentiate(pi) * q.differentiate(qi);
    }
    return acc;
}

std::vector<Rat> PolyMap::evaluate(const std::vector<Rat>& x) const {
    std::vector<Rat> r;
    r.reserve(comps_.size());
    for (const auto& c : comps_) r.push_back(c.evaluate(x));
    return r;
}

std::vector<double> PolyMap::evaluate(const std::vector<double>& x) const {
    std::vector<double> r;
    r.reserve(comps_.size());
    for (const auto& c : comps_) r.push_back(c.evaluate(x));
    return r;
}

std::vector<std::vector<Polynomial>> PolyMap::jacobian() const {
    std::vector<std::vector<Polynomial>> j;
    j.reserve(comps_.size());
    for (const auto& c : comps_) {
        std::vector<Polynomial> row;
        row.reserve(c.dim());
        for (int v = 0; v < c.dim(); ++v) row.push_back(c.differentiate(v));
        j.push_back(std::move(row));
    }
    return j;
}

}  // namespace symbreak
