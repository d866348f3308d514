#include "symbreak/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include <Eigen/Dense>

#include "symbreak/errors.hpp"

namespace symbreak {

Polynomial derivation(const Polynomial& p, const RatMat& xi) {
    // grad p . (xi x)
    Polynomial acc(p.dim());
    for (int v = 0; v < p.dim(); ++v) {
        std::vector<Rat> row(p.dim());
        for (int c = 0; c < p.dim(); ++c) row[c] = xi.at(v, c);
        acc = acc + p.differentiate(v) * Polynomial::linear_form(row);
    }
    return acc;
}

bool is_invariant(const Polynomial& p, const GroupRep& g) {
    for (const auto& m : g.finite())
        if (p.substitute_linear(m.to_rows()) != p) return false;
    for (const auto& xi : g.torus())
        if (!derivation(p, xi).is_zero()) return false;
    return true;
}

bool is_equivariant(const PolyMap& f, const GroupRep& g) {
    const int n = g.dim();
    if (f.size() != n) return false;
    for (const auto& m : g.finite()) {
        const auto rows = m.to_rows();
        for (int i = 0; i < n; ++i) {
            Polynomial lhs(n);
            for (int j = 0; j < n; ++j)
                if (rows[i][j] != 0) lhs = lhs + f[j].scaled(rows[i][j]);
            if (lhs != f[i].substitute_linear(rows)) return false;
        }
    }
    for (const auto& xi : g.torus()) {
        for (int i = 0; i < n; ++i) {
            Polynomial lhs(n);
            for (int j = 0; j < n; ++j)
                if (xi.at(i, j) != 0) lhs = lhs + f[j].scaled(xi.at(i, j));
            if (lhs != derivation(f[i], xi)) return false;
        }
    }
    return true;
}

std::vector<Monomial> monomial_slice(int dim, int d) {
    std::vector<Monomial> out;
    Monomial cur(dim);
    // enumerate exponent vectors summing to d
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == dim - 1) {
            cur.exp[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur.exp[pos] = e;
            rec(pos + 1, left - e);
        }
    };
    if (dim > 0 && d >= 0) rec(0, d);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b); });
    return out;
}

namespace {

// Incremental exact row-echelon span with leftmost-pivot reduction; rows are
// kept pivot-normalized so membership tests double as polynomial reduction.
struct EchelonSpan {
    std::vector<std::vector<Rat>> rows;  // sorted by pivot column
    std::vector<int> pivots;

    void reduce(std::vector<Rat>& v) const {
        for (size_t k = 0; k < rows.size(); ++k) {
            const Rat& f = v[pivots[k]];
            if (f == 0) continue;
            const Rat fv = f;
            for (size_t c = 0; c < v.size(); ++c) v[c] -= fv * rows[k][c];
        }
    }
    bool add(std::vector<Rat> v) {
        reduce(v);
        int p = -1;
        for (size_t c = 0; c < v.size(); ++c)
            if (v[c] != 0) {
                p = static_cast<int>(c);
                break;
            }
        if (p < 0) return false;
        const Rat inv = Rat(1) / v[p];
        for (auto& x : v) x *= inv;
        // keep rows ordered by pivot and back-reduce existing rows
        for (size_t k = 0; k < rows.size(); ++k) {
            const Rat f = rows[k][p];
            if (f == 0) continue;
            for (size_t c = 0; c < v.size(); ++c) rows[k][c] -= f * v[c];
        }
        auto it = std::lower_bound(pivots.begin(), pivots.end(), p);
        const size_t idx = static_cast<size_t>(it - pivots.begin());
        pivots.insert(it, p);
        rows.insert(rows.begin() + idx, std::move(v));
        return true;
    }
    bool contains(std::vector<Rat> v) const {
        reduce(v);
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
};

std::vector<Rat> coeff_vector(const Polynomial& p, const std::vector<Monomial>& monos) {
    std::vector<Rat> v(monos.size(), Rat(0));
    for (size_t i = 0; i < monos.size(); ++i) v[i] = p.coeff(monos[i]);
    return v;
}

Polynomial from_coeff_vector(int dim, const std::vector<Rat>& v, const std::vector<Monomial>& monos) {
    Polynomial p(dim);
    for (size_t i = 0; i < monos.size(); ++i)
        if (v[i] != 0) p.set_coeff(monos[i], v[i]);
    return p;
}

}  // namespace

std::vector<Polynomial> invariant_slice(const GroupRep& g, int d) {
    const int n = g.dim();
    const std::vector<Monomial> monos = monomial_slice(n, d);
    const int N = static_cast<int>(monos.size());

    // Row space of Reynolds projections of all monomials (finite part).
    std::vector<std::vector<Rat>> span_rows;
    if (g.order() > 1) {
        const GroupRep finite_only(n, g.finite(), {});
        for (const auto& m : monos) {
            Polynomial mono(n);
            mono.set_coeff(m, Rat(1));
            Polynomial proj = reynolds(mono, finite_only);
            if (!proj.is_zero()) span_rows.push_back(coeff_vector(proj, monos));
        }
    } else {
        for (const auto& m : monos) {
            Polynomial mono(n);
            mono.set_coeff(m, Rat(1));
            span_rows.push_back(coeff_vector(mono, monos));
        }
    }
    if (span_rows.empty()) return {};
    RatMat base = RatMat::from_rows(span_rows);
    std::vector<int> piv = rref(base);
    const int r = static_cast<int>(piv.size());
    std::vector<Polynomial> basis;
    for (int i = 0; i < r; ++i) {
        std::vector<Rat> row(N);
        for (int c = 0; c < N; ++c) row[c] = base.at(i, c);
        basis.push_back(from_coeff_vector(n, row, monos));
    }

    // Intersect with the kernel of every torus derivation.
    if (g.torus_count() > 0 && !basis.empty()) {
        std::vector<std::vector<Rat>> cond;  // rows: output coeffs of derivation applied to basis combos
        for (const auto& xi : g.torus()) {
            std::vector<std::vector<Rat>> dcols;
            for (const auto& b : basis) dcols.push_back(coeff_vector(derivation(b, xi), monos));
            for (int out = 0; out < N; ++out) {
                std::vector<Rat> row(basis.size());
                bool nonzero = false;
                for (size_t k = 0; k < basis.size(); ++k) {
                    row[k] = dcols[k][out];
                    nonzero = nonzero || row[k] != 0;
                }
                if (nonzero) cond.push_back(std::move(row));
            }
        }
        std::vector<std::vector<Rat>> combos;
        if (cond.empty()) {
            for (size_t k = 0; k < basis.size(); ++k) {
                std::vector<Rat> e(basis.size(), Rat(0));
                e[k] = 1;
                combos.push_back(std::move(e));
            }
        } else {
            combos = nullspace(RatMat::from_rows(cond));
        }
        std::vector<std::vector<Rat>> vecs;
        for (const auto& c : combos) {
            std::vector<Rat> v(N, Rat(0));
            for (size_t k = 0; k < basis.size(); ++k)
                if (c[k] != 0) {
                    const auto bk = coeff_vector(basis[k], monos);
                    for (int i = 0; i < N; ++i) v[i] += c[k] * bk[i];
                }
            vecs.push_back(std::move(v));
        }
        if (vecs.empty()) return {};
        RatMat m = RatMat::from_rows(vecs);
        piv = rref(m);
        basis.clear();
        for (size_t i = 0; i < piv.size(); ++i) {
            std::vector<Rat> row(N);
            for (int c = 0; c < N; ++c) row[c] = m.at(static_cast<int>(i), c);
            basis.push_back(from_coeff_vector(n, row, monos));
        }
    }
    return basis;
}

std::vector<PolyMap> equivariant_slice(const GroupRep& g, int d) {
    const int n = g.dim();
    const std::vector<Monomial> monos = monomial_slice(n, d);
    const int N = static_cast<int>(monos.size());
    const int W = n * N;  // unknowns: component-major, monomials descending

    std::vector<std::vector<Rat>> cond;
    auto add_condition_rows = [&](const std::vector<std::vector<Polynomial>>& applied) {
        // applied[k] = condition map (n components) for unknown k
        for (int c = 0; c < n; ++c)
            for (int i = 0; i < N; ++i) {
                std::vector<Rat> row(W, Rat(0));
                bool nonzero = false;
                for (int k = 0; k < W; ++k) {
                    row[k] = applied[k][c].coeff(monos[i]);
                    nonzero = nonzero || row[k] != 0;
                }
                if (nonzero) cond.push_back(std::move(row));
            }
    };

    // Unknown basis element E_{c,m} = e_c * m.
    std::vector<std::pair<int, Monomial>> unknowns;
    for (int c = 0; c < n; ++c)
        for (const auto& m : monos) unknowns.emplace_back(c, m);

    for (const auto& gm : g.finite()) {
        if (gm.is_identity()) continue;
        const auto rows = gm.to_rows();
        std::vector<std::vector<Polynomial>> applied(W, std::vector<Polynomial>(n, Polynomial(n)));
        for (int k = 0; k < W; ++k) {
            const auto& [c, m] = unknowns[k];
            Polynomial mono(n);
            mono.set_coeff(m, Rat(1));
            const Polynomial mg = mono.substitute_linear(rows);  // m(gx)
            // (g E(x) - E(gx))_i = g_{ic} m(x) - delta_{ic} m(gx)
            for (int i = 0; i < n; ++i) {
                Polynomial t = mono.scaled(rows[i][c]);
                if (i == c) t = t - mg;
                applied[k][i] = t;
            }
        }
        add_condition_rows(applied);
    }
    for (const auto& xi : g.torus()) {
        std::vector<std::vector<Polynomial>> applied(W, std::vector<Polynomial>(n, Polynomial(n)));
        for (int k = 0; k < W; ++k) {
            const auto& [c, m] = unknowns[k];
            Polynomial mono(n);
            mono.set_coeff(m, Rat(1));
            const Polynomial dm = derivation(mono, xi);  // grad m . (xi x)
            for (int i = 0; i < n; ++i) {
                Polynomial t = mono.scaled(xi.at(i, c));  // (xi E)_i
                if (i == c) t = t - dm;                   // minus DE(x)(xi x) on component c
                applied[k][i] = t;
            }
        }
        add_condition_rows(applied);
    }

    std::vector<std::vector<Rat>> combos;
    if (cond.empty()) {
        for (int k = 0; k < W; ++k) {
            std::vector<Rat> e(W, Rat(0));
            e[k] = 1;
            combos.push_back(std::move(e));
        }
    } else {
        combos = nullspace(RatMat::from_rows(cond));
    }
    if (combos.empty()) return {};
    RatMat m = RatMat::from_rows(combos);
    std::vector<int> piv = rref(m);
    std::vector<PolyMap> out;
    for (size_t r = 0; r < piv.size(); ++r) {
        std::vector<Polynomial> comps(n, Polynomial(n));
        for (int c = 0; c < n; ++c)
            for (int i = 0; i < N; ++i) {
                const Rat& v = m.at(static_cast<int>(r), c * N + i);
                if (v != 0) comps[c].set_coeff(monos[i], v);
            }
        out.emplace_back(std::move(comps));
    }
    return out;
}

namespace {

// Theta-monomials of exact weighted degree w over generator degrees.
std::vector<Monomial> theta_monomials_exact(const std::vector<int>& degrees, int w) {
    const int l = static_cast<int>(degrees.size());
    std::vector<Monomial> out;
    Monomial cur(l);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == l) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int e = 0; e * degrees[pos] <= left; ++e) {
            cur.exp[pos] = e;
            rec(pos + 1, left - e * degrees[pos]);
        }
        cur.exp[pos] = 0;
    };
    rec(0, w);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b); });
    return out;
}

Polynomial expand_theta_monomial(const Monomial& alpha, const std::vector<Polynomial>& gens, int n) {
    Polynomial p = Polynomial::constant(n, 1);
    for (size_t i = 0; i < alpha.exp.size(); ++i)
        for (int e = 0; e < alpha.exp[i]; ++e) p = p * gens[i];
    return p;
}

}  // namespace

std::vector<Monomial> theta_monomials(const std::vector<int>& degrees, int wdeg_cap) {
    std::vector<Monomial> out;
    for (int w = 0; w <= wdeg_cap; ++w) {
        auto slice = theta_monomials_exact(degrees, w);
        out.insert(out.end(), slice.begin(), slice.end());
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b); });
    return out;
}

InvariantBasis discover_invariants(const GroupRep& g, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    InvariantBasis basis;
    basis.group = g;
    const int n = g.dim();
    for (int d = 1; d <= max_degree; ++d) {
        const auto slice = invariant_slice(g, d);
        if (slice.empty()) continue;
        const auto monos = monomial_slice(n, d);
        EchelonSpan span;
        // Products of strictly lower-degree generators with weighted degree d.
        for (const auto& alpha : theta_monomials_exact(basis.degrees, d)) {
            bool uses_current = false;
            int total = 0;
            for (size_t i = 0; i < alpha.exp.size(); ++i) {
                total += alpha.exp[i];
                if (alpha.exp[i] > 0 && basis.degrees[i] >= d) uses_current = true;
            }
            if (total == 0 || uses_current) continue;
            span.add(coeff_vector(expand_theta_monomial(alpha, basis.gens, n), monos));
        }
        for (const auto& s : slice) {
            if (span.add(coeff_vector(s, monos))) {
                basis.gens.push_back(s);
                basis.degrees.push_back(d);
            }
        }
    }
    for (const auto& p : basis.gens) basis.grads.push_back(p.gradient());
    return basis;
}

EquivariantBasis discover_equivariants(const GroupRep& g, int max_degree, const InvariantBasis& inv) {
    EquivariantBasis eq;
    const int n = g.dim();
    for (int d = 0; d <= max_degree; ++d) {
        const auto slice = equivariant_slice(g, d);
        if (slice.empty()) continue;
        const auto monos = monomial_slice(n, d);
        const int N = static_cast<int>(monos.size());
        auto vec_of = [&](const PolyMap& f) {
            std::vector<Rat> v(static_cast<size_t>(n) * N, Rat(0));
            for (int c = 0; c < n; ++c)
                for (int i = 0; i < N; ++i) v[static_cast<size_t>(c) * N + i] = f[c].coeff(monos[i]);
            return v;
        };
        EchelonSpan span;
        // theta-monomial multiples of lower-degree equivariants, wdeg >= 1.
        for (size_t j = 0; j < eq.gens.size(); ++j) {
            const int rem = d - eq.degrees[j];
            if (rem < 1) continue;
            for (const auto& alpha : theta_monomials_exact(inv.degrees, rem)) {
                if (alpha.degree() == 0) continue;
                const Polynomial factor = expand_theta_monomial(alpha, inv.gens, n);
                std::vector<Polynomial> comps;
                comps.reserve(n);
                for (int c = 0; c < n; ++c) comps.push_back(factor * eq.gens[j][c]);
                span.add(vec_of(PolyMap(std::move(comps))));
            }
        }
        for (const auto& s : slice) {
            if (span.add(vec_of(s))) {
                eq.gens.push_back(s);
                eq.degrees.push_back(d);
            }
        }
    }
    return eq;
}

InvariantBasis make_basis(const GroupRep& g, std::vector<Polynomial> gens) {
    InvariantBasis basis;
    basis.group = g;
    basis.gens = std::move(gens);
    for (const auto& p : basis.gens) {
        basis.degrees.push_back(std::max(p.degree(), 0));
        basis.grads.push_back(p.gradient());
    }
    return basis;
}

std::vector<std::string> validate_basis(const InvariantBasis& basis) {
    std::vector<std::string> issues;
    const int n = basis.ambient_dim();
    for (int i = 0; i < basis.size(); ++i) {
        const auto& p = basis.gens[i];
        std::ostringstream tag;
        tag << "generator " << (i + 1);
        if (p.dim() != n) {
            issues.push_back(tag.str() + ": wrong ambient dimension");
            continue;
        }
        if (p.is_zero() || !p.is_homogeneous())
            issues.push_back(tag.str() + ": not a nonzero homogeneous polynomial");
        if (!is_invariant(p, basis.group)) issues.push_back(tag.str() + ": not invariant under the group");
    }
    // relations vanish identically after substitution
    for (size_t r = 0; r < basis.relations.size(); ++r) {
        const auto& rel = basis.relations[r];
        if (rel.dim() != basis.size()) {
            issues.push_back("relation " + std::to_string(r + 1) + ": wrong arity");
            continue;
        }
        if (!rel.compose(PolyMap(basis.gens)).is_zero())
            issues.push_back("relation " + std::to_string(r + 1) + ": does not vanish on the generators");
    }
    // independence modulo products of lower-degree generators
    if (issues.empty()) {
        for (int i = 0; i < basis.size(); ++i) {
            const int d = basis.degrees[i];
            const auto monos = monomial_slice(n, d);
            EchelonSpan span;
            for (const auto& alpha : theta_monomials_exact(basis.degrees, d)) {
                bool lower_only = true;
                int total = 0;
                for (size_t k = 0; k < alpha.exp.size(); ++k) {
                    total += alpha.exp[k];
                    if (alpha.exp[k] > 0 && basis.degrees[k] >= d) lower_only = false;
                }
                if (total == 0 || !lower_only) continue;
                span.add(coeff_vector(expand_theta_monomial(alpha, basis.gens, n), monos));
            }
            for (int j = 0; j < basis.size(); ++j)
                if (j != i && basis.degrees[j] == d && j < i)
                    span.add(coeff_vector(basis.gens[j], monos));
            if (!span.add(coeff_vector(basis.gens[i], monos)))
                issues.push_back("generator " + std::to_string(i + 1) +
                                 ": expressible in lower-degree generators");
        }
    }
    return issues;
}

Polynomial rewrite_in_generators(const Polynomial& p, const InvariantBasis& basis) {
    const int n = basis.ambient_dim();
    if (p.dim() != n) throw std::invalid_argument("rewrite: ambient dimension mismatch");
    if (!is_invariant(p, basis.group)) throw std::invalid_argument("rewrite: polynomial is not invariant");
    if (p.is_zero()) return Polynomial::zero(basis.size());

    const int cap = p.degree();
    const std::vector<Monomial> cols = theta_monomials(basis.degrees, cap);
    // Collect x-monomial rows from all expansions and from p itself.
    std::vector<Polynomial> expansions;
    expansions.reserve(cols.size());
    std::map<Monomial, int, GrevlexDesc> row_index;
    auto note_rows = [&](const Polynomial& q) {
        for (const auto& [m, c] : q.terms())
            if (!row_index.count(m)) {
                const int idx = static_cast<int>(row_index.size());
                row_index[m] = idx;
            }
    };
    for (const auto& alpha : cols) {
        expansions.push_back(expand_theta_monomial(alpha, basis.gens, n));
        note_rows(expansions.back());
    }
    note_rows(p);
    RatMat A(static_cast<int>(row_index.size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [m, c] : expansions[j].terms()) A.at(row_index[m], static_cast<int>(j)) = c;
    std::vector<Rat> b(row_index.size(), Rat(0));
    for (const auto& [m, c] : p.terms()) b[row_index[m]] = c;

    auto sol = solve(A, b);
    if (!sol)
        throw rewrite_error("no representation up to weighted degree cap " + std::to_string(cap) +
                            " (basis may be incomplete)");
    Polynomial q(basis.size());
    for (size_t j = 0; j < cols.size(); ++j)
        if ((*sol)[j] != 0) q.set_coeff(cols[j], (*sol)[j]);
    if (q.compose(PolyMap(basis.gens)) != p)
        throw std::logic_error("rewrite verification failed");
    return q;
}

std::vector<Polynomial> discover_relations(const InvariantBasis& basis, int max_degree) {
    const int n = basis.ambient_dim();
    const int l = basis.size();
    std::vector<Polynomial> relations;
    for (int w = 1; w <= max_degree; ++w) {
        const auto alphas = theta_monomials_exact(basis.degrees, w);
        if (alphas.size() < 2) continue;
        // Expansion matrix for this weighted-degree slice.
        std::map<Monomial, int, GrevlexDesc> row_index;
        std::vector<Polynomial> expansions;
        for (const auto& alpha : alphas) {
            expansions.push_back(expand_theta_monomial(alpha, basis.gens, n));
            for (const auto& [m, c] : expansions.back().terms())
                if (!row_index.count(m)) {
                    const int idx = static_cast<int>(row_index.size());
                    row_index[m] = idx;
                }
        }
        RatMat A(static_cast<int>(row_index.size()), static_cast<int>(alphas.size()));
        for (size_t j = 0; j < alphas.size(); ++j)
            for (const auto& [m, c] : expansions[j].terms()) A.at(row_index[m], static_cast<int>(j)) = c;
        const auto kernel = nullspace(A);
        if (kernel.empty()) continue;
        // Remove module multiples of already-accepted relations within the slice.
        EchelonSpan span;
        for (const auto& rel : relations) {
            const int wr = [&] {
                int acc = 0;
                const auto& m = rel.terms().begin()->first;
                for (int i = 0; i < l; ++i) acc += m.exp[i] * basis.degrees[i];
                return acc;
            }();
            const int rem = w - wr;
            if (rem < 0) continue;
            for (const auto& beta : theta_monomials_exact(basis.degrees, rem)) {
                Polynomial mult(l);
                mult.set_coeff(beta, Rat(1));
                const Polynomial prod = mult * rel;
                std::vector<Rat> v(alphas.size(), Rat(0));
                for (size_t j = 0; j < alphas.size(); ++j) v[j] = prod.coeff(alphas[j]);
                span.add(std::move(v));
            }
        }
        for (const auto& k : kernel) {
            if (span.add(k)) {
                Polynomial rel(l);
                for (size_t j = 0; j < alphas.size(); ++j)
                    if (k[j] != 0) rel.set_coeff(alphas[j], k[j]);
                relations.push_back(rel);
            }
        }
    }
    return relations;
}

std::vector<double> hilbert_map(const std::vector<double>& v, const InvariantBasis& basis) {
    std::vector<double> out;
    out.reserve(basis.size());
    for (const auto& p : basis.gens) out.push_back(p.evaluate(v));
    return out;
}

std::vector<Rat> hilbert_map_exact(const std::vector<Rat>& v, const InvariantBasis& basis) {
    std::vector<Rat> out;
    out.reserve(basis.size());
    for (const auto& p : basis.gens) out.push_back(p.evaluate(v));
    return out;
}

LiftResult lift_point(const std::vector<double>& theta_target, const InvariantBasis& basis,
                      const std::vector<double>& guess, double tol, int max_iter) {
    const int l = basis.size();
    const int n = basis.ambient_dim();
    if (static_cast<int>(theta_target.size()) != l) throw std::invalid_argument("lift: target arity mismatch");
    if (static_cast<int>(guess.size()) != n) throw std::invalid_argument("lift: guess dimension mismatch");

    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = guess[i];
    auto residual = [&](const Eigen::VectorXd& x) {
        std::vector<double> xv(x.data(), x.data() + n);
        Eigen::VectorXd r(l);
        for (int i = 0; i < l; ++i) r(i) = basis.gens[i].evaluate(xv) - theta_target[i];
        return r;
    };
    Eigen::VectorXd r = residual(v);
    LiftResult out;
    for (int it = 0; it < max_iter; ++it) {
        if (r.norm() <= tol) {
            out.v.assign(v.data(), v.data() + n);
            out.residual = r.norm();
            out.iterations = it;
            return out;
        }
        std::vector<double> xv(v.data(), v.data() + n);
        Eigen::MatrixXd J(l, n);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < n; ++j) J(i, j) = basis.grads[i][j].evaluate(xv);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(1e-12);
        Eigen::VectorXd step = svd.solve(-r);
        double scale = 1.0;
        bool accepted = false;
        for (int h = 0; h < 10; ++h) {
            Eigen::VectorXd cand = v + scale * step;
            Eigen::VectorXd rc = residual(cand);
            if (rc.norm() < r.norm()) {
                v = cand;
                r = rc;
                accepted = true;
                break;
            }
            scale *= 0.5;
        }
        if (!accepted || !r.allFinite() || v.norm() > 1e8)
            throw no_convergence("lift_point: no progress (target may be outside the orbit-space image)");
    }
    if (r.norm() <= tol) {
        out.v.assign(v.data(), v.data() + n);
        out.residual = r.norm();
        out.iterations = max_iter;
        return out;
    }
    throw no_convergence("lift_point: max iterations exceeded");
}

}  // namespace symbreak
