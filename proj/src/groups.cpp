#include "symbreak/groups.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace symbreak {

namespace {

bool is_orthogonal(const RatMat& m) {
    return (m.transpose() * m).is_identity();
}

bool is_antisymmetric(const RatMat& m) {
    if (m.rows != m.cols) return false;
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c) != -m.at(c, r)) return false;
    return true;
}

bool commute(const RatMat& a, const RatMat& b) { return a * b == b * a; }

// Total order on matrices for canonical element ordering and dedup.
bool mat_less(const RatMat& a, const RatMat& b) {
    if (a.rows != b.rows) return a.rows < b.rows;
    if (a.cols != b.cols) return a.cols < b.cols;
    for (size_t i = 0; i < a.a.size(); ++i) {
        const int c = cmp(a.a[i], b.a[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace

std::vector<RatMat> close_group(const std::vector<RatMat>& generators, int max_order) {
    if (generators.empty() && max_order < 1) throw std::invalid_argument("max_order must be positive");
    int dim = generators.empty() ? 0 : generators.front().rows;
    for (const auto& g : generators) {
        if (g.rows != g.cols) throw std::invalid_argument("group generator not square");
        if (g.rows != dim) throw std::invalid_argument("group generators of mixed dimension");
        if (!is_orthogonal(g)) throw std::invalid_argument("group generator not orthogonal");
    }
    auto cmp_fn = [](const RatMat& a, const RatMat& b) { return mat_less(a, b); };
    std::set<RatMat, decltype(cmp_fn)> seen(cmp_fn);
    std::vector<RatMat> elems;
    auto push = [&](const RatMat& m) {
        if (seen.insert(m).second) elems.push_back(m);
    };
    if (dim == 0) dim = 1;
    push(RatMat::identity(dim));
    for (const auto& g : generators) push(g);
    // BFS over products until closed; j <= i covers all ordered pairs once i
    // reaches the larger index, including elements appended along the way.
    for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t j = 0; j <= i; ++j) {
            push(elems[i] * elems[j]);
            push(elems[j] * elems[i]);
            if (static_cast<int>(elems.size()) > max_order)
                throw std::runtime_error("group closure exceeded max_order=" + std::to_string(max_order));
        }
    }
    // Canonical order: identity first, then matrix order.
    std::sort(elems.begin(), elems.end(), [&](const RatMat& a, const RatMat& b) {
        const bool ia = a.is_identity(), ib = b.is_identity();
        if (ia != ib) return ia;
        return mat_less(a, b);
    });
    return elems;
}

GroupRep::GroupRep(int dim, std::vector<RatMat> finite_elements, std::vector<RatMat> torus_generators,
                   std::vector<std::string> labels)
    : dim_(dim), finite_(std::move(finite_elements)), torus_(std::move(torus_generators)),
      labels_(std::move(labels)) {
    if (finite_.empty()) finite_.push_back(RatMat::identity(dim_));
    for (const auto& g : finite_) {
        if (g.rows != dim_ || g.cols != dim_) throw std::invalid_argument("finite element dimension mismatch");
        if (!is_orthogonal(g)) throw std::invalid_argument("finite element not orthogonal");
    }
    for (const auto& t : torus_) {
        if (t.rows != dim_ || t.cols != dim_) throw std::invalid_argument("torus generator dimension mismatch");
        if (!is_antisymmetric(t)) throw std::invalid_argument("torus generator not antisymmetric");
    }
    for (size_t a = 0; a < torus_.size(); ++a)
        for (size_t b = a + 1; b < torus_.size(); ++b)
            if (!commute(torus_[a], torus_[b]))
                throw std::invalid_argument("torus generators do not commute");
    for (const auto& t : torus_)
        for (const auto& g : finite_)
            if (!commute(t, g))
                throw std::invalid_argument("torus generator does not commute with finite part");

    const int n = order();
    mult_table_.assign(n, std::vector<int>(n, -1));
    inverse_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (finite_[i].is_identity()) id_index_ = i;
        for (int j = 0; j < n; ++j) {
            const RatMat p = finite_[i] * finite_[j];
            const int k = find(p);
            if (k < 0) throw std::invalid_argument("finite part not closed under multiplication");
            mult_table_[i][j] = k;
            if (p.is_identity()) inverse_[i] = j;
        }
    }
    if (id_index_ < 0) throw std::invalid_argument("finite part does not contain the identity");
    for (int i = 0; i < n; ++i)
        if (inverse_[i] < 0) throw std::invalid_argument("finite part not closed under inverse");
}

int GroupRep::find(const RatMat& m) const {
    for (int i = 0; i < order(); ++i)
        if (finite_[i] == m) return i;
    return -1;
}

Polynomial reynolds(const Polynomial& p, const GroupRep& g) {
    if (g.torus_count() > 0)
        throw std::invalid_argument("reynolds requires a finite group; use derivation-kernel discovery for tori");
    Polynomial acc(p.dim());
    for (const auto& m : g.finite()) acc = acc + p.substitute_linear(m.to_rows());
    return acc.scaled(Rat(1, g.order()));
}

std::vector<Rat> act(const RatMat& m, const std::vector<Rat>& v) { return m.apply(v); }

std::vector<double> act(const RatMat& m, const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != m.cols) throw std::invalid_argument("act dimension mismatch");
    std::vector<double> y(m.rows, 0.0);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) y[r] += rat_to_double(m.at(r, c)) * v[c];
    return y;
}

namespace {

double norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// Canonicalize a set of finite indices into a closed subgroup index list.
std::vector<int> close_indices(const GroupRep& g, std::vector<int> idx) {
    std::set<int> s(idx.begin(), idx.end());
    s.insert(g.identity_index());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int i : cur)
            for (int j : cur)
                if (s.insert(g.product(i, j)).second) grew = true;
    }
    return std::vector<int>(s.begin(), s.end());
}

// RREF-canonical basis for a span of coefficient vectors.
std::vector<std::vector<Rat>> canonical_span(const std::vector<std::vector<Rat>>& vecs, int width) {
    if (vecs.empty()) return {};
    RatMat m = RatMat::from_rows(vecs);
    std::vector<int> piv = rref(m);
    std::vector<std::vector<Rat>> basis;
    for (size_t i = 0; i < piv.size(); ++i) {
        std::vector<Rat> row(width);
        for (int c = 0; c < width; ++c) row[c] = m.at(static_cast<int>(i), c);
        basis.push_back(std::move(row));
    }
    return basis;
}

}  // namespace

Subgroup isotropy(const std::vector<double>& v, const GroupRep& g, double tol) {
    Subgroup h;
    h.parent = &g;
    const double vn = norm2(v);
    const double thresh = vn > 0 ? tol * vn : tol;
    for (int i = 0; i < g.order(); ++i) {
        std::vector<double> gv = act(g.element(i), v);
        double d = 0;
        for (size_t k = 0; k < v.size(); ++k) d += (gv[k] - v[k]) * (gv[k] - v[k]);
        if (std::sqrt(d) <= thresh) h.finite_idx.push_back(i);
    }
    h.finite_idx = close_indices(g, h.finite_idx);
    if (g.torus_count() > 0) {
        // Kernel of c -> (sum_a c_a xi_a) v.
        Eigen::MatrixXd m(g.dim(), g.torus_count());
        for (int a = 0; a < g.torus_count(); ++a) {
            std::vector<double> tv = act(g.torus()[a], v);
            for (int r = 0; r < g.dim(); ++r) m(r, a) = tv[r];
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
        const double scale = std::max(svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0, 1.0);
        int rank = 0;
        for (int i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > tol * scale) ++rank;
        // Null directions, converted to exact coefficient vectors only when they
        // are axis-aligned; otherwise kept as rounded rationals of the V columns.
        std::vector<std::vector<Rat>> vecs;
        for (int c = rank; c < g.torus_count(); ++c) {
            std::vector<Rat> coef(g.torus_count());
            for (int r = 0; r < g.torus_count(); ++r) {
                double x = svd.matrixV()(r, c);
                if (std::abs(x) < 1e-12) x = 0;
                coef[r] = Rat(static_cast<long>(std::lround(x * (1L << 20))), 1L << 20);
            }
            vecs.push_back(std::move(coef));
        }
        h.torus_basis = canonical_span(vecs, g.torus_count());
    }
    return h;
}

Subgroup isotropy_exact(const std::vector<Rat>& v, const GroupRep& g) {
    Subgroup h;
    h.parent = &g;
    for (int i = 0; i < g.order(); ++i)
        if (g.element(i).apply(v) == v) h.finite_idx.push_back(i);
    h.finite_idx = close_indices(g, h.finite_idx);
    if (g.torus_count() > 0) {
        RatMat m(g.dim(), g.torus_count());
        for (int a = 0; a < g.torus_count(); ++a) {
            std::vector<Rat> tv = g.torus()[a].apply(v);
            for (int r = 0; r < g.dim(); ++r) m.at(r, a) = tv[r];
        }
        h.torus_basis = nullspace(m);
        h.torus_basis = canonical_span(h.torus_basis, g.torus_count());
    }
    return h;
}

FixedSubspace fixed_subspace(const Subgroup& h) {
    const GroupRep& g = *h.parent;
    const int n = g.dim();
    std::vector<std::vector<Rat>> rows;
    for (int idx : h.finite_idx) {
        if (idx == g.identity_index()) continue;
        const RatMat& m = g.element(idx);
        for (int r = 0; r < n; ++r) {
            std::vector<Rat> row(n);
            for (int c = 0; c < n; ++c) row[c] = m.at(r, c) - (r == c ? 1 : 0);
            rows.push_back(std::move(row));
        }
    }
    for (const auto& coef : h.torus_basis) {
        RatMat xi(n, n);
        for (int a = 0; a < g.torus_count(); ++a)
            if (coef[a] != 0)
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) xi.at(r, c) += coef[a] * g.torus()[a].at(r, c);
        for (int r = 0; r < n; ++r) {
            std::vector<Rat> row(n);
            for (int c = 0; c < n; ++c) row[c] = xi.at(r, c);
            rows.push_back(std::move(row));
        }
    }
    FixedSubspace fs;
    std::vector<std::vector<Rat>> basis;
    if (rows.empty()) {
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> e(n, Rat(0));
            e[i] = 1;
            basis.push_back(std::move(e));
        }
    } else {
        basis = nullspace(RatMat::from_rows(rows));
    }
    // Exact Gram-Schmidt (orthogonal, not normalized).
    std::vector<std::vector<Rat>> ortho;
    for (auto v : basis) {
        for (const auto& u : ortho) {
            Rat num(0), den(0);
            for (int i = 0; i < n; ++i) {
                num += v[i] * u[i];
                den += u[i] * u[i];
            }
            const Rat f = num / den;
            for (int i = 0; i < n; ++i) v[i] -= f * u[i];
        }
        bool zero = true;
        for (const auto& x : v) zero = zero && x == 0;
        if (!zero) ortho.push_back(std::move(v));
    }
    fs.rational_basis = ortho;
    for (const auto& u : ortho) {
        double nn = 0;
        for (const auto& x : u) nn += rat_to_double(x) * rat_to_double(x);
        nn = std::sqrt(nn);
        std::vector<double> unit(n);
        for (int i = 0; i < n; ++i) unit[i] = rat_to_double(u[i]) / nn;
        fs.orthonormal.push_back(std::move(unit));
    }
    return fs;
}

namespace {

bool conjugate_into(const GroupRep& g, const std::vector<int>& a, const std::vector<int>& b, bool equal) {
    // exists h: h a h^-1 == b (equal) or subseteq b (!equal)
    std::set<int> bset(b.begin(), b.end());
    for (int h = 0; h < g.order(); ++h) {
        const int hinv = g.inverse(h);
        bool ok = true;
        std::set<int> image;
        for (int x : a) {
            const int y = g.product(g.product(h, x), hinv);
            if (!bset.count(y)) {
                ok = false;
                break;
            }
            image.insert(y);
        }
        if (!ok) continue;
        if (!equal || image.size() == bset.size()) return true;
    }
    return false;
}

}  // namespace

bool same_orbit_type(const Subgroup& h1, const Subgroup& h2) {
    if (h1.parent != h2.parent) throw std::invalid_argument("subgroups of different parents");
    if (h1.torus_dim() != h2.torus_dim()) return false;
    if (h1.order() != h2.order()) return false;
    return conjugate_into(*h1.parent, h1.finite_idx, h2.finite_idx, true);
}

bool is_conjugate_subgroup_of(const Subgroup& inner, const Subgroup& outer) {
    if (inner.parent != outer.parent) throw std::invalid_argument("subgroups of different parents");
    if (inner.torus_dim() > outer.torus_dim()) return false;
    if (inner.order() > outer.order()) return false;
    return conjugate_into(*inner.parent, inner.finite_idx, outer.finite_idx, false);
}

IsotropyLabel isotropy_label(const Subgroup& h) {
    const GroupRep& g = *h.parent;
    // Minimal sorted index set over all conjugations.
    std::vector<int> best;
    for (int c = 0; c < g.order(); ++c) {
        const int cinv = g.inverse(c);
        std::vector<int> img;
        img.reserve(h.finite_idx.size());
        for (int x : h.finite_idx) img.push_back(g.product(g.product(c, x), cinv));
        std::sort(img.begin(), img.end());
        if (best.empty() || img < best) best = img;
    }
    IsotropyLabel lab;
    lab.order = h.order();
    lab.torus_dim = h.torus_dim();
    std::ostringstream key;
    if (h.is_full())
        key << "G";
    else if (h.is_trivial())
        key << "1";
    else {
        key << "f{";
        for (size_t i = 0; i < best.size(); ++i) key << (i ? "," : "") << best[i];
        key << "}";
        if (lab.torus_dim > 0) key << "xT" << lab.torus_dim;
    }
    lab.key = key.str();
    return lab;
}

bool Subgroup::is_full() const {
    return parent && order() == parent->order() && torus_dim() == parent->torus_count();
}

int torus_rank_nH(const std::vector<double>& v, const GroupRep& g, double tol) {
    if (g.torus_count() == 0) return 0;
    Subgroup h = isotropy(v, g, tol);
    return g.torus_count() - h.torus_dim();
}

Subgroup full_subgroup(const GroupRep& g) {
    Subgroup h;
    h.parent = &g;
    for (int i = 0; i < g.order(); ++i) h.finite_idx.push_back(i);
    for (int a = 0; a < g.torus_count(); ++a) {
        std::vector<Rat> e(g.torus_count(), Rat(0));
        e[a] = 1;
        h.torus_basis.push_back(std::move(e));
    }
    return h;
}

Subgroup trivial_subgroup(const GroupRep& g) {
    Subgroup h;
    h.parent = &g;
    h.finite_idx = {g.identity_index()};
    return h;
}

}  // namespace symbreak
