#ifndef SYMBREAK_GROUPS_HPP
#define SYMBREAK_GROUPS_HPP

#include <string>
#include <vector>

#include "symbreak/polynomial.hpp"
#include "symbreak/ratmat.hpp"

namespace symbreak {

/// Compact symmetry group acting linearly on V: a finite part (orthogonal
/// rational matrices, closed under multiplication) plus a torus part
/// (pairwise-commuting antisymmetric generators commuting with the finite
/// part). All consistency conditions are exact matrix identities checked at
/// construction.
class GroupRep {
  public:
    GroupRep() = default;
    GroupRep(int dim, std::vector<RatMat> finite_elements, std::vector<RatMat> torus_generators,
             std::vector<std::string> labels = {});

    int dim() const { return dim_; }
    int order() const { return static_cast<int>(finite_.size()); }
    int torus_count() const { return static_cast<int>(torus_.size()); }
    const std::vector<RatMat>& finite() const { return finite_; }
    const std::vector<RatMat>& torus() const { return torus_; }
    const RatMat& element(int i) const { return finite_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    int identity_index() const { return id_index_; }

    int product(int i, int j) const { return mult_table_[i][j]; }
    int inverse(int i) const { return inverse_[i]; }
    /// Index of a matrix in the finite part, -1 if absent.
    int find(const RatMat& m) const;

    bool is_trivial() const { return order() == 1 && torus_.empty(); }

  private:
    int dim_ = 0;
    std::vector<RatMat> finite_;
    std::vector<RatMat> torus_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> mult_table_;
    std::vector<int> inverse_;
    int id_index_ = -1;
};

/// Multiplication closure of orthogonal rational generators, identity
/// included. Throws when the closure exceeds max_order (infinite or too-large
/// group).
std::vector<RatMat> close_group(const std::vector<RatMat>& generators, int max_order);

/// Subgroup of a GroupRep: a subset of finite element indices (closed under
/// product) plus a subalgebra of the torus, given by coefficient vectors in
/// the torus-generator basis.
struct Subgroup {
    const GroupRep* parent = nullptr;
    std::vector<int> finite_idx;                  // sorted, contains identity
    std::vector<std::vector<Rat>> torus_basis;    // RREF-canonical coefficient vectors

    int torus_dim() const { return static_cast<int>(torus_basis.size()); }
    int order() const { return static_cast<int>(finite_idx.size()); }
    bool is_full() const;
    bool is_trivial() const { return order() == 1 && torus_basis.empty(); }
};

/// Canonical key for the conjugacy class of an isotropy subgroup: finite part
/// up to conjugation by finite elements, torus part by dimension.
struct IsotropyLabel {
    std::string key;
    int order = 1;
    int torus_dim = 0;
    bool operator==(const IsotropyLabel& o) const { return key == o.key; }
    bool operator!=(const IsotropyLabel& o) const { return !(*this == o); }
};

/// Reynolds average (1/|G|) sum_g p(g x). Finite groups only; throws when the
/// torus part is nonempty.
Polynomial reynolds(const Polynomial& p, const GroupRep& g);

std::vector<Rat> act(const RatMat& g_or_xi, const std::vector<Rat>& v);
std::vector<double> act(const RatMat& g_or_xi, const std::vector<double>& v);

/// Isotropy subgroup of a point: finite elements with |g v - v| <= tol |v|
/// (<= tol when v = 0), torus subalgebra = kernel of c -> (sum c_a xi_a) v by
/// rank-revealing decomposition with threshold tol.
Subgroup isotropy(const std::vector<double>& v, const GroupRep& g, double tol = 1e-9);
/// Exact variant for rational points.
Subgroup isotropy_exact(const std::vector<Rat>& v, const GroupRep& g);

/// Fixed-point subspace V^H. Exact rational nullspace intersection; both the
/// raw rational basis and a floating orthonormal basis are returned.
struct FixedSubspace {
    std::vector<std::vector<Rat>> rational_basis;     // orthogonal over Q (Gram-Schmidt, unnormalized)
    std::vector<std::vector<double>> orthonormal;     // same span, unit length
};
FixedSubspace fixed_subspace(const Subgroup& h);

bool same_orbit_type(const Subgroup& h1, const Subgroup& h2);
/// True when some finite element conjugates `inner`'s finite part into a
/// subset of `outer`'s, with torus dimension non-increasing.
bool is_conjugate_subgroup_of(const Subgroup& inner, const Subgroup& outer);

IsotropyLabel isotropy_label(const Subgroup& h);

/// Torus rank n_H of N(G_v)/G_v. Finite parts contribute 0; since torus
/// generators commute with the whole group, this is (number of torus
/// generators) - dim(torus part of G_v). Reported downstream with the flag
/// "torus rank, finite-part quotient ignored".
int torus_rank_nH(const std::vector<double>& v, const GroupRep& g, double tol = 1e-9);

Subgroup full_subgroup(const GroupRep& g);
Subgroup trivial_subgroup(const GroupRep& g);

}  // namespace symbreak

#endif
