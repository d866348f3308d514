#ifndef SYMBREAK_INVARIANTS_HPP
#define SYMBREAK_INVARIANTS_HPP

#include <vector>

#include "symbreak/groups.hpp"
#include "symbreak/polynomial.hpp"

namespace symbreak {

/// Hilbert basis {theta_1..theta_l} of the invariant ring, with relations
/// (syzygies) among the generators and a cached gradient table. Carries its
/// group so invariance can be re-checked exactly at any time.
struct InvariantBasis {
    GroupRep group;
    std::vector<Polynomial> gens;        // homogeneous, in the ambient variables
    std::vector<int> degrees;
    std::vector<Polynomial> relations;   // in l new variables, vanish after substituting gens
    std::vector<PolyMap> grads;          // gradient per generator

    int size() const { return static_cast<int>(gens.size()); }
    int ambient_dim() const { return group.dim(); }
};

struct EquivariantBasis {
    std::vector<PolyMap> gens;  // homogeneous components
    std::vector<int> degrees;
    int size() const { return static_cast<int>(gens.size()); }
};

/// Lie derivative of p along the linear field x -> xi x.
Polynomial derivation(const Polynomial& p, const RatMat& xi);

/// Exact invariance: p(gx) = p for every finite element and derivation zero
/// for every torus generator.
bool is_invariant(const Polynomial& p, const GroupRep& g);
/// Exact equivariance: g F(x) = F(gx) for finite elements, xi F(x) = DF(x)(xi x)
/// for torus generators.
bool is_equivariant(const PolyMap& f, const GroupRep& g);

/// All monomials of exact degree d in dim variables, canonical descending order.
std::vector<Monomial> monomial_slice(int dim, int d);

/// Canonical basis of the degree-d slice of the invariant ring: Reynolds span
/// of all monomials intersected with the torus derivation kernels, row-reduced.
std::vector<Polynomial> invariant_slice(const GroupRep& g, int d);

/// Canonical basis of homogeneous degree-d equivariant polynomial maps.
std::vector<PolyMap> equivariant_slice(const GroupRep& g, int d);

/// Degree-by-degree discovery: keep slice elements not expressible in products
/// of lower-degree generators. "Minimal up to the cap", never certified.
/// An empty result is reported by the caller, not fatal here.
InvariantBasis discover_invariants(const GroupRep& g, int max_degree);

/// Module-minimal (up to cap) equivariant generators over the invariant ring.
/// `inv` must be discovered to at least the same degree cap.
EquivariantBasis discover_equivariants(const GroupRep& g, int max_degree, const InvariantBasis& inv);

/// Builds an InvariantBasis from supplied generators (degrees, gradients
/// computed; relations left to discover_relations or the caller).
InvariantBasis make_basis(const GroupRep& g, std::vector<Polynomial> gens);

/// Exact checks of every InvariantBasis invariant; returns issue list (empty = valid).
std::vector<std::string> validate_basis(const InvariantBasis& basis);

/// Exact rewrite of an invariant p as a polynomial in the generators.
/// Non-uniqueness (relations) is broken deterministically: unknown columns are
/// theta-monomials in descending canonical order, free coefficients are zero.
/// Throws std::invalid_argument when p is not invariant, rewrite_error when no
/// representation exists up to weighted degree deg(p).
Polynomial rewrite_in_generators(const Polynomial& p, const InvariantBasis& basis);

/// Kernel of the expansion map on theta-monomials of weighted degree <= cap,
/// pruned to a minimal independent set (module multiples of lower relations
/// removed degree by degree).
std::vector<Polynomial> discover_relations(const InvariantBasis& basis, int max_degree);

std::vector<double> hilbert_map(const std::vector<double>& v, const InvariantBasis& basis);
std::vector<Rat> hilbert_map_exact(const std::vector<Rat>& v, const InvariantBasis& basis);

struct LiftResult {
    std::vector<double> v;
    double residual = 0;
    int iterations = 0;
};

/// Gauss-Newton solve of theta(v) = theta_target from a caller-supplied guess.
/// Any orbit representative is acceptable. Throws no_convergence when the
/// target appears to lie outside the image or the guess is bad.
LiftResult lift_point(const std::vector<double>& theta_target, const InvariantBasis& basis,
                      const std::vector<double>& guess, double tol = 1e-10, int max_iter = 80);

/// Weighted-degree-bounded theta-monomials (weights = generator degrees),
/// descending canonical order; includes the constant monomial.
std::vector<Monomial> theta_monomials(const std::vector<int>& degrees, int wdeg_cap);

}  // namespace symbreak

#endif
