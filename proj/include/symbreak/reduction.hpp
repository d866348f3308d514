#ifndef SYMBREAK_REDUCTION_HPP
#define SYMBREAK_REDUCTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "symbreak/invariants.hpp"
#include "symbreak/polynomial.hpp"

namespace symbreak {

/// A one-parameter family of symmetric fields. General families carry the
/// Schwarz coefficients f_i(theta, lambda) over an equivariant module basis;
/// Hamiltonian families carry the reduced Hamiltonian F(theta, lambda) and the
/// symplectic pairing. Lambda is always the last variable of the coefficient
/// polynomials.
struct FieldFamily {
    enum class Kind { general, hamiltonian };
    Kind kind = Kind::general;
    std::vector<Polynomial> coeffs;  // f_i in (l+1) variables          [general]
    EquivariantBasis equivariants;   //                                  [general]
    Polynomial hamiltonian;          // F in (l+1) variables             [hamiltonian]
    Pairing pairing;                 // canonical (q,p) pairs            [hamiltonian, codim]
};

/// Tables of the projected general field: (F_i~)_j = rewrite of <F_i, grad theta_j>.
struct GeneralReducedField {
    std::vector<PolyMap> tables;     // one l-component map in theta-variables per equivariant
    std::vector<Polynomial> coeffs;  // f_i(theta, lambda)
};

/// Antisymmetric matrix of rewritten brackets P_ij = rewrite({theta_i, theta_j}).
struct PoissonStructure {
    int l = 0;
    std::vector<Polynomial> entries;  // row-major l*l, theta-variables
    const Polynomial& at(int i, int j) const { return entries[static_cast<size_t>(i) * l + j]; }
    Polynomial& at(int i, int j) { return entries[static_cast<size_t>(i) * l + j]; }
};

/// Eq.-1-style projection of a general family onto the orbit space.
/// Rewrite failures propagate as rewrite_error (completeness warning).
GeneralReducedField project_general(const FieldFamily& family, const InvariantBasis& basis);

/// Bracket matrix of the generators, rewritten; antisymmetry asserted exactly.
PoissonStructure poisson_matrix(const InvariantBasis& basis, const Pairing& pairing);

/// Reduced Hamiltonian dynamics theta_dot_j = sum_i dF/dtheta_i * {theta_j, theta_i},
/// as polynomials in (theta, lambda).
std::vector<Polynomial> reduced_hamiltonian_field(const Polynomial& ham, const PoissonStructure& p);

/// Reduced dynamics of either family kind, components in (theta, lambda).
std::vector<Polynomial> reduced_field(const FieldFamily& family, const InvariantBasis& basis);

std::vector<double> evaluate_reduced(const std::vector<Polynomial>& comps,
                                     const std::vector<double>& theta, double lambda);

/// Full-space family X(v, lambda) as a polynomial map in (v, lambda).
PolyMap assemble_full_field(const FieldFamily& family, const InvariantBasis& basis);

/// Remainder of multivariate division by the relation list (leading terms in
/// canonical order). Canonical for a single relation; for several the
/// remainder depends on list order, which is fixed and documented.
Polynomial reduce_mod_relations(const Polynomial& p, const std::vector<Polynomial>& relations);

struct TangencyReport {
    int samples = 0;
    double max_residual = 0;
    int violations = 0;
    bool symbolic_zero = true;  // vacuously true without relations
    std::vector<std::string> notes;
};

/// Tangency of the reduced flow to the relation variety: sampled residuals
/// |grad R . theta_dot| at image points plus the symbolic reduction check.
TangencyReport check_tangency(const std::vector<Polynomial>& reduced, const InvariantBasis& basis,
                              int sample_count, double tol, std::uint64_t seed);

}  // namespace symbreak

#endif
