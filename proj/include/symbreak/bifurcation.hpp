#ifndef SYMBREAK_BIFURCATION_HPP
#define SYMBREAK_BIFURCATION_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "symbreak/groups.hpp"
#include "symbreak/invariants.hpp"
#include "symbreak/reduction.hpp"

namespace symbreak {

/// Reduced equilibrium system: the g-components in (theta, lambda), the
/// relations cutting out the orbit-space image, and exact linear Casimir
/// directions of the Poisson structure (empty for general families). The
/// Casimir level is pinned during Hamiltonian solves so the implicit-function
/// step is taken transverse to the symplectic-leaf foliation.
struct GFunction {
    int l = 0;
    std::vector<Polynomial> comps;             // l components in (theta, lambda)
    std::vector<Polynomial> relations;         // theta-variables
    std::vector<std::vector<Rat>> casimirs;    // coefficient vectors c with P c = 0 identically
};

/// g_j = sum_i dF/dtheta_i * P_ji, cross-checkable against
/// reduced_hamiltonian_field (identical canonical polynomials).
GFunction assemble_g(const Polynomial& ham, const PoissonStructure& p,
                     const std::vector<Polynomial>& relations);

GFunction gfunction_from_general(const GeneralReducedField& red,
                                 const std::vector<Polynomial>& relations);

/// Exact kernel of c -> P c (as polynomial identity): linear Casimirs.
std::vector<std::vector<Rat>> linear_casimirs(const PoissonStructure& p);

struct SolverOptions {
    double tol = 1e-10;
    int max_iter = 50;
    double divergence_guard = 1e8;
    double cond_threshold = 1e8;
};

struct SolveResult {
    std::vector<double> theta;
    double residual = 0;                    // |[g; R]| stacked (math content only)
    int iterations = 0;
    std::vector<double> residual_history;   // residual before each step, then final
    bool converged = false;
};

/// Gauss-Newton on the stacked system [g(theta,lambda); R(theta); casimir
/// levels] with rank-revealing least-squares steps. casimir_anchor pins the
/// Casimir levels (defaults to the guess when null and casimirs exist).
SolveResult solve_equilibrium(const GFunction& g, const std::vector<double>& theta_guess, double lambda,
                              const SolverOptions& opts = {},
                              const std::vector<double>* casimir_anchor = nullptr);

struct NondegInfo {
    bool nondegenerate = false;
    double condition_number = 0;
    int restricted_rank = 0;
    int tangent_dim = 0;
};

/// Restricted-Jacobian nondegeneracy at an equilibrium: d[g; R; casimir rows]
/// restricted to the tangent space of the relation variety (nullspace of dR)
/// must have full column rank with condition number below threshold.
NondegInfo check_hvs_nondegeneracy(const GFunction& g, const std::vector<double>& theta0, double lambda0,
                                   const SolverOptions& opts = {});

struct BranchPoint {
    double lambda = 0;
    std::vector<double> theta;
    std::vector<double> v_lift;
    IsotropyLabel isotropy;
    std::vector<double> velocity;     // coefficients over the torus generators
    double residual_reduced = 0;
    double residual_lift = 0;
    int n_H = 0;
    double condition_number = 0;
    bool lift_ok = false;
};

struct Branch {
    std::vector<BranchPoint> points;  // arclength order from the seed
    std::string scenario_id;
    std::string termination;          // "range end" | "step underflow" | "possible bifurcation"
    double lambda_seed = 0;
};

struct ContinuationOptions {
    double step = 1e-2;
    double min_step = 1e-8;
    double max_step = 5e-2;
    int corrector_max_iter = 25;
};

/// Pseudo-arclength continuation (secant predictor, Gauss-Newton corrector
/// with the arclength constraint appended) from a seed equilibrium at
/// lambda_seed toward lambda_target. The seed must solve [g;R] within tol and
/// pass check_hvs_nondegeneracy.
Branch continue_branch(const GFunction& g, const std::vector<double>& seed_theta, double lambda_seed,
                       double lambda_target, const ContinuationOptions& copts = {},
                       const SolverOptions& sopts = {});

/// Multi-guess pre-sweep at a fixed lambda: distinct feasible equilibria
/// (feasibility = a successful lift into V), deduplicated.
std::vector<std::vector<double>> pre_sweep(const GFunction& g, const InvariantBasis& basis, double lambda,
                                           int guesses, double radius, std::mt19937_64& rng,
                                           const SolverOptions& opts = {});

enum class NondegClass { Stationary, Hopf, HamSteadyState, HamHopf, None };
std::string to_string(NondegClass c);

struct ClassifyOptions {
    std::vector<double> lambda_grid = {-0.1, -0.05, 0.0, 0.05, 0.1};
    std::optional<RatMat> complex_structure;          // J for Hopf / HamSteadyState
    std::optional<std::vector<RatMat>> hamhopf_basis; // A1..A4
    double fit_tol = 1e-8;
    double sigma0_tol = 1e-8;
    double dsigma0_tol = 1e-6;
};

struct NondegeneracyReport {
    NondegClass cls = NondegClass::None;
    std::vector<double> lambda_grid;
    std::vector<double> sigma, rho, tau, psi;  // fitted curves; empty when not applicable
    double fit_residual = 0;
    double sigma0 = 0, dsigma0 = 0;
    double nu0 = 0;  // HamHopf: -psi(0)
    bool transversal = false;
};

/// n x n matrix of lambda-polynomials: the v-Jacobian of the family at v = 0.
std::vector<std::vector<Polynomial>> linearization_at_zero(const PolyMap& full_field);

/// Least-squares fit of DX_lambda(0) against the class-specific matrix spans,
/// most specific fitting class wins; sigma(0), sigma'(0) by central difference
/// on the fitted coefficients; transversality verdict per the sigma test.
NondegeneracyReport classify_linearization(const std::vector<std::vector<Polynomial>>& dx0,
                                           const ClassifyOptions& opts = {});

struct TransversalityReport {
    bool verdict = false;
    Rat f1_at_origin;
    Rat df1_dlambda;
    int coefficient_index = 0;  // which f_i played the role of f_1
};

/// Exact transversality test: f1(0,0) = 0 and d/dlambda f1(0,lambda)|_0 != 0,
/// with f1 the coefficient of the first degree-1 equivariant (general) or
/// dF/dtheta_1 (hamiltonian).
TransversalityReport check_transversality(const FieldFamily& family);

struct CodimOptions {
    std::vector<double> radii = {1.0, 0.5, 0.25, 0.125, 0.0625};
    double radius_scale = 1e-6;
    int directions_per_radius = 64;
    int witness_attempts = 40;
    double ratio_tol = 1e-6;
};

struct CodimReport {
    bool found = false;
    int i0 = -1, i1 = -1;                  // 1-based in the conclusion text
    std::vector<double> witness;
    double max_ratio_smallest_radius = 0;
    std::vector<double> max_ratio_per_radius;
    std::string conclusion;
    std::vector<int> independent_i1;       // all i1 with a verified hyperplane witness
};

/// Bracket-ratio codimension criterion: search (i0, i1) with a nonzero
/// bracket and a witness x0 where every other ratio {theta_i0,theta_i} /
/// {theta_i0,theta_i1} vanishes in the limit; verified on shrinking sampled
/// spheres. found=false is inconclusive, not a refutation.
CodimReport codim_criterion(const InvariantBasis& basis, const PoissonStructure& p,
                            const CodimOptions& opts, std::mt19937_64& rng);

struct LiftOptions {
    double tol = 1e-10;
    int max_iter = 80;
    int retries = 12;
    double isotropy_tol = 1e-6;
};

/// Lift reduced branch points to V: orbit representatives by Gauss-Newton
/// (warm-started along the branch), velocities by least squares over the
/// torus generator fields, isotropy labels and n_H at the lifted points.
void lift_branch(Branch& branch, const InvariantBasis& basis, const PolyMap& full_field,
                 const GroupRep& group, const LiftOptions& opts, std::mt19937_64& rng);

struct DiagnosticOptions {
    int samples = 10000;
    double min_radius = 1e-4;
    double max_radius = 1.0;
    double membership_tol = 1e-6;
};

struct ExistenceVerdict {
    std::string verdict;        // "existence predicted" | "non-existence predicted" |
                                // "non-membership" | "inconclusive"
    std::string detail;
    double membership_distance = -1;
    int sampled_codim = -1;
};

/// Matches computed evidence (classification, transversality, codimension
/// witnesses, sampled gamma(0) membership) onto the branch-existence theorem
/// hypotheses. Diagnostic only: wording reflects one-sided evidence.
ExistenceVerdict branch_existence_diagnostic(const FieldFamily& family, const InvariantBasis& basis,
                                             const GroupRep& group,
                                             const NondegeneracyReport& classification,
                                             const TransversalityReport& transversality,
                                             const CodimReport* codim, const IsotropyLabel& h,
                                             const DiagnosticOptions& opts, std::mt19937_64& rng);

}  // namespace symbreak

#endif
