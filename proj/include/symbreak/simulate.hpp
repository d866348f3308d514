#ifndef SYMBREAK_SIMULATE_HPP
#define SYMBREAK_SIMULATE_HPP

#include <functional>
#include <string>
#include <vector>

#include "symbreak/invariants.hpp"

namespace symbreak {

struct Trajectory {
    std::vector<double> times;                 // strictly increasing, uniform dt
    std::vector<std::vector<double>> states;
    double dt = 0;
    std::string method = "rk4";
    std::string scenario_id;
};

using VecField = std::function<std::vector<double>(const std::vector<double>&)>;

/// Classical fixed-step RK4. Deterministic. Throws no_convergence with the
/// blow-up time when a non-finite state appears.
Trajectory integrate(const VecField& field, const std::vector<double>& x0, double T, double dt);

/// max over shared times of |hilbert_map(full state) - reduced state|.
double commutation_error(const Trajectory& full, const Trajectory& reduced, const InvariantBasis& basis);

/// max over times of |quantity(x(t)) - quantity(x(0))|.
double conservation_drift(const Trajectory& traj, const Polynomial& quantity);

}  // namespace symbreak

#endif
