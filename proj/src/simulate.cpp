#include "symbreak/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "symbreak/errors.hpp"

namespace symbreak {

Trajectory integrate(const VecField& field, const std::vector<double>& x0, double T, double dt) {
    if (dt <= 0 || T <= 0) throw std::invalid_argument("integrate: need dt > 0 and T > 0");
    const int steps = static_cast<int>(std::llround(T / dt));
    const size_t n = x0.size();
    Trajectory traj;
    traj.dt = dt;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    std::vector<double> x = x0;
    traj.times.push_back(0.0);
    traj.states.push_back(x);
    std::vector<double> k1, k2, k3, k4, tmp(n);
    for (int s = 1; s <= steps; ++s) {
        k1 = field(x);
        for (size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
        k2 = field(tmp);
        for (size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
        k3 = field(tmp);
        for (size_t i = 0; i < n; ++i) tmp[i] = x[i] + dt * k3[i];
        k4 = field(tmp);
        for (size_t i = 0; i < n; ++i) x[i] += dt / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
        for (double xi : x)
            if (!std::isfinite(xi))
                throw no_convergence("integrate: non-finite state at t=" + std::to_string(s * dt));
        traj.times.push_back(s * dt);
        traj.states.push_back(x);
    }
    return traj;
}

double commutation_error(const Trajectory& full, const Trajectory& reduced, const InvariantBasis& basis) {
    if (full.times.size() != reduced.times.size())
        throw std::invalid_argument("commutation_error: time grids differ");
    double err = 0;
    for (size_t s = 0; s < full.times.size(); ++s) {
        if (std::abs(full.times[s] - reduced.times[s]) > 1e-12)
            throw std::invalid_argument("commutation_error: time grids differ");
        const std::vector<double> mapped = hilbert_map(full.states[s], basis);
        for (size_t i = 0; i < mapped.size(); ++i)
            err = std::max(err, std::abs(mapped[i] - reduced.states[s][i]));
    }
    return err;
}

double conservation_drift(const Trajectory& traj, const Polynomial& quantity) {
    if (traj.states.empty()) return 0;
    if (quantity.dim() != static_cast<int>(traj.states.front().size()))
        throw std::invalid_argument("conservation_drift: arity mismatch");
    const double q0 = quantity.evaluate(traj.states.front());
    double drift = 0;
    for (const auto& s : traj.states) drift = std::max(drift, std::abs(quantity.evaluate(s) - q0));
    return drift;
}

}  // namespace symbreak
