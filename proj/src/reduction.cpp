#include "symbreak/reduction.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "symbreak/errors.hpp"

namespace symbreak {

GeneralReducedField project_general(const FieldFamily& family, const InvariantBasis& basis) {
    if (family.kind != FieldFamily::Kind::general)
        throw std::invalid_argument("project_general: family kind must be general");
    const int l = basis.size();
    const int n = basis.ambient_dim();
    if (static_cast<int>(family.coeffs.size()) != family.equivariants.size())
        throw std::invalid_argument("project_general: coefficient/equivariant count mismatch");
    GeneralReducedField out;
    out.coeffs = family.coeffs;
    for (int i = 0; i < family.equivariants.size(); ++i) {
        const PolyMap& f = family.equivariants.gens[i];
        if (f.size() != n) throw std::invalid_argument("equivariant map with wrong component count");
        std::vector<Polynomial> column;
        column.reserve(l);
        for (int j = 0; j < l; ++j) {
            Polynomial ip(n);  // <F_i, grad theta_j>
            for (int k = 0; k < n; ++k) ip = ip + f[k] * basis.grads[j][k];
            column.push_back(rewrite_in_generators(ip, basis));
        }
        out.tables.emplace_back(std::move(column));
    }
    return out;
}

PoissonStructure poisson_matrix(const InvariantBasis& basis, const Pairing& pairing) {
    const int l = basis.size();
    validate_pairing(pairing, basis.ambient_dim());
    PoissonStructure p;
    p.l = l;
    p.entries.assign(static_cast<size_t>(l) * l, Polynomial(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (i == j) continue;
            p.at(i, j) = rewrite_in_generators(poisson_bracket(basis.gens[i], basis.gens[j], pairing), basis);
        }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (p.at(i, j) != -p.at(j, i)) throw std::logic_error("Poisson matrix not antisymmetric");
    return p;
}

std::vector<Polynomial> reduced_hamiltonian_field(const Polynomial& ham, const PoissonStructure& p) {
    const int l = p.l;
    if (ham.dim() != l + 1)
        throw std::invalid_argument("reduced Hamiltonian must have l+1 variables (lambda last)");
    std::vector<Polynomial> comps;
    comps.reserve(l);
    for (int j = 0; j < l; ++j) {
        Polynomial acc(l + 1);
        for (int i = 0; i < l; ++i) {
            if (p.at(j, i).is_zero()) continue;
            acc = acc + ham.differentiate(i) * p.at(j, i).extend_dim(l + 1);
        }
        comps.push_back(acc);
    }
    return comps;
}

std::vector<Polynomial> reduced_field(const FieldFamily& family, const InvariantBasis& basis) {
    const int l = basis.size();
    if (family.kind == FieldFamily::Kind::hamiltonian) {
        return reduced_hamiltonian_field(family.hamiltonian, poisson_matrix(basis, family.pairing));
    }
    GeneralReducedField red = project_general(family, basis);
    std::vector<Polynomial> comps(l, Polynomial(l + 1));
    for (size_t i = 0; i < red.tables.size(); ++i)
        for (int j = 0; j < l; ++j)
            comps[j] = comps[j] + red.coeffs[i] * red.tables[i][j].extend_dim(l + 1);
    return comps;
}

std::vector<double> evaluate_reduced(const std::vector<Polynomial>& comps,
                                     const std::vector<double>& theta, double lambda) {
    if (comps.empty()) return {};
    if (static_cast<int>(theta.size()) + 1 != comps.front().dim())
        throw std::invalid_argument("evaluate_reduced: dimension mismatch");
    std::vector<double> x = theta;
    x.push_back(lambda);
    std::vector<double> out;
    out.reserve(comps.size());
    for (const auto& c : comps) out.push_back(c.evaluate(x));
    return out;
}

PolyMap assemble_full_field(const FieldFamily& family, const InvariantBasis& basis) {
    const int n = basis.ambient_dim();
    const int l = basis.size();
    // Substitution (theta_1(v), ..., theta_l(v), lambda) into the coefficients.
    std::vector<Polynomial> subs;
    subs.reserve(l + 1);
    for (const auto& g : basis.gens) subs.push_back(g.extend_dim(n + 1));
    subs.push_back(Polynomial::variable(n + 1, n));
    const PolyMap theta_and_lambda(subs);

    std::vector<Polynomial> comps(n, Polynomial(n + 1));
    if (family.kind == FieldFamily::Kind::general) {
        for (size_t i = 0; i < family.coeffs.size(); ++i) {
            const Polynomial fi = family.coeffs[i].compose(theta_and_lambda);
            for (int k = 0; k < n; ++k)
                comps[k] = comps[k] + fi * family.equivariants.gens[i][k].extend_dim(n + 1);
        }
    } else {
        validate_pairing(family.pairing, n);
        for (int i = 0; i < l; ++i) {
            const Polynomial dfi = family.hamiltonian.differentiate(i).compose(theta_and_lambda);
            // (J grad theta_i): +d/dp on the position slot, -d/dq on the momentum slot.
            for (const auto& [q, p] : family.pairing) {
                comps[q] = comps[q] + dfi * basis.grads[i][p].extend_dim(n + 1);
                comps[p] = comps[p] - dfi * basis.grads[i][q].extend_dim(n + 1);
            }
        }
    }
    return PolyMap(std::move(comps));
}

Polynomial reduce_mod_relations(const Polynomial& p, const std::vector<Polynomial>& relations) {
    if (relations.empty()) return p;
    Polynomial r = p;
    bool changed = true;
    while (changed && !r.is_zero()) {
        changed = false;
        for (const auto& rel : relations) {
            if (rel.is_zero()) continue;
            Polynomial relx = rel.dim() == r.dim() ? rel : rel.extend_dim(r.dim());
            const auto& lead = relx.terms().begin();
            const Monomial& lm = lead->first;
            const Rat& lc = lead->second;
            for (const auto& [m, c] : r.terms()) {
                bool divisible = true;
                for (size_t i = 0; i < lm.exp.size(); ++i)
                    if (m.exp[i] < lm.exp[i]) {
                        divisible = false;
                        break;
                    }
                if (!divisible) continue;
                Monomial q(static_cast<int>(m.exp.size()));
                for (size_t i = 0; i < m.exp.size(); ++i) q.exp[i] = m.exp[i] - lm.exp[i];
                Polynomial factor(r.dim());
                factor.set_coeff(q, c / lc);
                r = r - factor * relx;
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    return r;
}

TangencyReport check_tangency(const std::vector<Polynomial>& reduced, const InvariantBasis& basis,
                              int sample_count, double tol, std::uint64_t seed) {
    TangencyReport rep;
    const int l = basis.size();
    if (basis.relations.empty()) {
        rep.notes.push_back("no relations: vacuously tangent");
        return rep;
    }
    // Symbolic part: grad R . g reduces to zero modulo the relation ideal.
    for (const auto& rel : basis.relations) {
        Polynomial s(l + 1);
        for (int j = 0; j < l; ++j) s = s + rel.differentiate(j).extend_dim(l + 1) * reduced[j];
        if (!reduce_mod_relations(s, basis.relations).is_zero()) rep.symbolic_zero = false;
    }
    // Sampled part, at image points theta = pi(v).
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 0.5);
    const double lambdas[3] = {-0.4, 0.1, 0.9};
    for (int s = 0; s < sample_count; ++s) {
        std::vector<double> v(basis.ambient_dim());
        for (auto& x : v) x = gauss(rng);
        const std::vector<double> theta = hilbert_map(v, basis);
        const std::vector<double> td = evaluate_reduced(reduced, theta, lambdas[s % 3]);
        for (const auto& rel : basis.relations) {
            double val = 0;
            for (int j = 0; j < l; ++j) {
                std::vector<double> th = theta;
                val += rel.differentiate(j).evaluate(th) * td[j];
            }
            rep.max_residual = std::max(rep.max_residual, std::abs(val));
            if (std::abs(val) > tol) ++rep.violations;
        }
        ++rep.samples;
    }
    if (rep.violations > 0)
        rep.notes.push_back("tangency violations detected: flow leaves the relation variety");
    return rep;
}

}  // namespace symbreak
