#pragma once

#include <cmath>
#include <vector>

#include "ngas/gap.hpp"
#include "ngas/model.hpp"
#include "ngas/roots.hpp"

// Vacuum structure of the effective theory: the Bogoliubov parameter linking
// the free and interacting vacua, the free-quanta condensate density, the
// effective potential over the field shift, and the energy gap that makes the
// perturbative vacuum unstable.

namespace ngas {
namespace vacuum {

struct GapFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VacuumStructure {
    double alpha;   // Bogoliubov parameter, alpha = ln(omega0/omega)/2
    double n0;      // free-quanta number density sinh^2(alpha)
    double omega0;  // free frequency sqrt(g)
    double omega;   // interacting frequency from the gap equation
};

// Structure of the sigma = 0 vacuum for a single-well class.
inline VacuumStructure vacuum_structure(const OscillatorSpec& spec) {
    if (is_double_well(spec.kind))
        throw std::invalid_argument("vacuum_structure: single-well classes only");
    VacuumStructure out;
    out.omega0 = std::sqrt(spec.g);
    out.omega = solve_gap(spec, Level(0)).omega;
    out.alpha = 0.5 * std::log(out.omega0 / out.omega);
    out.n0 = 0.25 * (out.omega / out.omega0 + out.omega0 / out.omega - 2.0);
    return out;
}

struct PotentialPoint {
    double sigma;
    double omega;  // sigma-constrained gap frequency
    double value;  // V_eff(sigma)
};

// Ground-state effective potential of the quartic single well at g = 1:
// V_eff(sigma) = omega/4 + (1 + 12 lambda sigma^2)/(4 omega)
//              + 3 lambda/(4 omega^2) + sigma^2/2 + lambda sigma^4,
// with omega(sigma) solving omega^3 - (1 + 12 lambda sigma^2) omega = 6 lambda.
inline PotentialPoint effective_potential_qm_point(double lambda, double sigma) {
    if (!(lambda > 0.0)) throw std::invalid_argument("effective_potential_qm: lambda must be positive");
    const double geff = 1.0 + 12.0 * lambda * sigma * sigma;
    double omega = 0.0;
    try {
        omega = depressed_cubic_positive_root(-geff, -6.0 * lambda);
    } catch (const std::exception&) {
        throw GapFailure("effective_potential_qm: gap equation unsolvable at grid point");
    }
    const double value = omega / 4.0 + geff / (4.0 * omega)
                         + 3.0 * lambda / (4.0 * omega * omega)
                         + 0.5 * sigma * sigma + lambda * std::pow(sigma, 4);
    return {sigma, omega, value};
}

inline std::vector<PotentialPoint> effective_potential_qm(double lambda,
                                                          const std::vector<double>& sigma_grid) {
    std::vector<PotentialPoint> curve;
    curve.reserve(sigma_grid.size());
    for (double s : sigma_grid) curve.push_back(effective_potential_qm_point(lambda, s));
    return curve;
}

// E_0 - E_0^{Pert} for the quartic single well at g = 1.  Negative for every
// lambda > 0: the free vacuum always sits above the effective one.
inline double stability_gap(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("stability_gap: lambda must be positive");
    const double omega = depressed_cubic_positive_root(-1.0, -6.0 * lambda);
    return 0.25 * (omega + 1.0 / omega)
           + 0.75 * lambda * (1.0 / (omega * omega) - 1.0) - 0.5;
}

}  // namespace vacuum
}  // namespace ngas
