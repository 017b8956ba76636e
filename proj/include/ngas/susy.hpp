#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "ngas/gap.hpp"
#include "ngas/model.hpp"
#include "ngas/oracle.hpp"
#include "ngas/quadrature.hpp"
#include "ngas/spectrum.hpp"

// Supersymmetric pairing of the sextic oscillators: the superpotential
// W = beta*phi^3 generates partner Hamiltonians p^2 + beta^2 phi^6 +- 3 beta
// phi^2, which map onto the sextic AHO/DWO at lambda = beta^2/2, g = 3 beta.
// Energies quoted for the pair use that doubled normalization throughout.

namespace ngas {
namespace susy {

struct SusyPair {
    double beta;
    OscillatorSpec aho_spec;
    OscillatorSpec dwo_spec;
};

inline SusyPair make_pair(double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("susy: beta must be positive");
    const double lambda = 0.5 * beta * beta;
    const double g = 3.0 * beta;
    return {beta,
            OscillatorSpec(OscillatorKind::SexticAho, g, lambda),
            OscillatorSpec(OscillatorKind::SexticDwo, g, lambda)};
}

// Doubled-convention leading-order energy of one partner level.
inline double partner_energy_lo(const OscillatorSpec& spec, int n) {
    return 2.0 * energy_lo_value(spec, Level(n));
}

struct IsppRow {
    int n;
    double e_aho;       // E_n of the single-well partner
    double e_dwo_next;  // E_{n+1} of the double-well partner
    double relative_gap;
};

// Iso-spectrality table: E_{n+1}^{DWO} against E_n^{AHO}, doubled convention.
inline std::vector<IsppRow> ispp_table(double beta, int n_max) {
    if (n_max < 0) throw std::invalid_argument("ispp_table: n_max must be non-negative");
    const SusyPair pair = make_pair(beta);
    std::vector<IsppRow> rows;
    rows.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double ea = partner_energy_lo(pair.aho_spec, n);
        const double ed = partner_energy_lo(pair.dwo_spec, n + 1);
        rows.push_back({n, ea, ed, std::abs(ed - ea) / ea});
    }
    return rows;
}

struct ExactCheckReport {
    double beta;
    double dwo_ground;                 // doubled oracle E_0 of the double well
    std::vector<double> aho_levels;    // doubled oracle E_n, n = 0..n_max
    std::vector<double> dwo_levels;    // doubled oracle E_{n+1}, n = 0..n_max
    double max_pair_mismatch;          // max relative |E_{n+1}^DWO - E_n^AHO|
};

// Oracle-based verification of the exact SUSY statements: the double-well
// ground state sits at zero and the shifted spectra coincide.
inline ExactCheckReport susy_exact_checks(double beta, int n_max = 10,
                                          double tol = 1e-9) {
    const SusyPair pair = make_pair(beta);
    const OracleResult aho = converged_levels(pair.aho_spec, n_max + 1, tol);
    const OracleResult dwo = converged_levels(pair.dwo_spec, n_max + 2, tol);

    ExactCheckReport report;
    report.beta = beta;
    report.dwo_ground = 2.0 * dwo.eigenvalues[0];
    report.max_pair_mismatch = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        const double ea = 2.0 * aho.eigenvalues[static_cast<size_t>(n)];
        const double ed = 2.0 * dwo.eigenvalues[static_cast<size_t>(n) + 1];
        report.aho_levels.push_back(ea);
        report.dwo_levels.push_back(ed);
        report.max_pair_mismatch =
            std::max(report.max_pair_mismatch, std::abs(ed - ea) / std::max(1.0, std::abs(ea)));
    }
    return report;
}

// Normalized Gaussian psi(phi) = amplitude * exp(-width_exponent * phi^2).
struct GaussianState {
    double amplitude;
    double width_exponent;
};

// Ground state of the double-well partner predicted by the superpotential:
// psi ~ exp(-beta phi^4 / 4), amplitude (8 beta)^{1/8} / sqrt(Gamma(1/4)).
inline double susy_groundstate_amplitude(double beta) {
    return std::pow(8.0 * beta, 0.125) / std::sqrt(std::tgamma(0.25));
}

inline double susy_groundstate(double beta, double phi) {
    return susy_groundstate_amplitude(beta) * std::exp(-beta * std::pow(phi, 4) / 4.0);
}

// Gaussian ground state of the double well at the gap frequency
// omega^2 = (-g + sqrt(g^2 + 90 lambda)) / 2 evaluated on the SUSY parameter map.
inline GaussianState ngas_groundstate(double beta) {
    const SusyPair pair = make_pair(beta);
    const double omega = solve_gap(pair.dwo_spec, Level(0)).omega;
    const double pi = std::numbers::pi;
    return {std::pow(omega / pi, 0.25), 0.5 * omega};
}

inline double evaluate(const GaussianState& state, double phi) {
    return state.amplitude * std::exp(-state.width_exponent * phi * phi);
}

struct GroundstateComparison {
    double beta;
    double susy_amplitude;
    GaussianState ngas_state;
    double overlap;  // <psi_susy | psi_ngas>, both unit normalized
};

inline GroundstateComparison groundstate_comparison(double beta) {
    GroundstateComparison cmp;
    cmp.beta = beta;
    cmp.susy_amplitude = susy_groundstate_amplitude(beta);
    cmp.ngas_state = ngas_groundstate(beta);
    // Both states decay at least as fast as the Gaussian; integrate the
    // product over a window wide enough for the slower tail.
    const double cut = 12.0 / std::sqrt(cmp.ngas_state.width_exponent);
    auto product = [&](double phi) {
        return susy_groundstate(beta, phi) * evaluate(cmp.ngas_state, phi);
    };
    cmp.overlap = 2.0 * adaptive_simpson(product, 0.0, cut, 1e-13);
    return cmp;
}

}  // namespace susy
}  // namespace ngas
