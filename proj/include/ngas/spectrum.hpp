#pragma once

#include <cmath>
#include <optional>

#include "ngas/gap.hpp"
#include "ngas/model.hpp"
#include "ngas/moments.hpp"

// Leading-order spectra for all oscillator classes and the general energy
// functional <H>(omega, sigma) they are cross-checked against.

namespace ngas {

struct WrongClass : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LevelEnergy {
    double e0 = 0.0;
    std::optional<double> de2;
    std::optional<double> de3;

    double total() const { return e0 + de2.value_or(0.0) + de3.value_or(0.0); }
};

inline Moments moments(const GapSolution& gap, Level level) {
    return moments(gap.omega, gap.sigma, level.xi());
}

// <H> evaluated at arbitrary (omega, sigma), without imposing the gap
// equation.  Doubles as the variational energy surface.
inline double energy_general(const OscillatorSpec& spec, Level level, double omega,
                             double sigma) {
    const Moments m = moments(omega, sigma, level.xi());
    return 0.5 * m.p2 + 0.5 * quadratic_sign(spec.kind) * spec.g * m.m2
           + spec.lambda * anharmonic_moment(spec.kind, m);
}

// Class/phase closed forms for the leading-order energy, cross-checked
// against the general functional at the gap solution.
inline LevelEnergy energy_lo(const OscillatorSpec& spec, Level level,
                             const GapSolution& gap) {
    const double g = spec.g;
    const double xi = level.xi();
    const double w = gap.omega;

    double e0 = 0.0;
    switch (spec.kind) {
    case OscillatorKind::QuarticAho:
        e0 = (xi / 4.0) * (3.0 * w + g / w);
        break;
    case OscillatorKind::QuarticDwo:
        if (gap.phase == Phase::SSB)
            e0 = (xi / 4.0) * (3.0 * w + 2.0 * g / w) - g * g / (16.0 * spec.lambda);
        else
            e0 = (xi / 4.0) * (3.0 * w - g / w);
        break;
    case OscillatorKind::SexticAho:
        e0 = (xi / 3.0) * (2.0 * w + g / w);
        break;
    case OscillatorKind::SexticDwo:
        e0 = (xi / 3.0) * (2.0 * w - g / w);
        break;
    case OscillatorKind::OcticAho:
        e0 = (xi / 8.0) * (5.0 * w + 3.0 * g / w);
        break;
    }

    const double check = energy_general(spec, level, w, gap.sigma);
    if (std::abs(check - e0) > 1e-9 * std::max(1.0, std::abs(e0)))
        throw InconsistentGap("energy_lo: closed form disagrees with <H>(omega, sigma)");

    LevelEnergy out;
    out.e0 = e0;
    return out;
}

inline double energy_lo_value(const OscillatorSpec& spec, Level level) {
    return energy_lo(spec, level, solve_gap(spec, level)).e0;
}

// Relative deviation of E(g, lambda) from lambda^{1/3} E(g lambda^{-2/3}, 1)
// for the quartic single well; exact for the underlying Hamiltonian.
inline double scaling_check(double g, double lambda, Level level) {
    if (!(lambda > 0.0)) throw std::invalid_argument("scaling_check: lambda must be positive");
    const OscillatorSpec direct(OscillatorKind::QuarticAho, g, lambda);
    const double e = energy_lo_value(direct, level);
    const double cube = std::cbrt(lambda);
    const OscillatorSpec reduced(OscillatorKind::QuarticAho, g / (cube * cube), 1.0);
    const double scaled = cube * energy_lo_value(reduced, level);
    return std::abs(e - scaled) / std::abs(e);
}

inline double scaling_check(const OscillatorSpec& spec, Level level) {
    if (spec.kind != OscillatorKind::QuarticAho)
        throw WrongClass("scaling_check: cube-root scaling applies to the quartic single well");
    return scaling_check(spec.g, spec.lambda, level);
}

}  // namespace ngas
