#pragma once

#include <stdexcept>

// Core domain types shared by every solver: oscillator classes, couplings,
// excitation levels and the combinatorial level functions f, p, h.

namespace ngas {

enum class OscillatorKind {
    QuarticAho,
    QuarticDwo,
    SexticAho,
    SexticDwo,
    OcticAho,
};

// Power 2k of the anharmonic term phi^{2k}.
constexpr int anharmonic_power(OscillatorKind kind) {
    switch (kind) {
    case OscillatorKind::QuarticAho:
    case OscillatorKind::QuarticDwo: return 4;
    case OscillatorKind::SexticAho:
    case OscillatorKind::SexticDwo: return 6;
    case OscillatorKind::OcticAho: return 8;
    }
    return 0;  // unreachable
}

// Sign of the quadratic term: +1 single well, -1 double well.
constexpr int quadratic_sign(OscillatorKind kind) {
    switch (kind) {
    case OscillatorKind::QuarticDwo:
    case OscillatorKind::SexticDwo: return -1;
    default: return +1;
    }
}

constexpr bool is_double_well(OscillatorKind kind) { return quadratic_sign(kind) < 0; }

inline const char* to_string(OscillatorKind kind) {
    switch (kind) {
    case OscillatorKind::QuarticAho: return "quartic-aho";
    case OscillatorKind::QuarticDwo: return "quartic-dwo";
    case OscillatorKind::SexticAho: return "sextic-aho";
    case OscillatorKind::SexticDwo: return "sextic-dwo";
    case OscillatorKind::OcticAho: return "octic-aho";
    }
    return "?";
}

// H = p^2/2 + s*g*phi^2/2 + lambda*phi^{2k}, with s = quadratic_sign(kind).
// g is stored positive for double wells as well; the sign lives in the kind.
// lambda == 0 is accepted so that free-field limits stay expressible.
struct OscillatorSpec {
    OscillatorKind kind;
    double g;
    double lambda;

    OscillatorSpec(OscillatorKind kind_, double g_, double lambda_)
        : kind(kind_), g(g_), lambda(lambda_) {
        if (!(g > 0.0))
            throw std::invalid_argument("OscillatorSpec: g must be positive");
        if (!(lambda >= 0.0))
            throw std::invalid_argument("OscillatorSpec: lambda must be non-negative");
    }
};

// Excitation index n with the derived xi = n + 1/2.
struct Level {
    int n;

    explicit Level(int n_) : n(n_) {
        if (n < 0) throw std::invalid_argument("Level: n must be non-negative");
    }
    double xi() const { return n + 0.5; }
};

// f(xi) = xi + 1/(4 xi) = (1 + 4 xi^2)/(4 xi)
inline double level_f(double xi) { return xi + 1.0 / (4.0 * xi); }
inline double level_f(Level level) { return level_f(level.xi()); }

// p(xi) = 5 xi - 1/(4 xi)
inline double level_p(double xi) { return 5.0 * xi - 1.0 / (4.0 * xi); }
inline double level_p(Level level) { return level_p(level.xi()); }

// h(xi) = xi^3 + 7 xi/2 + 9/(16 xi)
inline double level_h(double xi) {
    return xi * xi * xi + 3.5 * xi + 9.0 / (16.0 * xi);
}
inline double level_h(Level level) { return level_h(level.xi()); }

struct LevelFunctions {
    double f;
    double p;
    double h;
};

inline LevelFunctions level_functions(Level level) {
    const double xi = level.xi();
    return {level_f(xi), level_p(xi), level_h(xi)};
}

enum class Phase { SR, SSB };

inline const char* to_string(Phase phase) { return phase == Phase::SR ? "SR" : "SSB"; }

// SSB is realizable only for the quartic double well; every other class is
// stable in the symmetry-restored vacuum.
constexpr bool phase_allowed(OscillatorKind kind, Phase phase) {
    return phase == Phase::SR || kind == OscillatorKind::QuarticDwo;
}

// Coefficients of the quadratic ansatz V(phi) = A phi^2 - B phi + C together
// with the induced energy shift h0 = lambda*C - omega^2 sigma^2 / 2.
struct PotentialParams {
    double a;
    double b;
    double c;
    double h0;
};

}  // namespace ngas
