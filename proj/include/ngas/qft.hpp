#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>


// lambda*phi^4 theory in 3+1 dimensions, symmetric phase: regularized
// momentum integrals, the bare mass-gap equation, renormalization on the
// precarious branch, the manifestly renormalized effective potential with its
// transcendental gap equation, the perturbative-vacuum triviality check, and
// the vacuum-condensate momentum distribution.
//
// Bare-side quantities always carry an explicit 3-momentum cutoff; the
// renormalized effective potential works directly in (t, eta, sigma/m_R)
// variables where no cutoff appears.

namespace ngas {
namespace qft {

struct NoPositiveSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BranchUnavailable : std::domain_error {
    using std::domain_error::domain_error;
};

struct OutsideDomain : std::domain_error {
    using std::domain_error::domain_error;
};

inline constexpr double pi_sq = 9.869604401089358;  // pi^2

// Regularized integrals I_n(x) = (1/4pi^2) Int_0^Lambda k^2 w_k^{2n-1} dk with
// w_k = sqrt(k^2 + x^2), evaluated from closed-form antiderivatives.
struct StevensonIntegrals {
    double mass;    // x
    double cutoff;  // Lambda
    double i0;
    double i1;
    double im1;     // requires mass > 0 (logarithmic at x = 0)
};

inline StevensonIntegrals stevenson_integrals(double mass, double cutoff) {
    if (!(mass >= 0.0)) throw std::invalid_argument("stevenson_integrals: mass must be >= 0");
    if (!(cutoff > 0.0)) throw std::invalid_argument("stevenson_integrals: cutoff must be > 0");
    const double x = mass;
    const double L = cutoff;
    const double norm = 1.0 / (4.0 * pi_sq);
    StevensonIntegrals out{mass, cutoff, 0.0, 0.0, 0.0};
    if (x == 0.0) {
        out.i0 = norm * L * L / 2.0;
        out.i1 = norm * L * L * L * L / 4.0;
        out.im1 = std::numeric_limits<double>::infinity();
        return out;
    }
    const double w = std::sqrt(L * L + x * x);
    const double s = std::asinh(L / x);
    out.i0 = norm * 0.5 * (L * w - x * x * s);
    out.i1 = norm * 0.125 * (L * (2.0 * L * L + x * x) * w - x * x * x * x * s);
    out.im1 = norm * (s - L / w);
    return out;
}

inline double i0_of_m2(double m2, double cutoff) {
    return stevenson_integrals(std::sqrt(std::max(0.0, m2)), cutoff).i0;
}

// Mass gap at fixed (bare mass^2, bare coupling, sigma, cutoff): the positive
// fixed point of M^2 = m^2 + 12 lambda sigma^2 + 12 lambda I0(M^2), found by
// damped iteration.
inline double bare_gap(double m2_bare, double lambda_bare, double sigma, double cutoff) {
    const double base = m2_bare + 12.0 * lambda_bare * sigma * sigma;
    auto rhs = [&](double m2) { return base + 12.0 * lambda_bare * i0_of_m2(m2, cutoff); };

    double m2 = std::max(base, 0.0);
    double damping = 1.0;
    double prev_gap = std::numeric_limits<double>::infinity();
    const double scale = std::max(1.0, std::abs(base));
    for (int it = 0; it < 4000; ++it) {
        const double target = rhs(m2);
        if (target < 0.0)
            throw NoPositiveSolution("bare_gap: no positive mass-squared solution");
        const double gap = std::abs(target - m2);
        if (gap <= 1e-13 * std::max(scale, std::abs(m2))) return m2;
        if (gap > prev_gap) damping *= 0.5;  // oscillating; damp harder
        prev_gap = gap;
        m2 += damping * (target - m2);
    }
    throw NoPositiveSolution("bare_gap: damped iteration failed to settle");
}

struct RenormalizedPoint {
    double m_r;       // renormalized mass
    double lambda_r;  // renormalized coupling
    double eta;       // -4 pi^2 / lambda_r
    double t;         // mass-gap ratio M^2(sigma)/m_R^2
    double sigma;
};

inline double eta_from_coupling(double lambda_r) {
    if (lambda_r == 0.0) throw std::invalid_argument("eta_from_coupling: lambda_r must be nonzero");
    return -4.0 * pi_sq / lambda_r;
}

inline double coupling_from_eta(double eta) {
    if (eta == 0.0) throw std::invalid_argument("coupling_from_eta: eta must be nonzero");
    return -4.0 * pi_sq / eta;
}

// Forward map at finite cutoff: bare (m^2, lambda) -> (m_R, lambda_R).
inline std::pair<double, double> renormalize(double m2_bare, double lambda_bare,
                                             double cutoff) {
    const double mr2 = bare_gap(m2_bare, lambda_bare, 0.0, cutoff);
    if (!(mr2 > 0.0)) throw NoPositiveSolution("renormalize: m_R^2 must be positive");
    const double mr = std::sqrt(mr2);
    if (lambda_bare == 0.0) return {mr, 0.0};
    const double im1 = stevenson_integrals(mr, cutoff).im1;
    const double lr = lambda_bare * (1.0 - 12.0 * lambda_bare * im1)
                      / (1.0 + 6.0 * lambda_bare * im1);
    return {mr, lr};
}

// Inverse map on the precarious branch (lambda_R < 0).  Expanding the
// coupling relation in inverse powers of I_-1 gives
//   lambda = -(1/(6 I_-1)) (1 + 1/(2 lambda_R I_-1) + ...),
// truncated at the first correction; the second root of the quadratic tends
// to -lambda_R/2 and is the unstable branch.  The bare mass then follows
// exactly from the defining linear relation m^2 = m_R^2 - 12 lambda I0(m_R)
// (the published form m^2 = m_R^2 + 2 I0/I_-1 is its leading order).
// Order at which the coupling series is cut: the first 1/(lambda_R I_-1)
// correction is kept, everything beyond is dropped.
inline constexpr int renormalize_inverse_truncation_order = 1;

inline std::pair<double, double> renormalize_inverse(double m_r, double lambda_r,
                                                     double cutoff) {
    if (!(m_r > 0.0)) throw std::invalid_argument("renormalize_inverse: m_r must be positive");
    if (!(lambda_r < 0.0))
        throw BranchUnavailable("renormalize_inverse: only the precarious branch (lambda_R < 0) inverts");
    const StevensonIntegrals si = stevenson_integrals(m_r, cutoff);
    const double lambda = (-1.0 / (6.0 * si.im1)) * (1.0 + 1.0 / (2.0 * lambda_r * si.im1));
    const double m2 = m_r * m_r - 12.0 * lambda * si.i0;
    return {m2, lambda};
}

// Solvability edge of the renormalized gap equation:
// sigma_min^2 = (m_R^2 / 16 pi^2) (e^{-eta} + eta - 1).
inline double sigma_min_squared(double eta, double m_r) {
    return m_r * m_r / (16.0 * pi_sq) * (std::exp(-eta) + eta - 1.0);
}

// Solve (1 - eta)(t - 1) - 16 pi^2 sigma^2 / m_R^2 = t ln t on the branch
// continuously connected to t = 1 at sigma = 0.  The precarious branch has
// lambda_R < 0, i.e. eta > 0; non-positive eta is refused rather than solved
// on the wrong side of the tangency.
inline double renormalized_gap(double eta, double sigma, double m_r) {
    if (!(m_r > 0.0)) throw std::invalid_argument("renormalized_gap: m_r must be positive");
    if (!(eta > 0.0))
        throw BranchUnavailable("renormalized_gap: eta must be positive (lambda_R < 0)");
    const double s = 16.0 * pi_sq * sigma * sigma / (m_r * m_r);
    const double s_max = std::exp(-eta) + eta - 1.0;
    if (s > s_max * (1.0 + 1e-12))
        throw OutsideDomain("renormalized_gap: sigma^2 beyond the solvable domain");
    if (s == 0.0) return 1.0;

    // G(t) = (1-eta)(t-1) - t ln t decreases from s_max at t* = e^{-eta}
    // to 0 at t = 1; bisect G(t) = s on [t*, 1].
    auto g = [&](double t) { return (1.0 - eta) * (t - 1.0) - t * std::log(t); };
    const double t_star = std::exp(-eta);
    if (s >= s_max) return t_star;
    double lo = t_star;
    double hi = 1.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-16 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > s) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Full renormalized-side state at one (eta, sigma) point.
inline RenormalizedPoint renormalized_point(double eta, double sigma, double m_r) {
    return {m_r, coupling_from_eta(eta), eta, renormalized_gap(eta, sigma, m_r), sigma};
}

// Second root of the gap equation beyond the tangency point, reported only as
// a diagnostic; absent when the lower branch does not reach s.
inline std::optional<double> renormalized_gap_second_root(double eta, double sigma,
                                                          double m_r) {
    if (!(eta > 0.0))
        throw BranchUnavailable("renormalized_gap_second_root: eta must be positive");
    const double s = 16.0 * pi_sq * sigma * sigma / (m_r * m_r);
    const double s_max = std::exp(-eta) + eta - 1.0;
    if (s > s_max) return std::nullopt;
    auto g = [&](double t) { return (1.0 - eta) * (t - 1.0) - t * std::log(t); };
    const double t_star = std::exp(-eta);
    const double floor = 1e-14;
    if (g(floor) > s) return std::nullopt;  // branch never descends to s
    double lo = floor;
    double hi = t_star;
    for (int it = 0; it < 200 && (hi - lo) > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < s) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

struct CurvePoint {
    double sigma;
    double t;
    double u;  // U0(sigma) - U_min
};

struct EffectivePotentialCurve {
    std::vector<CurvePoint> points;
    double u_min = 0.0;        // minimum of the stored (subtracted) values
    double domain_edge = 0.0;  // sigma_min(eta)
};

// Manifestly renormalized effective potential, measured from U_min:
// U0 - U_min = t m_R^2 sigma^2 / 4 - (m_R^4/128 pi^2)(t-1)^2
//            - (m_R^4/64 pi^2)(t-1) eta.
inline double effective_potential_value(double eta, double m_r, double sigma) {
    const double t = renormalized_gap(eta, sigma, m_r);
    const double mr2 = m_r * m_r;
    const double mr4 = mr2 * mr2;
    return 0.25 * t * mr2 * sigma * sigma
           - mr4 / (128.0 * pi_sq) * (t - 1.0) * (t - 1.0)
           - mr4 / (64.0 * pi_sq) * (t - 1.0) * eta;
}

inline EffectivePotentialCurve effective_potential(double eta, double m_r,
                                                   const std::vector<double>& sigma_grid) {
    EffectivePotentialCurve curve;
    curve.domain_edge = std::sqrt(sigma_min_squared(eta, m_r));
    curve.points.reserve(sigma_grid.size());
    double lowest = std::numeric_limits<double>::infinity();
    for (double sigma : sigma_grid) {
        const double t = renormalized_gap(eta, sigma, m_r);
        const double u = effective_potential_value(eta, m_r, sigma);
        curve.points.push_back({sigma, t, u});
        lowest = std::min(lowest, u);
    }
    curve.u_min = curve.points.empty() ? 0.0 : lowest;
    return curve;
}

// Effective potential built on the perturbative vacuum at finite cutoff:
// U^P(sigma) = m^2 sigma^2/2 + lambda sigma^4 + I1bar + 6 lambda sigma^2 I0bar
//            + 3 lambda I0bar^2, with sigma-independent Ibar_n = I_n(m).
inline double perturbative_ep_value(double m2_bare, double lambda_bare, double cutoff,
                                    double sigma) {
    if (!(m2_bare > 0.0))
        throw std::invalid_argument("perturbative_ep: symmetric phase requires m^2 > 0");
    const StevensonIntegrals si = stevenson_integrals(std::sqrt(m2_bare), cutoff);
    const double s2 = sigma * sigma;
    return 0.5 * m2_bare * s2 + lambda_bare * s2 * s2 + si.i1
           + 6.0 * lambda_bare * s2 * si.i0 + 3.0 * lambda_bare * si.i0 * si.i0;
}

struct TrivialityReport {
    double m2_bare = 0.0;
    double lambda_bare = 0.0;
    double cutoff = 0.0;
    double mbar_r2 = 0.0;              // m^2 + 12 lambda I0(m), at the given cutoff
    double mbar_r2_doubled_cutoff = 0.0;
    std::optional<bool> unbounded_below;       // lambda < 0: U^P eventually drops below U^P(0)
    std::optional<double> unbounded_witness;   // a sigma with U^P(sigma) < U^P(0)
    std::optional<bool> cutoff_squared_growth; // lambda > 0: mbar_R^2 - m^2 scales like Lambda^2
    double u_min_ngas = 0.0;           // I1(M) - 3 lambda I0(M)^2 at the gap mass
    double u_min_perturbative = 0.0;   // U^P(0)
    bool ngas_min_below_perturbative = false;
};

struct PerturbativeEp {
    std::vector<CurvePoint> points;  // t is not defined on this side; stored as 0
    TrivialityReport report;
};

inline PerturbativeEp perturbative_ep(double m2_bare, double lambda_bare, double cutoff,
                                      const std::vector<double>& sigma_grid) {
    PerturbativeEp out;
    const double u0 = perturbative_ep_value(m2_bare, lambda_bare, cutoff, 0.0);
    out.points.reserve(sigma_grid.size());
    for (double sigma : sigma_grid)
        out.points.push_back(
            {sigma, 0.0, perturbative_ep_value(m2_bare, lambda_bare, cutoff, sigma)});

    TrivialityReport& rep = out.report;
    rep.m2_bare = m2_bare;
    rep.lambda_bare = lambda_bare;
    rep.cutoff = cutoff;
    const double m = std::sqrt(m2_bare);
    rep.mbar_r2 = m2_bare + 12.0 * lambda_bare * stevenson_integrals(m, cutoff).i0;
    rep.mbar_r2_doubled_cutoff =
        m2_bare + 12.0 * lambda_bare * stevenson_integrals(m, 2.0 * cutoff).i0;

    if (lambda_bare < 0.0) {
        // The quartic term eventually wins: scan outward for a witness.
        double sigma = std::sqrt(m2_bare / std::abs(lambda_bare));
        bool found = false;
        for (int it = 0; it < 200; ++it) {
            if (perturbative_ep_value(m2_bare, lambda_bare, cutoff, sigma) < u0) {
                found = true;
                break;
            }
            sigma *= 2.0;
        }
        rep.unbounded_below = found;
        if (found) rep.unbounded_witness = sigma;
    } else if (lambda_bare > 0.0) {
        const double growth = (rep.mbar_r2_doubled_cutoff - m2_bare) / (rep.mbar_r2 - m2_bare);
        rep.cutoff_squared_growth = growth > 3.5 && growth < 4.5;
    }

    const double gap_m2 = bare_gap(m2_bare, lambda_bare, 0.0, cutoff);
    const StevensonIntegrals si = stevenson_integrals(std::sqrt(gap_m2), cutoff);
    rep.u_min_ngas = si.i1 - 3.0 * lambda_bare * si.i0 * si.i0;
    rep.u_min_perturbative = u0;
    rep.ngas_min_below_perturbative = rep.u_min_ngas < rep.u_min_perturbative;
    return out;
}

struct CondensateRow {
    double k;
    double n;    // free-quanta number density in the interacting vacuum
    double rho;  // n(k)/n(0) in the cutoff-removed limit
};

// Momentum distribution of the free-quanta condensate carried by the
// interacting vacuum: n(k) from the Bogoliubov angle between masses m and
// m_R, and the cutoff-removed shape rho(k) = (1 + k^2/m_R^2)^{-1/2}.
inline std::vector<CondensateRow> condensate_density(double m_bare, double m_r,
                                                     const std::vector<double>& k_grid) {
    if (!(m_r > 0.0)) throw std::invalid_argument("condensate_density: m_r must be positive");
    const double norm = 1.0 / (32.0 * pi_sq * std::numbers::pi);
    std::vector<CondensateRow> rows;
    rows.reserve(k_grid.size());
    for (double k : k_grid) {
        const double wm = std::sqrt(k * k + m_bare * m_bare);
        const double wr = std::sqrt(k * k + m_r * m_r);
        const double n = norm * (wm / wr + wr / wm - 2.0);
        const double rho = 1.0 / std::sqrt(1.0 + k * k / (m_r * m_r));
        rows.push_back({k, n, rho});
    }
    return rows;
}

}  // namespace qft
}  // namespace ngas
