#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

// Small root-finding helpers: closed-form positive roots of depressed cubics
// and a bisection-safeguarded Newton iteration for bracketed monotone roots.

namespace ngas {

// Positive real root of x^3 + p*x + q = 0 for q < 0 (so a positive root
// exists).  Uses the radical form when the discriminant allows it and the
// trigonometric form otherwise, then polishes with Newton to absorb the
// floating-point cancellation of the radicals.
inline double depressed_cubic_positive_root(double p, double q) {
    if (!(q < 0.0)) throw std::invalid_argument("depressed_cubic_positive_root: q must be negative");
    const double big_q = -q / 2.0;  // x^3 + p x - 2Q = 0 with Q > 0
    double x;
    if (p >= 0.0) {
        // One real root; Cardano with both radicals positive.
        const double d = std::sqrt(big_q * big_q + (p / 3.0) * (p / 3.0) * (p / 3.0));
        x = std::cbrt(big_q + d) + std::cbrt(big_q - d);
    } else {
        const double big_p = -p / 3.0;  // x^3 - 3P x - 2Q = 0, P > 0
        const double disc = big_q * big_q - big_p * big_p * big_p;
        if (disc >= 0.0) {
            const double s = std::sqrt(disc);
            x = std::cbrt(big_q + s) + std::cbrt(big_q - s);
        } else {
            // Three real roots; the largest one is positive since the product
            // of the roots is 2Q > 0 and their sum vanishes.
            const double r = std::sqrt(big_p);
            const double theta = std::acos(big_q / (big_p * r));
            x = 2.0 * r * std::cos(theta / 3.0);
        }
    }
    // Newton polish (the derivative 3x^2 + p is nonzero at the positive root).
    for (int it = 0; it < 3; ++it) {
        const double fx = (x * x + p) * x + q;
        const double dfx = 3.0 * x * x + p;
        if (dfx == 0.0) break;
        x -= fx / dfx;
    }
    return x;
}

// Newton iteration restricted to [lo, hi]; falls back to bisection whenever a
// step leaves the bracket or fails to shrink the residual.  f must be
// continuous with f(lo) <= 0 <= f(hi).
inline double safeguarded_newton(const std::function<double(double)>& f,
                                 const std::function<double(double)>& df,
                                 double lo, double hi, double x0,
                                 double tol, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo > 0.0 || fhi < 0.0)
        throw std::invalid_argument("safeguarded_newton: root not bracketed");
    double x = std::min(std::max(x0, lo), hi);
    for (int it = 0; it < max_iter; ++it) {
        const double fx = f(x);
        if (std::abs(fx) <= tol) return x;
        if (fx < 0.0) lo = x; else hi = x;
        const double dfx = df(x);
        double next = (dfx != 0.0) ? x - fx / dfx : lo;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == x) return x;  // bracket exhausted at double precision
        x = next;
    }
    return x;
}

// Plain bisection, used by test oracles as the independent route.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double xtol = 1e-14, int max_iter = 400) {
    double flo = f(lo);
    if (flo == 0.0) return lo;
    double fhi = f(hi);
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw std::invalid_argument("bisect: root not bracketed");
    for (int it = 0; it < max_iter && (hi - lo) > xtol * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace ngas
