#pragma once

#include "ngas/model.hpp"

// Quantum averages of field monomials in the eigenstates of the shifted
// harmonic oscillator with frequency omega and field shift sigma.

namespace ngas {

struct Moments {
    double m1;  // <phi>
    double m2;  // <phi^2>
    double m3;  // <phi^3>
    double m4;  // <phi^4>
    double m6;  // <phi^6>
    double m8;  // <phi^8>
    double p2;  // <p^2>
};

inline Moments moments(double omega, double sigma, double xi) {
    if (!(omega > 0.0)) throw std::invalid_argument("moments: omega must be positive");
    const double s2 = sigma * sigma;
    const double s4 = s2 * s2;
    const double s6 = s4 * s2;
    const double s8 = s4 * s4;
    const double xw = xi / omega;
    const double w2 = omega * omega;
    const double w3 = w2 * omega;
    const double w4 = w2 * w2;
    const double xi2 = xi * xi;
    const double q = 1.0 + 4.0 * xi2;   // recurring even-moment combination

    Moments m;
    m.m1 = sigma;
    m.m2 = s2 + xw;
    m.m3 = sigma * s2 + 3.0 * sigma * xw;
    m.m4 = s4 + 6.0 * s2 * xw + 3.0 * q / (8.0 * w2);
    m.m6 = s6 + 15.0 * s4 * xw + 45.0 * s2 * q / (8.0 * w2)
           + (5.0 / 8.0) * (xi / w3) * (5.0 + 4.0 * xi2);
    m.m8 = s8 + 28.0 * s6 * xw + (105.0 / (4.0 * w2)) * s4 * q
           + (35.0 / 2.0) * (s2 * xi / w3) * (5.0 + 4.0 * xi2)
           + (35.0 / 128.0) * (16.0 * xi2 * xi2 + 56.0 * xi2 + 9.0) / w4;
    m.p2 = omega * xi;
    return m;
}

// Moment of phi^{2k} entering <H> for the given oscillator class.
inline double anharmonic_moment(OscillatorKind kind, const Moments& m) {
    switch (anharmonic_power(kind)) {
    case 4: return m.m4;
    case 6: return m.m6;
    case 8: return m.m8;
    }
    throw std::logic_error("anharmonic_moment: unexpected power");
}

}  // namespace ngas
