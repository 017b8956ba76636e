#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "ngas/gap.hpp"
#include "ngas/model.hpp"

// Independent eigenvalues by Rayleigh-Ritz diagonalization in a truncated
// harmonic-oscillator basis.  This is the arbiter for every accuracy claim
// made about the leading-order formulas, so it shares no code path with them
// beyond the domain types.

namespace ngas {

struct EigensolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    std::vector<double> eigenvalues;  // ascending
    int basis_size = 0;
    double basis_frequency = 0.0;
    bool converged = false;
    double tail_estimate = 0.0;  // change of tracked levels on the last doubling
};

namespace detail {

// Column `col` of the matrix of x^{2k} in the frequency-Omega basis, computed
// by 2k ladder applications in an extended space so all retained entries are
// exact matrix elements (the truncation is pure projection).
inline void apply_x_power(std::vector<double>& c, std::vector<double>& scratch,
                          int power, double omega) {
    const double step = 1.0 / std::sqrt(2.0 * omega);
    for (int applied = 0; applied < power; ++applied) {
        std::fill(scratch.begin(), scratch.end(), 0.0);
        for (size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0.0) continue;
            if (j > 0) scratch[j - 1] += step * std::sqrt(static_cast<double>(j)) * c[j];
            if (j + 1 < c.size())
                scratch[j + 1] += step * std::sqrt(static_cast<double>(j) + 1.0) * c[j];
        }
        std::swap(c, scratch);
    }
}

// Eigenvalues of one parity block (offset 0 = even, 1 = odd).
inline std::vector<double> parity_block_eigenvalues(const OscillatorSpec& spec,
                                                    int basis_size, double omega,
                                                    int offset) {
    const int power = anharmonic_power(spec.kind);
    const double sg = quadratic_sign(spec.kind) * spec.g;
    const int block = (basis_size - offset + 1) / 2;
    if (block <= 0) return {};

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(block, block);
    const size_t ext = static_cast<size_t>(basis_size + power + 2);
    std::vector<double> col(ext), scratch(ext);

    for (int jc = 0; jc < block; ++jc) {
        const int n = offset + 2 * jc;
        // anharmonic part lambda * x^{2k}
        std::fill(col.begin(), col.end(), 0.0);
        col[static_cast<size_t>(n)] = 1.0;
        apply_x_power(col, scratch, power, omega);
        for (int jr = 0; jr < block; ++jr) {
            const int m = offset + 2 * jr;
            h(jr, jc) = spec.lambda * col[static_cast<size_t>(m)];
        }
        // p^2/2 + s*g*x^2/2: tridiagonal in the number basis, bandwidth 2
        h(jc, jc) += (omega / 4.0 + sg / (4.0 * omega)) * (2.0 * n + 1.0);
        if (jc + 1 < block) {
            const double up = std::sqrt((n + 1.0) * (n + 2.0));
            h(jc + 1, jc) += (-omega / 4.0 + sg / (4.0 * omega)) * up;
        }
        if (jc > 0) {
            const double dn = std::sqrt(n * (n - 1.0));
            h(jc - 1, jc) += (-omega / 4.0 + sg / (4.0 * omega)) * dn;
        }
    }
    h = 0.5 * (h + h.transpose()).eval();  // drop asymmetric roundoff

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw EigensolverFailure("oracle: symmetric eigensolver failed");
    return {solver.eigenvalues().data(), solver.eigenvalues().data() + block};
}

}  // namespace detail

// Eigenvalues of H projected onto the first `basis_size` eigenstates of a
// frequency-Omega oscillator.  Even and odd sectors decouple and are
// diagonalized separately.
inline OracleResult diagonalize(const OscillatorSpec& spec, int basis_size,
                                double basis_frequency) {
    if (basis_size < 8) throw std::invalid_argument("diagonalize: basis_size must be >= 8");
    if (!(basis_frequency > 0.0))
        throw std::invalid_argument("diagonalize: basis frequency must be positive");

    std::vector<double> even = detail::parity_block_eigenvalues(spec, basis_size, basis_frequency, 0);
    std::vector<double> odd = detail::parity_block_eigenvalues(spec, basis_size, basis_frequency, 1);

    OracleResult out;
    out.basis_size = basis_size;
    out.basis_frequency = basis_frequency;
    out.eigenvalues.resize(even.size() + odd.size());
    std::merge(even.begin(), even.end(), odd.begin(), odd.end(), out.eigenvalues.begin());
    return out;
}

inline double default_basis_frequency(const OscillatorSpec& spec) {
    if (spec.lambda == 0.0) return std::sqrt(spec.g);
    return solve_gap(spec, Level(0)).omega;
}

inline constexpr int oracle_basis_cap = 4096;

// Double the basis from 64 until every tracked level moves by less than
// tol * max(1, |E|).  The per-level scaling matters: the eigensolver's own
// floating-point floor grows with the matrix size and magnitude, so a purely
// absolute criterion is unreachable for large spectra.
inline OracleResult converged_levels(const OscillatorSpec& spec, int levels_wanted,
                                     double tol = 1e-9,
                                     double basis_frequency = 0.0) {
    if (!(tol > 0.0)) throw std::invalid_argument("converged_levels: tol must be positive");
    if (levels_wanted < 1) throw std::invalid_argument("converged_levels: need at least one level");
    const double omega = basis_frequency > 0.0 ? basis_frequency : default_basis_frequency(spec);

    int n = std::max(64, 2 * levels_wanted);
    OracleResult prev = diagonalize(spec, n, omega);
    while (2 * n <= oracle_basis_cap) {
        n *= 2;
        OracleResult next = diagonalize(spec, n, omega);
        double delta = 0.0;
        bool within = true;
        for (int i = 0; i < levels_wanted; ++i) {
            const double change = std::abs(next.eigenvalues[i] - prev.eigenvalues[i]);
            delta = std::max(delta, change);
            if (change >= tol * std::max(1.0, std::abs(next.eigenvalues[i]))) within = false;
        }
        next.tail_estimate = delta;
        if (within) {
            next.converged = true;
            return next;
        }
        prev = std::move(next);
    }
    throw NotConverged("converged_levels: basis cap reached before requested tolerance");
}

}  // namespace ngas
