// Test-only oracles, kept independent of the library's computation paths:
// dense matrix algebra for expectations, a double-loop index contraction
// for partial traces, and seeded random state generators.
#pragma once

#include <complex>
#include <random>
#include <vector>

#include "hyperwitness/pauli.hpp"
#include "hyperwitness/state.hpp"

namespace oracles {

using hyperwitness::cx;
using Matrix = std::vector<std::vector<cx>>;

inline Matrix identity(std::size_t d) {
    Matrix m(d, std::vector<cx>(d, cx{0.0, 0.0}));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = cx{1.0, 0.0};
    return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    std::size_t da = a.size(), db = b.size();
    Matrix m(da * db, std::vector<cx>(da * db, cx{0.0, 0.0}));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l) m[i * db + k][j * db + l] = a[i][j] * b[k][l];
    return m;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    std::size_t d = a.size();
    Matrix m(d, std::vector<cx>(d, cx{0.0, 0.0}));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t j = 0; j < d; ++j) m[i][j] += a[i][k] * b[k][j];
    return m;
}

inline Matrix pauli_matrix_1q(hyperwitness::PauliLetter l) {
    using P = hyperwitness::PauliLetter;
    switch (l) {
        case P::I: return {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}};
        case P::X: return {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}};
        case P::Y: return {{{0, 0}, {0, -1}}, {{0, 1}, {0, 0}}};
        case P::Z: return {{{1, 0}, {0, 0}}, {{0, 0}, {-1, 0}}};
    }
    return {};
}

// Dense matrix of a Pauli string over the given register order.
inline Matrix dense_pauli(const std::vector<hyperwitness::QubitLabel>& reg,
                          const hyperwitness::PauliString& op) {
    Matrix m{{{op.coefficient, 0.0}}};
    for (auto q : reg) m = kron(m, pauli_matrix_1q(op.letter_at(q)));
    return m;
}

inline Matrix dense_observable(const std::vector<hyperwitness::QubitLabel>& reg,
                               const hyperwitness::ObservableSum& op) {
    std::size_t d = std::size_t{1} << reg.size();
    Matrix m = identity(d);
    for (auto& row : m)
        for (auto& e : row) e *= op.constant;
    for (const auto& term : op.terms) {
        Matrix t = dense_pauli(reg, term.op);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m[i][j] += term.weight * t[i][j];
    }
    return m;
}

// <psi|M|psi> by direct matrix-vector contraction.
inline cx dense_expectation(const hyperwitness::StateVector& state, const Matrix& m) {
    cx acc{0.0, 0.0};
    for (std::size_t i = 0; i < state.dim(); ++i) {
        cx row{0.0, 0.0};
        for (std::size_t j = 0; j < state.dim(); ++j) row += m[i][j] * state.amplitude(j);
        acc += std::conj(state.amplitude(i)) * row;
    }
    return acc;
}

inline cx dense_trace_expectation(const hyperwitness::DensityMatrix& rho, const Matrix& m) {
    cx acc{0.0, 0.0};
    for (std::size_t i = 0; i < rho.dim(); ++i)
        for (std::size_t k = 0; k < rho.dim(); ++k) acc += rho.at(i, k) * m[k][i];
    return acc;
}

// Naive partial trace by explicit index bookkeeping over kept/traced bits,
// written against the big-endian register convention.
inline Matrix naive_partial_trace(const hyperwitness::DensityMatrix& rho,
                                  const std::vector<std::size_t>& kept_positions) {
    std::size_t n = rho.num_qubits();
    std::vector<std::size_t> traced;
    for (std::size_t p = 0; p < n; ++p) {
        bool kept = false;
        for (std::size_t k : kept_positions) kept |= (k == p);
        if (!kept) traced.push_back(p);
    }
    std::size_t dk = std::size_t{1} << kept_positions.size();
    std::size_t dt = std::size_t{1} << traced.size();
    Matrix out(dk, std::vector<cx>(dk, cx{0.0, 0.0}));
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t j = 0; j < dk; ++j) {
            for (std::size_t m = 0; m < dt; ++m) {
                std::size_t row = 0, col = 0;
                for (std::size_t a = 0; a < kept_positions.size(); ++a) {
                    std::size_t bit_i = (i >> (kept_positions.size() - 1 - a)) & 1u;
                    std::size_t bit_j = (j >> (kept_positions.size() - 1 - a)) & 1u;
                    row |= bit_i << (n - 1 - kept_positions[a]);
                    col |= bit_j << (n - 1 - kept_positions[a]);
                }
                for (std::size_t a = 0; a < traced.size(); ++a) {
                    std::size_t bit = (m >> (traced.size() - 1 - a)) & 1u;
                    row |= bit << (n - 1 - traced[a]);
                    col |= bit << (n - 1 - traced[a]);
                }
                out[i][j] += rho.at(row, col);
            }
        }
    }
    return out;
}

inline hyperwitness::StateVector random_state(std::vector<hyperwitness::QubitLabel> reg,
                                              std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::size_t d = std::size_t{1} << reg.size();
    std::vector<cx> amps(d);
    double norm2 = 0.0;
    for (auto& a : amps) {
        a = cx{gauss(rng), gauss(rng)};
        norm2 += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm2);
    return hyperwitness::StateVector(std::move(reg), std::move(amps));
}

// Mixture of a few random pure states.
inline hyperwitness::DensityMatrix random_mixed_state(std::vector<hyperwitness::QubitLabel> reg,
                                                      std::mt19937_64& rng, int rank = 3) {
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    std::vector<double> weights(rank);
    double total = 0.0;
    for (double& w : weights) {
        w = unif(rng);
        total += w;
    }
    hyperwitness::DensityMatrix rho = hyperwitness::density(random_state(reg, rng));
    double acc = weights[0] / total;
    for (int r = 1; r < rank; ++r) {
        double p = (weights[r] / total) / (acc + weights[r] / total);
        rho = hyperwitness::mix(rho, hyperwitness::density(random_state(reg, rng)), p);
        acc += weights[r] / total;
    }
    return rho;
}

// 2x2 Haar-ish random unitary from a random complex Gaussian via Gram-Schmidt.
inline Matrix random_unitary_2x2(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    cx a{gauss(rng), gauss(rng)}, b{gauss(rng), gauss(rng)};
    double n1 = std::sqrt(std::norm(a) + std::norm(b));
    a /= n1;
    b /= n1;
    // Second column orthogonal to (a, b).
    return {{a, -std::conj(b)}, {b, std::conj(a)}};
}

}  // namespace oracles
