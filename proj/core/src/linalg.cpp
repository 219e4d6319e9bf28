#include "hyperwitness/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace hyperwitness::linalg {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            s += 2.0 * a[i * n + j] * a[i * n + j];
        }
    }
    return std::sqrt(s);
}

}  // namespace

std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double>& a, std::size_t n) {
    constexpr double kTol = 1e-12;
    constexpr int kMaxSweeps = 60;

    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a, n) > kTol; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (std::abs(apq) < kTol / (static_cast<double>(n) + 1)) continue;
                double app = a[p * n + p];
                double aqq = a[q * n + q];
                double tau = (aqq - app) / (2.0 * apq);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                // Rotate rows/columns p and q.
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k * n + p];
                    double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p * n + k];
                    double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> hermitian_eigenvalues(const std::vector<std::complex<double>>& m,
                                          std::size_t n) {
    // [[X, -Y], [Y, X]] has the spectrum of X + iY, doubled.
    std::size_t n2 = 2 * n;
    std::vector<double> b(n2 * n2, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double re = m[i * n + j].real();
            double im = m[i * n + j].imag();
            b[i * n2 + j] = re;
            b[(i + n) * n2 + (j + n)] = re;
            b[i * n2 + (j + n)] = -im;
            b[(i + n) * n2 + j] = im;
        }
    }
    std::vector<double> doubled = jacobi_symmetric_eigenvalues(b, n2);
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) {
        eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    }
    return eig;
}

}  // namespace hyperwitness::linalg
