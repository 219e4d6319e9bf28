#include "hyperwitness/fringe.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "hyperwitness/errors.hpp"

namespace hyperwitness {

namespace {

constexpr double kFourLn2 = 4.0 * std::numbers::ln2;

void check_config(const FringeConfig& cfg) {
    if (!(cfg.bandwidth_um > 0.0)) throw InvalidParameter("bandwidth must be positive");
    if (!(cfg.wavelength_um > 0.0)) throw InvalidParameter("wavelength must be positive");
    if (!(cfg.visibility >= 0.0 && cfg.visibility <= 1.0)) {
        throw InvalidParameter("visibility must lie in [0,1]");
    }
    if (!(cfg.baseline >= 0.0)) throw InvalidParameter("baseline rate must be non-negative");
    if (!std::isfinite(cfg.phase)) throw InvalidParameter("phase must be finite");
}

double envelope(double delay_um, double fwhm_um) {
    double x = delay_um / fwhm_um;
    return std::exp(-kFourLn2 * x * x);
}

}  // namespace

double envelope_fwhm(const FringeConfig& cfg) {
    // First-order coherence length of a Gaussian filter; the second
    // interferometer varies only one arm, doubling the pattern width.
    double base = cfg.wavelength_um * cfg.wavelength_um / cfg.bandwidth_um;
    return cfg.stage == Stage::Second ? 2.0 * base : base;
}

double coincidence_rate(double delay_um, const FringeConfig& cfg) {
    check_config(cfg);
    double g = envelope(delay_um, envelope_fwhm(cfg));
    return cfg.baseline * (1.0 - cfg.visibility * std::cos(cfg.phase) * g);
}

std::vector<PatternPoint> pattern(const FringeConfig& cfg, const std::vector<double>& delays_um) {
    check_config(cfg);
    std::vector<PatternPoint> points;
    points.reserve(delays_um.size());
    for (double dx : delays_um) {
        if (!std::isfinite(dx)) throw InvalidParameter("delay must be finite");
        points.push_back({dx, coincidence_rate(dx, cfg)});
    }
    return points;
}

std::vector<PatternPoint> pattern(const FringeConfig& cfg, const std::vector<double>& delays_um,
                                  double integration_s, std::uint64_t seed) {
    if (!(integration_s > 0.0)) throw InvalidParameter("integration time must be positive");
    std::vector<PatternPoint> points = pattern(cfg, delays_um);
    std::mt19937_64 rng(seed);
    for (PatternPoint& p : points) {
        std::poisson_distribution<long> dist(p.rate * integration_s);
        p.rate = static_cast<double>(dist(rng)) / integration_s;
    }
    return points;
}

namespace {

// Solve the 3x3 system a * x = b in place; returns false when singular.
bool solve3(std::array<std::array<double, 3>, 3>& a, std::array<double, 3>& b) {
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (std::abs(a[pivot][col]) < 1e-300) return false;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            double f = a[r][col] / a[col][col];
            for (int c = col; c < 3; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (int i = 0; i < 3; ++i) b[i] /= a[i][i];
    return true;
}

}  // namespace

VisibilityFit fit_visibility(const std::vector<PatternPoint>& points, const FringeConfig& prior) {
    if (points.size() < 7) throw FitError("need at least 7 points");
    auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                        [](auto& a, auto& b) { return a.delay_um < b.delay_um; });
    if (hi->delay_um - lo->delay_um <= 0.0) throw FitError("degenerate design: all delays equal");

    double c = std::cos(prior.phase);
    if (std::abs(c) < 1e-9) throw FitError("phase prior makes visibility unidentifiable");

    // Initial guesses: baseline from the outermost sample, contrast from the
    // innermost one, envelope width from the prior.
    auto by_abs_delay = [](const PatternPoint& a, const PatternPoint& b2) {
        return std::abs(a.delay_um) < std::abs(b2.delay_um);
    };
    double tail = std::max_element(points.begin(), points.end(), by_abs_delay)->rate;
    double center = std::min_element(points.begin(), points.end(), by_abs_delay)->rate;
    double b = tail > 0.0 ? tail : 1.0;
    double v = std::clamp((b - center) / (b * c), 0.0, 1.0);
    double w = envelope_fwhm(prior);

    const std::size_t n = points.size();
    double lambda = 1e-6;
    double ssr = 0.0;

    auto residuals_ssr = [&](double bb, double vv, double ww) {
        double s = 0.0;
        for (const auto& p : points) {
            double g = envelope(p.delay_um, ww);
            double r = bb * (1.0 - vv * c * g) - p.rate;
            s += r * r;
        }
        return s;
    };

    ssr = residuals_ssr(b, v, w);
    std::array<std::array<double, 3>, 3> jtj{};
    for (int iter = 0; iter < 200; ++iter) {
        // Build normal equations J^T J and J^T r analytically.
        jtj = {};
        std::array<double, 3> jtr{};
        for (const auto& p : points) {
            double g = envelope(p.delay_um, w);
            double model = b * (1.0 - v * c * g);
            double r = model - p.rate;
            double dg_dw = g * 2.0 * kFourLn2 * p.delay_um * p.delay_um / (w * w * w);
            std::array<double, 3> jac = {1.0 - v * c * g,   // d/db
                                         -b * c * g,        // d/dV
                                         -b * v * c * dg_dw};
            for (int i = 0; i < 3; ++i) {
                jtr[i] += jac[i] * r;
                for (int j = 0; j < 3; ++j) jtj[i][j] += jac[i] * jac[j];
            }
        }

        // Levenberg step with additive damping.
        auto damped = jtj;
        for (int i = 0; i < 3; ++i) damped[i][i] += lambda * (jtj[i][i] + 1e-12);
        std::array<double, 3> step = {-jtr[0], -jtr[1], -jtr[2]};
        if (!solve3(damped, step)) {
            lambda *= 10.0;
            continue;
        }
        double nb = b + step[0], nv = v + step[1], nw = w + step[2];
        if (!(nw > 0.0)) nw = 0.5 * w;
        double nssr = residuals_ssr(nb, nv, nw);
        if (nssr <= ssr) {
            double delta = std::abs(step[0]) + std::abs(step[1]) + std::abs(step[2]);
            b = nb;
            v = nv;
            w = nw;
            ssr = nssr;
            lambda = std::max(lambda * 0.3, 1e-12);
            if (delta < 1e-12) break;
        } else {
            lambda *= 10.0;
            if (lambda > 1e12) break;
        }
    }

    // Asymptotic 1-sigma on V from the unscaled covariance (J^T J)^-1 sigma^2.
    double dof = static_cast<double>(n) - 3.0;
    double sigma2 = dof > 0.0 ? ssr / dof : 0.0;
    double sigma_v = 0.0;
    {
        auto a = jtj;
        std::array<double, 3> e = {0.0, 1.0, 0.0};
        if (solve3(a, e)) sigma_v = std::sqrt(std::max(0.0, e[1] * sigma2));
    }

    return {{v, sigma_v}, w, b};
}

}  // namespace hyperwitness
