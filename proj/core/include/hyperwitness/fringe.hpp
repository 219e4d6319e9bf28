#pragma once

#include <cstdint>
#include <vector>

#include "hyperwitness/measured_value.hpp"

namespace hyperwitness {

enum class Stage { First, Second };

// Parametric coincidence-fringe model. Lengths are in micrometers; the
// envelope FWHM is lambda^2/bandwidth for the first interferometer and
// twice that for the second.
struct FringeConfig {
    double wavelength_um = 0.728;  // photon wavelength, 2 * lambda_pump
    double bandwidth_um = 0.006;   // interference-filter bandwidth
    double visibility = 1.0;
    double phase = 0.0;            // phi_k or phi_c, radians
    double baseline = 100.0;       // coincidences/s far from zero delay
    Stage stage = Stage::First;
};

struct PatternPoint {
    double delay_um = 0.0;
    double rate = 0.0;  // coincidences/s
};

double envelope_fwhm(const FringeConfig& cfg);

// R(dx) = baseline * (1 - V cos(phase) g(dx)) with g a unit-peak Gaussian
// envelope of the configured FWHM; phase 0 gives the dip, pi the peak.
double coincidence_rate(double delay_um, const FringeConfig& cfg);

std::vector<PatternPoint> pattern(const FringeConfig& cfg, const std::vector<double>& delays_um);

// Pointwise Poisson sampling: counts ~ Poisson(rate * integration_s),
// reported back as a rate. Deterministic per seed.
std::vector<PatternPoint> pattern(const FringeConfig& cfg, const std::vector<double>& delays_um,
                                  double integration_s, std::uint64_t seed);

struct VisibilityFit {
    MeasuredValue visibility;  // fitted V with asymptotic 1-sigma
    double fwhm_um = 0.0;
    double baseline = 0.0;
};

// Least-squares fit of (baseline, V, FWHM) with the phase fixed by the
// prior config. Requires >= 7 points and a nondegenerate delay design.
VisibilityFit fit_visibility(const std::vector<PatternPoint>& points,
                             const FringeConfig& prior);

}  // namespace hyperwitness
