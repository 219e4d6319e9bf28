#pragma once

namespace hyperwitness {

// A dimensionless value with a 1-sigma uncertainty.
struct MeasuredValue {
    double value = 0.0;
    double sigma = 0.0;
};

}  // namespace hyperwitness
