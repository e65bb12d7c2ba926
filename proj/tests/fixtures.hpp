#pragma once

// Shared fixture models for the test suite.  Each builder returns a small,
// fully validated model; the JSON files under data/ mirror them for the I/O
// and CLI tests.

#include <string>

#include <geoiter/normal_form.hpp>

namespace geoiter::fixtures {

// dim-3 model: one rational rotation 1/3 plus one nondegenerate positive
// eigenvalue pair.  Analytical period 3, mean index 2/3.
inline GeodesicModel rational_third() {
    GeodesicModel m;
    m.dim_M = 3;
    m.initial_index = 1;
    m.nf.rotations = {AngleRatio::rational(1, 3)};
    m.nf.p_plus = 1;
    m.nf.half_dim = 2;
    return m;
}

// Surface model: a single irrational rotation (sqrt(5)-1)/2.  Mean index
// sqrt(5)-1, analytical period 1.
inline GeodesicModel golden_rotation() {
    GeodesicModel m;
    m.dim_M = 2;
    m.initial_index = 1;
    m.nf.rotations = {AngleRatio::quadratic(-1, 1, 2, 5)};
    m.nf.half_dim = 1;
    return m;
}

// Surface model: one positively oriented hyperbolic block, even index 2.
inline GeodesicModel hyperbolic_even() {
    GeodesicModel m;
    m.dim_M = 2;
    m.initial_index = 2;
    m.nf.h_plus = 1;
    m.nf.half_dim = 1;
    return m;
}

// Surface model: one negatively oriented hyperbolic block, odd index 1.
// Analytical period 2.
inline GeodesicModel hyperbolic_odd() {
    GeodesicModel m;
    m.dim_M = 2;
    m.initial_index = 1;
    m.nf.h_minus = 1;
    m.nf.half_dim = 1;
    return m;
}

inline std::string data_path(const std::string& name) {
    return std::string(GEOITER_TEST_DATA_DIR) + "/" + name;
}

} // namespace geoiter::fixtures
