#pragma once

// Iterated Morse indices of closed geodesics: i(c^m) and nu(c^m) from the
// normal-form iteration formulas, the mean index, the analytical period n(c)
// (minimal j with maximal nullity and even index increments), the escape
// threshold m0, and finite-horizon checks of the classical Bott relations.

#include "geoiter/exact.hpp"
#include "geoiter/normal_form.hpp"
#include "geoiter/report.hpp"

namespace geoiter {

struct IndexPair {
    Int index;   // >= 0 for geodesic models
    Int nullity; // in [0, 2*half_dim]
};

// Exact mean index; rational iff quadratic_part is empty after cancellation.
using MeanIndex = QuadExpr;

// i(c^m) = m(i(c)+p_- + p_0 - r) + 2 sum_j E(m b_j) - r - p_- - p_0
//          - ((1+(-1)^m)/2)(q_0+q_+) + 2 sum_{rational nontrivial} phi(m a_j)
//          - 2(r_* - k_*)
Int index_iterate(const GeodesicModel& model, const Int& m);

// nu(c^m) = nu(c) + ((1+(-1)^m)/2)(q_- + 2 q_0 + q_+) + 2 sigma(m), where
// sigma(m) counts the angle entries (all three lists) with m*ratio integral.
Int nullity_iterate(const GeodesicModel& model, const Int& m);

IndexPair iterate_pair(const GeodesicModel& model, const Int& m);

// Linear growth coefficient lambda = i(c) + p_minus + p_zero - r.
Int linear_coefficient(const GeodesicModel& model);

// Mean index per iterate: lambda + 2 sum_j b_j over all rotation ratios.
MeanIndex mean_index(const GeodesicModel& model);

// Smallest j >= 1 such that nu(c^j) is maximal and i(c^(m+j)) - i(c^m) is
// even for every m.  Closed-form construction, then verified against the
// definition on a finite window and against every proper divisor.
Int analytical_period(const GeodesicModel& model);

// One-sided deviation bound: i(c^s) >= s*mean - C with
// C = r + p_minus + p_zero + q_zero + q_plus + 2(r_star - k_star).
Int index_deviation_constant(const GeodesicModel& model);

// Smallest m >= 1 with i(c^(j+m)) >= dim_M + 4k for all j >= 1.  Throws
// MeanIndexNotPositive when the mean index is not positive (the threshold
// would not exist).
Int m_zero(const GeodesicModel& model);

// Finite-horizon check of the Bott relations: parity stability of even/odd
// iterates and monotonicity of index and nullity along divisibility.
CheckReport verify_bott(const GeodesicModel& model, const Int& max_m);

} // namespace geoiter
