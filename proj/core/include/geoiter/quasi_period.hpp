#pragma once

// Quasi-period search and verification.  A quasi-period is an even multiple T
// of the analytical period at which every irrational rotation ratio has
// fractional part {T*b_j} within epsilon of 0 or of 1; at such T the index
// sequence satisfies i(c^(m+T)) = i(c^m) + i(c^T) + p(c) on the initial
// window, together with parity, nullity and mean-index relations, a sum
// bound below T and an escape bound above it.

#include <optional>
#include <utility>
#include <vector>

#include "geoiter/index_engine.hpp"

namespace geoiter {

struct QuasiPeriodConfig {
    // Classification half-width; must lie in (0, 1/4) when explicit.  When
    // absent it is derived from the model: the minimal fractional distance
    // of m*b_j to the integers over 1 <= m <= m0 (capped below 1/4, and
    // shrunk to tau/(2k) when the mean index is irrational so the mean-index
    // gap bound holds by construction).
    std::optional<Rat> epsilon;
    Rat tau = Rat(3, 10);       // allowed gap |T*mean - (i(c^T)+p)|
    bool strong_period = false; // require lcm(1..m0)*n | T
    Int max_multiplier = 1000000;
};

struct QuasiPeriodResult {
    Int T;              // even multiple of the analytical period
    int A = 0;          // number of rotation ratios classified high
    std::vector<int> P; // 1-based rotation positions of the high entries
    Int p_c;            // index offset p(c) at this classification
    Rat epsilon_used;   // 0 when the model has no irrational rotations
};

// Minimal fractional distance min({m*b_j}, 1-{m*b_j}) over 1 <= m <= m0 and
// irrational rotation ratios b_j, reported as a certified rational lower
// bound with denominator 10^6 (refined when the value is smaller than that
// grid).  Requires at least one irrational rotation.
Rat auto_epsilon(const GeodesicModel& model, const Int& m0);

// p(c) = p_minus + p_zero + q_zero + q_plus + 2(r_star - k_star) + r + 2A - 2k.
Int p_of_c(const NormalFormData& nf, int A);

// Scans even multiples of the analytical period (strong mode: of
// lcm(1..m0) * n) for the smallest T whose classification is admissible,
// [(k+1)/2] <= A <= k, and whose full verification report passes.  When the
// mean index is rational but irrational rotations are present, T is further
// constrained so the irrational-angle sum times T is integral.
QuasiPeriodResult find_quasi_period(const GeodesicModel& model,
                                    const QuasiPeriodConfig& cfg);

// (K1, K2): guaranteed growth i(c^m) - i(c^T) >= K1 for m > T and
// i(c^T) - i(c^m) >= K2 for m < T, at a found classification A.
std::pair<Int, Int> growth_constants(const GeodesicModel& model, int A);

// The four quasi-period conclusions at T: index additivity and nullity
// periodicity on 1 <= m <= m0, offset parity, nullity at the period with its
// bound, and the period-mean-index relation (exact when the mean index is
// rational, a certified gap below tau otherwise).
CheckReport verify_quasi_periodicity(const GeodesicModel& model,
                                     const QuasiPeriodResult& result,
                                     const Int& m0, const Rat& tau);

// i(c^m) + nu(c^m) <= i(c^T) + p(c) + dim_M - 3 for 1 <= m <= T-1.
CheckReport verify_index_sum_bound(const GeodesicModel& model,
                                   const QuasiPeriodResult& result);

// i(c^(T+m0+m)) - i(c^T) >= p(c) + dim_M for 1 <= m <= horizon.
CheckReport verify_escape(const GeodesicModel& model,
                          const QuasiPeriodResult& result, const Int& m0,
                          const Int& horizon);

} // namespace geoiter
