#pragma once

// Betti numbers of the quotient free loop space relative to point curves for
// manifolds whose rational cohomology is a truncated polynomial ring with a
// degree-d generator truncated at height h+1, together with their closed-form
// partial sums, epsilon correction terms, and the mean-index-identity
// coefficient B(d,h).

#include "geoiter/exact.hpp"

namespace geoiter {

struct ManifoldClass {
    int d = 2; // generator degree, >= 2
    int h = 1; // truncation height, >= 1; d odd forces h = 1

    static ManifoldClass make(int d, int h);

    int D() const { return d * (h + 1) - 2; }
    long long dim() const { return static_cast<long long>(d) * h; }
};

// B(d,h): -h(h+1)d / (2d(h+1)-4) for even d, (d+1)/(2d-2) for odd d.
Rat coefficient_B(const ManifoldClass& mc);

// b_q of the relative quotient loop space; 0 outside the table (q < 0 too).
long long betti_number(const ManifoldClass& mc, long long q);

// Independent closed table for the even-dimensional sphere case (h = 1):
// 1 on odd q >= d-1, doubled on odd multiples k(d-1) with k odd >= 3.
// Kept separate from betti_number so the two derivations cross-check.
long long sphere_betti_number(int d, long long q);

// Membership in the exceptional set for even d: q odd with
// q - (d-1) = i*D + j*d for some i >= 1 and 0 <= j <= h-1.  The narrower
// reading with 1 <= j <= h-1 is kept behind printed_range for comparison
// (it disagrees with the closed sums and with the h = 1 table).
bool omega_member(const ManifoldClass& mc, long long q, bool printed_range = false);

// Epsilon correction of the partial-sum closed forms.  Odd d: {k/(d-1)} +
// {k/2}, range [0, 3/2 - 1/(2(d-1))).  Even d: the four-term fractional
// expression, range (-(h+2), 1), and additionally (-2, 0] when h = 1.
// Throws RangeClaimViolated if a computed value leaves its range.
Rat epsilon_term(const ManifoldClass& mc, long long k);

struct SumCheckRow {
    long long k = 0;
    Rat direct; // alternating sum (odd d) / plain sum (even d) of b_j, j <= k
    Rat closed; // exact closed form including the epsilon term
    Rat eps;
    bool equal = false;   // direct == closed
    bool bounded = false; // the accompanying inequality bound holds
};

struct SumCheckReport {
    std::vector<SumCheckRow> rows;
    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.equal || !r.bounded) return false;
        return true;
    }
};

// Per k in [dh-1, kmax]: direct summation against the closed form, exact,
// plus the inequality bound (odd d: alternating-sum bound; even d: the
// strict upper bound, and for h = 1 also the odd-degree-sum bound).
SumCheckReport alternating_sum_check(const ManifoldClass& mc, long long kmax);

} // namespace geoiter
