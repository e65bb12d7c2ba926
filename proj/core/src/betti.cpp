#include "geoiter/betti.hpp"

namespace geoiter {

namespace {

Rat frac_ll(long long num, long long den) {
    Rat x(num, den);
    return frac_rat(x);
}

} // namespace

ManifoldClass ManifoldClass::make(int d, int h) {
    if (d < 2) throw ValidationError("manifold class: d must be at least 2");
    if (h < 1) throw ValidationError("manifold class: h must be at least 1");
    if (d % 2 == 1 && h != 1)
        throw ValidationError("manifold class: odd d forces h = 1");
    return ManifoldClass{d, h};
}

Rat coefficient_B(const ManifoldClass& mc) {
    if (mc.d % 2 == 0)
        return Rat(-static_cast<long long>(mc.h) * (mc.h + 1) * mc.d,
                   2LL * mc.d * (mc.h + 1) - 4);
    return Rat(mc.d + 1, 2LL * mc.d - 2);
}

bool omega_member(const ManifoldClass& mc, long long q, bool printed_range) {
    if (mc.d % 2 != 0) throw Error("omega_member: requires even d");
    if (q % 2 == 0) return false;
    long long x = q - (mc.d - 1);
    long long D = mc.D();
    int j_lo = printed_range ? 1 : 0;
    for (long long i = 1; i * D <= x; ++i) {
        long long rest = x - i * D;
        if (rest % mc.d != 0) continue;
        long long j = rest / mc.d;
        if (j >= j_lo && j <= mc.h - 1) return true;
    }
    return false;
}

long long betti_number(const ManifoldClass& mc, long long q) {
    if (q < 0) return 0;
    long long dm1 = mc.d - 1;
    if (mc.d % 2 == 1) {
        // nonzero only in even degrees >= d-1
        bool doubled = q >= 2 * dm1 && q % dm1 == 0;
        if (doubled) return 2;
        bool ladder = q >= dm1 && (q - dm1) % 2 == 0;
        return ladder ? 1 : 0;
    }
    if (q % 2 == 0 || q <= mc.d - 2) return 0;
    if (q < dm1 + static_cast<long long>(mc.h - 1) * mc.d)
        return (q - dm1) / mc.d + 1; // ramp below the stable band
    if (omega_member(mc, q)) return mc.h + 1;
    return mc.h;
}

long long sphere_betti_number(int d, long long q) {
    if (d < 2 || d % 2 != 0) throw Error("sphere_betti_number: requires even d >= 2");
    if (q < 0) return 0;
    long long dm1 = d - 1;
    // doubled on odd multiples k(d-1) with k odd >= 3
    if (q % dm1 == 0) {
        long long k = q / dm1;
        if (k >= 3 && k % 2 == 1) return 2;
    }
    return (q >= dm1 && (q - dm1) % 2 == 0) ? 1 : 0;
}

Rat epsilon_term(const ManifoldClass& mc, long long k) {
    if (k < mc.d - 1) throw Error("epsilon_term: k must be at least d-1");
    if (mc.d % 2 == 1) {
        Rat eps = frac_ll(k, mc.d - 1) + frac_ll(k, 2);
        Rat upper = Rat(3, 2) - Rat(1, 2LL * (mc.d - 1));
        if (!(eps >= 0 && eps < upper))
            throw RangeClaimViolated("epsilon_term: odd-d value left [0, 3/2 - 1/(2(d-1)))");
        return eps;
    }
    long long D = mc.D();
    Rat f = frac_ll(k - (mc.d - 1), D);
    Rat eps = frac_rat(Rat(D, static_cast<long long>(mc.h) * mc.d) * f) -
              (Rat(2, mc.d) + Rat(mc.d - 2, static_cast<long long>(mc.h) * mc.d)) * f -
              Rat(mc.h) * frac_rat(Rat(D, 2) * f) - frac_rat(Rat(D, mc.d) * f);
    if (!(eps > Rat(-(mc.h + 2)) && eps < 1))
        throw RangeClaimViolated("epsilon_term: even-d value left (-(h+2), 1)");
    if (mc.h == 1 && !(eps > -2 && eps <= 0))
        throw RangeClaimViolated("epsilon_term: h=1 value left (-2, 0]");
    return eps;
}

SumCheckReport alternating_sum_check(const ManifoldClass& mc, long long kmax) {
    long long k_min = mc.dim() - 1;
    if (kmax < k_min)
        throw Error("alternating_sum_check: kmax must be at least dh - 1");

    SumCheckReport report;
    report.rows.reserve(static_cast<size_t>(kmax - k_min + 1));

    bool odd_d = mc.d % 2 == 1;
    Rat direct(0);
    for (long long k = 0; k <= kmax; ++k) {
        long long b = betti_number(mc, k);
        if (odd_d)
            direct += (k % 2 == 0) ? Rat(b) : Rat(-b);
        else
            direct += Rat(b);
        if (k < k_min) continue;

        SumCheckRow row;
        row.k = k;
        row.direct = direct;
        row.eps = epsilon_term(mc, k);
        if (odd_d) {
            Rat head = Rat(k * (mc.d + 1), 2LL * (mc.d - 1)) - Rat(mc.d - 1, 2);
            row.closed = head - row.eps;
            row.bounded = direct <= head;
        } else {
            long long D = mc.D();
            Rat slope = Rat(static_cast<long long>(mc.h) * (mc.h + 1) * mc.d, 2 * D);
            Rat shift = Rat(static_cast<long long>(mc.h) * (mc.h - 1) * mc.d, 4);
            row.closed = slope * Rat(k - (mc.d - 1)) - shift + 1 + row.eps;
            Rat strict = Rat(mc.h) * (Rat(D, 2) + 1) * Rat(k - (mc.d - 1), D) - shift + 2;
            row.bounded = direct < strict;
            if (mc.h == 1) {
                // every nonzero degree is odd, so direct is the
                // odd-degree sum of the sphere bound
                Rat sphere = Rat(k * mc.d, 2LL * (mc.d - 1)) - Rat(mc.d - 2, 2);
                row.bounded = row.bounded && direct <= sphere;
            }
        }
        row.equal = row.direct == row.closed;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace geoiter
