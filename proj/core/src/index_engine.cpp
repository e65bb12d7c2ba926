#include "geoiter/index_engine.hpp"

#include <boost/multiprecision/integer.hpp>

namespace geoiter {

namespace {

bool is_even(const Int& m) { return m % 2 == 0; }

// Count of angle entries (all three lists) whose m-th multiple is integral.
int integral_hits(const NormalFormData& nf, const Int& m) {
    int hits = 0;
    auto scan = [&](const std::vector<AngleRatio>& xs) {
        for (const auto& x : xs)
            if (phi_indicator(m, x) == 0) ++hits;
    };
    scan(nf.rotations);
    scan(nf.nontrivial_pairs);
    scan(nf.trivial_pairs);
    return hits;
}

Int lcm_of_denominators(const NormalFormData& nf) {
    using boost::multiprecision::lcm;
    Int n0 = 1;
    auto scan = [&](const std::vector<AngleRatio>& xs) {
        for (const auto& x : xs)
            if (x.is_rational()) n0 = lcm(n0, Int(denominator(x.rat())));
    };
    scan(nf.rotations);
    scan(nf.nontrivial_pairs);
    scan(nf.trivial_pairs);
    return n0;
}

} // namespace

Int linear_coefficient(const GeodesicModel& model) {
    const NormalFormData& nf = model.nf;
    return model.initial_index + nf.p_minus + nf.p_zero - nf.r();
}

Int index_iterate(const GeodesicModel& model, const Int& m) {
    if (m < 1) throw Error("index_iterate: m must be >= 1");
    const NormalFormData& nf = model.nf;

    Int value = m * linear_coefficient(model);
    for (const auto& b : nf.rotations) value += 2 * upper_E(m, b);
    value -= nf.r() + nf.p_minus + nf.p_zero;
    if (is_even(m)) value -= nf.q_zero + nf.q_plus;
    for (const auto& a : nf.nontrivial_pairs)
        if (a.is_rational()) value += 2 * phi_indicator(m, a);
    value -= 2 * (nf.r_star() - nf.k_star());
    return value;
}

Int nullity_iterate(const GeodesicModel& model, const Int& m) {
    if (m < 1) throw Error("nullity_iterate: m must be >= 1");
    const NormalFormData& nf = model.nf;

    Int value = initial_nullity(nf);
    if (is_even(m)) value += nf.q_minus + 2 * nf.q_zero + nf.q_plus;
    value += 2 * integral_hits(nf, m);
    return value;
}

IndexPair iterate_pair(const GeodesicModel& model, const Int& m) {
    return IndexPair{index_iterate(model, m), nullity_iterate(model, m)};
}

MeanIndex mean_index(const GeodesicModel& model) {
    MeanIndex mi(Rat(linear_coefficient(model)));
    for (const auto& b : model.nf.rotations) {
        QuadExpr v = angle_value(b);
        mi += v * Rat(2);
    }
    return mi;
}

Int analytical_period(const GeodesicModel& model) {
    const NormalFormData& nf = model.nf;
    Int n0 = lcm_of_denominators(nf);
    Int lambda = linear_coefficient(model);

    bool q_degenerate = nf.q_minus + 2 * nf.q_zero + nf.q_plus > 0;
    bool odd_increment = !is_even(n0) && !is_even(lambda + nf.q_zero + nf.q_plus);
    Int n = (q_degenerate || odd_increment) && !is_even(n0) ? Int(2 * n0) : n0;

    // The construction is verified against the defining property on a window
    // long enough to contain a full nullity period, and minimality against
    // every proper divisor.
    Int window = 2 * n0 + 4;
    Int max_nullity = 0;
    for (Int m = 1; m <= window; ++m) {
        Int v = nullity_iterate(model, m);
        if (v > max_nullity) max_nullity = v;
    }
    auto satisfies = [&](const Int& j) {
        if (nullity_iterate(model, j) != max_nullity) return false;
        for (Int m = 1; m <= window; ++m)
            if (!is_even(index_iterate(model, m + j) - index_iterate(model, m)))
                return false;
        return true;
    };
    if (!satisfies(n))
        throw Error("analytical_period: construction failed its defining property");
    for (Int d = 1; d < n; ++d)
        if (n % d == 0 && satisfies(d))
            throw Error("analytical_period: a proper divisor already satisfies the property");
    return n;
}

Int index_deviation_constant(const GeodesicModel& model) {
    const NormalFormData& nf = model.nf;
    return Int(nf.r()) + nf.p_minus + nf.p_zero + nf.q_zero + nf.q_plus +
           2 * (nf.r_star() - nf.k_star());
}

Int m_zero(const GeodesicModel& model) {
    MeanIndex mi = mean_index(model);
    if (mi.sign() <= 0)
        throw MeanIndexNotPositive("m_zero: the mean index must be positive");

    Int target = Int(model.dim_M) + 4 * model.nf.k();
    Int C = index_deviation_constant(model);
    Int last_bad = 0;
    for (Int s = 1;; ++s) {
        // Once s*mean - C clears the target, i(c^s') >= target for all
        // s' >= s and the scan is complete.
        QuadExpr slack = mi * Rat(s);
        slack.add_rational(-Rat(target + C));
        if (slack.sign() >= 0) break;
        if (index_iterate(model, s) < target) last_bad = s;
    }
    return last_bad < 1 ? Int(1) : last_bad;
}

CheckReport verify_bott(const GeodesicModel& model, const Int& max_m) {
    if (max_m < 1) throw Error("verify_bott: max_m must be >= 1");
    long long M = max_m.convert_to<long long>();

    std::vector<Int> idx(M + 1), nul(M + 1);
    for (long long m = 1; m <= M; ++m) {
        idx[m] = index_iterate(model, m);
        nul[m] = nullity_iterate(model, m);
    }

    CheckReport report;

    CheckItem parity{"iterate index parity", true, ""};
    for (long long m = 1; m <= M && parity.pass; ++m) {
        const Int& anchor = (m % 2 == 0) ? idx[std::min<long long>(2, M)] : idx[1];
        if ((idx[m] - anchor) % 2 != 0) {
            parity.pass = false;
            parity.detail = "parity break at m=" + std::to_string(m);
        }
    }
    report.items.push_back(parity);

    CheckItem mono{"divisibility monotonicity", true, ""};
    for (long long q = 1; q <= M && mono.pass; ++q)
        for (long long p = 2 * q; p <= M; p += q) {
            if (idx[p] < idx[q] || nul[p] < nul[q]) {
                mono.pass = false;
                mono.detail = "monotonicity break at q=" + std::to_string(q) +
                              ", p=" + std::to_string(p);
                break;
            }
        }
    report.items.push_back(mono);

    return report;
}

} // namespace geoiter
