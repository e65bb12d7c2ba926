#include "geoiter/quasi_period.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>

namespace geoiter {

namespace {

bool is_even(const Int& m) { return m % 2 == 0; }

// {m*b} for a quadratic ratio, as an exact single-root value.
QuadExpr frac_quadratic(const Int& m, const AngleRatio& b) {
    QuadExpr f = angle_value(b) * Rat(m);
    f.add_rational(-Rat(floor_scaled(m, b)));
    return f;
}

Int lcm_upto(const Int& m0) {
    using boost::multiprecision::lcm;
    Int out = 1;
    for (Int i = 2; i <= m0; ++i) out = lcm(out, i);
    return out;
}

std::string rat_str(const Rat& r) { return to_string(r); }

// Exact decimal rendering for values of the form k/10^digits (no rounding:
// the scaled numerator is an integer by construction of bounds()).
std::string decimal_str(const Rat& r, unsigned digits) {
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Int scaled = numerator(r * Rat(scale));
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    Int whole = scaled / scale;
    std::string fs = Int(scaled % scale).str();
    fs.insert(fs.begin(), digits - fs.size(), '0');
    while (fs.size() > 1 && fs.back() == '0') fs.pop_back();
    return (neg ? "-" : "") + whole.str() + "." + fs;
}

} // namespace

Rat auto_epsilon(const GeodesicModel& model, const Int& m0) {
    if (model.nf.k() == 0)
        throw Error("auto_epsilon: the model has no irrational rotation ratio");
    if (m0 < 1) throw Error("auto_epsilon: m0 must be >= 1");

    bool have = false;
    QuadExpr best;
    for (Int m = 1; m <= m0; ++m) {
        for (const auto& b : model.nf.rotations) {
            if (b.is_rational()) continue;
            QuadExpr f = frac_quadratic(m, b);
            QuadExpr g = QuadExpr(Rat(1)) - f;
            for (QuadExpr* cand : {&f, &g}) {
                if (!have || (*cand - best).sign() < 0) {
                    best = *cand;
                    have = true;
                }
            }
        }
    }

    // Certified lower bound on a decimal grid; the minimum is a positive
    // irrational, so refining the grid eventually gives a positive bound.
    for (Int den = boost::multiprecision::pow(Int(10), 6);;
         den *= 10000) {
        Int fl = (best * Rat(den)).floor();
        if (fl > 0) return Rat(fl, den);
    }
}

Int p_of_c(const NormalFormData& nf, int A) {
    int k = nf.k();
    if (k == 0 && A != 0) throw Error("p_of_c: A must be 0 when there are no irrational rotations");
    if (A < 0 || A > k) throw Error("p_of_c: A out of range");
    Int p = Int(nf.p_minus) + nf.p_zero + nf.q_zero + nf.q_plus +
            2 * (nf.r_star() - nf.k_star()) + nf.r() + 2 * A - 2 * k;
    if (p < 0) throw Error("p_of_c: negative offset (A below the admissible window)");
    return p;
}

std::pair<Int, Int> growth_constants(const GeodesicModel& model, int A) {
    const NormalFormData& nf = model.nf;
    Int lambda = linear_coefficient(model);
    Int q = Int(nf.q_zero) + nf.q_plus;
    Int K1 = lambda + q + 2 * (nf.r() - nf.k()) + 2 * (nf.r_star() - nf.k_star()) + 2 * A;
    Int K2 = lambda - q + 2 * nf.k() - 2 * (nf.r_star() - nf.k_star()) - 2 * A;
    return {K1, K2};
}

CheckReport verify_quasi_periodicity(const GeodesicModel& model,
                                     const QuasiPeriodResult& result,
                                     const Int& m0, const Rat& tau) {
    CheckReport report;
    const Int& T = result.T;
    const Int& p = result.p_c;
    Int n = analytical_period(model);

    {
        CheckItem it{"period admissibility", true, ""};
        if (T < 1 || !is_even(T))
            it = {it.name, false, "T must be a positive even integer"};
        else if (T % n != 0)
            it = {it.name, false, "T must be a multiple of the analytical period"};
        else if (static_cast<int>(result.P.size()) != result.A)
            it = {it.name, false, "A must equal |P|"};
        report.items.push_back(it);
    }

    Int iT = index_iterate(model, T);

    {
        CheckItem it{"index additivity over T", true, ""};
        for (Int m = 1; m <= m0; ++m) {
            if (index_iterate(model, m + T) != index_iterate(model, m) + iT + p) {
                it.pass = false;
                std::ostringstream os;
                os << "fails at m=" << m;
                it.detail = os.str();
                break;
            }
        }
        report.items.push_back(it);
    }
    {
        CheckItem it{"nullity periodicity over T", true, ""};
        for (Int m = 1; m <= m0; ++m) {
            if (nullity_iterate(model, m + T) != nullity_iterate(model, m)) {
                it.pass = false;
                std::ostringstream os;
                os << "fails at m=" << m;
                it.detail = os.str();
                break;
            }
        }
        report.items.push_back(it);
    }
    {
        CheckItem it{"index-offset parity", true, ""};
        if ((iT - p) % 2 != 0) {
            it.pass = false;
            it.detail = "i(c^T) and p differ mod 2";
        }
        report.items.push_back(it);
    }
    {
        CheckItem it{"nullity at period", true, ""};
        Int nun = nullity_iterate(model, n);
        Int nuT = nullity_iterate(model, T);
        Int bound = p + model.dim_M - 1 - 2 * result.A;
        if (nun != nuT) {
            it.pass = false;
            it.detail = "nu(c^n) differs from nu(c^T)";
        } else if (nuT > bound) {
            it.pass = false;
            std::ostringstream os;
            os << "nu(c^T)=" << nuT << " exceeds bound " << bound;
            it.detail = os.str();
        }
        report.items.push_back(it);
    }
    {
        MeanIndex mi = mean_index(model);
        QuadExpr gap = mi * Rat(T);
        gap.add_rational(-Rat(iT + p));
        if (mi.is_rational()) {
            CheckItem it{"period-mean-index relation (exact)", true, ""};
            if (!gap.is_zero()) {
                it.pass = false;
                it.detail = "T*mean != i(c^T) + p; difference " + gap.str();
            }
            report.items.push_back(it);
        } else {
            CheckItem it{"period-mean-index gap", true, ""};
            bool ok = compare(gap, tau) < 0 && compare(gap, -tau) > 0;
            auto [lo, hi] = gap.bounds(12);
            std::ostringstream os;
            os << "T*mean - (i(c^T)+p) enclosed by [" << decimal_str(lo, 12)
               << ", " << decimal_str(hi, 12) << "], tau = " << rat_str(tau);
            it.detail = os.str();
            it.pass = ok;
            report.items.push_back(it);
        }
    }
    return report;
}

CheckReport verify_index_sum_bound(const GeodesicModel& model,
                                   const QuasiPeriodResult& result) {
    CheckReport report;
    const Int& T = result.T;
    Int bound = index_iterate(model, T) + result.p_c + model.dim_M - 3;

    CheckItem it{"index+nullity sum bound below T", true, ""};
    Int max_lhs = 0;
    bool first = true;
    for (Int m = 1; m < T; ++m) {
        Int lhs = index_iterate(model, m) + nullity_iterate(model, m);
        if (first || lhs > max_lhs) {
            max_lhs = lhs;
            first = false;
        }
        if (lhs > bound && it.pass) {
            it.pass = false;
            std::ostringstream os;
            os << "violation at m=" << m << ": " << lhs << " > " << bound;
            it.detail = os.str();
        }
    }
    if (it.pass) {
        std::ostringstream os;
        if (first)
            os << "empty range (T=1)";
        else
            os << "max LHS " << max_lhs << " <= bound " << bound;
        it.detail = os.str();
    }
    report.items.push_back(it);
    return report;
}

CheckReport verify_escape(const GeodesicModel& model,
                          const QuasiPeriodResult& result, const Int& m0,
                          const Int& horizon) {
    CheckReport report;
    const Int& T = result.T;
    Int iT = index_iterate(model, T);
    Int required = result.p_c + model.dim_M;

    CheckItem it{"escape growth beyond T+m0", true, ""};
    for (Int m = 1; m <= horizon; ++m) {
        Int diff = index_iterate(model, T + m0 + m) - iT;
        if (diff < required) {
            it.pass = false;
            std::ostringstream os;
            os << "violation at m=" << m << ": " << diff << " < " << required;
            it.detail = os.str();
            break;
        }
    }
    if (it.pass) {
        std::ostringstream os;
        os << "growth >= " << required << " on 1..=" << horizon;
        it.detail = os.str();
    }
    report.items.push_back(it);
    return report;
}

QuasiPeriodResult find_quasi_period(const GeodesicModel& model,
                                    const QuasiPeriodConfig& cfg) {
    using boost::multiprecision::lcm;

    if (cfg.tau <= 0) throw ValidationError("tau must be positive");
    if (cfg.max_multiplier < 1) throw ValidationError("max_multiplier must be >= 1");

    MeanIndex mi = mean_index(model);
    if (mi.sign() <= 0)
        throw MeanIndexNotPositive("find_quasi_period: the mean index must be positive");

    const NormalFormData& nf = model.nf;
    int k = nf.k();
    Int n = analytical_period(model);
    Int m0 = m_zero(model);

    Rat eps(0);
    if (k >= 1) {
        if (cfg.epsilon) {
            eps = *cfg.epsilon;
            if (!(eps > 0 && eps < Rat(1, 4)))
                throw ValidationError("epsilon must lie in (0, 1/4)");
        } else {
            eps = auto_epsilon(model, m0);
            if (eps > Rat(99, 400)) eps = Rat(99, 400);
        }
        if (!mi.is_rational()) {
            // With every {T*b_j} within eps of 0 or 1, the mean-index gap is
            // below 2*k*eps; keep that under tau.
            Rat shrink = cfg.tau / (2 * k);
            if (eps > shrink) eps = shrink;
        }
    }

    Int base = n;
    if (cfg.strong_period) base = lcm_upto(m0) * n;
    if (k >= 1 && mi.is_rational()) {
        // The irrational-angle sum is rational, say q/p reduced; exactness of
        // the period-mean-index relation needs p | T.
        QuadExpr s;
        for (const auto& b : nf.rotations)
            if (b.is_quadratic()) s += angle_value(b);
        base = lcm(base, Int(denominator(s.rational_value())) * n);
    }
    Int step = is_even(base) ? base : 2 * base;
    Int cap = cfg.max_multiplier * base;

    Rat one_minus_eps = Rat(1) - eps;
    std::string near_miss;

    for (Int T = step; T <= cap; T += step) {
        int A = 0;
        std::vector<int> P;
        bool classified = true;
        for (int j = 0; j < nf.r(); ++j) {
            const AngleRatio& b = nf.rotations[static_cast<size_t>(j)];
            if (b.is_rational()) continue;
            QuadExpr f = frac_quadratic(T, b);
            if (compare(f, one_minus_eps) > 0) {
                ++A;
                P.push_back(j + 1);
            } else if (compare(f, eps) >= 0) {
                classified = false;
                break;
            }
        }
        if (!classified) continue;
        if (k >= 1 && (A < (k + 1) / 2 || A > k)) {
            if (near_miss.empty()) {
                std::ostringstream os;
                os << "T=" << T << " classified but A=" << A << " outside ["
                   << (k + 1) / 2 << ", " << k << "]";
                near_miss = os.str();
            }
            continue;
        }

        QuasiPeriodResult result{T, A, P, p_of_c(nf, A), k >= 1 ? eps : Rat(0)};
        CheckReport check = verify_quasi_periodicity(model, result, m0, cfg.tau);
        if (!check.all_pass()) {
            if (const CheckItem* f = check.first_failure(); f && near_miss.empty()) {
                std::ostringstream os;
                os << "T=" << T << " admissible but check '" << f->name
                   << "' failed: " << f->detail;
                near_miss = os.str();
            }
            continue;
        }
        return result;
    }

    std::ostringstream os;
    os << "no quasi-period up to " << cap;
    if (!near_miss.empty()) os << "; best near miss: " << near_miss;
    throw QuasiPeriodNotFound(os.str());
}

} // namespace geoiter
