// Acceptance harness: the eight top-level checks of the verification engine,
// one [PASS]/[FAIL] line each, exact arithmetic throughout.  Exits nonzero
// if any line fails.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <geoiter/betti.hpp>
#include <geoiter/identity.hpp>
#include <geoiter/index_engine.hpp>
#include <geoiter/quasi_period.hpp>

#include "decimal_oracle.hpp"
#include "fixtures.hpp"
#include "model_generator.hpp"

using namespace geoiter;
namespace fx = geoiter::fixtures;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void line(bool pass, const std::string& label, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << label;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    if (!pass) ++failures;
}

std::string timed(double secs, bool within, double limit) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << secs << "s";
    if (!within) os << " (over the " << limit << "s budget)";
    return os.str();
}

// 1. Identity-contradiction scans over the four low manifold classes.
void check_contradiction_scans() {
    auto start = std::chrono::steady_clock::now();
    long long scanned = 0, feasible = 0;
    for (auto [d, h] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {4, 2}}) {
        ManifoldClass mc = ManifoldClass::make(d, h);
        long long max_p = 3 * (mc.dim() - 1);
        for (bool reversible : {false, true}) {
            ScanReport rep = contradiction_scan(mc, 400, max_p, reversible);
            scanned += rep.scanned;
            feasible += static_cast<long long>(rep.feasible.size());
        }
    }
    double secs = seconds_since(start);
    bool ok = feasible == 0 && secs < 5.0;
    std::ostringstream os;
    os << feasible << " feasible of " << scanned
       << " instances, plain and reversible, R+p <= 400, " << timed(secs, secs < 5.0, 5.0);
    line(ok, "contradiction scans stay infeasible", os.str());
}

// 2. Partial sums of the Betti tables against their closed forms.
void check_closed_forms() {
    auto start = std::chrono::steady_clock::now();
    long long rows = 0;
    bool ok = true;
    std::vector<ManifoldClass> classes;
    for (int d : {3, 5, 7}) classes.push_back(ManifoldClass::make(d, 1));
    for (int d : {2, 4, 6})
        for (int h = 1; h <= 5; ++h) classes.push_back(ManifoldClass::make(d, h));
    classes.push_back(ManifoldClass::make(8, 1)); // the even-d bound row
    try {
        for (const ManifoldClass& mc : classes) {
            SumCheckReport rep = alternating_sum_check(mc, 5000);
            rows += static_cast<long long>(rep.rows.size());
            if (!rep.all_pass()) ok = false;
        }
    } catch (const RangeClaimViolated&) {
        ok = false; // an epsilon term left its claimed range
    }
    double secs = seconds_since(start);
    ok = ok && secs < 10.0;
    std::ostringstream os;
    os << rows << " degrees across " << classes.size()
       << " classes, sums and bounds exact, epsilon ranges kept, "
       << timed(secs, secs < 10.0, 10.0);
    line(ok, "partial-sum closed forms", os.str());
}

// 3. The corrected general table restricted to h=1 against the independent
//    sphere table.
void check_sphere_consistency() {
    bool ok = true;
    long long compared = 0;
    for (int d : {2, 4, 6, 8}) {
        ManifoldClass mc = ManifoldClass::make(d, 1);
        for (long long q = 0; q <= 2000; ++q) {
            if (betti_number(mc, q) != sphere_betti_number(d, q)) ok = false;
            ++compared;
        }
    }
    std::ostringstream os;
    os << compared << " degrees, d in {2,4,6,8}, exact equality";
    line(ok, "sphere and general Betti tables agree", os.str());
}

// 4. Quasi-periods of the two rotation fixtures, basic and strong mode.
void check_quasi_period_fixtures() {
    bool ok = true;
    std::ostringstream os;

    GeodesicModel b = fx::golden_rotation();
    Int m0b = m_zero(b);
    QuasiPeriodConfig cfg;
    QuasiPeriodResult rb = find_quasi_period(b, cfg);
    ok = ok && rb.T == 8 && rb.A == 1 && rb.p_c == 1 &&
         rb.epsilon_used == auto_epsilon(b, m0b);
    ok = ok && verify_quasi_periodicity(b, rb, m0b, Rat(3, 10)).all_pass();
    cfg.strong_period = true;
    ok = ok && find_quasi_period(b, cfg).T == 84;

    GeodesicModel a = fx::rational_third();
    QuasiPeriodConfig cfa;
    QuasiPeriodResult ra = find_quasi_period(a, cfa);
    ok = ok && ra.T == 6;
    ok = ok && verify_quasi_periodicity(a, ra, m_zero(a), Rat(3, 10)).all_pass();
    ok = ok && Rat(ra.T) * Rat(2, 3) == Rat(index_iterate(a, ra.T) + ra.p_c);
    cfa.strong_period = true;
    ok = ok && find_quasi_period(a, cfa).T == 18;

    os << "T = 8/84 and 6/18 basic/strong, all period checks certified at tau = 3/10";
    line(ok, "quasi-period fixtures", os.str());
}

// 5. Sum bound below the quasi-period and escape growth above it.
void check_bound_and_escape_fixtures() {
    bool ok = true;
    QuasiPeriodConfig cfg;

    GeodesicModel a = fx::rational_third();
    QuasiPeriodResult ra = find_quasi_period(a, cfg);
    CheckReport bound_a = verify_index_sum_bound(a, ra);
    ok = ok && bound_a.all_pass();
    ok = ok && bound_a.items.at(0).detail == "max LHS 4 <= bound 4"; // attained
    ok = ok && verify_escape(a, ra, m_zero(a), 50).all_pass();

    GeodesicModel b = fx::golden_rotation();
    QuasiPeriodResult rb = find_quasi_period(b, cfg);
    CheckReport bound_b = verify_index_sum_bound(b, rb);
    ok = ok && bound_b.all_pass();
    ok = ok && index_iterate(b, rb.T) + rb.p_c + b.dim_M - 3 == 9;
    ok = ok && verify_escape(b, rb, m_zero(b), 50).all_pass();

    line(ok, "sum bound and escape growth at the fixtures",
         "bound attained with equality 4; bound 9 below T = 8");
}

// 6. Property suite over generated models.
void check_property_suite() {
    testgen::ModelGenerator gen;
    std::vector<GeodesicModel> models = {fx::rational_third(), fx::golden_rotation(),
                                         fx::hyperbolic_even(), fx::hyperbolic_odd()};
    while (models.size() < 504) models.push_back(gen.generate());

    long long violations = 0;
    for (const GeodesicModel& model : models) {
        if (!validate_model(model).empty()) { ++violations; continue; }
        if (!verify_bott(model, 200).all_pass()) ++violations;

        Int n = analytical_period(model);
        for (Int m = 1; m <= 200; ++m)
            if (nullity_iterate(model, m + n) != nullity_iterate(model, m)) {
                ++violations;
                break;
            }

        MeanIndex mean = mean_index(model);
        Rat C(index_deviation_constant(model));
        for (Int m = 1; m <= 200; ++m) {
            QuadExpr gap = mean * Rat(m) - QuadExpr(Rat(index_iterate(model, m)));
            if (compare(gap, C) > 0 || compare(-gap, C) > 0) {
                ++violations;
                break;
            }
        }

        Int m0 = m_zero(model);
        QuasiPeriodConfig cfg;
        int k = model.nf.k();
        if (k >= 1) {
            Rat eps = auto_epsilon(model, m0);
            eps = std::min(eps, Rat(1, 5));
            eps = std::min(eps, cfg.tau / Rat(2 * k));
            cfg.epsilon = eps;
        }
        QuasiPeriodResult qp = find_quasi_period(model, cfg);
        auto [k1, k2] = growth_constants(model, qp.A);
        Int iT = index_iterate(model, qp.T);
        for (Int m = qp.T + 1; m <= 3 * qp.T; ++m)
            if (index_iterate(model, m) - iT < k1) {
                ++violations;
                break;
            }
        for (Int m = 1; m < qp.T; ++m)
            if (iT - index_iterate(model, m) < k2) {
                ++violations;
                break;
            }
    }
    std::ostringstream os;
    os << models.size()
       << " models, parity + monotonicity + nullity period + deviation <= C on m <= 200, "
          "growth constants on horizon 3T, "
       << violations << " violations";
    line(violations == 0, "property suite on generated models", os.str());
}

// 7. The eta-correction bound and the odd-degree sum identity.
void check_eta_and_odd_sums() {
    bool ok = true;
    int classes = 0;
    for (int d = 2; d <= 10; d += 2)
        for (int h = 1; h <= 6; ++h) {
            ManifoldClass mc = ManifoldClass::make(d, h);
            if (!epsilon_eta_claim(mc).pass) ok = false;
            if (!odd_sum_identity(mc).pass) ok = false;
            ++classes;
        }
    std::ostringstream os;
    os << classes << " classes, even d <= 10, h <= 6, strict bound and exact sums";
    line(ok, "eta corrections and odd-degree sums", os.str());
}

// 8. Quadratic floors against the independent decimal oracle.
void check_floor_oracle() {
    std::mt19937_64 rng(424243);
    auto pick = [&](long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    };
    static const int squarefree[] = {2, 3, 5, 6, 7, 10, 11, 13, 15, 17, 19, 21, 22, 23};

    int done = 0;
    long long mismatches = 0;
    while (done < 10000) {
        Int D = squarefree[pick(0, 13)];
        Int c = pick(1, 50);
        Int b = pick(-20, 20);
        if (b == 0) continue;
        Int a = pick(-150, 150);

        Int scale = testoracle::pow10(40);
        Int s = testoracle::newton_isqrt(D * scale * scale);
        Int lo = a * scale + b * (b >= 0 ? s : s + 1);
        Int hi = a * scale + b * (b >= 0 ? s + 1 : s);
        if (!(lo > 0 && hi < c * scale)) continue; // not certainly inside (0,1)

        AngleRatio x = AngleRatio::quadratic(a, b, c, D);
        Int m = pick(1, 1000000);
        if (floor_scaled(m, x) != testoracle::certified_floor(m, x.quad())) ++mismatches;
        ++done;
    }
    std::ostringstream os;
    os << done << " random (m <= 10^6, ratio) pairs vs 200-digit decimals, "
       << mismatches << " mismatches";
    line(mismatches == 0, "exactness oracle for quadratic floors", os.str());
}

} // namespace

int main() {
    check_contradiction_scans();
    check_closed_forms();
    check_sphere_consistency();
    check_quasi_period_fixtures();
    check_bound_and_escape_fixtures();
    check_property_suite();
    check_eta_and_odd_sums();
    check_floor_oracle();

    if (failures == 0) {
        std::cout << "acceptance: all checks passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " check(s) failed\n";
    return 1;
}
