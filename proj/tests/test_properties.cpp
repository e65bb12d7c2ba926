#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include <geoiter/index_engine.hpp>
#include <geoiter/quasi_period.hpp>

#include "fixtures.hpp"
#include "model_generator.hpp"

using namespace geoiter;
namespace fx = geoiter::fixtures;

TEST_CASE("generated models satisfy the global iteration invariants") {
    testgen::ModelGenerator gen;
    std::vector<GeodesicModel> models = {fx::rational_third(), fx::golden_rotation(),
                                         fx::hyperbolic_even(), fx::hyperbolic_odd()};
    while (models.size() < 504) models.push_back(gen.generate());

    for (size_t idx = 0; idx < models.size(); ++idx) {
        const GeodesicModel& model = models[idx];
        CAPTURE(idx);
        REQUIRE(validate_model(model).empty());

        CHECK(verify_bott(model, 120).all_pass());

        // Nullity is bounded, maximal at the analytical period, and periodic.
        Int n = analytical_period(model);
        Int max_nu = 0;
        for (Int m = 1; m <= n; ++m)
            if (nullity_iterate(model, m) > max_nu) max_nu = nullity_iterate(model, m);
        CHECK(nullity_iterate(model, n) == max_nu);
        CHECK(max_nu <= 2 * model.nf.half_dim);
        for (Int m = 1; m <= 2 * n + 4; ++m) {
            if (nullity_iterate(model, m + n) != nullity_iterate(model, m)) {
                CAPTURE(m);
                CHECK(false);
                break;
            }
            if ((index_iterate(model, m + n) - index_iterate(model, m)) % 2 != 0) {
                CAPTURE(m);
                CHECK(false);
                break;
            }
        }

        // Two-sided deviation around the mean index: -C <= i(c^m) - m*mean <= r.
        MeanIndex mean = mean_index(model);
        CHECK(mean.sign() == 1);
        Rat C(index_deviation_constant(model));
        Rat r_count(model.nf.r());
        for (Int m = 1; m <= 120; ++m) {
            QuadExpr gap = mean * Rat(m) - QuadExpr(Rat(index_iterate(model, m)));
            if (compare(gap, C) > 0 || compare(-gap, r_count) > 0) {
                CAPTURE(m);
                CHECK(false);
                break;
            }
        }

        // The escape threshold does its job past itself.
        Int m0 = m_zero(model);
        Int target = model.dim_M + 4 * model.nf.k();
        bool escape_ok = true;
        for (Int j = 1; j <= 60; ++j)
            if (index_iterate(model, j + m0) < target) escape_ok = false;
        CHECK(escape_ok);

        // Quasi-period search with the epsilon the auto rule would pick,
        // capped so the mean-gap certificate already holds by construction.
        QuasiPeriodConfig cfg;
        int k = model.nf.k();
        if (k >= 1) {
            Rat eps = auto_epsilon(model, m0);
            eps = std::min(eps, Rat(1, 5));
            eps = std::min(eps, cfg.tau / Rat(2 * k));
            cfg.epsilon = eps;
        }
        QuasiPeriodResult qp = find_quasi_period(model, cfg);
        CHECK(qp.T % n == 0);
        CHECK(qp.T % 2 == 0);
        CHECK(qp.p_c == p_of_c(model.nf, qp.A));
        CHECK(verify_quasi_periodicity(model, qp, m0, cfg.tau).all_pass());
        CHECK(verify_index_sum_bound(model, qp).all_pass());
        CHECK(verify_escape(model, qp, m0, 40).all_pass());

        // Guaranteed growth away from T, sampled on windows on both sides.
        auto [k1, k2] = growth_constants(model, qp.A);
        Int iT = index_iterate(model, qp.T);
        bool growth_ok = true;
        for (Int m = qp.T + 1; m <= qp.T + 300; ++m)
            if (index_iterate(model, m) - iT < k1) growth_ok = false;
        for (Int m = 1; m < qp.T && m <= 200; ++m)
            if (iT - index_iterate(model, m) < k2) growth_ok = false;
        for (Int m = (qp.T > 200 ? qp.T - 200 : Int(1)); m < qp.T; ++m)
            if (iT - index_iterate(model, m) < k2) growth_ok = false;
        CHECK(growth_ok);
    }
}
