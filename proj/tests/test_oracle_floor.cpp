#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include <geoiter/exact.hpp>

#include "decimal_oracle.hpp"

using namespace geoiter;
namespace oracle = geoiter::testoracle;

namespace {

// Accept only arguments whose value certainly lies in (0,1): both bracket
// ends of a + b*sqrt(D) must fall strictly inside (0, c).
bool strictly_inside_unit(const Int& a, const Int& b, const Int& c, const Int& D) {
    Int scale = oracle::pow10(40);
    Int s = oracle::newton_isqrt(D * scale * scale);
    Int lo = a * scale + b * (b >= 0 ? s : s + 1);
    Int hi = a * scale + b * (b >= 0 ? s + 1 : s);
    return lo > 0 && hi < c * scale;
}

} // namespace

TEST_CASE("the oracle itself brackets known roots") {
    // floor(sqrt(2) * 10^k) prefixes: 1, 14, 141, 1414, ...
    Int s = oracle::newton_isqrt(Int(2) * oracle::pow10(8));
    CHECK(s == 14142); // sqrt(2*10^8) = 14142.13...
    CHECK(oracle::newton_isqrt(Int(0)) == 0);
    CHECK(oracle::newton_isqrt(Int(1)) == 1);
    CHECK(oracle::newton_isqrt(Int(15)) == 3);
    CHECK(oracle::newton_isqrt(Int(16)) == 4);
    CHECK(oracle::certified_floor(8, -1, 1, 2, 5) == 4);   // 8*(sqrt(5)-1)/2
    CHECK(oracle::certified_floor(1, 0, 8, 1, 5) == 17);   // 8*sqrt(5)
    CHECK(oracle::certified_floor(1, 0, -8, 1, 5) == -18);
    CHECK(oracle::floordiv(-7, 2) == -4);
}

TEST_CASE("ten thousand random quadratic floors agree with the decimal oracle") {
    std::mt19937_64 rng(424243);
    auto pick = [&](long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    };
    static const int squarefree[] = {2, 3, 5, 6, 7, 10, 11, 13, 15, 17, 19, 21, 22, 23};

    int done = 0, mismatches = 0;
    while (done < 10000) {
        Int D = squarefree[pick(0, 13)];
        Int c = pick(1, 50);
        Int b = pick(-20, 20);
        if (b == 0) continue;
        Int a = pick(-150, 150);
        if (!strictly_inside_unit(a, b, c, D)) continue;

        AngleRatio x = AngleRatio::quadratic(a, b, c, D);
        Int m = pick(1, 1000000);
        const QuadRatio& q = x.quad(); // canonicalized but equal in value
        if (floor_scaled(m, x) != oracle::certified_floor(m, q)) {
            ++mismatches;
            CAPTURE(m);
            CAPTURE(to_string(x));
            CHECK(floor_scaled(m, x) == oracle::certified_floor(m, q));
        }
        // The jump indicator of an irrational multiple is always one, so the
        // upper integer part must sit exactly one above the floor.
        if (upper_E(m, x) != oracle::certified_floor(m, q) + 1) {
            ++mismatches;
            CHECK(upper_E(m, x) == oracle::certified_floor(m, q) + 1);
        }
        ++done;
    }
    CHECK(done == 10000);
    CHECK(mismatches == 0);
}

TEST_CASE("a thousand random rational floors agree with plain division") {
    std::mt19937_64 rng(7);
    auto pick = [&](long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    };
    int done = 0;
    while (done < 1000) {
        Int den = pick(2, 10000);
        Int num = pick(1, static_cast<long long>(den) - 1);
        Int m = pick(1, 1000000);
        AngleRatio x = AngleRatio::rational(num, den);
        CHECK(floor_scaled(m, x) == (m * num) / den); // positive operands: exact
        ++done;
    }
}
