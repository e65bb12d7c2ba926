#pragma once

// The resonance-identity arithmetic: a single prime closed geodesic with
// iterate index R = i(c^T) and offset p = p(c) forces an exact alternating
// Betti sum to differ from B(d,h)(R+p) by a nonnegative integer kappa.
// identity_check evaluates that constraint; contradiction_scan sweeps (R,p)
// grids expecting no feasible instance.  The ledger side evaluates the mean
// index identity and its single-geodesic alternating-sum form over
// user-supplied critical-module dimension data.

#include <vector>

#include "geoiter/betti.hpp"
#include "geoiter/index_engine.hpp"
#include "geoiter/normal_form.hpp"

namespace geoiter {

struct IdentityInstance {
    ManifoldClass mc;
    long long R = 0;        // candidate i(c^T)
    long long p = 0;        // candidate p(c)
    bool reversible = false;

    long long mu() const { return p + mc.dim() - 3; }
};

// Violated instance invariants (R, p natural; R = p mod 2; R+p even >= 2).
std::vector<std::string> validate_instance(const IdentityInstance& inst);

struct IdentityOutcome {
    bool feasible = false;
    Rat kappa; // exact; feasible iff a nonnegative integer (even if reversible)
};

IdentityOutcome identity_check(const IdentityInstance& inst);

struct ScanHit {
    long long R = 0;
    long long p = 0;
    Rat kappa;
};

struct ScanReport {
    long long scanned = 0;
    std::vector<ScanHit> feasible;
    bool clean() const { return feasible.empty(); }
};

// Every (R,p) with R = p (mod 2), 0 <= p <= max_p, 2 <= R+p <= max_sum.
ScanReport contradiction_scan(const ManifoldClass& mc, long long max_sum,
                              long long max_p, bool reversible = false);

struct ScanRow {
    long long R = 0;
    long long p = 0;
    Rat kappa;
    bool feasible = false;
};

// The same sweep with every instance's outcome kept, for report emission.
std::vector<ScanRow> enumerate_instances(const ManifoldClass& mc, long long max_sum,
                                         long long max_p, bool reversible = false);

struct EtaClaimReport {
    bool pass = false;
    long long argmax_two_eta = 0;
    Rat max_value;
    Rat bound;
    std::vector<Rat> values; // indexed by 2*eta/2 over even 2*eta in [0, D-2]
};

// eta-correction bound for even d: eps(2eta) = {2eta/(dh)} -
// (2/d + (d-2)/(dh))*(2eta/D) - {2eta/d} stays strictly below
// (dh-(d-2))/(dh+(d-2)) on even 2eta in [0, D-2].
EtaClaimReport epsilon_eta_claim(const ManifoldClass& mc);

struct OddSumReport {
    bool pass = false;
    Int direct;
    Rat closed; // dh(h-1)/4
};

// Sum of odd-degree Betti numbers up to dh-3 equals dh(h-1)/4 (even d).
OddSumReport odd_sum_identity(const ManifoldClass& mc);

// Local critical-module dimensions of one iterate: entries k_0..k_nu
// (trailing zeros may be omitted), the critical sign, and the iterate's
// index and nullity they attach to.
struct KVector {
    std::vector<Int> entries;
    int sign = 1; // +1 or -1
    Int attached_index;
    Int attached_nullity;
};

std::vector<std::string> validate_kvector(const KVector& kv);

// Critical-module data for every iterate class m in [1, n] of one model;
// the m = n entry doubles as the d_j data of the single-geodesic ledger.
struct LedgerInput {
    GeodesicModel model;
    Int n; // analytical period of the model
    std::vector<KVector> kvectors;
};

std::vector<std::string> validate_ledger_input(const LedgerInput& input);

// (1/n) sum_m sum_l (-1)^(i(c^m)+l) k_l(c^m), exact.
Rat chi_hat(const LedgerInput& input);

// sum_j chi_hat(input_j)/mean_j - B(d,h); zero iff the mean index identity
// holds for the supplied family.  Requires rational positive mean indices.
Rat mean_identity_residual(const std::vector<LedgerInput>& inputs,
                           const ManifoldClass& mc);

// B(d,h)*n*mean - [ sum_{m<n} sum_l (-1)^(i(c^m)+l) k_l(c^m)
//                   + sum_{j=0}^{mu+1} (-1)^(i(c^n)+j) d_j ];
// requires d_j = 0 for j >= mu+2 (DJTailNonzero otherwise).
Rat ledger_residual(const LedgerInput& input, const ManifoldClass& mc,
                    const Int& mu);

} // namespace geoiter
