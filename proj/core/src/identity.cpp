#include "geoiter/identity.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

namespace geoiter {

namespace {

// Alternating prefix sums S[t] = sum_{j=0}^t (-1)^j b_j, with S[-1] = 0.
std::vector<long long> alternating_prefix(const ManifoldClass& mc, long long t_max) {
    std::vector<long long> S(static_cast<size_t>(t_max + 1));
    long long acc = 0;
    for (long long t = 0; t <= t_max; ++t) {
        long long b = betti_number(mc, t);
        acc += (t % 2 == 0) ? b : -b;
        S[static_cast<size_t>(t)] = acc;
    }
    return S;
}

bool feasible_kappa(const Rat& kappa, bool reversible) {
    if (kappa < 0) return false;
    if (denominator(kappa) != 1) return false;
    if (reversible && numerator(kappa) % 2 != 0) return false;
    return true;
}

IdentityOutcome check_with_prefix(const IdentityInstance& inst,
                                  const std::vector<long long>& S, const Rat& B) {
    long long mu = inst.mu();
    long long hi = inst.R + mu;      // last summand
    long long lo_prev = mu - inst.p; // one before the first summand
    auto at = [&](long long t) -> long long {
        if (t < 0) return 0;
        return S[static_cast<size_t>(t)];
    };
    Rat rhs(at(hi) - at(lo_prev));
    Rat kappa = rhs - B * Rat(inst.R + inst.p);
    if ((inst.R + mu) % 2 != 0) kappa = -kappa;
    return IdentityOutcome{feasible_kappa(kappa, inst.reversible), kappa};
}

Int signed_unit(const Int& exponent) { return exponent % 2 == 0 ? Int(1) : Int(-1); }

// entries zero-extended to length nu+1; surplus entries must be zero.
std::vector<Int> padded_entries(const KVector& kv, const Int& nu,
                                const char* where) {
    long long n = nu.convert_to<long long>();
    std::vector<Int> out(static_cast<size_t>(n + 1), Int(0));
    for (size_t j = 0; j < kv.entries.size(); ++j) {
        if (j <= static_cast<size_t>(n))
            out[j] = kv.entries[j];
        else if (kv.entries[j] != 0)
            throw LedgerDataError(std::string(where) +
                                  ": entry beyond the nullity must be zero");
    }
    return out;
}

// sum_l (-1)^(i+l) k_l for one iterate.
Int signed_module_sum(const KVector& kv, const Int& index, const Int& nu,
                      const char* where) {
    std::vector<Int> ks = padded_entries(kv, nu, where);
    Int s = 0;
    for (size_t l = 0; l < ks.size(); ++l)
        s += signed_unit(index + Int(l)) * ks[l];
    return s;
}

Rat rational_positive_mean(const GeodesicModel& model) {
    MeanIndex mi = mean_index(model);
    if (!mi.is_rational())
        throw IrrationalMeanIndex("the identity requires a rational mean index");
    Rat value = mi.rational_value();
    if (value <= 0)
        throw MeanIndexNotPositive("the identity requires a positive mean index");
    return value;
}

} // namespace

std::vector<std::string> validate_instance(const IdentityInstance& inst) {
    std::vector<std::string> report;
    if (inst.R < 0 || inst.p < 0)
        report.push_back("R and p must be natural numbers");
    if ((inst.R - inst.p) % 2 != 0)
        report.push_back("R and p must have equal parity");
    if (inst.R + inst.p < 2)
        report.push_back("R + p must be at least 2");
    return report;
}

IdentityOutcome identity_check(const IdentityInstance& inst) {
    if (!validate_instance(inst).empty())
        throw Error("identity_check: instance invariants violated");
    long long t_max = std::max<long long>(0, inst.R + inst.mu());
    return check_with_prefix(inst, alternating_prefix(inst.mc, t_max),
                             coefficient_B(inst.mc));
}

ScanReport contradiction_scan(const ManifoldClass& mc, long long max_sum,
                              long long max_p, bool reversible) {
    if (max_sum < 2 || max_sum % 2 != 0)
        throw Error("contradiction_scan: max_sum must be an even integer >= 2");
    if (max_p < 0) throw Error("contradiction_scan: max_p must be a natural number");

    long long t_max = max_sum + mc.dim() - 3; // R + mu <= max_sum + dim - 3
    std::vector<long long> S = alternating_prefix(mc, std::max<long long>(0, t_max));
    Rat B = coefficient_B(mc);

    auto scan_p = [&](long long p) {
        ScanReport part;
        for (long long R = p % 2; R + p <= max_sum; R += 2) {
            if (R + p < 2) continue;
            ++part.scanned;
            IdentityInstance inst{mc, R, p, reversible};
            IdentityOutcome out = check_with_prefix(inst, S, B);
            if (out.feasible) part.feasible.push_back({R, p, out.kappa});
        }
        return part;
    };

    ScanReport report;
    unsigned workers = std::thread::hardware_concurrency();
    if (workers > 1 && max_p >= 1 && max_sum >= 64) {
        std::vector<std::future<ScanReport>> parts;
        parts.reserve(static_cast<size_t>(max_p + 1));
        for (long long p = 0; p <= max_p; ++p)
            parts.push_back(std::async(std::launch::async, scan_p, p));
        for (auto& f : parts) {
            ScanReport part = f.get();
            report.scanned += part.scanned;
            report.feasible.insert(report.feasible.end(), part.feasible.begin(),
                                   part.feasible.end());
        }
    } else {
        for (long long p = 0; p <= max_p; ++p) {
            ScanReport part = scan_p(p);
            report.scanned += part.scanned;
            report.feasible.insert(report.feasible.end(), part.feasible.begin(),
                                   part.feasible.end());
        }
    }
    std::sort(report.feasible.begin(), report.feasible.end(),
              [](const ScanHit& a, const ScanHit& b) {
                  return a.R != b.R ? a.R < b.R : a.p < b.p;
              });
    return report;
}

std::vector<ScanRow> enumerate_instances(const ManifoldClass& mc, long long max_sum,
                                         long long max_p, bool reversible) {
    if (max_sum < 2 || max_sum % 2 != 0)
        throw Error("enumerate_instances: max_sum must be an even integer >= 2");
    if (max_p < 0) throw Error("enumerate_instances: max_p must be a natural number");

    long long t_max = max_sum + mc.dim() - 3;
    std::vector<long long> S = alternating_prefix(mc, std::max<long long>(0, t_max));
    Rat B = coefficient_B(mc);

    std::vector<ScanRow> rows;
    for (long long R = 0; R <= max_sum; ++R) {
        for (long long p = R % 2; p <= max_p; p += 2) {
            if (R + p < 2 || R + p > max_sum) continue;
            IdentityInstance inst{mc, R, p, reversible};
            IdentityOutcome out = check_with_prefix(inst, S, B);
            rows.push_back({R, p, out.kappa, out.feasible});
        }
    }
    return rows;
}

EtaClaimReport epsilon_eta_claim(const ManifoldClass& mc) {
    if (mc.d % 2 != 0) throw Error("epsilon_eta_claim: requires even d");
    long long dh = mc.dim();
    long long D = mc.D();

    EtaClaimReport report;
    report.bound = Rat(dh - (mc.d - 2), dh + (mc.d - 2));
    bool first = true;
    for (long long two_eta = 0; two_eta <= D - 2; two_eta += 2) {
        Rat eps = frac_rat(Rat(two_eta, dh)) -
                  (Rat(2, mc.d) + Rat(mc.d - 2, dh)) * Rat(two_eta, D) -
                  frac_rat(Rat(two_eta, mc.d));
        report.values.push_back(eps);
        if (first || eps > report.max_value) {
            report.max_value = eps;
            report.argmax_two_eta = two_eta;
            first = false;
        }
    }
    report.pass = report.max_value < report.bound;
    return report;
}

OddSumReport odd_sum_identity(const ManifoldClass& mc) {
    if (mc.d % 2 != 0) throw Error("odd_sum_identity: requires even d");
    long long dh = mc.dim();
    OddSumReport report;
    report.direct = 0;
    for (long long j = 1; j <= dh - 3; j += 2)
        report.direct += betti_number(mc, j);
    report.closed = Rat(dh * (mc.h - 1), 4);
    report.pass = Rat(report.direct) == report.closed;
    return report;
}

std::vector<std::string> validate_kvector(const KVector& kv) {
    std::vector<std::string> report;
    if (kv.sign != 1 && kv.sign != -1)
        report.push_back("sign must be +1 or -1");
    if (kv.attached_nullity < 0)
        report.push_back("nullity must be a natural number");
    for (const auto& e : kv.entries)
        if (e < 0) report.push_back("entries must be natural numbers");
    if (!report.empty()) return report;

    long long nu = kv.attached_nullity.convert_to<long long>();
    auto entry = [&](long long j) -> Int {
        return j < static_cast<long long>(kv.entries.size())
                   ? kv.entries[static_cast<size_t>(j)]
                   : Int(0);
    };
    for (size_t j = static_cast<size_t>(nu) + 1; j < kv.entries.size(); ++j)
        if (kv.entries[j] != 0) {
            report.push_back("entries beyond the nullity must be zero");
            break;
        }
    Int ends = nu == 0 ? entry(0) : entry(0) + entry(nu);
    if (ends > 1)
        report.push_back("k_0 + k_nu must be at most 1");
    else if (ends == 1) {
        for (long long j = 1; j < nu; ++j)
            if (entry(j) != 0) {
                report.push_back("interior entries must vanish when an end entry is 1");
                break;
            }
    }
    return report;
}

std::vector<std::string> validate_ledger_input(const LedgerInput& input) {
    std::vector<std::string> report;
    if (input.n < 1) {
        report.push_back("n must be at least 1");
        return report;
    }
    if (input.n != analytical_period(input.model))
        report.push_back("n must equal the analytical period of the model");
    if (Int(input.kvectors.size()) != input.n)
        report.push_back("one k-vector per iterate class m in [1, n] is required");
    Int m = 1;
    for (const auto& kv : input.kvectors) {
        for (const auto& v : validate_kvector(kv)) report.push_back(v);
        if (m <= input.n) {
            if (kv.attached_index != index_iterate(input.model, m))
                report.push_back("attached index must match the iterate index");
            if (kv.attached_nullity != nullity_iterate(input.model, m))
                report.push_back("attached nullity must match the iterate nullity");
        }
        ++m;
    }
    return report;
}

Rat chi_hat(const LedgerInput& input) {
    if (input.n < 1 || Int(input.kvectors.size()) != input.n)
        throw LedgerDataError("chi_hat: one k-vector per iterate class is required");
    Int total = 0;
    Int m = 1;
    for (const auto& kv : input.kvectors) {
        Int i_m = index_iterate(input.model, m);
        Int nu_m = nullity_iterate(input.model, m);
        total += signed_module_sum(kv, i_m, nu_m, "chi_hat");
        ++m;
    }
    return Rat(total, input.n);
}

Rat mean_identity_residual(const std::vector<LedgerInput>& inputs,
                           const ManifoldClass& mc) {
    Rat sum(0);
    for (const auto& input : inputs)
        sum += chi_hat(input) / rational_positive_mean(input.model);
    return sum - coefficient_B(mc);
}

Rat ledger_residual(const LedgerInput& input, const ManifoldClass& mc,
                    const Int& mu) {
    if (mu < 0) throw Error("ledger_residual: mu must be a natural number");
    if (input.n < 1 || Int(input.kvectors.size()) != input.n)
        throw LedgerDataError("ledger_residual: one k-vector per iterate class is required");
    Rat mean = rational_positive_mean(input.model);

    Int body = 0;
    Int m = 1;
    for (const auto& kv : input.kvectors) {
        if (m == input.n) break;
        body += signed_module_sum(kv, index_iterate(input.model, m),
                                  nullity_iterate(input.model, m), "ledger_residual");
        ++m;
    }

    const KVector& last = input.kvectors.back();
    Int nu_n = nullity_iterate(input.model, input.n);
    std::vector<Int> d = padded_entries(last, nu_n, "ledger_residual");
    for (size_t j = 0; j < d.size(); ++j)
        if (Int(j) >= mu + 2 && d[j] != 0)
            throw DJTailNonzero("ledger_residual: d_j must vanish for j >= mu+2");

    Int i_n = index_iterate(input.model, input.n);
    Int tail = 0;
    for (Int j = 0; j <= mu + 1; ++j) {
        Int dj = j < Int(d.size()) ? d[static_cast<size_t>(j.convert_to<long long>())] : Int(0);
        tail += signed_unit(i_n + j) * dj;
    }

    return coefficient_B(mc) * Rat(input.n) * mean - Rat(body + tail);
}

} // namespace geoiter
