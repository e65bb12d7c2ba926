#include "geoiter/normal_form.hpp"

#include <algorithm>

namespace geoiter {

namespace {

int count_quadratic(const std::vector<AngleRatio>& xs) {
    return static_cast<int>(
        std::count_if(xs.begin(), xs.end(), [](const AngleRatio& x) { return x.is_quadratic(); }));
}

bool irrational_first(const std::vector<AngleRatio>& xs) {
    bool seen_rational = false;
    for (const auto& x : xs) {
        if (x.is_rational())
            seen_rational = true;
        else if (seen_rational)
            return false;
    }
    return true;
}

bool is_half(const AngleRatio& x) {
    return x.is_rational() && x.rat() == Rat(1, 2);
}

} // namespace

int NormalFormData::k() const { return count_quadratic(rotations); }
int NormalFormData::k_star() const { return count_quadratic(nontrivial_pairs); }
int NormalFormData::k_zero() const { return count_quadratic(trivial_pairs); }

std::vector<std::string> validate_model(const GeodesicModel& model) {
    std::vector<std::string> report;
    const NormalFormData& nf = model.nf;

    if (model.dim_M < 2) report.push_back("manifold dimension must be at least 2");
    if (model.initial_index < 0) report.push_back("initial index must be a natural number");
    if (nf.p_minus < 0 || nf.p_zero < 0 || nf.p_plus < 0 || nf.q_minus < 0 ||
        nf.q_zero < 0 || nf.q_plus < 0 || nf.h_plus < 0)
        report.push_back("block counts must be natural numbers");
    if (nf.h_minus != 0 && nf.h_minus != 1)
        report.push_back("h_minus must be 0 or 1");
    if (nf.half_dim != model.dim_M - 1)
        report.push_back("half-dimension must equal dim_M - 1");

    long long budget = 0LL + nf.p_minus + nf.p_zero + nf.p_plus + nf.q_minus +
                       nf.q_zero + nf.q_plus + nf.r() + 2 * nf.r_star() +
                       2 * nf.r_zero() + nf.h_minus + nf.h_plus;
    if (budget != nf.half_dim)
        report.push_back("dimension budget: block sizes must sum to the half-dimension");

    auto check_list = [&](const std::vector<AngleRatio>& xs, const char* name) {
        if (!irrational_first(xs))
            report.push_back(std::string(name) + ": irrational entries must precede rational ones");
        for (const auto& x : xs)
            if (is_half(x))
                report.push_back(std::string(name) + ": angle ratio 1/2 is not allowed");
    };
    check_list(nf.rotations, "rotations");
    check_list(nf.nontrivial_pairs, "nontrivial_pairs");
    check_list(nf.trivial_pairs, "trivial_pairs");

    if (model.initial_index >= 0) {
        int forced = (nf.p_minus + nf.p_zero + nf.q_minus + nf.q_zero + nf.q_plus +
                      nf.r() + nf.h_minus) % 2;
        if (model.initial_index % 2 != forced)
            report.push_back("initial index parity must match the block decomposition");
    }
    return report;
}

bool is_valid(const GeodesicModel& model) { return validate_model(model).empty(); }

Int initial_nullity(const NormalFormData& nf) {
    return Int(nf.p_minus) + 2 * Int(nf.p_zero) + Int(nf.p_plus);
}

Parity index_parity(const NormalFormData& nf) {
    int s = (nf.p_minus + nf.p_zero + nf.q_minus + nf.q_zero + nf.q_plus + nf.r() +
             nf.h_minus) % 2;
    return s ? Parity::odd : Parity::even;
}

} // namespace geoiter
