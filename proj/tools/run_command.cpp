#include "run_command.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include <geoiter/betti.hpp>
#include <geoiter/errors.hpp>
#include <geoiter/identity.hpp>
#include <geoiter/index_engine.hpp>
#include <geoiter/model_io.hpp>
#include <geoiter/quasi_period.hpp>

namespace geoiter::cli {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;

Rat parse_ratio(const std::string& text) {
    auto slash = text.find('/');
    std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den_part = slash == std::string::npos ? std::string("1")
                                                      : text.substr(slash + 1);
    Int num, den;
    try {
        num = Int(num_part);
        den = Int(den_part);
    } catch (const std::exception&) {
        throw ParseError("cannot parse '" + text + "' (expected NUM or NUM/DEN)");
    }
    if (den == 0) throw ParseError("ratio denominator must be nonzero");
    return Rat(num, den);
}

// Routes report text to --out when given, else to the session stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw Error("cannot open '" + path + "' for writing");
            use_file_ = true;
        }
    }
    std::ostream& stream() { return use_file_ ? file_ : fallback_; }
    void finish() {
        if (!use_file_) return;
        file_.flush();
        if (!file_) throw Error("failed writing the report file");
    }

private:
    std::ofstream file_;
    std::ostream& fallback_;
    bool use_file_ = false;
};

std::string csv_bool(bool b) { return b ? "true" : "false"; }

// Approximate decimal for table mode only; CSV stays exact.
std::string approx(const Rat& r, int digits = 6) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rat scaled = r * Rat(scale);
    Int rounded = floor_rat(scaled + Rat(1, 2));
    std::ostringstream os;
    Rat shown = Rat(rounded, scale);
    bool neg = shown < 0;
    if (neg) shown = -shown;
    Int whole = floor_rat(shown);
    Rat frac = shown - Rat(whole);
    os << (neg ? "-" : "") << whole << '.';
    for (int i = 0; i < digits; ++i) {
        frac *= 10;
        Int digit = floor_rat(frac);
        os << digit;
        frac -= Rat(digit);
    }
    return os.str();
}

void emit_check_reports(const std::vector<std::pair<std::string, CheckReport>>& groups,
                        const std::string& format, std::ostream& os) {
    if (format == "csv") {
        os << "group,check,pass\n";
        for (const auto& [group, report] : groups)
            for (const CheckItem& item : report.items)
                os << group << ',' << item.name << ',' << csv_bool(item.pass) << '\n';
        return;
    }
    for (const auto& [group, report] : groups)
        for (const CheckItem& item : report.items) {
            os << (item.pass ? "[PASS] " : "[FAIL] ") << group << ": " << item.name;
            if (!item.detail.empty()) os << " — " << item.detail;
            os << '\n';
        }
}

// ---------------------------------------------------------------- validate

int cmd_validate(const std::string& model_path, std::ostream& out, std::ostream& err) {
    GeodesicModel model = parse_model_file(model_path); // throws on violation
    out << "valid: half_dim=" << model.nf.half_dim << " nullity="
        << initial_nullity(model.nf) << " parity="
        << (index_parity(model.nf) == Parity::odd ? "odd" : "even") << '\n';
    (void)err;
    return kOk;
}

// ----------------------------------------------------------------- iterate

int cmd_iterate(const std::string& model_path, long long max_m,
                const std::string& format, Sink& sink) {
    GeodesicModel model = parse_model_file(model_path);
    if (max_m < 1) throw ParseError("--max-m must be at least 1");
    std::ostream& os = sink.stream();
    if (format == "csv") {
        os << "m,index,nullity\n";
        for (long long m = 1; m <= max_m; ++m)
            os << m << ',' << index_iterate(model, m) << ','
               << nullity_iterate(model, m) << '\n';
    } else {
        os << std::setw(8) << "m" << std::setw(10) << "index" << std::setw(10)
           << "nullity" << '\n';
        for (long long m = 1; m <= max_m; ++m)
            os << std::setw(8) << m << std::setw(10) << index_iterate(model, m)
               << std::setw(10) << nullity_iterate(model, m) << '\n';
    }
    sink.finish();
    return kOk;
}

// ------------------------------------------------------------------ period

int cmd_period(const std::string& model_path, const std::string& format, Sink& sink) {
    GeodesicModel model = parse_model_file(model_path);
    Int n = analytical_period(model);
    bool have_m0 = true;
    Int m0 = 0;
    try {
        m0 = m_zero(model);
    } catch (const MeanIndexNotPositive&) {
        have_m0 = false;
    }
    std::ostream& os = sink.stream();
    if (format == "csv") {
        os << "n,m0\n" << n << ',';
        if (have_m0) os << m0;
        os << '\n';
    } else {
        os << "n = " << n << '\n';
        if (have_m0)
            os << "m0 = " << m0 << '\n';
        else
            os << "m0 undefined: the mean index is not positive, so iterate "
                  "indices never escape the degenerate band\n";
    }
    sink.finish();
    return kOk;
}

// ------------------------------------------------------------------- quasi

QuasiPeriodConfig make_config(const std::string& epsilon, const std::string& tau,
                              bool strong, long long max_multiplier) {
    QuasiPeriodConfig cfg;
    if (!epsilon.empty()) cfg.epsilon = parse_ratio(epsilon);
    cfg.tau = parse_ratio(tau);
    if (cfg.tau <= 0) throw ParseError("--tau must be positive");
    cfg.strong_period = strong;
    if (max_multiplier < 1) throw ParseError("--max-multiplier must be at least 1");
    cfg.max_multiplier = max_multiplier;
    return cfg;
}

void emit_quasi(const QuasiPeriodResult& r, const std::string& format, std::ostream& os) {
    if (format == "csv") {
        os << "T,A,p_c,epsilon,positions\n";
        os << r.T << ',' << r.A << ',' << r.p_c << ',' << to_string(r.epsilon_used)
           << ',';
        for (size_t i = 0; i < r.P.size(); ++i) os << (i ? " " : "") << r.P[i];
        os << '\n';
        return;
    }
    os << "T = " << r.T << '\n';
    os << "A = " << r.A << '\n';
    os << "p(c) = " << r.p_c << '\n';
    os << "epsilon = " << to_string(r.epsilon_used);
    if (r.epsilon_used != 0) os << " (~" << approx(r.epsilon_used) << ")";
    os << '\n';
    os << "high rotation positions =";
    if (r.P.empty()) os << " (none)";
    for (int pos : r.P) os << ' ' << pos;
    os << '\n';
}

int cmd_quasi(const std::string& model_path, const QuasiPeriodConfig& cfg,
              const std::string& format, Sink& sink) {
    GeodesicModel model = parse_model_file(model_path);
    QuasiPeriodResult r = find_quasi_period(model, cfg);
    emit_quasi(r, format, sink.stream());
    sink.finish();
    return kOk;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& model_path, const QuasiPeriodConfig& cfg,
               long long max_m, const std::string& format, Sink& sink) {
    GeodesicModel model = parse_model_file(model_path);
    if (max_m < 1) throw ParseError("--max-m must be at least 1");
    QuasiPeriodResult r = find_quasi_period(model, cfg);
    Int m0 = m_zero(model);

    std::vector<std::pair<std::string, CheckReport>> groups;
    groups.emplace_back("quasi-periodicity",
                        verify_quasi_periodicity(model, r, m0, cfg.tau));
    groups.emplace_back("sum-bound", verify_index_sum_bound(model, r));
    groups.emplace_back("escape", verify_escape(model, r, m0, Int(max_m)));
    groups.emplace_back("iteration", verify_bott(model, Int(max_m)));

    std::ostream& os = sink.stream();
    if (format != "csv")
        os << "T = " << r.T << ", A = " << r.A << ", p(c) = " << r.p_c
           << ", m0 = " << m0 << '\n';
    emit_check_reports(groups, format, os);
    bool all = true;
    for (const auto& [group, report] : groups) all = all && report.all_pass();
    sink.finish();
    return all ? kOk : kCheckFailed;
}

// ------------------------------------------------------------------- betti

int cmd_betti(int d, int h, long long max_q, const std::string& format, Sink& sink) {
    ManifoldClass mc = ManifoldClass::make(d, h);
    if (max_q < 0) throw ParseError("--max-q must be a natural number");
    std::ostream& os = sink.stream();
    if (format == "csv") {
        os << "q,b_q\n";
        for (long long q = 0; q <= max_q; ++q)
            os << q << ',' << betti_number(mc, q) << '\n';
    } else {
        os << std::setw(8) << "q" << std::setw(10) << "b_q" << '\n';
        for (long long q = 0; q <= max_q; ++q)
            os << std::setw(8) << q << std::setw(10) << betti_number(mc, q) << '\n';
    }

    SumCheckReport sums = alternating_sum_check(mc, max_q);
    if (format != "csv") {
        if (sums.rows.empty()) {
            os << "sum checks: none (increase --max-q beyond " << (mc.dim() - 1)
               << ")\n";
        } else {
            long long bad = 0;
            for (const SumCheckRow& row : sums.rows)
                if (!row.equal || !row.bounded) ++bad;
            os << "sum checks: " << sums.rows.size() << " degrees, "
               << (bad == 0 ? "all consistent" : std::to_string(bad) + " inconsistent")
               << '\n';
        }
    }
    sink.finish();
    return sums.all_pass() ? kOk : kCheckFailed;
}

// ----------------------------------------------------------- identity-scan

int cmd_identity_scan(int d, int h, long long max_sum, long long max_p,
                      bool reversible, const std::string& format, Sink& sink) {
    ManifoldClass mc = ManifoldClass::make(d, h);
    if (max_p < 0) max_p = 3 * (mc.dim() - 1);
    if (max_sum < 2 || max_sum % 2 != 0)
        throw ParseError("--max-sum must be an even integer >= 2");

    std::ostream& os = sink.stream();
    long long feasible = 0;
    long long scanned = 0;
    if (format == "csv") {
        os << "R,p,kappa_num,kappa_den,feasible\n";
        for (const ScanRow& row : enumerate_instances(mc, max_sum, max_p, reversible)) {
            ++scanned;
            if (row.feasible) ++feasible;
            os << row.R << ',' << row.p << ',' << numerator(row.kappa) << ','
               << denominator(row.kappa) << ',' << csv_bool(row.feasible) << '\n';
        }
    } else {
        ScanReport report = contradiction_scan(mc, max_sum, max_p, reversible);
        scanned = report.scanned;
        feasible = static_cast<long long>(report.feasible.size());
        for (const ScanHit& hit : report.feasible)
            os << "feasible instance: R=" << hit.R << " p=" << hit.p
               << " kappa=" << to_string(hit.kappa) << '\n';
        os << feasible << " feasible / " << scanned << " scanned\n";
    }
    sink.finish();
    return feasible == 0 ? kOk : kCheckFailed;
}

// ------------------------------------------------------------------ ledger

int cmd_ledger(const std::string& model_path, const std::string& kvectors_path,
               int d, int h, const std::string& format, Sink& sink) {
    GeodesicModel model = parse_model_file(model_path);
    if (kvectors_path.empty())
        throw ParseError("ledger requires --kvectors FILE");
    KVectorDocument doc = parse_kvector_file(kvectors_path, model);

    LedgerInput input{model, analytical_period(model), doc.kvectors};
    std::vector<std::string> report = validate_ledger_input(input);
    if (!report.empty()) {
        std::string msg = "invalid ledger input";
        for (const std::string& item : report) msg += "\n  - " + item;
        throw ValidationError(msg);
    }

    ManifoldClass mc = ManifoldClass::make(d, h);
    Rat chi = chi_hat(input);
    Rat residual = ledger_residual(input, mc, doc.mu);
    Rat mean_res = mean_identity_residual({input}, mc);

    std::ostream& os = sink.stream();
    if (format == "csv") {
        os << "quantity,num,den\n";
        os << "chi_hat," << numerator(chi) << ',' << denominator(chi) << '\n';
        os << "ledger_residual," << numerator(residual) << ','
           << denominator(residual) << '\n';
        os << "mean_identity_residual," << numerator(mean_res) << ','
           << denominator(mean_res) << '\n';
    } else {
        os << "chi_hat = " << to_string(chi) << '\n';
        os << "ledger residual = " << to_string(residual) << '\n';
        os << "mean identity residual = " << to_string(mean_res) << '\n';
        os << (residual == 0 ? "ledger consistent\n"
                             : "ledger inconsistent: a single geodesic cannot "
                               "carry this critical-module data\n");
    }
    sink.finish();
    return residual == 0 ? kOk : kCheckFailed;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"exact index-iteration engine for closed geodesics"};
    // long-only help: "-h" must stay free for the manifold class parameter
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    std::string model_path, kvectors_path, epsilon, out_path;
    std::string tau = "3/10";
    std::string format = "table";
    long long max_m = 50, max_multiplier = 1000000;
    long long max_q = 50, max_sum = 100, max_p = -1;
    bool strong = false, reversible = false;
    int d = 2, h = 1;

    auto add_model = [&](CLI::App* cmd) {
        cmd->add_option("--model", model_path, "model document (JSON)")->required();
    };
    auto add_emit = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "csv"}));
        cmd->add_option("--out", out_path, "write the report to a file");
    };
    auto add_quasi_flags = [&](CLI::App* cmd) {
        cmd->add_option("--epsilon", epsilon,
                        "closeness window NUM/DEN in (0, 1/4); default: certified "
                        "from the model");
        cmd->add_option("--tau", tau, "mean-gap tolerance NUM/DEN");
        cmd->add_flag("--strong", strong, "search multiples of lcm(1..m0)*n");
        cmd->add_option("--max-multiplier", max_multiplier,
                        "scan limit as a multiple of the base period");
    };

    CLI::App* validate = app.add_subcommand(
        "validate", "check a model document against the block-decomposition rules");
    add_model(validate);

    CLI::App* iterate = app.add_subcommand(
        "iterate", "print index and nullity for iterates m = 1..max-m");
    add_model(iterate);
    iterate->add_option("--max-m", max_m, "largest iterate");
    add_emit(iterate);

    CLI::App* period = app.add_subcommand(
        "period", "print the analytical period n and the escape iterate m0");
    add_model(period);
    add_emit(period);

    CLI::App* quasi = app.add_subcommand(
        "quasi", "find a certified quasi-period T with its offset data");
    add_model(quasi);
    add_quasi_flags(quasi);
    add_emit(quasi);

    CLI::App* verify = app.add_subcommand(
        "verify", "find a quasi-period and run every verification suite");
    add_model(verify);
    add_quasi_flags(verify);
    verify->add_option("--max-m", max_m, "iteration horizon for the parity, "
                                         "monotonicity, and escape checks");
    add_emit(verify);

    CLI::App* betti = app.add_subcommand(
        "betti", "print loop-space Betti numbers b_q and their sum checks");
    betti->add_option("--d", d, "manifold dimension parameter")->required();
    betti->add_option("--h", h, "class parameter (odd d requires h=1)");
    betti->add_option("--max-q", max_q, "largest degree");
    add_emit(betti);

    CLI::App* scan = app.add_subcommand(
        "identity-scan", "sweep (R,p) resonance-identity instances expecting "
                         "no feasible one");
    scan->add_option("--d", d, "manifold dimension parameter")->required();
    scan->add_option("--h", h, "class parameter (odd d requires h=1)");
    scan->add_option("--max-sum", max_sum, "largest R+p (even)");
    scan->add_option("--max-p", max_p, "largest p; default 3(dh-1)");
    scan->add_flag("--reversible", reversible,
                   "require kappa to be even (reversible systems)");
    add_emit(scan);

    CLI::App* ledger = app.add_subcommand(
        "ledger", "evaluate the mean-index ledger over critical-module data");
    add_model(ledger);
    ledger->add_option("--kvectors", kvectors_path,
                       "critical-module document (JSON)")->required();
    ledger->add_option("--d", d, "manifold dimension parameter")->required();
    ledger->add_option("--h", h, "class parameter (odd d requires h=1)");
    add_emit(ledger);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Sink sink(out_path, out);
        if (app.got_subcommand(validate)) return cmd_validate(model_path, out, err);
        if (app.got_subcommand(iterate)) return cmd_iterate(model_path, max_m, format, sink);
        if (app.got_subcommand(period)) return cmd_period(model_path, format, sink);
        if (app.got_subcommand(quasi))
            return cmd_quasi(model_path,
                             make_config(epsilon, tau, strong, max_multiplier),
                             format, sink);
        if (app.got_subcommand(verify))
            return cmd_verify(model_path,
                              make_config(epsilon, tau, strong, max_multiplier),
                              max_m, format, sink);
        if (app.got_subcommand(betti)) return cmd_betti(d, h, max_q, format, sink);
        if (app.got_subcommand(scan))
            return cmd_identity_scan(d, h, max_sum, max_p, reversible, format, sink);
        if (app.got_subcommand(ledger))
            return cmd_ledger(model_path, kvectors_path, d, h, format, sink);
        err << "error: no subcommand selected\n";
        return kUsage;
    } catch (const QuasiPeriodNotFound& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace geoiter::cli
