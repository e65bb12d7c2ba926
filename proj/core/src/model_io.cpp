#include "geoiter/model_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "geoiter/index_engine.hpp"

namespace geoiter {

namespace {

using nlohmann::json;

long long integer_field(const json& j, const std::string& key) {
    const json& v = j.at(key);
    if (!v.is_number_integer())
        throw ParseError("field '" + key + "' must be an integer");
    return v.get<long long>();
}

long long required_integer(const json& j, const std::string& key) {
    if (!j.contains(key)) throw ParseError("missing required field '" + key + "'");
    return integer_field(j, key);
}

int count_field(const json& j, const std::string& key) {
    if (!j.contains(key)) return 0;
    return static_cast<int>(integer_field(j, key));
}

AngleRatio parse_angle(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError(where + ": each angle entry must be an object with a 'kind'");
    if (!j.at("kind").is_string())
        throw ParseError(where + ": 'kind' must be a string");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") {
        Int num(required_integer(j, "num"));
        Int den(required_integer(j, "den"));
        if (den == 0) throw ParseError(where + ": denominator must be nonzero");
        return AngleRatio::rational(num, den);
    }
    if (kind == "quadratic") {
        Int a(required_integer(j, "a"));
        Int b(required_integer(j, "b"));
        Int c(required_integer(j, "c"));
        Int D(required_integer(j, "D"));
        if (c == 0) throw ParseError(where + ": divisor c must be nonzero");
        return AngleRatio::quadratic(a, b, c, D);
    }
    throw ParseError(where + ": unknown angle kind '" + kind + "'");
}

std::vector<AngleRatio> angle_list(const json& j, const std::string& key) {
    std::vector<AngleRatio> out;
    if (!j.contains(key)) return out;
    const json& v = j.at(key);
    if (!v.is_array()) throw ParseError("field '" + key + "' must be an array");
    for (const json& e : v) out.push_back(parse_angle(e, key));
    return out;
}

json angle_to_json(const AngleRatio& x) {
    json j;
    if (x.is_rational()) {
        j["kind"] = "rational";
        j["num"] = numerator(x.rat()).convert_to<long long>();
        j["den"] = denominator(x.rat()).convert_to<long long>();
    } else {
        const QuadRatio& q = x.quad();
        j["kind"] = "quadratic";
        j["a"] = q.a.convert_to<long long>();
        j["b"] = q.b.convert_to<long long>();
        j["c"] = q.c.convert_to<long long>();
        j["D"] = q.D.convert_to<long long>();
    }
    return j;
}

json parse_document(const std::string& text, const char* what) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed ") + what + ": " + e.what());
    }
    if (!j.is_object())
        throw ParseError(std::string(what) + " must be a JSON object");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

GeodesicModel parse_model_json(const std::string& text) {
    json j = parse_document(text, "model document");

    GeodesicModel model;
    model.dim_M = static_cast<int>(required_integer(j, "dim"));
    model.initial_index = Int(required_integer(j, "index"));

    NormalFormData& nf = model.nf;
    nf.p_minus = count_field(j, "p_minus");
    nf.p_zero = count_field(j, "p_zero");
    nf.p_plus = count_field(j, "p_plus");
    nf.q_minus = count_field(j, "q_minus");
    nf.q_zero = count_field(j, "q_zero");
    nf.q_plus = count_field(j, "q_plus");
    nf.rotations = angle_list(j, "rotations");
    nf.nontrivial_pairs = angle_list(j, "nontrivial_pairs");
    nf.trivial_pairs = angle_list(j, "trivial_pairs");
    nf.h_plus = count_field(j, "h_plus");
    nf.h_minus = count_field(j, "h_minus");
    nf.half_dim = model.dim_M - 1;

    std::vector<std::string> report = validate_model(model);
    if (!report.empty()) {
        std::string msg = "invalid model";
        for (const std::string& item : report) msg += "\n  - " + item;
        throw ValidationError(msg);
    }
    return model;
}

GeodesicModel parse_model_file(const std::string& path) {
    return parse_model_json(read_file(path));
}

std::string write_model_json(const GeodesicModel& model) {
    const NormalFormData& nf = model.nf;
    json j;
    j["dim"] = model.dim_M;
    j["index"] = model.initial_index.convert_to<long long>();
    j["p_minus"] = nf.p_minus;
    j["p_zero"] = nf.p_zero;
    j["p_plus"] = nf.p_plus;
    j["q_minus"] = nf.q_minus;
    j["q_zero"] = nf.q_zero;
    j["q_plus"] = nf.q_plus;
    j["rotations"] = json::array();
    for (const AngleRatio& x : nf.rotations) j["rotations"].push_back(angle_to_json(x));
    j["nontrivial_pairs"] = json::array();
    for (const AngleRatio& x : nf.nontrivial_pairs)
        j["nontrivial_pairs"].push_back(angle_to_json(x));
    j["trivial_pairs"] = json::array();
    for (const AngleRatio& x : nf.trivial_pairs)
        j["trivial_pairs"].push_back(angle_to_json(x));
    j["h_plus"] = nf.h_plus;
    j["h_minus"] = nf.h_minus;
    return j.dump(2) + "\n";
}

void write_model_file(const GeodesicModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << write_model_json(model);
    if (!out) throw Error("write to '" + path + "' failed");
}

KVectorDocument parse_kvector_json(const std::string& text, const GeodesicModel& model) {
    json j = parse_document(text, "k-vector document");

    KVectorDocument doc;
    long long mu = required_integer(j, "mu");
    if (mu < 0) throw ParseError("'mu' must be a natural number");
    doc.mu = mu;

    if (!j.contains("kvectors") || !j.at("kvectors").is_array())
        throw ParseError("missing 'kvectors' array");

    Int n = analytical_period(model);
    long long nn = n.convert_to<long long>();
    doc.kvectors.assign(static_cast<size_t>(nn), KVector{});
    std::vector<bool> seen(static_cast<size_t>(nn), false);

    for (const json& e : j.at("kvectors")) {
        if (!e.is_object()) throw ParseError("each k-vector must be an object");
        long long m = required_integer(e, "m");
        if (m < 1 || m > nn)
            throw ParseError("k-vector iterate m out of range [1, n]");
        size_t t = static_cast<size_t>(m - 1);
        if (seen[t]) throw ParseError("duplicate k-vector for one iterate");
        seen[t] = true;

        KVector kv;
        if (!e.contains("entries") || !e.at("entries").is_array())
            throw ParseError("each k-vector needs an 'entries' array");
        for (const json& v : e.at("entries")) {
            if (!v.is_number_integer())
                throw ParseError("k-vector entries must be integers");
            kv.entries.emplace_back(v.get<long long>());
        }
        kv.sign = e.contains("sign") ? static_cast<int>(integer_field(e, "sign")) : 1;
        kv.attached_index = e.contains("index") ? Int(integer_field(e, "index"))
                                                : index_iterate(model, Int(m));
        kv.attached_nullity = e.contains("nullity")
                                  ? Int(integer_field(e, "nullity"))
                                  : nullity_iterate(model, Int(m));
        doc.kvectors[t] = std::move(kv);
    }

    for (long long m = 1; m <= nn; ++m)
        if (!seen[static_cast<size_t>(m - 1)])
            throw ParseError("missing k-vector for an iterate in [1, n]");
    return doc;
}

KVectorDocument parse_kvector_file(const std::string& path, const GeodesicModel& model) {
    return parse_kvector_json(read_file(path), model);
}

} // namespace geoiter
