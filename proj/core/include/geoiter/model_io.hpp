#pragma once

#include "geoiter/identity.hpp"
#include "geoiter/normal_form.hpp"

#include <string>
#include <vector>

namespace geoiter {

// Model documents are JSON objects with fields
//   dim, index, p_minus, p_zero, p_plus, q_minus, q_zero, q_plus,
//   rotations, nontrivial_pairs, trivial_pairs, h_plus, h_minus
// where each angle entry is either {"kind":"rational","num":N,"den":N}
// (the angle over a full turn equals num/den) or
// {"kind":"quadratic","a":N,"b":N,"c":N,"D":N} (it equals (a+b*sqrt(D))/c).
// Omitted counts default to 0 and omitted lists to empty.
GeodesicModel parse_model_json(const std::string& text);
GeodesicModel parse_model_file(const std::string& path);

std::string write_model_json(const GeodesicModel& model);
void write_model_file(const GeodesicModel& model, const std::string& path);

// K-vector documents are JSON objects {"mu": N, "kvectors": [...]} where each
// element is {"m": N, "entries": [N...], "sign": +1|-1} keyed by iterate m.
// Optional "index"/"nullity" fields override the engine-computed attachments
// (validation then cross-checks them against the iteration formulas).
struct KVectorDocument {
    Int mu = 0;
    std::vector<KVector> kvectors; // position t holds the iterate m = t+1
};

KVectorDocument parse_kvector_json(const std::string& text, const GeodesicModel& model);
KVectorDocument parse_kvector_file(const std::string& path, const GeodesicModel& model);

} // namespace geoiter
