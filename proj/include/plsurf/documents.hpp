#pragma once

#include "plsurf/decide.hpp"
#include "plsurf/plsurface.hpp"
#include "plsurf/tensor.hpp"
#include "plsurf/triangulate.hpp"

#include <json.hpp>

#include <string>

namespace plsurf {

using Json = nlohmann::json;

// Every document carries "dim", "format" and "version". Inputs may omit
// "version"; a different version is rejected.
inline constexpr int kDocumentVersion = 1;
inline constexpr const char* kKiteConvention = "free-monoid-left-to-right";

Json parse_json_text(const std::string& text);
// Compact, key-sorted serialization followed by a newline.
std::string dump_document(const Json& doc);

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json vector_json(const RatVector& v);
RatVector vector_from_json(const Json& j, std::size_t dim);

// Signature keys: 1-based letters, concatenated when dim <= 9 and
// comma-separated otherwise. The empty word is "".
std::string word_key(const Word& w, std::size_t dim);
Word parse_word_key(const std::string& key, std::size_t dim);

Json path_document(const PLWord& w);
PLWord parse_path_document(const Json& doc);

Json kite_word_document(const KiteWord& x);
KiteWord parse_kite_word_document(const Json& doc);

Json tensor_map(const TruncatedTensor& t);
TruncatedTensor parse_tensor_map(const Json& j, std::size_t dim, std::size_t level);
Json current_map(const PolyCurrent& g);
PolyCurrent parse_current_map(const Json& j, std::size_t dim, int max_weight);

Json signature_document(const TruncatedTensor& sig);
TruncatedTensor parse_signature_document(const Json& doc);

Json surface_signature_document(const SurfaceSignature& s);
SurfaceSignature parse_surface_signature_document(const Json& doc);

Json plsc_document(const PLSC& c, bool compatible);
PLSC parse_plsc_document(const Json& doc);

struct TriangulationInput {
    std::vector<Segment> edges;
    std::vector<Triangle> polygons;
};
TriangulationInput parse_triangulation_input(const Json& doc);

Json report_document(const DecisionReport& r, std::size_t dim);

} // namespace plsurf
