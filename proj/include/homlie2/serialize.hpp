#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "homlie2/cohomology.hpp"
#include "homlie2/deform.hpp"
#include "homlie2/restricted.hpp"

namespace homlie2 {

using json = nlohmann::ordered_json;

// All readers throw Error(ErrorKind::Format) on malformed input.

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j);

// Sparse [{"k", "c"}] list.
json vector_to_json(const Vector& v);
Vector vector_from_json(const Field& f, std::size_t n, const json& j);

json algebra_to_json(const HomLieSuper2& g);
HomLieSuper2 algebra_from_json(const json& j);

// "algebra" may be an inline payload or a path, resolved against `base_dir`.
json rep_to_json(const Representation& r);
Representation rep_from_json(const json& j, const std::string& base_dir = ".");

json restricted_to_json(const RestrictedHomLie2& r);
RestrictedHomLie2 restricted_from_json(const json& j);

// Arguments are written as basis indices; readers also accept labels.
json cochain_to_json(const CochainPair& c);
CochainPair cochain_from_json(const HomLieSuper2& g, const Representation& r, const json& j);

json deformation_to_json(const TruncatedDeformation& d);
TruncatedDeformation deformation_from_json(const json& j, const std::string& base_dir = ".");

json tau_to_json(const EquivalenceMap& t);
EquivalenceMap tau_from_json(const Field& f, const json& j);

json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t v);

}  // namespace homlie2
