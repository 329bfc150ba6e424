#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "jacring/presentation.hpp"
#include "jacring/semigroup.hpp"

namespace jacring {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "jacring/1";

std::string sha256_hex(std::string_view data);

Json to_json(const SparsePoly& p);
SparsePoly poly_from_json(const Json& j, const ContextPtr& ctx);

/// {"schema", "variables": [{"name","weight1","weight2"?}], "homogeneity", "generators": [...]}
Json to_json(const IdealPresentation& pres);
IdealPresentation presentation_from_json(const Json& j);

/// SHA-256 of the compact canonical JSON form.
std::string presentation_hash(const IdealPresentation& pres);

Json to_json(const GammaModule& m);
Json to_json(const ShiftedModule& m, int p = 0, int q = 0);
Json to_json(const FlagTuple& d);

/// Canonical text: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace jacring
