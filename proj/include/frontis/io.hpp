#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "frontis/hilbert.hpp"
#include "frontis/poset.hpp"

namespace frontis {

/// Algebra document: elements (count or label list), imp, one, optional
/// zero / meet / tau / name.  Unknown fields are rejected.
struct algebra_document {
  hilbert_algebra alg;
  std::optional<unary_map> tau;
};

algebra_document parse_algebra_document(const nlohmann::json& j);
nlohmann::ordered_json emit_algebra_document(const algebra_document& doc);

/// Poset document: elements plus exactly one of leq pairs or cover pairs.
finite_poset parse_poset_document(const nlohmann::json& j);
nlohmann::ordered_json emit_poset_document(const finite_poset& p,
                                   const std::vector<std::string>* labels = nullptr);

algebra_document load_algebra_file(const std::string& path);
finite_poset load_poset_file(const std::string& path);

nlohmann::ordered_json report_to_json(const report& r);

}  // namespace frontis
