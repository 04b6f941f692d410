#pragma once

// String-in, JSON-out entry points shared by the command-line tool and the
// Python bindings. Field specs and tables use the text forms in text.hpp;
// a table given as a JSON object is accepted wherever a table is expected.

#include <cstdint>
#include <string_view>

#include <json.hpp>

#include "ecalg/field.hpp"
#include "ecalg/verify.hpp"

namespace ecalg::api {

struct CheckOptions {
  /// Also run the pointwise anti-commutativity, associativity and unit scans.
  /// Rejected on infinite fields.
  bool bruteforce = false;
  /// Enumeration-based checks are skipped (reported as null) above this order.
  std::uint64_t max_order = verify::kDefaultMaxOrder;
};

nlohmann::json check(const FieldSpec& field, std::string_view table, const CheckOptions& opts = {});

/// Throws GateError when a classification gate fails.
nlohmann::json classify(const FieldSpec& field, std::string_view table);

/// Throws FieldError(not_enumerable) over Q.
nlohmann::json isomorphism(const FieldSpec& field, std::string_view a, std::string_view b);

nlohmann::json canonical_table(const FieldSpec& field, std::string_view form);

/// `matrix` is "x,y,z,w".
nlohmann::json transform(const FieldSpec& field, std::string_view table, std::string_view matrix);
nlohmann::json tilde(const FieldSpec& field, std::string_view matrix);
nlohmann::json normalize(const FieldSpec& field, std::string_view table);

}  // namespace ecalg::api
