#pragma once

// Text and JSON forms of tables, S-forms and canonical forms.
//   table:      "a1,b1,a2,b2,a3,b3,a4,b4"
//   table JSON: {"e2": [a1, b1], "f2": [a2, b2], "ef": [a3, b3], "fe": [a4, b4]}
//   S-form:     "S(p,q,a,b,c,d)"
//   canonical:  "Z" | "N" | "L(<element>)" | "U"

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ecalg/classifier.hpp"
#include "ecalg/straight_forms.hpp"

namespace ecalg {

/// Comma-separated fields; throws FieldError(malformed) naming the position
/// when the count differs from `expected`.
std::vector<std::string> split_list(std::string_view text, std::size_t expected, std::string_view what);

template <ExactField K>
std::vector<Value<K>> parse_elements(const K& k, std::string_view text, std::size_t expected, std::string_view what) {
  const auto parts = split_list(text, expected, what);
  std::vector<Value<K>> out;
  out.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    try {
      out.push_back(k.parse(parts[i]));
    } catch (const FieldError& e) {
      throw FieldError(e.code(), std::string(what) + " entry " + std::to_string(i + 1) + " ('" + parts[i] +
                                     "'): " + e.what());
    }
  }
  return out;
}

template <ExactField K>
StructureMatrix<K> parse_table(const K& k, std::string_view text) {
  const auto v = parse_elements(k, text, 8, "table");
  return StructureMatrix<K>(k, {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
}

template <ExactField K>
std::string format_table(const StructureMatrix<K>& A) {
  std::string out;
  for (std::size_t i = 0; i < 8; ++i) {
    if (i) out += ',';
    out += A.field().format(A.entries()[i]);
  }
  return out;
}

template <ExactField K>
nlohmann::json table_to_json(const StructureMatrix<K>& A) {
  const K& k = A.field();
  auto row = [&](Row r) {
    const auto v = A.row(r);
    return nlohmann::json::array({k.format(v.alpha), k.format(v.beta)});
  };
  return {{"e2", row(Row::e2)}, {"f2", row(Row::f2)}, {"ef", row(Row::ef)}, {"fe", row(Row::fe)}};
}

template <ExactField K>
StructureMatrix<K> table_from_json(const K& k, const nlohmann::json& j) {
  auto row = [&](const char* name) -> AlgebraElement<K> {
    if (!j.is_object() || !j.contains(name) || !j.at(name).is_array() || j.at(name).size() != 2) {
      throw FieldError(FieldErrc::malformed, std::string("table JSON needs \"") + name + "\": [alpha, beta]");
    }
    auto entry = [&](const nlohmann::json& v) {
      return k.parse(v.is_string() ? v.get<std::string>() : v.dump());
    };
    return {entry(j.at(name)[0]), entry(j.at(name)[1])};
  };
  return StructureMatrix<K>::from_rows(k, row("e2"), row("f2"), row("ef"), row("fe"));
}

template <ExactField K>
std::string format_sform(const SForm<K>& S) {
  const K& k = S.field;
  return "S(" + k.format(S.p) + "," + k.format(S.q) + "," + k.format(S.a) + "," + k.format(S.b) + "," +
         k.format(S.c) + "," + k.format(S.d) + ")";
}

template <ExactField K>
SForm<K> parse_sform(const K& k, std::string_view raw) {
  std::string text;
  for (char c : raw) {
    if (c != ' ') text.push_back(c);
  }
  if (text.size() < 3 || text.rfind("S(", 0) != 0 || text.back() != ')') {
    throw FieldError(FieldErrc::malformed, "S-form must look like S(p,q,a,b,c,d)");
  }
  const auto v = parse_elements(k, std::string_view(text).substr(2, text.size() - 3), 6, "S-form");
  return SForm<K>{k, v[0], v[1], v[2], v[3], v[4], v[5]};
}

template <ExactField K>
CanonicalForm<K> parse_canonical_form(const K& k, std::string_view raw) {
  std::string text;
  for (char c : raw) {
    if (c != ' ') text.push_back(c);
  }
  if (text == "Z") return CanonicalForm<K>::z();
  if (text == "N") return CanonicalForm<K>::n();
  if (text == "U") return CanonicalForm<K>::u();
  if (text.size() > 3 && text.rfind("L(", 0) == 0 && text.back() == ')') {
    return CanonicalForm<K>::l(k.parse(std::string_view(text).substr(2, text.size() - 3)));
  }
  throw FieldError(FieldErrc::malformed, "canonical form must be Z, N, L(<element>) or U, got '" + text + "'");
}

template <ExactField K>
nlohmann::json element_to_json(const K& k, const AlgebraElement<K>& u) {
  return nlohmann::json::array({k.format(u.alpha), k.format(u.beta)});
}

template <ExactField K>
nlohmann::json basis_change_to_json(const BasisChange<K>& X) {
  const K& k = X.field();
  return nlohmann::json::array({nlohmann::json::array({k.format(X.x()), k.format(X.y())}),
                                nlohmann::json::array({k.format(X.z()), k.format(X.w())})});
}

inline nlohmann::json profile_to_json(const PropertyProfile& p) {
  return {{"unital", p.unital},
          {"commutative", p.commutative},
          {"anti_commutative", p.anti_commutative},
          {"associative", p.associative},
          {"purely_ec", p.purely_ec}};
}

}  // namespace ecalg
