#include "ecalg/api.hpp"

#include "ecalg/classifier.hpp"
#include "ecalg/predicates.hpp"
#include "ecalg/text.hpp"

namespace ecalg::api {

namespace {

template <ExactField K>
StructureMatrix<K> read_table(const K& k, std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && text[i] == ' ') ++i;
  if (i < text.size() && text[i] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw FieldError(FieldErrc::malformed, std::string("table JSON: ") + e.what());
    }
    return table_from_json(k, j);
  }
  return parse_table(k, text);
}

template <ExactField K>
BasisChange<K> read_matrix(const K& k, std::string_view text) {
  const auto v = parse_elements(k, text, 4, "matrix");
  return BasisChange<K>(k, v[0], v[1], v[2], v[3]);
}

template <class Fn>
auto dispatch(const FieldSpec& spec, Fn&& fn) {
  return std::visit(fn, make_field(spec));
}

template <ExactField K>
nlohmann::json optional_element(const K& k, const std::optional<AlgebraElement<K>>& u) {
  return u ? element_to_json(k, *u) : nlohmann::json(nullptr);
}

template <ExactField K>
nlohmann::json classification_json(const StructureMatrix<K>& A) {
  const K& k = A.field();
  const auto c = classify_algebra(A);
  return {{"form", c.form.to_string(k)},
          {"normalized", format_sform(c.normalized)},
          {"witness", basis_change_to_json(c.to_canonical)},
          {"canonical_table", format_table(ecalg::canonical_table(c.form, k))},
          {"profile", profile_to_json(property_profile(c.form, k))}};
}

}  // namespace

nlohmann::json check(const FieldSpec& spec, std::string_view table, const CheckOptions& opts) {
  if (opts.bruteforce && !spec.enumerable()) {
    throw FieldError(FieldErrc::not_enumerable, "brute-force checks need a finite field");
  }
  return dispatch(spec, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    const auto A = read_table(k, table);
    nlohmann::json j;
    j["field"] = spec.to_string();
    j["table"] = format_table(A);
    j["ec_criterion"] = is_ec_criterion(A);
    j["ec_bruteforce"] = nullptr;
    const bool enumerate = spec.enumerable() && spec.order() <= opts.max_order;
    if constexpr (EnumerableField<K>) {
      if (enumerate) j["ec_bruteforce"] = is_ec_bruteforce(A);
    }
    j["rank"] = algebra_rank(A);
    const auto witness = straightening_witness(A);
    j["straight"] = witness.has_value();
    j["straightening_witness"] = optional_element(k, witness);
    j["commutative"] = is_commutative(A);
    j["anti_commutative"] = is_anti_commutative(A);
    j["associative"] = is_associative(A);
    j["unit"] = optional_element(k, find_unit(A));
    if constexpr (EnumerableField<K>) {
      if (opts.bruteforce) {
        if (!enumerate) throw verify::CapExceeded("brute-force checks are capped at order " + std::to_string(opts.max_order));
        j["anti_commutative_bruteforce"] = is_anti_commutative_bruteforce(A);
        j["associative_bruteforce"] = is_associative_bruteforce(A);
        j["unit_bruteforce"] = optional_element(k, find_unit_bruteforce(A));
      }
    }
    try {
      j["classification"] = classification_json(A);
    } catch (const GateError& e) {
      j["classification"] = {{"gate", gate_name(e.gate())}};
    }
    return j;
  });
}

nlohmann::json classify(const FieldSpec& spec, std::string_view table) {
  return dispatch(spec, [&](const auto& k) {
    auto j = classification_json(read_table(k, table));
    j["field"] = spec.to_string();
    return j;
  });
}

nlohmann::json isomorphism(const FieldSpec& spec, std::string_view a, std::string_view b) {
  if (!spec.enumerable()) throw FieldError(FieldErrc::not_enumerable, "isomorphism search needs a finite field");
  const FiniteField k(spec);
  const auto A = read_table(k, a);
  const auto B = read_table(k, b);
  const auto X = bruteforce_isomorphic(A, B);
  return {{"field", spec.to_string()},
          {"a", format_table(A)},
          {"b", format_table(B)},
          {"isomorphic", X.has_value()},
          {"witness", X ? basis_change_to_json(*X) : nlohmann::json(nullptr)}};
}

nlohmann::json canonical_table(const FieldSpec& spec, std::string_view form) {
  return dispatch(spec, [&](const auto& k) {
    const auto f = parse_canonical_form(k, form);
    const auto T = ecalg::canonical_table(f, k);
    return nlohmann::json{{"field", spec.to_string()},
                          {"form", f.to_string(k)},
                          {"table", format_table(T)},
                          {"rows", table_to_json(T)}};
  });
}

nlohmann::json transform(const FieldSpec& spec, std::string_view table, std::string_view matrix) {
  return dispatch(spec, [&](const auto& k) {
    const auto A = read_table(k, table);
    const auto X = read_matrix(k, matrix);
    return nlohmann::json{{"field", spec.to_string()}, {"table", format_table(ecalg::transform(A, X))}};
  });
}

nlohmann::json tilde(const FieldSpec& spec, std::string_view matrix) {
  return dispatch(spec, [&](const auto& k) {
    const auto T = ecalg::tilde(read_matrix(k, matrix));
    auto rows = nlohmann::json::array();
    for (const auto& row : T) {
      auto r = nlohmann::json::array();
      for (const auto& v : row) r.push_back(k.format(v));
      rows.push_back(r);
    }
    return nlohmann::json{{"field", spec.to_string()}, {"tilde", rows}, {"det", k.format(determinant(k, T))}};
  });
}

nlohmann::json normalize(const FieldSpec& spec, std::string_view table) {
  return dispatch(spec, [&](const auto& k) {
    const auto n = normalize_straight(read_table(k, table));
    return nlohmann::json{{"field", spec.to_string()},
                          {"sform", format_sform(n.form)},
                          {"basis_change", basis_change_to_json(n.basis_change)},
                          {"witness", element_to_json(k, n.witness)}};
  });
}

}  // namespace ecalg::api
