#pragma once

// Canonical forms of endo-commutative straight algebras of rank one:
//   Z = S(0,0,0,0,0,0)   table (f, 0; 0, 0)
//   N = S(0,0,0,0,0,1)   table (f, 0; f, 0)
//   L(l) = S(0,0,0,1,0,l) table (f, f; l f, 0)
//   U = S(0,1,0,1,0,1)   table (f, f; f, f)
// Tables are written (e^2, ef; fe, f^2).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecalg/algebra.hpp"
#include "ecalg/predicates.hpp"
#include "ecalg/straight_forms.hpp"

namespace ecalg {

enum class Family { Z, N, L, U };

template <ExactField K>
class CanonicalForm {
 public:
  static CanonicalForm z() { return CanonicalForm(Family::Z, std::nullopt); }
  static CanonicalForm n() { return CanonicalForm(Family::N, std::nullopt); }
  static CanonicalForm l(Value<K> lambda) { return CanonicalForm(Family::L, std::move(lambda)); }
  static CanonicalForm u() { return CanonicalForm(Family::U, std::nullopt); }

  Family family() const noexcept { return family_; }
  /// Present iff family() == Family::L.
  const std::optional<Value<K>>& lambda() const noexcept { return lambda_; }

  std::string to_string(const K& k) const {
    switch (family_) {
      case Family::Z: return "Z";
      case Family::N: return "N";
      case Family::L: return "L(" + k.format(*lambda_) + ")";
      case Family::U: return "U";
    }
    return {};
  }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  CanonicalForm(Family f, std::optional<Value<K>> lambda) : family_(f), lambda_(std::move(lambda)) {}

  Family family_;
  std::optional<Value<K>> lambda_;
};

template <ExactField K>
SForm<K> canonical_sform(const CanonicalForm<K>& form, const K& k) {
  switch (form.family()) {
    case Family::Z: return SForm<K>::from_ints(k, 0, 0, 0, 0, 0, 0);
    case Family::N: return SForm<K>::from_ints(k, 0, 0, 0, 0, 0, 1);
    case Family::L: return SForm<K>{k, k.zero(), k.zero(), k.zero(), k.one(), k.zero(), *form.lambda()};
    case Family::U: return SForm<K>::from_ints(k, 0, 1, 0, 1, 0, 1);
  }
  throw std::logic_error("unknown canonical family");
}

template <ExactField K>
StructureMatrix<K> canonical_table(const CanonicalForm<K>& form, const K& k) {
  return canonical_sform(form, k).matrix();
}

/// Every canonical form over a finite field: Z, N, L(l) for each l in order, U.
template <EnumerableField K>
std::vector<CanonicalForm<K>> all_canonical_forms(const K& k) {
  std::vector<CanonicalForm<K>> out{CanonicalForm<K>::z(), CanonicalForm<K>::n()};
  for (const auto& l : k.elements()) out.push_back(CanonicalForm<K>::l(l));
  out.push_back(CanonicalForm<K>::u());
  return out;
}

/// S(0, q, 0, b, 0, d) satisfying the rank-one membership equations.
template <ExactField K>
CanonicalForm<K> classify_rank1_sform(const SForm<K>& S) {
  const K& k = S.field;
  if (!S.is_rank_one_shape()) throw std::invalid_argument("S-form is not of rank-one shape (p, a, c must vanish)");
  if (!rank1_ec_membership(k, S.q, S.b, S.d)) throw std::invalid_argument("S-form is not endo-commutative");
  if (!k.is_zero(S.q)) return CanonicalForm<K>::u();
  if (!k.is_zero(S.b)) return CanonicalForm<K>::l(k.div(S.d, S.b));
  if (!k.is_zero(S.d)) return CanonicalForm<K>::n();
  return CanonicalForm<K>::z();
}

/// diag(t, t^2) taking a classified rank-one S-form to its canonical table.
template <ExactField K>
BasisChange<K> rank1_canonical_witness(const SForm<K>& S) {
  const K& k = S.field;
  Value<K> t = k.one();
  if (!k.is_zero(S.q) || !k.is_zero(S.b)) {
    t = S.b;
  } else if (!k.is_zero(S.d)) {
    t = S.d;
  }
  return BasisChange<K>(k, t, k.zero(), k.zero(), k.mul(t, t));
}

enum class Gate { not_endo_commutative, not_rank_one, not_straight };

inline const char* gate_name(Gate g) {
  switch (g) {
    case Gate::not_endo_commutative: return "NotEndoCommutative";
    case Gate::not_rank_one: return "NotRankOne";
    case Gate::not_straight: return "NotStraight";
  }
  return "?";
}

class GateError : public std::runtime_error {
 public:
  explicit GateError(Gate g) : std::runtime_error(gate_name(g)), gate_(g) {}
  Gate gate() const noexcept { return gate_; }

 private:
  Gate gate_;
};

template <ExactField K>
struct Classification {
  CanonicalForm<K> form;
  SForm<K> normalized;
  BasisChange<K> to_canonical;  // transform(A, to_canonical) == canonical_table(form)
};

/// Gates are checked in the order endo-commutative, rank one, straight.
template <ExactField K>
Classification<K> classify_algebra(const StructureMatrix<K>& A) {
  if (!is_ec_criterion(A)) throw GateError(Gate::not_endo_commutative);
  if (algebra_rank(A) != 1) throw GateError(Gate::not_rank_one);
  if (!is_straight(A)) throw GateError(Gate::not_straight);
  const auto norm = normalize_straight(A);
  // rank one with first row (0, 1) forces p = a = c = 0
  if (!norm.form.is_rank_one_shape()) throw std::logic_error("normalized rank-one algebra has p, a or c nonzero");
  auto form = classify_rank1_sform(norm.form);
  auto total = norm.basis_change * rank1_canonical_witness(norm.form);
  if (!(transform(A, total) == canonical_table(form, A.field()))) {
    throw std::logic_error("composed basis change does not reach the canonical table");
  }
  return {std::move(form), norm.form, std::move(total)};
}

struct PropertyProfile {
  bool unital = false;
  bool commutative = false;
  bool anti_commutative = false;
  bool associative = false;
  bool purely_ec = false;

  friend bool operator==(const PropertyProfile&, const PropertyProfile&) = default;
};

/// Predicates evaluated on the canonical table.
template <ExactField K>
PropertyProfile property_profile(const CanonicalForm<K>& form, const K& k) {
  const auto T = canonical_table(form, k);
  PropertyProfile p;
  p.unital = find_unit(T).has_value();
  p.commutative = is_commutative(T);
  p.anti_commutative = is_anti_commutative(T);
  p.associative = is_associative(T);
  p.purely_ec = !p.commutative && !p.anti_commutative && !p.associative;
  return p;
}

/// Closed-form profile. Anti-commutativity is only asserted for char != 2.
struct ExpectedProfile {
  bool unital = false;
  bool commutative = false;
  std::optional<bool> anti_commutative;
  bool associative = false;
  bool purely_ec = false;

  bool matches(const PropertyProfile& p) const {
    return unital == p.unital && commutative == p.commutative && associative == p.associative &&
           purely_ec == p.purely_ec && (!anti_commutative || *anti_commutative == p.anti_commutative);
  }
};

template <ExactField K>
ExpectedProfile expected_profile(const CanonicalForm<K>& form, const K& k) {
  const bool l_one = form.family() == Family::L && *form.lambda() == k.one();
  ExpectedProfile e;
  e.unital = false;
  e.commutative = form.family() == Family::Z || form.family() == Family::U || l_one;
  if (k.spec().characteristic != 2) e.anti_commutative = false;
  e.associative = form.family() == Family::Z || form.family() == Family::U;
  e.purely_ec = form.family() == Family::N || (form.family() == Family::L && !l_one);
  return e;
}

/// First X in GL2(K) order (identity first) with transform(A, X) == B.
template <EnumerableField K>
std::optional<BasisChange<K>> bruteforce_isomorphic(const StructureMatrix<K>& A, const StructureMatrix<K>& B,
                                                    const std::vector<BasisChange<K>>& group) {
  if (!(A.field() == B.field())) throw FieldError(FieldErrc::mixed_fields, "algebras over different fields");
  for (const auto& X : group) {
    if (transform(A, X) == B) return X;
  }
  return std::nullopt;
}

template <EnumerableField K>
std::optional<BasisChange<K>> bruteforce_isomorphic(const StructureMatrix<K>& A, const StructureMatrix<K>& B) {
  return bruteforce_isomorphic(A, B, general_linear_group(A.field()));
}

}  // namespace ecalg
