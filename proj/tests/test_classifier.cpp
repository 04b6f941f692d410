#include <doctest.h>

#include "ecalg/classifier.hpp"
#include "ecalg/text.hpp"
#include "support.hpp"

using namespace ecalg;
using namespace testing;

namespace {

using Form = CanonicalForm<FiniteField>;
using FS = SForm<FiniteField>;

// EC rank-one straight tables, found by the test-side scans only.
std::vector<FAlg> classifiable(const FiniteField& k) {
  std::vector<FAlg> out;
  for (const auto& A : all_tables(k))
    if (subset_rank(k, A.as_matrix()) == 1 && naive_straight(A) && naive_ec(A)) out.push_back(A);
  return out;
}

Gate gate_of(const FAlg& A) {
  try {
    classify_algebra(A);
  } catch (const GateError& e) {
    return e.gate();
  }
  FAIL("no gate failed");
  return Gate::not_straight;
}

}  // namespace

TEST_CASE("canonical tables") {
  const auto k = field("F5");
  CHECK(canonical_table(Form::z(), k) == table(k, {0, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(canonical_table(Form::n(), k) == table(k, {0, 1, 0, 0, 0, 0, 0, 1}));
  CHECK(canonical_table(Form::l(k.from_int(3)), k) == table(k, {0, 1, 0, 0, 0, 1, 0, 3}));
  CHECK(canonical_table(Form::u(), k) == table(k, {0, 1, 0, 1, 0, 1, 0, 1}));
  const auto all = all_canonical_forms(k);
  CHECK(all.size() == 8);
  CHECK(all.front() == Form::z());
  CHECK(all.back() == Form::u());
  CHECK(Form::l(k.from_int(3)).to_string(k) == "L(3)");
  CHECK(parse_canonical_form(k, "L(3)") == Form::l(k.from_int(3)));
  CHECK(parse_canonical_form(k, "U") == Form::u());
  CHECK_THROWS(parse_canonical_form(k, "L()"));
  CHECK_THROWS(parse_canonical_form(k, "W"));
  const auto f4 = field("F4:x^2+x+1");
  CHECK(Form::l(f4.parse("x+1")).to_string(f4) == "L(x+1)");
}

TEST_CASE("classifying rank-one S-forms") {
  const auto k3 = field("F3");
  CHECK(classify_rank1_sform(FS::from_ints(k3, 0, 0, 0, 0, 0, 0)) == Form::z());
  CHECK(classify_rank1_sform(FS::from_ints(k3, 0, 0, 0, 2, 0, 1)) == Form::l(k3.from_int(2)));
  CHECK(bruteforce_isomorphic(FS::from_ints(k3, 0, 0, 0, 2, 0, 1).matrix(), canonical_table(Form::l(k3.from_int(2)), k3))
            .has_value());
  CHECK(classify_rank1_sform(FS::from_ints(k3, 0, 0, 0, 0, 0, 2)) == Form::n());
  const auto k5 = field("F5");
  CHECK(classify_rank1_sform(FS::from_ints(k5, 0, 4, 0, 2, 0, 2)) == Form::u());
  CHECK_THROWS_AS(classify_rank1_sform(FS::from_ints(k5, 1, 0, 0, 0, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(classify_rank1_sform(FS::from_ints(k5, 0, 1, 0, 1, 0, 2)), std::invalid_argument);
}

TEST_CASE("classification pipeline") {
  const auto k3 = field("F3");
  const auto c = classify_algebra(table(k3, {0, 0, 1, 0, 0, 0, 0, 0}));
  CHECK(c.form == Form::z());
  for (const std::string spec : {"F2", "F3", "F5", "F7", "F4:x^2+x+1"}) {
    const auto k = field(spec);
    const auto A = table(k, {0, 1, 0, 1, 0, 1, 0, 1});
    const auto r = classify_algebra(A);
    CHECK(r.form == Form::u());
    CHECK(transform(A, r.to_canonical) == canonical_table(r.form, k));
  }
  const RationalField q;
  const auto rq = classify_algebra(QAlg::from_ints(q, {0, 3, 0, 0, 0, 6, 0, 2}));
  CHECK(rq.form == CanonicalForm<RationalField>::l(mpq_class(1, 3)));
}

TEST_CASE("gates fail in a fixed order") {
  const auto k = field("F3");
  // f^2 = e + f fails endo-commutativity before rank is looked at
  CHECK(gate_of(table(k, {0, 1, 1, 1, 0, 0, 0, 0})) == Gate::not_endo_commutative);
  // e^2 = f, f^2 = e is endo-commutative of rank two
  CHECK(gate_of(table(k, {0, 1, 1, 0, 0, 0, 0, 0})) == Gate::not_rank_one);
  CHECK(gate_of(FAlg::zero(k)) == Gate::not_rank_one);
  // x^2 = 0 for all x, ef = -fe = e: rank one, curled
  CHECK(gate_of(table(k, {0, 0, 0, 0, 1, 0, -1, 0})) == Gate::not_straight);
  CHECK(gate_of(table(field("F2"), {0, 0, 0, 0, 1, 0, 1, 0})) == Gate::not_straight);
  CHECK(std::string(gate_name(Gate::not_straight)) == "NotStraight");
}

TEST_CASE("property profiles match the closed forms on every field up to order 9") {
  for (const std::string spec : {"F2", "F3", "F4:x^2+x+1", "F5", "F7", "F8:x^3+x+1", "F9:x^2+1"}) {
    CAPTURE(spec);
    const auto k = field(spec);
    for (const auto& f : all_canonical_forms(k)) {
      CAPTURE(f.to_string(k));
      const auto p = property_profile(f, k);
      CHECK(expected_profile(f, k).matches(p));
      CHECK_FALSE(p.unital);
      const auto T = canonical_table(f, k);
      CHECK(p.associative == is_associative_bruteforce(T));
      CHECK(p.anti_commutative == is_anti_commutative_bruteforce(T));
      CHECK(find_unit_bruteforce(T) == std::nullopt);
      if (k.characteristic() != 2) CHECK_FALSE(p.anti_commutative);
    }
  }
  const auto k5 = field("F5");
  const auto u = property_profile(Form::u(), k5);
  CHECK((u.commutative && u.associative && !u.unital && !u.purely_ec));
  CHECK(property_profile(Form::n(), k5).purely_ec);
  const auto l1 = property_profile(Form::l(k5.one()), k5);
  CHECK((l1.commutative && !l1.associative));
}

TEST_CASE("brute-force isomorphism examples") {
  const auto k3 = field("F3");
  const auto A = table(k3, {0, 1, 2, 0, 1, 1, 0, 2});
  CHECK(bruteforce_isomorphic(A, A) == std::optional<FX>(FX::identity(k3)));
  CHECK_FALSE(bruteforce_isomorphic(canonical_table(Form::z(), k3), canonical_table(Form::n(), k3)).has_value());
  const auto k5 = field("F5");
  const auto w = bruteforce_isomorphic(FS::from_ints(k5, 0, 4, 0, 2, 0, 2).matrix(), canonical_table(Form::u(), k5));
  REQUIRE(w.has_value());
  CHECK(transform(FS::from_ints(k5, 0, 4, 0, 2, 0, 2).matrix(), *w) == canonical_table(Form::u(), k5));
  CHECK_THROWS_AS(bruteforce_isomorphic(A, canonical_table(Form::z(), k5)), FieldError);
}

TEST_CASE("canonical forms are pairwise non-isomorphic") {
  for (const std::string spec : {"F3", "F4:x^2+x+1", "F5", "F7"}) {
    CAPTURE(spec);
    const auto k = field(spec);
    const auto forms = all_canonical_forms(k);
    const auto group = general_linear_group(k);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < forms.size(); ++i)
      for (std::size_t j = 0; j < forms.size(); ++j) {
        const bool iso =
            bruteforce_isomorphic(canonical_table(forms[i], k), canonical_table(forms[j], k), group).has_value();
        if (iso != (i == j)) ++bad;
      }
    CHECK(bad == 0);
  }
}

TEST_CASE("classification is invariant under every basis change") {
  for (const std::string spec : {"F3", "F4:x^2+x+1"}) {
    CAPTURE(spec);
    const auto k = field(spec);
    const auto group = general_linear_group(k);
    std::size_t bad = 0, n = 0;
    for (const auto& A : classifiable(k)) {
      const auto c = classify_algebra(A).form;
      for (const auto& X : group) {
        ++n;
        if (!(classify_algebra(transform(A, X)).form == c)) ++bad;
      }
    }
    CHECK(n > 0);
    CHECK(bad == 0);
  }
}

TEST_CASE("classes coincide with GL2 orbits over F3") {
  const auto k = field("F3");
  const auto algebras = classifiable(k);
  CHECK(algebras.size() == 120);
  const auto group = general_linear_group(k);
  const auto orbs = orbits(algebras, group, table_key);
  CHECK(orbs.size() == 6);
  // equal class iff isomorphic, over all ordered pairs
  std::map<std::string, std::string> cls;
  for (const auto& A : algebras) cls[table_key(A)] = classify_algebra(A).form.to_string(k);
  std::size_t bad = 0;
  for (const auto& orbit : orbs) {
    std::set<std::string> labels;
    for (const auto& key : orbit) labels.insert(cls.at(key));
    if (labels.size() != 1) ++bad;
  }
  std::set<std::string> all_labels;
  for (const auto& [key, label] : cls) all_labels.insert(label);
  CHECK(all_labels == std::set<std::string>{"Z", "N", "L(0)", "L(1)", "L(2)", "U"});
  CHECK(bad == 0);
  std::size_t pair_bad = 0;
  for (std::size_t i = 0; i < algebras.size(); i += 7)
    for (std::size_t j = 0; j < algebras.size(); ++j) {
      const bool same = cls.at(table_key(algebras[i])) == cls.at(table_key(algebras[j]));
      if (same != bruteforce_isomorphic(algebras[i], algebras[j], group).has_value()) ++pair_bad;
    }
  CHECK(pair_bad == 0);
}

TEST_CASE("classification over F2 is exploratory but consistent") {
  const auto k = field("F2");
  const auto algebras = classifiable(k);
  const auto orbs = orbits(algebras, general_linear_group(k), table_key);
  std::set<std::string> labels;
  for (const auto& A : algebras) labels.insert(classify_algebra(A).form.to_string(k));
  CHECK(labels.size() == orbs.size());
  CHECK(labels.size() == 5);
}
