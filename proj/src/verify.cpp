#include "ecalg/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "ecalg/predicates.hpp"
#include "ecalg/straight_forms.hpp"
#include "ecalg/text.hpp"

namespace ecalg::verify {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t table_index(const Algebra& A) {
  const std::uint64_t q = A.field().order();
  std::uint64_t idx = 0;
  for (const auto& v : A.entries()) idx = idx * q + v.code;
  return idx;
}

// Index of a canonical form in all_canonical_forms order.
std::size_t form_slot(const Form& f, const FiniteField& k) {
  switch (f.family()) {
    case Family::Z: return 0;
    case Family::N: return 1;
    case Family::L: return 2 + f.lambda()->code;
    case Family::U: return k.order() + 2;
  }
  return 0;
}

Tally merge(std::vector<Tally>& parts) {
  Tally out;
  for (auto& t : parts) {
    out.checked += t.checked;
    out.agreements += t.agreements;
    out.mismatches += t.mismatches;
    for (auto& c : t.counterexamples) {
      if (out.counterexamples.size() < kMaxCounterexamples) out.counterexamples.push_back(std::move(c));
    }
  }
  return out;
}

void record(Tally& t, bool agree, const std::function<std::string()>& describe) {
  ++t.checked;
  if (agree) {
    ++t.agreements;
  } else {
    ++t.mismatches;
    if (t.counterexamples.size() < kMaxCounterexamples) t.counterexamples.push_back(describe());
  }
}

SForm<FiniteField> sform_at(const FiniteField& k, std::uint64_t index) {
  const std::uint64_t q = k.order();
  std::array<Fq, 6> v;
  for (std::size_t j = 6; j-- > 0;) {
    v[j] = {static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return SForm<FiniteField>{k, v[0], v[1], v[2], v[3], v[4], v[5]};
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "theorem1") return Suite::theorem1;
  if (name == "corollary2") return Suite::corollary2;
  if (name == "ec-equivalence") return Suite::ec_equivalence;
  if (name == "reduction4") return Suite::reduction4;
  if (name == "all") return Suite::all;
  throw std::invalid_argument("unknown suite '" + std::string(name) +
                              "' (expected theorem1, corollary2, ec-equivalence, reduction4 or all)");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::theorem1: return "theorem1";
    case Suite::corollary2: return "corollary2";
    case Suite::ec_equivalence: return "ec-equivalence";
    case Suite::reduction4: return "reduction4";
    case Suite::all: return "all";
  }
  return {};
}

void check_cap(const FieldSpec& spec, std::uint64_t max_order) {
  if (!spec.enumerable()) throw FieldError(FieldErrc::not_enumerable, "field " + spec.to_string() + " is not finite");
  if (spec.order() > max_order) {
    throw CapExceeded("field " + spec.to_string() + " has order " + std::to_string(spec.order()) +
                      ", above the enumeration cap " + std::to_string(max_order));
  }
}

std::uint64_t table_count(const FiniteField& k) { return ipow(k.order(), 8); }

Algebra table_at(const FiniteField& k, std::uint64_t index) {
  const std::uint64_t q = k.order();
  Algebra::Entries e;
  for (std::size_t j = 8; j-- > 0;) {
    e[j] = {static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return Algebra(k, e);
}

std::vector<Algebra> sample_tables(const FiniteField& k, std::uint64_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t q = k.order();
  std::vector<Algebra> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Algebra::Entries e;
    for (auto& v : e) v = {static_cast<std::uint32_t>(rng() % q)};
    out.emplace_back(k, e);
  }
  return out;
}

void parallel_chunks(std::uint64_t n, unsigned jobs,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || n < 2 * jobs) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> workers;
  const std::uint64_t step = (n + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::uint64_t begin = std::min(n, j * step), end = std::min(n, begin + step);
    workers.emplace_back([&fn, j, begin, end] { fn(j, begin, end); });
  }
  for (auto& w : workers) w.join();
}

nlohmann::json Tally::to_json() const {
  return {{"checked", checked}, {"agreements", agreements}, {"mismatches", mismatches},
          {"counterexamples", counterexamples}};
}

// ---------------------------------------------------------------------------

namespace {

Tally ec_equivalence_over(const std::function<Algebra(std::uint64_t)>& get, std::uint64_t n, unsigned jobs) {
  std::vector<Tally> parts(std::max(1u, jobs));
  parallel_chunks(n, jobs, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    Tally& t = parts[chunk];
    for (std::uint64_t i = begin; i < end; ++i) {
      const Algebra A = get(i);
      const bool brute = is_ec_bruteforce(A);
      const bool crit = is_ec_criterion(A);
      record(t, brute == crit, [&] {
        return format_table(A) + " bruteforce=" + (brute ? "true" : "false") + " criterion=" + (crit ? "true" : "false");
      });
    }
  });
  return merge(parts);
}

}  // namespace

Tally ec_equivalence_exhaustive(const FiniteField& k, unsigned jobs) {
  return ec_equivalence_over([&](std::uint64_t i) { return table_at(k, i); }, table_count(k), jobs);
}

Tally ec_equivalence_sampled(const FiniteField& k, std::uint64_t samples, std::uint64_t seed, unsigned jobs) {
  const auto tables = sample_tables(k, samples, seed);
  return ec_equivalence_over([&](std::uint64_t i) { return tables[i]; }, tables.size(), jobs);
}

Tally reduction4_exhaustive(const FiniteField& k, unsigned jobs) {
  const std::uint64_t n = ipow(k.order(), 6);
  std::vector<Tally> parts(std::max(1u, jobs));
  parallel_chunks(n, jobs, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const auto S = sform_at(k, i);
      const bool general = is_ec_criterion(S.matrix());
      const bool reduced = ec_system4(S);
      record(parts[chunk], general == reduced, [&] { return format_sform(S); });
    }
  });
  return merge(parts);
}

Tally reduction4_sampled(const FiniteField& k, std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t n = ipow(k.order(), 6);
  Tally t;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto S = sform_at(k, rng() % n);
    record(t, is_ec_criterion(S.matrix()) == ec_system4(S), [&] { return format_sform(S); });
  }
  return t;
}

Tally rank1_membership_exhaustive(const FiniteField& k) {
  Tally t;
  for (const auto& q : k.elements())
    for (const auto& b : k.elements())
      for (const auto& d : k.elements()) {
        const SForm<FiniteField> S{k, k.zero(), q, k.zero(), b, k.zero(), d};
        record(t, rank1_ec_membership(k, q, b, d) == ec_system4(S), [&] { return format_sform(S); });
      }
  return t;
}

// ---------------------------------------------------------------------------

std::uint64_t rank_one_count(const FiniteField& k) {
  const std::uint64_t q = k.order();
  return (ipow(q, 4) - 1) * (q + 1);
}

Algebra rank_one_table_at(const FiniteField& k, std::uint64_t index) {
  const std::uint64_t q = k.order();
  const std::uint64_t v_index = index % (q + 1);
  std::uint64_t u_index = index / (q + 1) + 1;
  const Fq v0 = v_index < q ? k.one() : k.zero();
  const Fq v1 = v_index < q ? Fq{static_cast<std::uint32_t>(v_index)} : k.one();
  std::array<Fq, 4> u;
  for (std::size_t r = 4; r-- > 0;) {
    u[r] = {static_cast<std::uint32_t>(u_index % q)};
    u_index /= q;
  }
  Algebra::Entries e;
  for (std::size_t r = 0; r < 4; ++r) {
    e[2 * r] = k.mul(u[r], v0);
    e[2 * r + 1] = k.mul(u[r], v1);
  }
  return Algebra(k, e);
}

Census theorem1_census(const FiniteField& k, bool full_scan, unsigned jobs) {
  struct Partial {
    std::uint64_t scanned = 0, ec = 0, rank1 = 0, straight = 0;
    std::vector<Algebra> members;
    std::vector<std::size_t> slots;
  };
  const std::uint64_t n = full_scan ? table_count(k) : rank_one_count(k);
  std::vector<Partial> parts(std::max(1u, jobs));
  parallel_chunks(n, jobs, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    Partial& p = parts[chunk];
    for (std::uint64_t i = begin; i < end; ++i) {
      const Algebra A = full_scan ? table_at(k, i) : rank_one_table_at(k, i);
      ++p.scanned;
      if (!is_ec_criterion(A)) continue;
      ++p.ec;
      if (algebra_rank(A) != 1) continue;
      ++p.rank1;
      if (!is_straight(A)) continue;
      ++p.straight;
      const auto c = classify_algebra(A);
      p.slots.push_back(form_slot(c.form, k));
      p.members.push_back(A);
    }
  });

  Census census;
  census.mode = full_scan ? "full" : "rank-one";
  const auto forms = all_canonical_forms(k);
  std::vector<std::optional<ClassEntry>> slots(forms.size());
  for (auto& p : parts) {
    census.scanned += p.scanned;
    census.passed_ec += p.ec;
    census.passed_rank1 += p.rank1;
    census.passed_straight += p.straight;
    for (std::size_t i = 0; i < p.members.size(); ++i) {
      auto& slot = slots[p.slots[i]];
      if (!slot) slot = ClassEntry{forms[p.slots[i]], 0, p.members[i], 0, {}};
      ++slot->members;
      census.members.push_back(p.members[i]);
      census.member_class.push_back(p.slots[i]);
    }
  }
  // member_class holds slot ids; remap to positions in census.classes
  std::vector<std::size_t> position(forms.size(), 0);
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (!slots[s]) continue;
    position[s] = census.classes.size();
    census.classes.push_back(*slots[s]);
  }
  for (auto& c : census.member_class) c = position[c];
  return census;
}

// ---------------------------------------------------------------------------

SuiteResult run_theorem1(const FiniteField& k, const Options& opts) {
  SuiteResult r;
  r.name = "theorem1";
  const bool full_scan = opts.full || k.order() <= kFullScanOrder;
  auto census = theorem1_census(k, full_scan, opts.jobs);
  const auto group = general_linear_group(k);
  const std::uint64_t expected_classes = k.order() + 3;

  if (census.classes.size() != expected_classes) {
    r.fail("found " + std::to_string(census.classes.size()) + " classes, expected |K|+3 = " +
           std::to_string(expected_classes));
  }
  std::uint64_t member_sum = 0;
  for (const auto& c : census.classes) member_sum += c.members;
  if (member_sum != census.passed_straight || member_sum != census.members.size()) {
    r.fail("class member counts do not sum to the number of EC rank-one straight algebras");
  }

  // Each class must be exactly one GL2 orbit.
  std::vector<std::vector<std::uint64_t>> member_indices(census.classes.size());
  for (std::size_t i = 0; i < census.members.size(); ++i) {
    member_indices[census.member_class[i]].push_back(table_index(census.members[i]));
  }
  for (std::size_t c = 0; c < census.classes.size(); ++c) {
    auto& entry = census.classes[c];
    std::vector<std::uint64_t> orbit;
    orbit.reserve(group.size());
    for (const auto& X : group) orbit.push_back(table_index(transform(entry.representative, X)));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    entry.orbit_size = orbit.size();
    auto& members = member_indices[c];
    std::sort(members.begin(), members.end());
    if (orbit != members) {
      r.fail("class " + entry.form.to_string(k) + " is not a single GL2 orbit (orbit " +
             std::to_string(orbit.size()) + ", members " + std::to_string(members.size()) + ")");
    }
    entry.profile = property_profile(entry.form, k);
  }

  // Representatives are pairwise non-isomorphic.
  std::uint64_t rep_pairs = 0, rep_discrepancies = 0;
  for (std::size_t i = 0; i < census.classes.size(); ++i) {
    for (std::size_t j = 0; j < census.classes.size(); ++j) {
      ++rep_pairs;
      const bool iso =
          bruteforce_isomorphic(census.classes[i].representative, census.classes[j].representative, group).has_value();
      if (iso != (i == j)) {
        ++rep_discrepancies;
        r.fail("representatives of " + census.classes[i].form.to_string(k) + " and " +
               census.classes[j].form.to_string(k) + (iso ? " are isomorphic" : " are not isomorphic"));
      }
    }
  }

  // Random member pairs: classifier equality vs GL2 search. Even draws pick
  // the partner from the same class so both outcomes are exercised.
  std::uint64_t pair_checks = 0, pair_discrepancies = 0, same_class_pairs = 0;
  if (!census.members.empty()) {
    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::uint64_t s = 0; s < opts.pair_samples; ++s) {
      const std::size_t i = rng() % census.members.size();
      std::size_t j = rng() % census.members.size();
      if (s % 2 == 0) {
        const auto& same = member_indices[census.member_class[i]];
        const std::uint64_t target = same[rng() % same.size()];
        j = static_cast<std::size_t>(std::find_if(census.members.begin(), census.members.end(),
                                                  [&](const Algebra& A) { return table_index(A) == target; }) -
                                     census.members.begin());
      }
      const bool same_class = census.member_class[i] == census.member_class[j];
      same_class_pairs += same_class;
      const bool iso = bruteforce_isomorphic(census.members[i], census.members[j], group).has_value();
      ++pair_checks;
      if (iso != same_class) {
        ++pair_discrepancies;
        r.fail("members " + format_table(census.members[i]) + " and " + format_table(census.members[j]) +
               ": classifier says " + (same_class ? "same" : "different") + ", GL2 search says " +
               (iso ? "isomorphic" : "not isomorphic"));
      }
    }
  }

  auto classes = nlohmann::json::array();
  for (const auto& c : census.classes) {
    classes.push_back({{"form", c.form.to_string(k)},
                       {"members", c.members},
                       {"orbit_size", c.orbit_size},
                       {"representative", format_table(c.representative)},
                       {"canonical_table", format_table(canonical_table(c.form, k))},
                       {"profile", profile_to_json(c.profile)}});
  }
  r.details = {{"mode", census.mode},
               {"scanned", census.scanned},
               {"gates", {{"ec", census.passed_ec}, {"rank1", census.passed_rank1}, {"straight", census.passed_straight}}},
               {"expected_classes", expected_classes},
               {"class_count", census.classes.size()},
               {"classes", classes},
               {"oracle",
                {{"representative_pairs", rep_pairs},
                 {"representative_discrepancies", rep_discrepancies},
                 {"member_pairs", pair_checks},
                 {"member_pairs_same_class", same_class_pairs},
                 {"member_discrepancies", pair_discrepancies}}}};
  return r;
}

SuiteResult run_corollary2(const FiniteField& k, const Options&) {
  SuiteResult r;
  r.name = "corollary2";
  auto forms = nlohmann::json::array();
  const bool char_two = k.characteristic() == 2;
  for (const auto& form : all_canonical_forms(k)) {
    const auto T = canonical_table(form, k);
    const auto name = form.to_string(k);
    const auto profile = property_profile(form, k);
    const auto expected = expected_profile(form, k);
    if (!expected.matches(profile)) r.fail(name + ": profile differs from the closed form");
    if (!is_ec_criterion(T) || !is_ec_bruteforce(T)) r.fail(name + ": canonical table is not endo-commutative");
    if (algebra_rank(T) != 1) r.fail(name + ": canonical table is not rank one");
    if (!is_straight(T)) r.fail(name + ": canonical table is curled");
    if (find_unit_bruteforce(T).has_value()) r.fail(name + ": brute-force scan found a unit");
    if (is_anti_commutative_bruteforce(T) != profile.anti_commutative) {
      r.fail(name + ": anti-commutativity basis test disagrees with the pair scan");
    }
    if (is_associative_bruteforce(T) != profile.associative) {
      r.fail(name + ": associativity basis test disagrees with the triple scan");
    }
    forms.push_back({{"form", name}, {"profile", profile_to_json(profile)}});
  }
  r.details = {{"forms", forms}, {"anti_commutativity_claimed", !char_two}};
  if (char_two) {
    // Computed only; no closed form is asserted in characteristic 2.
    auto anti = nlohmann::json::array();
    for (const auto& form : all_canonical_forms(k)) {
      if (property_profile(form, k).anti_commutative) anti.push_back(form.to_string(k));
    }
    r.details["char2_anti_commutative_forms"] = anti;
  }
  return r;
}

SuiteResult run_ec_equivalence(const FiniteField& k, const Options& opts) {
  SuiteResult r;
  r.name = "ec-equivalence";
  const bool exhaustive = opts.full || k.order() <= kFullScanOrder;
  const Tally t = exhaustive ? ec_equivalence_exhaustive(k, opts.jobs)
                             : ec_equivalence_sampled(k, opts.samples, opts.seed, opts.jobs);
  if (t.mismatches != 0) {
    r.fail(std::to_string(t.mismatches) + " tables where brute force and criterion disagree");
  }
  r.details = t.to_json();
  r.details["mode"] = exhaustive ? "exhaustive" : "sampled";
  return r;
}

SuiteResult run_reduction4(const FiniteField& k, const Options& opts) {
  SuiteResult r;
  r.name = "reduction4";
  const Tally t = reduction4_exhaustive(k, opts.jobs);
  const Tally m = rank1_membership_exhaustive(k);
  if (t.mismatches != 0) r.fail(std::to_string(t.mismatches) + " tuples where the general and reduced systems disagree");
  if (m.mismatches != 0) r.fail(std::to_string(m.mismatches) + " triples where rank-one membership disagrees");
  r.details = {{"mode", "exhaustive"}, {"tuples", t.to_json()}, {"rank1_membership", m.to_json()}};
  return r;
}

// ---------------------------------------------------------------------------

bool ClassificationReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const SuiteResult& s) { return s.passed; });
}

nlohmann::json ClassificationReport::to_json(bool timing) const {
  auto suites = nlohmann::json::object();
  for (const auto& s : results) {
    suites[s.name] = {{"passed", s.passed}, {"failures", s.failures}, {"details", s.details}};
  }
  nlohmann::json j = {{"schema", kReportSchema},
                      {"field", field.to_string()},
                      {"suite", suite_name(suite)},
                      {"options",
                       {{"full", options.full},
                        {"seed", options.seed},
                        {"samples", options.samples},
                        {"pair_samples", options.pair_samples}}},
                      {"passed", passed()},
                      {"suites", suites}};
  if (timing) j["duration_ms"] = duration.count();
  return j;
}

std::string ClassificationReport::to_text(bool timing) const {
  std::ostringstream os;
  os << "field " << field.to_string() << ", suite " << suite_name(suite) << "\n";
  for (const auto& s : results) {
    os << (s.passed ? "PASS " : "FAIL ") << s.name;
    if (s.name == "theorem1") {
      os << ": " << s.details["class_count"].get<std::uint64_t>() << " classes {";
      bool first = true;
      for (const auto& c : s.details["classes"]) {
        os << (first ? "" : ", ") << c["form"].get<std::string>();
        first = false;
      }
      os << "} (" << s.details["mode"].get<std::string>() << " scan, "
         << s.details["gates"]["straight"].get<std::uint64_t>() << " algebras)";
    } else if (s.name == "ec-equivalence") {
      os << ": " << s.details["agreements"].get<std::uint64_t>() << "/" << s.details["checked"].get<std::uint64_t>()
         << " agree (" << s.details["mode"].get<std::string>() << ")";
    } else if (s.name == "reduction4") {
      os << ": " << s.details["tuples"]["agreements"].get<std::uint64_t>() << "/"
         << s.details["tuples"]["checked"].get<std::uint64_t>() << " tuples agree";
    } else if (s.name == "corollary2") {
      os << ": " << s.details["forms"].size() << " canonical tables checked";
    }
    os << "\n";
    for (const auto& f : s.failures) os << "  - " << f << "\n";
  }
  if (timing) os << "duration " << duration.count() << " ms\n";
  return os.str();
}

ClassificationReport run(const FieldSpec& spec, Suite suite, const Options& opts) {
  check_cap(spec, opts.max_order);
  const auto start = std::chrono::steady_clock::now();
  const FiniteField k(spec);
  ClassificationReport report{spec, suite, opts, {}, {}};
  auto want = [&](Suite s) { return suite == Suite::all || suite == s; };
  if (want(Suite::theorem1)) report.results.push_back(run_theorem1(k, opts));
  if (want(Suite::corollary2)) report.results.push_back(run_corollary2(k, opts));
  if (want(Suite::ec_equivalence)) report.results.push_back(run_ec_equivalence(k, opts));
  if (want(Suite::reduction4)) report.results.push_back(run_reduction4(k, opts));
  report.duration =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

// ---------------------------------------------------------------------------

Filter parse_filter(std::string_view text) {
  Filter f;
  std::string token;
  auto apply = [&](const std::string& t) {
    if (t.empty()) return;
    if (t == "ec") {
      f.ec = true;
    } else if (t == "non-ec") {
      f.ec = false;
    } else if (t == "straight") {
      f.straight = true;
    } else if (t == "curled") {
      f.straight = false;
    } else if (t.rfind("rank=", 0) == 0 && t.size() == 6 && t[5] >= '0' && t[5] <= '2') {
      f.rank = static_cast<std::size_t>(t[5] - '0');
    } else {
      throw std::invalid_argument("unknown filter '" + t + "' (expected ec, non-ec, rank=N, straight, curled)");
    }
  };
  for (char c : text) {
    if (c == ',') {
      apply(token);
      token.clear();
    } else if (c != ' ') {
      token.push_back(c);
    }
  }
  apply(token);
  return f;
}

void enumerate_tables(const FiniteField& k, const Filter& filter,
                      const std::function<void(const EnumeratedRow&)>& sink, unsigned jobs) {
  const std::uint64_t n = table_count(k);
  constexpr std::uint64_t kBatch = 1 << 16;
  jobs = std::max(1u, jobs);
  std::vector<std::vector<EnumeratedRow>> parts(jobs);
  for (std::uint64_t base = 0; base < n; base += kBatch) {
    const std::uint64_t len = std::min(kBatch, n - base);
    parallel_chunks(len, jobs, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
      auto& out = parts[chunk];
      out.clear();
      for (std::uint64_t i = base + begin; i < base + end; ++i) {
        Algebra A = table_at(k, i);
        const bool ec = is_ec_criterion(A);
        if (filter.ec && *filter.ec != ec) continue;
        const std::size_t rank = algebra_rank(A);
        if (filter.rank && *filter.rank != rank) continue;
        const bool straight = is_straight(A);
        if (filter.straight && *filter.straight != straight) continue;
        out.push_back(EnumeratedRow{i, std::move(A), ec, rank, straight});
      }
    });
    // chunks cover increasing index ranges, so concatenation keeps index order
    for (auto& part : parts) {
      for (const auto& row : part) sink(row);
      part.clear();
    }
  }
}

}  // namespace ecalg::verify
