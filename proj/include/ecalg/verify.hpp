#pragma once

// Batch verification over finite fields: enumeration of structure matrices,
// the classification census, and the suites behind `ecalg verify`.
//
// All scans split their index range into contiguous chunks, one per worker,
// and merge in chunk order, so results do not depend on the job count.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ecalg/classifier.hpp"
#include "ecalg/field.hpp"

namespace ecalg::verify {

using Algebra = StructureMatrix<FiniteField>;
using Form = CanonicalForm<FiniteField>;

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr std::uint64_t kDefaultMaxOrder = 9;
/// Largest order scanned over all q^8 tables without --full.
inline constexpr std::uint64_t kFullScanOrder = 5;
inline constexpr const char* kReportSchema = "ecalg.report/1";

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Suite { theorem1, corollary2, ec_equivalence, reduction4, all };

Suite parse_suite(std::string_view name);
std::string suite_name(Suite s);

struct Options {
  bool full = false;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  std::uint64_t samples = 100000;     // random tables for sampled q^8 scans
  std::uint64_t pair_samples = 1000;  // random member pairs checked against GL2 search
  std::uint64_t max_order = kDefaultMaxOrder;
};

/// Throws FieldError(not_enumerable) for Q and CapExceeded above the order cap.
void check_cap(const FieldSpec& spec, std::uint64_t max_order);

/// q^8 for q = |K|.
std::uint64_t table_count(const FiniteField& k);
/// Table with the given index; entries are base-q digits, a1 most significant.
Algebra table_at(const FiniteField& k, std::uint64_t index);
/// Uniform random tables from a fixed seed, generated sequentially.
std::vector<Algebra> sample_tables(const FiniteField& k, std::uint64_t count, std::uint64_t seed);

/// Invokes fn(chunk, begin, end) over [0, n) split into `jobs` contiguous chunks.
void parallel_chunks(std::uint64_t n, unsigned jobs,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn);

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t agreements = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::string> counterexamples;  // first few, in index order

  nlohmann::json to_json() const;
};

/// is_ec_bruteforce == is_ec_criterion on every table.
Tally ec_equivalence_exhaustive(const FiniteField& k, unsigned jobs);
Tally ec_equivalence_sampled(const FiniteField& k, std::uint64_t samples, std::uint64_t seed, unsigned jobs);

/// is_ec_criterion(S-form matrix) == ec_system4 on all q^6 tuples.
Tally reduction4_exhaustive(const FiniteField& k, unsigned jobs);
/// Same equivalence on random tuples.
Tally reduction4_sampled(const FiniteField& k, std::uint64_t samples, std::uint64_t seed);
/// rank1_ec_membership == ec_system4 on all q^3 triples.
Tally rank1_membership_exhaustive(const FiniteField& k);

struct ClassEntry {
  Form form;
  std::uint64_t members = 0;
  Algebra representative;  // lowest-index member
  std::uint64_t orbit_size = 0;
  PropertyProfile profile;
};

struct Census {
  std::string mode;  // "full" (all q^8 tables) or "rank-one" (every rank-one table)
  std::uint64_t scanned = 0;
  std::uint64_t passed_ec = 0;
  std::uint64_t passed_rank1 = 0;
  std::uint64_t passed_straight = 0;
  std::vector<ClassEntry> classes;  // canonical order: Z, N, L(l) by l, U
  std::vector<Algebra> members;     // every EC rank-one straight table, index order
  std::vector<std::size_t> member_class;
};

/// Number of rank-one 4x2 matrices, (q^4 - 1)(q + 1).
std::uint64_t rank_one_count(const FiniteField& k);
/// Rank-one table u v^T with v = (1, t) or (0, 1); index order is deterministic.
Algebra rank_one_table_at(const FiniteField& k, std::uint64_t index);

Census theorem1_census(const FiniteField& k, bool full_scan, unsigned jobs);

struct SuiteResult {
  std::string name;
  bool passed = true;
  nlohmann::json details = nlohmann::json::object();
  std::vector<std::string> failures;

  void fail(std::string message) {
    passed = false;
    failures.push_back(std::move(message));
  }
};

SuiteResult run_theorem1(const FiniteField& k, const Options& opts);
SuiteResult run_corollary2(const FiniteField& k, const Options& opts);
SuiteResult run_ec_equivalence(const FiniteField& k, const Options& opts);
SuiteResult run_reduction4(const FiniteField& k, const Options& opts);

struct ClassificationReport {
  FieldSpec field;
  Suite suite = Suite::all;
  Options options;
  std::vector<SuiteResult> results;
  std::chrono::milliseconds duration{0};

  bool passed() const;
  /// Wall-clock duration is included only when `timing` is set, keeping the
  /// default report reproducible byte for byte.
  nlohmann::json to_json(bool timing = false) const;
  std::string to_text(bool timing = false) const;
};

ClassificationReport run(const FieldSpec& spec, Suite suite, const Options& opts);

struct Filter {
  std::optional<bool> ec;
  std::optional<std::size_t> rank;
  std::optional<bool> straight;
};

/// "ec,rank=1,straight", "curled", "rank=0", ... (empty string = no filter).
Filter parse_filter(std::string_view text);

struct EnumeratedRow {
  std::uint64_t index;
  Algebra table;
  bool ec;
  std::size_t rank;
  bool straight;
};

/// Streams all q^8 tables in index order that pass the filter. Batches are
/// scanned by `jobs` workers; output order does not depend on it.
void enumerate_tables(const FiniteField& k, const Filter& filter, const std::function<void(const EnumeratedRow&)>& sink,
                      unsigned jobs = 1);

}  // namespace ecalg::verify
