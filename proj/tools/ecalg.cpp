// ecalg: endo-commutativity checks and classification of 2-dimensional algebras.
//
// Exit codes:
//   0 success            3 not endo-commutative   6 verification failed
//   1 internal error     4 not rank one           7 enumeration cap exceeded
//   2 parse/usage error  5 not straight           8 field not enumerable

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecalg/api.hpp"
#include "ecalg/text.hpp"
#include "ecalg/verify.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kNotEc = 3,
  kNotRankOne = 4,
  kNotStraight = 5,
  kAssertion = 6,
  kCap = 7,
  kNotEnumerable = 8,
};

int gate_exit(ecalg::Gate g) {
  switch (g) {
    case ecalg::Gate::not_endo_commutative: return kNotEc;
    case ecalg::Gate::not_rank_one: return kNotRankOne;
    case ecalg::Gate::not_straight: return kNotStraight;
  }
  return kInternal;
}

std::string yes(const nlohmann::json& v) { return v.is_null() ? "n/a" : (v.get<bool>() ? "true" : "false"); }

std::string element_text(const nlohmann::json& v) {
  if (v.is_null()) return "none";
  return "(" + v[0].get<std::string>() + "," + v[1].get<std::string>() + ")";
}

std::string matrix_text(const nlohmann::json& m) {
  return "[" + m[0][0].get<std::string>() + "," + m[0][1].get<std::string>() + ";" + m[1][0].get<std::string>() +
         "," + m[1][1].get<std::string>() + "]";
}

void print_check(const nlohmann::json& j) {
  std::cout << "field             " << j["field"].get<std::string>() << "\n"
            << "table             " << j["table"].get<std::string>() << "\n"
            << "ec (criterion)    " << yes(j["ec_criterion"]) << "\n"
            << "ec (brute force)  " << yes(j["ec_bruteforce"]) << "\n"
            << "rank              " << j["rank"].get<int>() << "\n"
            << "straight          " << yes(j["straight"]);
  if (j["straight"].get<bool>()) std::cout << " witness " << element_text(j["straightening_witness"]);
  std::cout << "\n"
            << "commutative       " << yes(j["commutative"]) << "\n"
            << "anti-commutative  " << yes(j["anti_commutative"]) << "\n"
            << "associative       " << yes(j["associative"]) << "\n"
            << "unit              " << element_text(j["unit"]) << "\n";
  if (j.contains("associative_bruteforce")) {
    std::cout << "anti-comm (scan)  " << yes(j["anti_commutative_bruteforce"]) << "\n"
              << "associative (scan) " << yes(j["associative_bruteforce"]) << "\n"
              << "unit (scan)       " << element_text(j["unit_bruteforce"]) << "\n";
  }
  const auto& c = j["classification"];
  std::cout << "classify          "
            << (c.contains("form") ? c["form"].get<std::string>() : c["gate"].get<std::string>()) << "\n";
}

void print_classify(const nlohmann::json& j) {
  const auto& p = j["profile"];
  std::cout << j["form"].get<std::string>() << "\n"
            << "normalized        " << j["normalized"].get<std::string>() << "\n"
            << "basis change      " << matrix_text(j["witness"]) << "\n"
            << "canonical table   " << j["canonical_table"].get<std::string>() << "\n"
            << "unital " << yes(p["unital"]) << ", commutative " << yes(p["commutative"]) << ", anti-commutative "
            << yes(p["anti_commutative"]) << ", associative " << yes(p["associative"]) << ", purely ec "
            << yes(p["purely_ec"]) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Endo-commutative 2-dimensional algebras: checks, classification and exhaustive verification"};
  app.require_subcommand(1);

  std::string field_text;
  std::vector<std::string> tables;
  std::string suite_text = "all";
  std::string filter_text;
  std::string format = "text";
  bool full = false;
  bool bruteforce = false;
  bool timing = false;
  std::uint64_t seed = ecalg::verify::kDefaultSeed;
  unsigned jobs = 1;

  auto add_field = [&](CLI::App* c) { c->add_option("--field", field_text, "Field: Q, F<p>, F<p^k>:<modulus>")->required(); };
  auto add_format = [&](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed));
  };

  auto* check = app.add_subcommand("check", "Evaluate every predicate on one table");
  add_field(check);
  check->add_option("--table", tables, "a1,b1,a2,b2,a3,b3,a4,b4")->required()->expected(1);
  check->add_flag("--bruteforce", bruteforce, "Also run the pointwise scans (finite fields only)");
  add_format(check, {"text", "json"});

  auto* classify = app.add_subcommand("classify", "Canonical form of an EC straight rank-one algebra");
  add_field(classify);
  classify->add_option("--table", tables, "a1,b1,a2,b2,a3,b3,a4,b4")->required()->expected(1);
  add_format(classify, {"text", "json"});

  auto* iso = app.add_subcommand("iso", "Brute-force GL2 isomorphism search between two tables");
  add_field(iso);
  iso->add_option("--table", tables, "Two tables: --table A --table B")->required()->expected(2);
  add_format(iso, {"text", "json"});

  auto* enumerate = app.add_subcommand("enumerate", "Stream all tables over a finite field");
  add_field(enumerate);
  enumerate->add_option("--filter", filter_text, "Comma list of ec, non-ec, rank=N, straight, curled");
  enumerate->add_option("--jobs", jobs, "Worker threads (output order is unaffected)");
  std::string enum_format = "csv";
  enumerate->add_option("--format", enum_format, "csv, json (JSON lines) or text")->check(CLI::IsMember({"csv", "json", "text"}));

  auto* verify = app.add_subcommand("verify", "Run the verification suites over a finite field");
  add_field(verify);
  verify->add_option("--suite", suite_text, "theorem1, corollary2, ec-equivalence, reduction4, all");
  verify->add_flag("--full", full, "Scan all q^8 tables even above order 5");
  verify->add_option("--seed", seed, "Seed for sampled scans");
  verify->add_option("--jobs", jobs, "Worker threads");
  verify->add_flag("--timing", timing, "Include wall-clock duration in the report");
  add_format(verify, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    const auto spec = ecalg::parse_field_spec(field_text);

    if (check->parsed()) {
      ecalg::api::CheckOptions opts;
      opts.bruteforce = bruteforce;
      const auto j = ecalg::api::check(spec, tables.at(0), opts);
      if (format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        print_check(j);
      }
      return kOk;
    }

    if (classify->parsed()) {
      const auto j = ecalg::api::classify(spec, tables.at(0));
      if (format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        print_classify(j);
      }
      return kOk;
    }

    if (iso->parsed()) {
      ecalg::verify::check_cap(spec, ecalg::verify::kDefaultMaxOrder);
      const auto j = ecalg::api::isomorphism(spec, tables.at(0), tables.at(1));
      if (format == "json") {
        std::cout << j.dump(2) << "\n";
      } else if (j["isomorphic"].get<bool>()) {
        std::cout << "isomorphic, witness X = " << matrix_text(j["witness"]) << "\n";
      } else {
        std::cout << "not isomorphic\n";
      }
      return kOk;
    }

    if (enumerate->parsed()) {
      ecalg::verify::check_cap(spec, ecalg::verify::kDefaultMaxOrder);
      const auto filter = ecalg::verify::parse_filter(filter_text);
      const ecalg::FiniteField k(spec);
      const bool json = enum_format == "json";
      const bool text = enum_format == "text";
      if (enum_format == "csv") std::cout << "index,table,ec,rank,straight\n";
      auto flag = [](bool b) { return b ? "true" : "false"; };
      ecalg::verify::enumerate_tables(k, filter, [&](const ecalg::verify::EnumeratedRow& r) {
        const auto t = ecalg::format_table(r.table);
        if (json) {
          nlohmann::json row = {{"index", r.index}, {"table", t}, {"ec", r.ec}, {"rank", r.rank}, {"straight", r.straight}};
          std::cout << row.dump() << "\n";
        } else if (text) {
          std::cout << r.index << "  " << t << "  ec=" << flag(r.ec) << " rank=" << r.rank
                    << " straight=" << flag(r.straight) << "\n";
        } else {
          std::cout << r.index << ",\"" << t << "\"," << flag(r.ec) << "," << r.rank << "," << flag(r.straight) << "\n";
        }
      }, jobs);
      return kOk;
    }

    if (verify->parsed()) {
      ecalg::verify::Options opts;
      opts.full = full;
      opts.seed = seed;
      opts.jobs = jobs;
      const auto report = ecalg::verify::run(spec, ecalg::verify::parse_suite(suite_text), opts);
      if (format == "json") {
        std::cout << report.to_json(timing).dump(2) << "\n";
      } else {
        std::cout << report.to_text(timing);
      }
      return report.passed() ? kOk : kAssertion;
    }
  } catch (const ecalg::GateError& e) {
    std::cerr << "ecalg: " << e.what() << "\n";
    return gate_exit(e.gate());
  } catch (const ecalg::verify::CapExceeded& e) {
    std::cerr << "ecalg: " << e.what() << "\n";
    return kCap;
  } catch (const ecalg::FieldError& e) {
    std::cerr << "ecalg: " << e.what() << "\n";
    return e.code() == ecalg::FieldErrc::not_enumerable ? kNotEnumerable : kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ecalg: " << e.what() << "\n";
    return kParse;
  } catch (const std::domain_error& e) {
    std::cerr << "ecalg: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "ecalg: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
