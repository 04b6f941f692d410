// Python entry points. Results cross the boundary as JSON text and are
// decoded by the ecalg package.

#include <pybind11/pybind11.h>

#include <string>

#include "ecalg/api.hpp"
#include "ecalg/text.hpp"
#include "ecalg/verify.hpp"

namespace py = pybind11;

namespace {

ecalg::FieldSpec spec(const std::string& field) { return ecalg::parse_field_spec(field); }

std::string check(const std::string& field, const std::string& table, bool bruteforce) {
  ecalg::api::CheckOptions opts;
  opts.bruteforce = bruteforce;
  return ecalg::api::check(spec(field), table, opts).dump();
}

std::string verify(const std::string& field, const std::string& suite, bool full, std::uint64_t seed, unsigned jobs,
                   bool timing) {
  ecalg::verify::Options opts;
  opts.full = full;
  opts.seed = seed;
  opts.jobs = jobs;
  return ecalg::verify::run(spec(field), ecalg::verify::parse_suite(suite), opts).to_json(timing).dump();
}

std::string enumerate(const std::string& field, const std::string& filter, unsigned jobs) {
  const auto s = spec(field);
  ecalg::verify::check_cap(s, ecalg::verify::kDefaultMaxOrder);
  const auto f = ecalg::verify::parse_filter(filter);
  const ecalg::FiniteField k(s);
  nlohmann::json rows = nlohmann::json::array();
  {
    py::gil_scoped_release release;
    ecalg::verify::enumerate_tables(k, f, [&](const ecalg::verify::EnumeratedRow& r) {
      rows.push_back({{"index", r.index},
                      {"table", ecalg::format_table(r.table)},
                      {"ec", r.ec},
                      {"rank", r.rank},
                      {"straight", r.straight}});
    }, jobs);
  }
  return rows.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Endo-commutative 2-dimensional algebras";

  static py::exception<ecalg::GateError> gate_error(m, "GateError", PyExc_ValueError);
  static py::exception<ecalg::FieldError> field_error(m, "FieldError", PyExc_ValueError);
  static py::exception<ecalg::FieldError> not_enumerable(m, "NotEnumerableError", field_error.ptr());
  static py::exception<ecalg::verify::CapExceeded> cap_exceeded(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ecalg::GateError& e) {
      gate_error(e.what());
    } catch (const ecalg::FieldError& e) {
      if (e.code() == ecalg::FieldErrc::not_enumerable) {
        not_enumerable(e.what());
      } else {
        field_error(e.what());
      }
    } catch (const ecalg::verify::CapExceeded& e) {
      cap_exceeded(e.what());
    }
  });

  m.def("check", &check, py::arg("field"), py::arg("table"), py::arg("bruteforce") = false);
  m.def("classify", [](const std::string& f, const std::string& t) { return ecalg::api::classify(spec(f), t).dump(); },
        py::arg("field"), py::arg("table"));
  m.def("isomorphism",
        [](const std::string& f, const std::string& a, const std::string& b) {
          return ecalg::api::isomorphism(spec(f), a, b).dump();
        },
        py::arg("field"), py::arg("a"), py::arg("b"));
  m.def("canonical_table",
        [](const std::string& f, const std::string& form) { return ecalg::api::canonical_table(spec(f), form).dump(); },
        py::arg("field"), py::arg("form"));
  m.def("transform",
        [](const std::string& f, const std::string& t, const std::string& x) {
          return ecalg::api::transform(spec(f), t, x).dump();
        },
        py::arg("field"), py::arg("table"), py::arg("matrix"));
  m.def("tilde", [](const std::string& f, const std::string& x) { return ecalg::api::tilde(spec(f), x).dump(); },
        py::arg("field"), py::arg("matrix"));
  m.def("normalize", [](const std::string& f, const std::string& t) { return ecalg::api::normalize(spec(f), t).dump(); },
        py::arg("field"), py::arg("table"));
  m.def("verify", &verify, py::arg("field"), py::arg("suite") = "all", py::arg("full") = false,
        py::arg("seed") = ecalg::verify::kDefaultSeed, py::arg("jobs") = 1, py::arg("timing") = false);
  m.def("enumerate", &enumerate, py::arg("field"), py::arg("filter") = "", py::arg("jobs") = 1);
}
