#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "narayana/cli.hpp"
#include "narayana/digits.hpp"
#include "narayana/kummer.hpp"
#include "narayana/narayana.hpp"
#include "narayana/oracle.hpp"
#include "narayana/triangle.hpp"

namespace py = pybind11;
using namespace narayana;

namespace {

py::int_ to_pyint(const oracle::ExactInteger& x) {
  const std::string s = x.get_str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

std::vector<std::uint64_t> digits_of(const DigitString& d) {
  return {d.digits().begin(), d.digits().end()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Prime divisibility of Narayana numbers N(n,k) from base-p digits";

  m.def("is_prime", &is_prime, py::arg("n"));

  // digits
  m.def("decompose",
        [](std::uint64_t n, std::uint64_t p, std::size_t min_length) {
          return digits_of(decompose(n, PrimeBase(p), min_length));
        },
        py::arg("n"), py::arg("p"), py::arg("min_length") = 0,
        "Little-endian base-p digits of n, zero-padded to min_length.");
  m.def("reconstruct",
        [](std::vector<std::uint64_t> digits, std::uint64_t p) {
          return reconstruct(DigitString(PrimeBase(p), std::move(digits)));
        },
        py::arg("digits"), py::arg("p"));
  m.def("increment",
        [](std::vector<std::uint64_t> digits, std::uint64_t p) {
          return digits_of(increment(DigitString(PrimeBase(p), std::move(digits))));
        },
        py::arg("digits"), py::arg("p"));
  m.def("valuation",
        [](std::uint64_t n, std::uint64_t p) { return valuation(n, PrimeBase(p)); },
        py::arg("n"), py::arg("p"));

  // kummer
  py::class_<CarryTrace>(m, "CarryTrace")
      .def_readonly("carry_positions", &CarryTrace::carry_positions)
      .def_readonly("padded_length", &CarryTrace::padded_length)
      .def_property_readonly("count", &CarryTrace::count);
  m.def("binomial_valuation_by_addition",
        [](std::uint64_t n, std::uint64_t k, std::uint64_t p) {
          return binomial_valuation_by_addition(n, k, PrimeBase(p));
        },
        py::arg("n"), py::arg("k"), py::arg("p"));
  m.def("binomial_valuation_by_indices",
        [](std::uint64_t n, std::uint64_t k, std::uint64_t p) {
          return binomial_valuation_by_indices(n, k, PrimeBase(p));
        },
        py::arg("n"), py::arg("k"), py::arg("p"));

  // narayana
  py::class_<DivisibilityVerdict>(m, "DivisibilityVerdict")
      .def_readonly("divisible", &DivisibilityVerdict::divisible)
      .def_property_readonly("case",
                             [](const DivisibilityVerdict& v) {
                               return std::string(to_string(v.matched_case));
                             })
      .def_property_readonly("violated",
                             [](const DivisibilityVerdict& v) -> py::object {
                               if (!v.witness) return py::none();
                               return py::str(std::string(to_string(v.witness->condition)));
                             })
      .def_property_readonly("digit",
                             [](const DivisibilityVerdict& v) -> py::object {
                               if (!v.witness) return py::none();
                               return py::int_(v.witness->digit_index);
                             })
      .def("__repr__", [](const DivisibilityVerdict& v) {
        return std::string("<DivisibilityVerdict ") +
               (v.divisible ? "divisible " : "nondivisible ") +
               std::string(to_string(v.matched_case)) +
               (v.witness ? " " + v.witness->describe() : std::string()) + ">";
      });
  m.def("prime_divides_narayana",
        [](std::uint64_t p, std::uint64_t n, std::uint64_t k) {
          return prime_divides_narayana({PrimeBase(p), n, k});
        },
        py::arg("p"), py::arg("n"), py::arg("k"),
        "Decide p | N(n,k) from the base-p digits of n and k.");

  py::class_<ValuationReport>(m, "ValuationReport")
      .def_readonly("omega_binom_k", &ValuationReport::omega_binom_k)
      .def_readonly("omega_binom_k1", &ValuationReport::omega_binom_k1)
      .def_readonly("omega_n", &ValuationReport::omega_n)
      .def_readonly("omega_narayana", &ValuationReport::omega_narayana);
  m.def("narayana_valuation",
        [](std::uint64_t p, std::uint64_t n, std::uint64_t k) {
          return narayana_valuation({PrimeBase(p), n, k});
        },
        py::arg("p"), py::arg("n"), py::arg("k"));

  // oracle
  m.def("binomial_exact",
        [](std::uint64_t n, std::uint64_t k) {
          return to_pyint(oracle::binomial_exact(n, k));
        },
        py::arg("n"), py::arg("k"));
  m.def("narayana_exact",
        [](std::uint64_t n, std::uint64_t k) {
          return to_pyint(oracle::narayana_exact(n, k));
        },
        py::arg("n"), py::arg("k"));
  m.def("catalan_exact",
        [](std::uint64_t n) { return to_pyint(oracle::catalan_exact(n)); },
        py::arg("n"));

  // triangle
  py::class_<RowImage>(m, "RowImage")
      .def_readonly("n", &RowImage::n)
      .def_readonly("mask", &RowImage::mask)
      .def_readonly("survivor_count", &RowImage::survivor_count);
  m.def("build_row",
        [](std::uint64_t n, std::uint64_t p) { return build_row(n, PrimeBase(p)); },
        py::arg("n"), py::arg("p"), py::call_guard<py::gil_scoped_release>());
  m.def("check_corollary_notdiv",
        [](std::uint64_t p, unsigned m) {
          return check_corollary_notdiv(PrimeBase(p), m);
        },
        py::arg("p"), py::arg("m"));
  m.def("check_corollary_div",
        [](std::uint64_t p, unsigned m) {
          return check_corollary_div(PrimeBase(p), m);
        },
        py::arg("p"), py::arg("m"));
  m.def("render",
        [](const std::string& format, std::uint64_t rows, std::uint64_t p,
           char survivor, char nonsurvivor) {
          const RenderSpec spec{parse_render_format(format), rows, survivor,
                                nonsurvivor};
          return py::bytes(render(spec, PrimeBase(p)));
        },
        py::arg("format"), py::arg("rows"), py::arg("p"),
        py::arg("survivor") = '#', py::arg("nonsurvivor") = '.',
        "Render rows 1..rows as ascii, csv or pbm bytes.");

  // verification and the command-line front end
  m.def("verify",
        [](std::uint64_t p, std::uint64_t max_n, unsigned jobs) {
          cli::VerifyReport r;
          {
            py::gil_scoped_release release;
            r = cli::verify_against_oracle(PrimeBase(p), max_n, jobs);
          }
          py::list mismatches;
          for (const auto& mm : r.mismatches) {
            mismatches.append(py::make_tuple(mm.n, mm.k, mm.fast_divisible,
                                             mm.oracle_divisible));
          }
          return py::make_tuple(r.checked, mismatches);
        },
        py::arg("p"), py::arg("max_n"), py::arg("jobs") = 1,
        "Return (checked, mismatches) comparing the digit criterion to exact values.");
  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int status = cli::run(args, out, err);
          return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool; returns (status, stdout, stderr).");
}
