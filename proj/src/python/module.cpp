#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "psicalc/cheb_factor.hpp"
#include "psicalc/identities.hpp"
#include "psicalc/minpoly.hpp"
#include "psicalc/numtheory.hpp"
#include "psicalc/sequences.hpp"

namespace py = pybind11;
using namespace psicalc;

namespace {

std::vector<std::string> coeffs_desc(const IntPoly& p) {
    std::vector<std::string> out;
    for (long k = p.degree(); k >= 0; --k) out.push_back(p.coeff(k).get_str());
    return out;
}

PsiFactorList factor_dispatch(const std::string& kind, long long n) {
    if (kind == "T") return factor_t(n);
    if (kind == "V") return factor_v(n);
    if (kind == "W") return factor_w(n);
    throw std::invalid_argument("kind must be T, V or W");
}

}  // namespace

PYBIND11_MODULE(_psicalc, m) {
    m.doc() = "exact minimal polynomials of 2cos(2pi/n) and related "
              "Chebyshev-family sequences";

    py::register_exception<NotDivisible>(m, "NotDivisible");
    py::register_exception<PrecisionExceeded>(m, "PrecisionExceeded");

    m.def("psi", [](long long n) { return psi(n).to_string(); },
          py::arg("n"), "minimal polynomial of 2cos(2pi/n), main method");
    m.def("psi_wz", [](long long n) { return psi_wz(n).to_string(); },
          py::arg("n"), "divisor-product recursion method");
    m.def("psi_barnes", [](long long n) { return psi_barnes(n).to_string(); },
          py::arg("n"), "Moebius-exponent product method");
    m.def("psi_numeric",
          [](long long n, int bits) { return psi_numeric(n, bits).to_string(); },
          py::arg("n"), py::arg("precision_bits") = 192,
          "floating-point root-product oracle");
    m.def("psi_coeffs", [](long long n) { return coeffs_desc(psi(n)); },
          py::arg("n"), "coefficients of psi_n, descending, as strings");
    m.def("psi_expr", [](long long n) { return psi_notation(n); }, py::arg("n"),
          "table notation, e.g. 'q-_15 q-_1/(q-_5 q-_3)'");
    m.def("psi_degree", [](long long n) { return psi(n).degree(); }, py::arg("n"));
    m.def("cyclotomic", [](long long n) { return cyclotomic(n).to_string(); },
          py::arg("n"));

    m.def("c", [](long n) { return c(n).to_string(); }, py::arg("n"));
    m.def("t", [](long n) { return t(n).to_string(); }, py::arg("n"));
    m.def("p_plus", [](long n) { return p_plus(n).to_string(); }, py::arg("n"));
    m.def("p_minus", [](long n) { return p_minus(n).to_string(); }, py::arg("n"));
    m.def("q_plus", [](long n) { return q_plus(n).to_string(); }, py::arg("n"));
    m.def("q_minus", [](long n) { return q_minus(n).to_string(); }, py::arg("n"));

    m.def("factor", [](const std::string& kind, long long n) {
              return factor_dispatch(kind, n).factors;
          },
          py::arg("kind"), py::arg("n"),
          "psi-indices whose product is t_n / p^-_n / p^+_n for kind T/V/W");
    m.def("is_irreducible_t", &is_irreducible_t, py::arg("n"));
    m.def("is_irreducible_vw", &is_irreducible_vw, py::arg("n"));

    m.def("euler_phi", &euler_phi, py::arg("n"));
    m.def("moebius", &moebius, py::arg("n"));
    m.def("divisors", &divisors, py::arg("n"));

    m.def("verify", [](long max_n) {
              std::vector<std::string> lines;
              bool ok = true;
              for (const auto& r : run_suite(max_n)) {
                  ok = ok && r.passed();
                  lines.push_back(r.to_line());
              }
              return py::make_tuple(ok, lines);
          },
          py::arg("max_n"),
          "(all_passed, report_lines) for the identity sweep");
}
