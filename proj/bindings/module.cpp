// Python bindings. Exact rationals cross the boundary as fraction strings;
// the gmtkit python package wraps them into fractions.Fraction.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmtkit/gmt.hpp"
#include "gmtkit/mirror.hpp"
#include "gmtkit/partitions.hpp"
#include "gmtkit/quasimap.hpp"

namespace py = pybind11;
using namespace gmtkit;

namespace {

using PolyTerms = std::vector<std::pair<std::vector<int>, std::string>>;

PolyTerms poly_terms(const MultiPoly& p) {
    PolyTerms out;
    for (const auto& [m, c] : p) out.emplace_back(m.exps(), c.str());
    return out;
}

CorrelatorTable table_from(const std::optional<std::string>& path) {
    if (!path) return {};
    return CorrelatorTable::load(*path);
}

std::map<std::pair<int, int>, std::string> gw_invariants(int N, int k, int d,
                                                         const std::optional<std::string>& correlators) {
    GmtEngine engine(N, k, table_from(correlators));
    std::map<std::pair<int, int>, std::string> out;
    for (const auto& [ab, v] : engine.two_point(d)) out[ab] = v.str();
    return out;
}

py::dict verify(int N, int k, int d, const std::optional<std::string>& correlators) {
    CorrelatorTable user = table_from(correlators);
    GmtEngine engine(N, k, user);
    GwTable table;
    for (int dd = 1; dd <= d; ++dd) table[dd] = engine.two_point(dd);
    py::list rows;
    bool ok = true;
    for (int dd = 1; dd <= d; ++dd) {
        GmtResidualReport rep = verify_gmt_identity(N, k, dd, table, user);
        for (const auto& row : rep.rows) {
            py::dict r;
            r["d"] = dd;
            r["a"] = row.a;
            r["b"] = row.b;
            r["residual"] = row.residual.str();
            r["ok"] = row.ok;
            rows.append(std::move(r));
            ok = ok && row.ok;
        }
    }
    py::dict out;
    out["ok"] = ok;
    out["rows"] = std::move(rows);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact quasimap intersection numbers and the generalized mirror transformation";

    py::register_exception<NeedsCorrelator>(m, "NeedsCorrelatorError");
    py::register_exception<CorrelatorParseError>(m, "CorrelatorParseError");
    py::register_exception<CorrelatorConflict>(m, "CorrelatorConflictError");

    m.def("w_two_point",
          [](int N, int k, int d, int a, int b) { return w_two_point(N, k, d, a, b).str(); },
          py::arg("N"), py::arg("k"), py::arg("d"), py::arg("a"), py::arg("b"),
          "two-point quasimap intersection number w(O_{h^a} O_{h^b})_{0,d}");
    m.def("w_d1_closed",
          [](int N, int k, int a, int b) { return w_d1_closed(N, k, a, b).str(); },
          py::arg("N"), py::arg("k"), py::arg("a"), py::arg("b"));
    m.def("vsc", [](int N, int k, int d, int n) { return vsc(N, k, d, n).str(); },
          py::arg("N"), py::arg("k"), py::arg("d"), py::arg("n"),
          "virtual structure constant L~_n^{N,k,d}");
    m.def("general_type_d1",
          [](int N, int k, int n) { return general_type_d1(N, k, n).str(); },
          py::arg("N"), py::arg("k"), py::arg("n"));

    m.def("ek_poly", [](int k) { return poly_terms(ek_poly(k)); }, py::arg("k"),
          "terms of e^k(x, y) as (exponents, coefficient) pairs");
    m.def("w_integrand",
          [](int N, int k, int d, int a, int b) { return poly_terms(w_integrand(N, k, d, a, b)); },
          py::arg("N"), py::arg("k"), py::arg("d"), py::arg("a"), py::arg("b"));

    m.def("graded_dim",
          [](int N, int d, int m) { return global_ring_cache().get(N, d)->graded_dim(m); },
          py::arg("N"), py::arg("d"), py::arg("m"),
          "dimension of the degree-m piece of the quasimap Chow ring");
    m.def("socle_degree",
          [](int N, int d) { return global_ring_cache().get(N, d)->socle_degree(); },
          py::arg("N"), py::arg("d"));
    m.def("ring_integrate",
          [](int N, int d, const PolyTerms& terms) {
              MultiPoly p(d + 1);
              for (const auto& [exps, coeff] : terms)
                  p.add_term(Monomial(exps), Rational(coeff));
              return global_ring_cache().get(N, d)->integrate(p).str();
          },
          py::arg("N"), py::arg("d"), py::arg("terms"),
          "integration functional on the quasimap Chow ring");

    m.def("enumerate_partitions",
          [](int g) {
              std::vector<std::vector<int>> out;
              for (const Partition& sigma : enumerate_partitions(g)) out.push_back(sigma.parts);
              return out;
          },
          py::arg("g"));
    m.def("multiplicity",
          [](int i, const std::vector<int>& parts) { return multiplicity(i, Partition{parts}); },
          py::arg("i"), py::arg("parts"));
    m.def("symmetry_factor",
          [](const std::vector<int>& parts) { return symmetry_factor(Partition{parts}).str(); },
          py::arg("parts"));

    m.def("mirror_map",
          [](int k, int order) {
              MirrorData md = mirror_map_series(k, order);
              std::map<std::string, std::vector<std::string>> out;
              for (int d = 0; d <= order; ++d) {
                  out["w0"].push_back(md.w0.at(d).str());
                  out["w1"].push_back(md.w1.at(d).str());
                  out["t"].push_back(md.tmap.at(d).str());
              }
              return out;
          },
          py::arg("k"), py::arg("order"));
    m.def("check_w_mirror_identity",
          [](int k, int d_max) { return check_w_mirror_identity(k, d_max).all_ok; }, py::arg("k"),
          py::arg("d_max"));
    m.def("cy_series_route",
          [](int k, const std::map<int, std::string>& w_by_degree, int d_max) {
              std::map<int, Rational> w;
              for (const auto& [d, s] : w_by_degree) w.emplace(d, Rational(s));
              std::map<int, std::string> out;
              for (const auto& [d, v] : cy_series_route(k, w, d_max)) out[d] = v.str();
              return out;
          },
          py::arg("k"), py::arg("w_by_degree"), py::arg("d_max"));

    m.def("gw_invariants", &gw_invariants, py::arg("N"), py::arg("k"), py::arg("d"),
          py::arg("correlators") = std::nullopt,
          "two-point Gromov-Witten invariants at degree d, keyed by (a, b)");
    m.def("instanton_numbers",
          [](int d_max) {
              std::map<int, std::string> out;
              for (const auto& [d, v] : instanton_numbers(d_max)) out[d] = v.str();
              return out;
          },
          py::arg("d_max"), "quintic instanton numbers n_d");
    m.def("verify_gmt_identity", &verify, py::arg("N"), py::arg("k"), py::arg("d"),
          py::arg("correlators") = std::nullopt);
}
