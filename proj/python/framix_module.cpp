#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "framix/braid.hpp"
#include "framix/esystem.hpp"
#include "framix/invariants.hpp"
#include "framix/verify.hpp"

namespace py = pybind11;
using namespace framix;

PYBIND11_MODULE(_framix, m) {
    m.doc() = "exact link invariants from framed Hecke-type trace algebras";

    m.def(
        "invariant",
        [](const std::string& kind, const std::string& braid, int d, const std::vector<int>& D) {
            FramedBraidWord b = parse_braid(braid);
            InvariantKind k = kind_from_name(kind);
            if (k == InvariantKind::phi_dD) {
                if (b.d == 1 && d > 1) b.d = d;
                return crf_str(phi_invariant(b.d, D, b));
            }
            return rf_str(invariant({k, d, D}, b));
        },
        py::arg("kind"), py::arg("braid"), py::arg("d") = 1, py::arg("D") = std::vector<int>{},
        "Canonical polynomial text of the named invariant of a braid closure.");

    m.def(
        "esystem",
        [](int d) {
            std::vector<std::string> out;
            for (const auto& sol : all_esystem_solutions(d)) out.push_back(sol.str());
            return out;
        },
        py::arg("d"), "All E-system solutions for modulus d, one line per subset.");

    m.def(
        "verify",
        [](const std::string& suite, int d, int n, unsigned seed) {
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (const auto& c : verify_suite(suite, d, n, seed))
                out.emplace_back(c.name, c.pass, c.witness);
            return out;
        },
        py::arg("suite") = "all", py::arg("d") = 2, py::arg("n") = 4,
        py::arg("seed") = 20240815u, "Run a verification suite; (name, pass, witness) triples.");

    m.def(
        "canonical_braid", [](const std::string& text) { return emit_braid(parse_braid(text)); },
        py::arg("text"), "Parse braid text and re-emit the canonical form.");

    m.def(
        "components",
        [](const std::string& text) {
            return closure_components(parse_braid(text).word).count;
        },
        py::arg("text"), "Number of components of the braid closure.");
}
