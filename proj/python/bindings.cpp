#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "avoid132/bijections.hpp"
#include "avoid132/counting.hpp"
#include "avoid132/decomposition.hpp"
#include "avoid132/errors.hpp"
#include "avoid132/json_io.hpp"
#include "avoid132/oracle.hpp"
#include "avoid132/permutation.hpp"
#include "avoid132/plane_tree.hpp"

namespace py = pybind11;
using namespace avoid132;

namespace {

py::int_ to_py(const Integer& x) { return py::int_(py::str(x.str())); }

std::vector<int> values(const Permutation& pi) { return {pi.values().begin(), pi.values().end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "132-avoiding permutations, plane trees, bijections and exact counts";
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  m.def("avoids_132", [](std::vector<int> p) { return avoids_132(Permutation(std::move(p))); });
  m.def("decompose", [](std::vector<int> p, const std::string& method) {
    std::vector<std::vector<int>> out;
    for (const auto& s : decompose(Permutation(std::move(p)), parse_decomposition_kind(method)).segments) {
      out.push_back(s.values);
    }
    return out;
  }, py::arg("perm"), py::arg("method"));
  m.def("length_distribution", [](std::vector<int> p, const std::string& method) {
    return length_distribution(decompose(Permutation(std::move(p)), parse_decomposition_kind(method))).parts();
  }, py::arg("perm"), py::arg("method"));

  m.def("enumerate_avoiders", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& pi : enumerate_avoiders(n)) out.push_back(values(pi));
    return out;
  });
  m.def("enumerate_trees", [](int n) {
    std::vector<std::string> out;
    for (const auto& t : enumerate_trees(n)) out.push_back(t.to_text());
    return out;
  });

  m.def("jr_perm_to_tree", [](std::vector<int> p) { return jr_perm_to_tree(Permutation(std::move(p))).to_text(); });
  m.def("jr_tree_to_perm", [](const std::string& w) { return values(jr_tree_to_perm(parse_tree(w))); });
  m.def("phi_perm_to_tree", [](std::vector<int> p) { return phi_perm_to_tree(Permutation(std::move(p))).shape.to_text(); });
  m.def("phi_tree_to_perm", [](const std::string& w) { return values(phi_tree_to_perm(parse_tree(w))); });
  m.def("mirror", [](const std::string& w) { return mirror(parse_tree(w)).to_text(); });
  m.def("level_switch", [](const std::string& w) { return level_switch(parse_tree(w)).to_text(); });
  m.def("tree_stats_json", [](const std::string& w) { return tree_stats_json(parse_tree(w)).dump(); });

  m.def("binomial", [](std::int64_t a, std::int64_t b) { return to_py(binomial(a, b)); });
  m.def("catalan", [](int n) { return to_py(catalan(n)); });
  m.def("narayana", [](int n, int k) { return to_py(narayana(n, k)); });
  m.def("gen_narayana", [](int i, int n, int j) { return to_py(gen_narayana(i, n, j)); });
  m.def("kappa", [](int t, int n, int m) { return to_py(kappa(t, n, m)); });
  m.def("bounded_compositions", [](int n, int k, int w) { return to_py(bounded_compositions(n, k, w)); });
  m.def("count_start_descents", [](int n, int i, int k) { return to_py(count_start_descents(n, i, k)); });
  m.def("count_start_end_descents",
        [](int n, int i, int j, int k) { return to_py(count_start_end_descents(n, i, j, k)); });
  m.def("count_bounded_runs",
        [](int n, int p, int q, int h, int l) { return to_py(count_bounded_runs(n, p, q, h, l)); });
  m.def("count_bounded_ir", [](int n, int h) { return to_py(count_bounded_ir(n, h)); });
  m.def("count_consec_pattern", [](int n, int k, int mm) { return to_py(count_consec_pattern(n, k, mm)); });

  m.def("claim_ids", &claim_ids);
  m.def("verify_payload", [](const std::string& claim, int max_n, int shards) {
    VerificationReport r;
    {
      py::gil_scoped_release release;
      r = verify(claim, max_n, VerifyOptions{.shards = shards});
    }
    return r.payload();
  }, py::arg("claim"), py::arg("max_n"), py::arg("shards") = 1);
}
