// Python bindings: class counting, generating matrices, oracle expansions from
// explicit cyclic flats, and hull statistics of the column point sets.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "omega/expansion.hpp"
#include "omega/polytope.hpp"
#include "omega/rank2.hpp"
#include "omega/rank3.hpp"

namespace py = pybind11;
using namespace omega;

namespace {

SparseIntMatrix build_matrix(int r, int n) {
  if (r == 2) return build_o2(n);
  if (r == 3) return build_o3(n);
  throw std::invalid_argument("rank must be 2 or 3");
}

std::map<std::string, long long> expansion_dict(const Expansion& e) {
  std::map<std::string, long long> out;
  for (const auto& [s, c] : e.coeffs) out[label_to_string(s)] = c;
  return out;
}

}  // namespace

PYBIND11_MODULE(omega_matroids, m) {
  m.doc() = "Schubert expansions of rank-2 and rank-3 matroids and their generating matrices";

  m.def("count_m2", &count_m2, py::arg("n"),
        "number of isomorphism classes of rank-2 matroids on [n]");

  m.def(
      "schubert_labels",
      [](int rank, int n) {
        std::vector<std::string> out;
        for (const auto& s : canonical_schubert_order(rank, n)) out.push_back(label_to_string(s));
        return out;
      },
      py::arg("rank"), py::arg("n"), "row labels in the canonical matrix order");

  m.def(
      "omega_matrix",
      [](int rank, int n) {
        auto mat = build_matrix(rank, n);
        py::list cols;
        for (const auto& c : mat.columns) {
          py::dict d;
          d["descriptor"] = c.desc.to_string();
          d["coefficients"] = expansion_dict(c.coeffs);
          cols.append(d);
        }
        py::list rows;
        for (const auto& s : mat.row_labels) rows.append(label_to_string(s));
        py::dict out;
        out["rows"] = rows;
        out["columns"] = cols;
        return out;
      },
      py::arg("rank"), py::arg("n"),
      "generating matrix as labeled rows and descriptor-annotated columns");

  m.def(
      "expansion",
      [](int n, const std::vector<std::pair<std::vector<int>, int>>& cyclic_flats) {
        std::vector<CyclicFlat> flats;
        for (const auto& [elems, rank] : cyclic_flats)
          flats.push_back({elements_to_mask(elems, n), rank});
        return expansion_dict(schubert_expansion_oracle(make_lattice(flats, n)));
      },
      py::arg("n"), py::arg("cyclic_flats"),
      "Schubert expansion of the matroid given by its cyclic flats as (elements, rank) pairs");

  m.def(
      "hull_stats",
      [](int rank, int n) {
        auto ps = dedup_points(points_from_matrix(build_matrix(rank, n)));
        py::dict out;
        out["points"] = ps.points.size();
        out["linear_dimension"] = linear_dimension(ps);
        out["affine_dimension"] = affine_dimension(ps);
        out["vertices"] = classify_vertices(ps).vertex_count;
        return out;
      },
      py::arg("rank"), py::arg("n"),
      "distinct column points, exact dimensions, and vertex count of their hull");
}
