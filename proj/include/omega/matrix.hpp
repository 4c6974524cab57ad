#pragma once

// Sparse integer matrices whose rows are Schubert labels in canonical order and
// whose columns are expansions tagged with the matroid they came from. Column
// data serializes to a triples file plus a JSON sidecar carrying the labels,
// the descriptors and a checksum of the triples bytes.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "omega/descriptor.hpp"
#include "omega/expansion.hpp"

namespace omega {

struct MatrixColumn {
  Expansion coeffs;
  MatroidDescriptor desc;
};

struct SparseIntMatrix {
  int r = 0, n = 0;
  std::vector<SchubertLabel> row_labels;
  std::vector<MatrixColumn> columns;

  int rows() const { return (int)row_labels.size(); }
  int cols() const { return (int)columns.size(); }
  long long nnz() const;
  int row_index(const SchubertLabel& s) const;  // throws if the label is not a row
};

SparseIntMatrix empty_matrix(int r, int n);

std::uint64_t fnv1a(const std::string& bytes);

std::string to_triples(const SparseIntMatrix& m);
std::string to_csv(const SparseIntMatrix& m);
nlohmann::json to_json(const SparseIntMatrix& m);
nlohmann::json sidecar_json(const SparseIntMatrix& m);

// Inverse of (to_triples, sidecar_json); rejects data whose checksum disagrees.
SparseIntMatrix matrix_from_cache(const std::string& triples_text, const nlohmann::json& sidecar);

}  // namespace omega
