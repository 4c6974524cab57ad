#pragma once

// Post-processing for matrices read as finite point sets: deduplication, exact
// affine/linear dimension, and vertex classification of the convex hull with
// checkable certificates for both outcomes.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "omega/matrix.hpp"

namespace omega {

struct PointSet {
  int dim = 0;
  std::vector<std::vector<long long>> points;
  std::vector<std::string> labels;
};

PointSet points_from_matrix(const SparseIntMatrix& m);

// keeps the first occurrence of each distinct point; merged[i] lists the labels
// of the duplicates folded into kept point i (the kept label first)
PointSet dedup_points(const PointSet& ps, std::vector<std::vector<std::string>>* merged = nullptr);

int affine_dimension(const PointSet& ps);  // rank of differences against the first point
int linear_dimension(const PointSet& ps);  // rank of the points themselves

struct VertexCertificate {
  bool vertex = false;
  // non-vertex: q = sum of weight * point over the listed other indices
  std::vector<std::pair<int, mpq_class>> combination;
  // vertex: a . p <= b for every other point, a . q > b
  std::vector<mpq_class> a;
  mpq_class b;
};

struct VertexReport {
  std::vector<char> is_vertex;
  std::vector<VertexCertificate> certificates;
  int vertex_count = 0;
};

// exact classification of every point; certificates are re-verified internally
// by direct arithmetic before being returned
VertexReport classify_vertices(const PointSet& ps, int threads = 1);

bool is_vertex(const PointSet& ps, int idx);

bool reverify_certificate(const PointSet& ps, int idx, const VertexCertificate& cert);

}  // namespace omega
