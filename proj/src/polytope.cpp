#include "omega/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "omega/simplex.hpp"

namespace omega {

PointSet points_from_matrix(const SparseIntMatrix& m) {
  PointSet ps;
  ps.dim = m.rows();
  for (const auto& col : m.columns) {
    std::vector<long long> p(ps.dim, 0);
    for (const auto& [s, c] : col.coeffs.coeffs) p[m.row_index(s)] = c;
    ps.points.push_back(std::move(p));
    ps.labels.push_back(col.desc.to_string());
  }
  return ps;
}

PointSet dedup_points(const PointSet& ps, std::vector<std::vector<std::string>>* merged) {
  PointSet out;
  out.dim = ps.dim;
  if (merged) merged->clear();
  std::map<std::vector<long long>, int> seen;
  for (size_t i = 0; i < ps.points.size(); ++i) {
    auto [it, fresh] = seen.emplace(ps.points[i], (int)out.points.size());
    if (fresh) {
      out.points.push_back(ps.points[i]);
      out.labels.push_back(ps.labels[i]);
      if (merged) merged->push_back({ps.labels[i]});
    } else if (merged) {
      (*merged)[it->second].push_back(ps.labels[i]);
    }
  }
  return out;
}

namespace {

// fraction-free Gaussian elimination (Bareiss); returns the rank
int integer_rank(std::vector<std::vector<mpz_class>> a) {
  int rows = (int)a.size();
  if (rows == 0) return 0;
  int cols = (int)a[0].size();
  mpz_class prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<std::vector<mpz_class>> as_mpz(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<mpz_class>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<mpz_class> row;
    row.reserve(r.size());
    for (long long v : r) row.emplace_back((long)v);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

int affine_dimension(const PointSet& ps) {
  if (ps.points.empty()) throw std::invalid_argument("affine dimension needs at least one point");
  std::vector<std::vector<long long>> diffs;
  for (size_t i = 1; i < ps.points.size(); ++i) {
    std::vector<long long> d(ps.dim);
    for (int j = 0; j < ps.dim; ++j) d[j] = ps.points[i][j] - ps.points[0][j];
    diffs.push_back(std::move(d));
  }
  return integer_rank(as_mpz(diffs));
}

int linear_dimension(const PointSet& ps) { return integer_rank(as_mpz(ps.points)); }

bool reverify_certificate(const PointSet& ps, int idx, const VertexCertificate& cert) {
  const auto& q = ps.points[idx];
  if (!cert.vertex) {
    std::vector<mpq_class> acc(ps.dim, 0);
    mpq_class total = 0;
    for (const auto& [j, w] : cert.combination) {
      if (j == idx || w < 0) return false;
      total += w;
      for (int c = 0; c < ps.dim; ++c) acc[c] += w * mpq_class((long)ps.points[j][c]);
    }
    if (total != 1) return false;
    for (int c = 0; c < ps.dim; ++c)
      if (acc[c] != mpq_class((long)q[c])) return false;
    return true;
  }
  if ((int)cert.a.size() != ps.dim) return false;
  mpq_class at_q = 0;
  for (int c = 0; c < ps.dim; ++c) at_q += cert.a[c] * mpq_class((long)q[c]);
  if (!(at_q > cert.b)) return false;
  for (size_t j = 0; j < ps.points.size(); ++j) {
    if ((int)j == idx) continue;
    mpq_class v = 0;
    for (int c = 0; c < ps.dim; ++c) v += cert.a[c] * mpq_class((long)ps.points[j][c]);
    if (v > cert.b) return false;
  }
  return true;
}

namespace {

// One point against the rest: grow an active subset until its convex hull either
// contains q (non-vertex, with weights) or a Farkas-derived hyperplane separates
// q from every other point (vertex). `witnesses` persists across calls so later
// queries start from the vertices found so far.
VertexCertificate classify_one(const PointSet& ps, int idx, std::vector<int>& witnesses) {
  int dim = ps.dim;
  int npts = (int)ps.points.size();
  std::vector<char> in_active(npts, 0);
  std::vector<int> active;
  for (int w : witnesses)
    if (w != idx && !in_active[w]) {
      in_active[w] = 1;
      active.push_back(w);
    }

  while (true) {
    // rows restricted to coordinates touched by q or the active points
    std::vector<int> rows;
    for (int c = 0; c < dim; ++c) {
      bool used = ps.points[idx][c] != 0;
      for (int j : active) {
        if (used) break;
        used = ps.points[j][c] != 0;
      }
      if (used) rows.push_back(c);
    }

    std::vector<std::vector<mpq_class>> cols;
    cols.reserve(active.size());
    for (int j : active) {
      std::vector<mpq_class> col;
      col.reserve(rows.size() + 1);
      for (int c : rows) col.emplace_back((long)ps.points[j][c]);
      col.emplace_back(1);
      cols.push_back(std::move(col));
    }
    std::vector<mpq_class> rhs;
    rhs.reserve(rows.size() + 1);
    for (int c : rows) rhs.emplace_back((long)ps.points[idx][c]);
    rhs.emplace_back(1);

    FeasResult lp = solve_feasibility(cols, rhs);
    if (lp.feasible) {
      VertexCertificate cert;
      cert.vertex = false;
      for (size_t j = 0; j < active.size(); ++j)
        if (lp.solution[j] != 0) cert.combination.emplace_back(active[j], lp.solution[j]);
      return cert;
    }

    std::vector<mpq_class> a(dim, 0);
    for (size_t r = 0; r < rows.size(); ++r) a[rows[r]] = lp.farkas[r];
    mpq_class b = -lp.farkas[rows.size()];

    // hyperplane a.x <= b holds on the active set; any other point beyond it
    // joins the active set, otherwise q is certified a vertex
    std::vector<std::pair<mpq_class, int>> violators;
    for (int j = 0; j < npts; ++j) {
      if (j == idx || in_active[j]) continue;
      mpq_class v = 0;
      for (int c = 0; c < dim; ++c)
        if (ps.points[j][c] != 0) v += a[c] * mpq_class((long)ps.points[j][c]);
      if (v > b) violators.emplace_back(v - b, j);
    }
    if (violators.empty()) {
      VertexCertificate cert;
      cert.vertex = true;
      cert.a = std::move(a);
      cert.b = std::move(b);
      return cert;
    }
    std::sort(violators.begin(), violators.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    size_t take = std::min<size_t>(violators.size(), 64);
    for (size_t v = 0; v < take; ++v) {
      in_active[violators[v].second] = 1;
      active.push_back(violators[v].second);
    }
  }
}

}  // namespace

VertexReport classify_vertices(const PointSet& ps, int threads) {
  (void)threads;  // classification shares one witness set; runs sequentially
  VertexReport report;
  int npts = (int)ps.points.size();
  report.is_vertex.assign(npts, 0);
  report.certificates.resize(npts);
  std::vector<int> witnesses;
  for (int idx = 0; idx < npts; ++idx) {
    VertexCertificate cert = classify_one(ps, idx, witnesses);
    if (!reverify_certificate(ps, idx, cert))
      throw std::logic_error("vertex certificate failed re-verification");
    if (cert.vertex) {
      report.is_vertex[idx] = 1;
      ++report.vertex_count;
      witnesses.push_back(idx);
    }
    report.certificates[idx] = std::move(cert);
  }
  return report;
}

bool is_vertex(const PointSet& ps, int idx) {
  if (idx < 0 || idx >= (int)ps.points.size()) throw std::out_of_range("point index out of range");
  std::vector<int> witnesses;
  VertexCertificate cert = classify_one(ps, idx, witnesses);
  if (!reverify_certificate(ps, idx, cert)) throw std::logic_error("vertex certificate failed re-verification");
  return cert.vertex;
}

}  // namespace omega
