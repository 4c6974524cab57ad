#include "omega/rank2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "omega/polytope.hpp"

namespace omega {

namespace {

// partitions of `total` into parts >= 2, each as a descending part list, in
// descending lexicographic order ({6}, {4,2}, {3,3}, {2,2,2} for total 6)
void partitions_desc(int total, int max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int first = std::min(total, max_part); first >= 2; --first) {
    if (total - first == 1) continue;  // a remainder of 1 can never be filled
    cur.push_back(first);
    partitions_desc(total - first, first, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions_min2_lists(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (total == 0) {
    out.push_back({});
    return out;
  }
  partitions_desc(total, total, cur, out);
  return out;
}

}  // namespace

int Rank2Profile::free_elements() const {
  int s = loops;
  for (int c : class_sizes) s += c;
  return n - s;
}

bool Rank2Profile::valid() const {
  if (n < 2 || loops < 0 || free_elements() < 0) return false;
  if (!std::is_sorted(class_sizes.rbegin(), class_sizes.rend())) return false;
  for (int c : class_sizes) {
    if (c < 2) return false;
  }
  int p = (int)class_sizes.size();
  int f = free_elements();
  return p >= 2 || (p == 1 && f >= 1) || (p == 0 && f >= 2);
}

Rank2Class classify_rank2_schubert(const SchubertLabel& s) {
  check_label(s);
  if (s.rank() != 2) throw std::invalid_argument("rank-2 label expected");
  int x1 = s.xs[0], x2 = s.xs[1], n = s.n;
  Rank2Class out;
  out.z = schubert_lattice(s);
  if (x1 == n - 1 && x2 == n)
    out.type = 1;
  else if (x2 == x1 + 1)
    out.type = 2;
  else if (x2 == n)
    out.type = 3;
  else
    out.type = 4;
  return out;
}

Expansion rank2_expansion(const Rank2Profile& p) {
  if (!p.valid()) throw std::invalid_argument("invalid rank-2 profile");
  Expansion e;
  e.r = 2;
  e.n = p.n;
  int l = p.loops;
  e.add({p.n, {l + 1, l + 2}}, 1 - (long long)p.class_sizes.size());
  for (int c : p.class_sizes) e.add({p.n, {l + 1, l + c + 1}}, 1);
  return e;
}

std::vector<Rank2Profile> all_rank2_profiles(int n) {
  std::vector<Rank2Profile> out;
  for (int l = 0; l + 2 <= n; ++l)
    for (int mass = 0; mass <= n - l; ++mass)
      for (auto& parts : partitions_min2_lists(mass)) {
        Rank2Profile p{n, l, parts};
        if (p.valid()) out.push_back(std::move(p));
      }
  return out;
}

long long count_m2_bruteforce(int n) { return (long long)all_rank2_profiles(n).size(); }

long long partitions_min2(int n) {
  if (n < 0) return 0;
  std::vector<long long> dp(n + 1, 0);
  dp[0] = 1;
  for (int part = 2; part <= n; ++part)
    for (int s = part; s <= n; ++s) dp[s] += dp[s - part];
  return dp[n];
}

long long count_m2(int n) {
  if (n < 2) throw std::invalid_argument("rank-2 matroids need n >= 2");
  std::vector<long long> m2(std::max(n + 1, 4), 0);
  m2[2] = count_m2_bruteforce(2);
  m2[3] = count_m2_bruteforce(3);
  for (int k = 4; k <= n; ++k) m2[k] = 2 * m2[k - 1] - m2[k - 2] + partitions_min2(k);
  return m2[n];
}

PartitionMatrix build_partition_matrix(int n) {
  if (n < 4) throw std::invalid_argument("partition matrix needs n >= 4");
  PartitionMatrix u;
  u.n = n;
  for (int s = n - 1; s >= 2; --s) u.part_sizes.push_back(s);
  for (auto& parts : partitions_min2_lists(n)) {
    if (parts.size() < 2) continue;
    std::vector<int> mult(u.part_sizes.size(), 0);
    for (int c : parts) mult[n - 1 - c] += 1;
    u.columns.push_back(std::move(mult));
  }
  std::sort(u.columns.begin(), u.columns.end(), std::greater<>());
  return u;
}

std::vector<MatrixColumn> build_v(int n) {
  std::vector<MatrixColumn> cols;
  if (n < 4) return cols;
  for (auto& prev : build_v(n - 1)) {
    Rank2Profile p{n, 0, prev.desc.class_sizes};
    cols.push_back({rank2_expansion(p), rank2_descriptor(n, 0, p.class_sizes)});
  }
  PartitionMatrix u = build_partition_matrix(n);
  for (const auto& mult : u.columns) {
    std::vector<int> sizes;
    for (size_t i = 0; i < mult.size(); ++i)
      for (int k = 0; k < mult[i]; ++k) sizes.push_back(u.part_sizes[i]);
    Rank2Profile p{n, 0, sizes};
    cols.push_back({rank2_expansion(p), rank2_descriptor(n, 0, sizes)});
  }
  return cols;
}

SparseIntMatrix build_o2(int n) {
  if (n < 2) throw std::invalid_argument("n below supported range");
  SparseIntMatrix m = empty_matrix(2, 2);
  {
    MatrixColumn base;
    base.desc = schubert_descriptor({2, {1, 2}});
    base.coeffs.r = 2;
    base.coeffs.n = 2;
    base.coeffs.add({2, {1, 2}}, 1);
    m.columns.push_back(std::move(base));
  }
  while (m.n < n) m = build_o2_step(m);
  return m;
}

SparseIntMatrix build_o2_step(const SparseIntMatrix& prev) {
  int n = prev.n + 1;
  SparseIntMatrix m = empty_matrix(2, n);

  // classes with a loop: every class on [n-1] plus one loop; all labels shift by one
  for (const auto& col : prev.columns) {
    MatrixColumn shifted;
    shifted.coeffs.r = 2;
    shifted.coeffs.n = n;
    for (const auto& [s, c] : col.coeffs.coeffs) shifted.coeffs.add({n, {s.xs[0] + 1, s.xs[1] + 1}}, c);
    if (col.desc.kind == DescriptorKind::schubert)
      shifted.desc = schubert_descriptor({n, {col.desc.label.xs[0] + 1, col.desc.label.xs[1] + 1}});
    else
      shifted.desc = rank2_descriptor(n, col.desc.loops + 1, col.desc.class_sizes);
    m.columns.push_back(std::move(shifted));
  }

  // loopless Schubert classes: unit columns in row order S(1,n), ..., S(1,2)
  for (int k = n; k >= 2; --k) {
    MatrixColumn unit;
    unit.desc = schubert_descriptor({n, {1, k}});
    unit.coeffs.r = 2;
    unit.coeffs.n = n;
    unit.coeffs.add({n, {1, k}}, 1);
    m.columns.push_back(std::move(unit));
  }

  // loopless classes with at least two parallel classes
  for (auto& col : build_v(n)) m.columns.push_back(std::move(col));
  return m;
}

std::vector<MatroidDescriptor> extremal_rank2(int n) {
  SparseIntMatrix m = build_o2(n);
  PointSet ps = points_from_matrix(m);
  VertexReport report = classify_vertices(ps);
  std::vector<MatroidDescriptor> out;
  for (int i = 0; i < (int)m.columns.size(); ++i)
    if (report.is_vertex[i]) out.push_back(m.columns[i].desc);
  return out;
}

}  // namespace omega
