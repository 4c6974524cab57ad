#include "omega/expansion.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>

namespace omega {

void Expansion::add(const SchubertLabel& s, long long c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

long long Expansion::at(const SchubertLabel& s) const {
  auto it = coeffs.find(s);
  return it == coeffs.end() ? 0 : it->second;
}

long long Expansion::coefficient_sum() const {
  long long sum = 0;
  for (const auto& [s, c] : coeffs) sum += c;
  return sum;
}

std::string expansion_to_string(const Expansion& e) {
  std::string out;
  for (const auto& [s, c] : e.coeffs) {
    if (!out.empty()) out += " ";
    out += label_to_string(s) + ":" + std::to_string(c);
  }
  return out.empty() ? "0" : out;
}

ChainLattice build_chain_lattice(const CyclicFlatLattice& z) {
  int m = (int)z.flats.size();
  std::vector<std::vector<int>> chains;
  // flats are sorted by (rank, set), so containment only points forward
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int last) -> void {
    if (z.flats[last].set == z.max_flat().set) {
      chains.push_back(cur);
      return;
    }
    for (int next = last + 1; next < m; ++next) {
      if (!subset_of(z.flats[last].set, z.flats[next].set) || z.flats[next].set == z.flats[last].set) continue;
      cur.push_back(next);
      self(self, next);
      cur.pop_back();
    }
  };
  cur.push_back(0);
  dfs(dfs, 0);

  int k = (int)chains.size();
  std::vector<std::vector<bool>> leq(k + 1, std::vector<bool>(k + 1, false));
  for (int i = 0; i <= k; ++i) leq[i][i] = true;
  for (int i = 0; i < k; ++i) {
    leq[i][k] = true;
    for (int j = 0; j < k; ++j)
      if (i != j) leq[i][j] = std::includes(chains[j].begin(), chains[j].end(), chains[i].begin(), chains[i].end());
  }
  return {std::move(chains), FinitePoset(std::move(leq))};
}

SchubertLabel chain_to_schubert_label(const std::vector<std::pair<int, int>>& signature, int r, int n) {
  // one lookup table per (r, n), keyed by the full cyclic-flat signature of each label
  using Table = std::map<std::vector<std::pair<int, int>>, SchubertLabel>;
  static std::map<std::pair<int, int>, Table> tables;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = tables.try_emplace({r, n});
  if (fresh) {
    for (const auto& s : canonical_schubert_order(r, n)) {
      auto z = schubert_lattice(s);
      std::vector<std::pair<int, int>> key;
      for (const auto& f : z.flats) key.emplace_back(set_size(f.set), f.rank);
      it->second.emplace(std::move(key), s);
    }
  }
  auto hit = it->second.find(signature);
  if (hit == it->second.end()) throw std::invalid_argument("chain signature matches no Schubert label");
  return hit->second;
}

Expansion schubert_expansion_oracle(const CyclicFlatLattice& z) {
  if (z.matroid_rank != 2 && z.matroid_rank != 3) throw std::domain_error("unsupported rank");
  ChainLattice cl = build_chain_lattice(z);
  Expansion e;
  e.r = z.matroid_rank;
  e.n = z.n;
  for (int c = 0; c < (int)cl.chains.size(); ++c) {
    long long coeff = -cl.poset.moebius(c, cl.top());
    if (coeff == 0) continue;
    std::vector<std::pair<int, int>> signature;
    for (int idx : cl.chains[c]) signature.emplace_back(set_size(z.flats[idx].set), z.flats[idx].rank);
    e.add(chain_to_schubert_label(signature, e.r, e.n), coeff);
  }
  return e;
}

bool in_base_polytope(const CyclicFlatLattice& z, const std::vector<mpq_class>& x) {
  if ((int)x.size() != z.n) throw std::invalid_argument("point dimension mismatch");
  mpq_class total = 0;
  for (const auto& v : x) {
    if (v < 0 || v > 1) return false;
    total += v;
  }
  if (total != z.matroid_rank) return false;
  for (const auto& f : z.flats) {
    mpq_class sum = 0;
    for (int e : mask_to_elements(f.set)) sum += x[e - 1];
    if (sum > f.rank) return false;
  }
  return true;
}

bool in_base_polytope_all_subsets(const CyclicFlatLattice& z, const std::vector<mpq_class>& x) {
  if ((int)x.size() != z.n) throw std::invalid_argument("point dimension mismatch");
  mpq_class total = 0;
  for (const auto& v : x) {
    if (v < 0) return false;
    total += v;
  }
  if (total != z.matroid_rank) return false;
  for (Mask a = 1; a < (Mask(1) << z.n); ++a) {
    mpq_class sum = 0;
    for (int e : mask_to_elements(a)) sum += x[e - 1];
    if (sum > rank_in(z, a)) return false;
  }
  return true;
}

namespace {

// Integer view of a rational point: coords[i] / den, with den the common
// denominator. Membership tests then stay in 64-bit arithmetic.
struct IntegerPoint {
  std::vector<long long> coords;
  long long den = 1;
};

// flat masks and scaled rank bounds for one matroid in the identity
struct MatroidConstraints {
  std::vector<Mask> flat_masks;
  std::vector<int> flat_ranks;
};

bool arrangement_in_polytope(const MatroidConstraints& mc, const std::vector<long long>& subset_sums,
                             long long den) {
  for (size_t i = 0; i < mc.flat_masks.size(); ++i)
    if (subset_sums[mc.flat_masks[i]] > (long long)mc.flat_ranks[i] * den) return false;
  return true;
}

}  // namespace

std::optional<IndicatorCounterexample> verify_expansion_indicator(const CyclicFlatLattice& z,
                                                                  const Expansion& e, int samples,
                                                                  std::uint64_t seed) {
  if (z.n > 7) throw std::domain_error("unsupported size for indicator verification");
  if (e.n != z.n || e.r != z.matroid_rank) throw std::invalid_argument("expansion shape mismatch");
  int n = z.n;
  int r = z.matroid_rank;

  MatroidConstraints target;
  for (const auto& f : z.flats) {
    target.flat_masks.push_back(f.set);
    target.flat_ranks.push_back(f.rank);
  }
  std::vector<MatroidConstraints> terms;
  std::vector<long long> lambdas;
  for (const auto& [s, c] : e.coeffs) {
    auto zs = schubert_lattice(s);
    MatroidConstraints mc;
    for (const auto& f : zs.flats) {
      mc.flat_masks.push_back(f.set);
      mc.flat_ranks.push_back(f.rank);
    }
    terms.push_back(std::move(mc));
    lambdas.push_back(c);
  }

  std::vector<IntegerPoint> points;
  for (Mask a = 0; a < (Mask(1) << n); ++a) {
    if (set_size(a) != r) continue;
    IntegerPoint p;
    p.coords.resize(n);
    for (int i = 0; i < n; ++i) p.coords[i] = contains(a, i + 1) ? 1 : 0;
    points.push_back(std::move(p));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den_dist(1, 100);
  int unit_points = (int)points.size();
  while ((int)points.size() < unit_points + samples) {
    std::vector<mpq_class> q(n);
    for (int i = 0; i + 1 < n; ++i) {
      int den = den_dist(rng);
      std::uniform_int_distribution<int> num_dist(0, den);
      q[i] = mpq_class(num_dist(rng), den);
      q[i].canonicalize();
    }
    mpq_class last = r;
    for (int i = 0; i + 1 < n; ++i) last -= q[i];
    if (last < 0 || last > 1) continue;
    q[n - 1] = last;
    long long den = 1;
    for (const auto& v : q) den = std::lcm(den, v.get_den().get_si());
    IntegerPoint p;
    p.den = den;
    p.coords.resize(n);
    for (int i = 0; i < n; ++i)
      p.coords[i] = mpz_class(q[i].get_num() * (long)(den / q[i].get_den().get_si())).get_si();
    points.push_back(std::move(p));
  }

  std::vector<long long> subset_sums(Mask(1) << n);
  for (auto& p : points) {
    // coordinate bounds and the total are arrangement-invariant
    long long total = 0;
    bool in_box = true;
    for (long long c : p.coords) {
      total += c;
      if (c < 0 || c > p.den) in_box = false;
    }
    if (!in_box || total != r * p.den) continue;

    std::vector<long long> y = p.coords;
    std::sort(y.begin(), y.end());
    long long lhs = 0, rhs = 0;
    do {
      subset_sums[0] = 0;
      for (Mask a = 1; a < (Mask(1) << n); ++a) {
        Mask low = a & -a;
        subset_sums[a] = subset_sums[a ^ low] + y[std::countr_zero(low)];
      }
      if (arrangement_in_polytope(target, subset_sums, p.den)) ++lhs;
      for (size_t t = 0; t < terms.size(); ++t)
        if (arrangement_in_polytope(terms[t], subset_sums, p.den)) rhs += lambdas[t];
    } while (std::next_permutation(y.begin(), y.end()));
    if (lhs != rhs) {
      IndicatorCounterexample bad;
      for (long long c : p.coords)
        bad.point.push_back(std::to_string(c) + (p.den == 1 ? "" : "/" + std::to_string(p.den)));
      bad.lhs = lhs;
      bad.rhs = rhs;
      return bad;
    }
  }
  return std::nullopt;
}

}  // namespace omega
