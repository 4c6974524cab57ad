#include "omega/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace omega {

namespace {

bool flat_order(const CyclicFlat& a, const CyclicFlat& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return a.set < b.set;
}

std::string flat_str(const CyclicFlat& f) {
  return mask_to_string(f.set) + " rank " + std::to_string(f.rank);
}

// Index of the unique inclusion-maximal (dir=+1) or -minimal (dir=-1) element of
// `candidates`, or -1 if it does not exist.
int unique_extreme(const std::vector<CyclicFlat>& flats, const std::vector<int>& candidates, int dir) {
  for (int i : candidates) {
    bool extreme = true;
    for (int j : candidates) {
      if (j == i) continue;
      bool beats = dir > 0 ? subset_of(flats[i].set, flats[j].set) && flats[i].set != flats[j].set
                           : subset_of(flats[j].set, flats[i].set) && flats[i].set != flats[j].set;
      if (beats) {
        extreme = false;
        break;
      }
    }
    if (!extreme) continue;
    // extreme among candidates; unique iff it bounds every candidate
    for (int j : candidates) {
      bool bounded = dir > 0 ? subset_of(flats[j].set, flats[i].set) : subset_of(flats[i].set, flats[j].set);
      if (!bounded) return -1;
    }
    return i;
  }
  return -1;
}

// Lattice meet (dir=-1: maximal common lower bound) or join (dir=+1: minimal
// common upper bound) of flats i and j, or -1 when absent/ambiguous.
int meet_or_join(const std::vector<CyclicFlat>& flats, int i, int j, int dir) {
  std::vector<int> bounds;
  for (int k = 0; k < (int)flats.size(); ++k) {
    bool ok = dir > 0 ? subset_of(flats[i].set, flats[k].set) && subset_of(flats[j].set, flats[k].set)
                      : subset_of(flats[k].set, flats[i].set) && subset_of(flats[k].set, flats[j].set);
    if (ok) bounds.push_back(k);
  }
  if (bounds.empty()) return -1;
  return unique_extreme(flats, bounds, -dir);
}

}  // namespace

std::optional<ZViolation> validate_z_axioms(const std::vector<CyclicFlat>& flats, int n) {
  if (n < 1 || n > kMaxGround)
    return ZViolation{"structure", "ground set size " + std::to_string(n) + " out of range"};
  if (flats.empty()) return ZViolation{"structure", "empty family"};
  for (const auto& f : flats) {
    if (!subset_of(f.set, full_mask(n)))
      return ZViolation{"structure", flat_str(f) + " not contained in the ground set"};
    if (f.rank < 0 || f.rank > set_size(f.set))
      return ZViolation{"structure", flat_str(f) + " has rank outside [0, |set|]"};
  }
  for (size_t i = 0; i < flats.size(); ++i)
    for (size_t j = i + 1; j < flats.size(); ++j)
      if (flats[i].set == flats[j].set)
        return ZViolation{"structure", "set " + mask_to_string(flats[i].set) + " listed twice"};

  // Z0: every pair has a meet and a join inside the family.
  for (size_t i = 0; i < flats.size(); ++i)
    for (size_t j = i + 1; j < flats.size(); ++j) {
      if (meet_or_join(flats, (int)i, (int)j, -1) < 0)
        return ZViolation{"Z0", "no meet for " + flat_str(flats[i]) + " and " + flat_str(flats[j])};
      if (meet_or_join(flats, (int)i, (int)j, +1) < 0)
        return ZViolation{"Z0", "no join for " + flat_str(flats[i]) + " and " + flat_str(flats[j])};
    }

  // Z1: the bottom element has rank 0.
  std::vector<int> all(flats.size());
  std::iota(all.begin(), all.end(), 0);
  int bottom = unique_extreme(flats, all, -1);
  if (bottom < 0) return ZViolation{"Z0", "no unique minimal element"};
  if (flats[bottom].rank != 0)
    return ZViolation{"Z1", "minimal element " + flat_str(flats[bottom]) + " has nonzero rank"};

  // Z2: strict containment forces 0 < rank(Y)-rank(X) < |Y \ X|.
  for (size_t i = 0; i < flats.size(); ++i)
    for (size_t j = 0; j < flats.size(); ++j) {
      const auto& x = flats[i];
      const auto& y = flats[j];
      if (x.set == y.set || !subset_of(x.set, y.set)) continue;
      int dr = y.rank - x.rank;
      int ds = set_size(y.set) - set_size(x.set);
      if (!(0 < dr && dr < ds))
        return ZViolation{"Z2", flat_str(x) + " inside " + flat_str(y) + " violates the rank gap"};
    }

  // Z3: submodularity with a surplus for the elements of the intersection that
  // drop below the meet.
  for (size_t i = 0; i < flats.size(); ++i)
    for (size_t j = i + 1; j < flats.size(); ++j) {
      const auto& x = flats[i];
      const auto& y = flats[j];
      int m = meet_or_join(flats, (int)i, (int)j, -1);
      int v = meet_or_join(flats, (int)i, (int)j, +1);
      int surplus = set_size((x.set & y.set) & ~flats[m].set);
      if (x.rank + y.rank < flats[v].rank + flats[m].rank + surplus)
        return ZViolation{"Z3", flat_str(x) + " and " + flat_str(y) + " violate submodularity"};
    }

  return std::nullopt;
}

CyclicFlatLattice make_lattice(std::vector<CyclicFlat> flats, int n) {
  if (auto bad = validate_z_axioms(flats, n))
    throw std::invalid_argument("axiom " + bad->axiom + ": " + bad->detail);
  std::sort(flats.begin(), flats.end(), flat_order);
  CyclicFlatLattice z;
  z.n = n;
  z.flats = std::move(flats);
  z.matroid_rank = z.flats.back().rank + n - set_size(z.flats.back().set);
  return z;
}

int rank_in(const CyclicFlatLattice& z, Mask a) {
  int best = set_size(a);  // the bottom flat bounds this by rank 0 + |A \ loops| anyway
  for (const auto& f : z.flats) best = std::min(best, f.rank + set_size(a & ~f.set));
  return best;
}

CyclicFlatLattice relabel(const CyclicFlatLattice& z, const std::vector<int>& perm) {
  std::vector<CyclicFlat> out;
  out.reserve(z.flats.size());
  for (const auto& f : z.flats) {
    Mask m = 0;
    for (int e : mask_to_elements(f.set)) m |= element_bit(perm[e - 1]);
    out.push_back({m, f.rank});
  }
  std::sort(out.begin(), out.end(), flat_order);
  CyclicFlatLattice w;
  w.n = z.n;
  w.flats = std::move(out);
  w.matroid_rank = z.matroid_rank;
  return w;
}

std::vector<std::pair<int, Mask>> canonical_key(const CyclicFlatLattice& z) {
  std::vector<int> perm(z.n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::pair<int, Mask>> best;
  std::vector<std::pair<int, Mask>> cur(z.flats.size());
  do {
    for (size_t i = 0; i < z.flats.size(); ++i) {
      Mask m = 0;
      for (int e : mask_to_elements(z.flats[i].set)) m |= element_bit(perm[e - 1]);
      cur[i] = {z.flats[i].rank, m};
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

long long basis_count(const CyclicFlatLattice& z) {
  int r = z.matroid_rank;
  long long count = 0;
  // iterate all r-subsets of [n]
  if (r == 0) return 1;
  Mask a = full_mask(r);
  Mask limit = Mask(1) << z.n;
  while (a < limit) {
    if (rank_in(z, a) == r) ++count;
    Mask c = a & -a;
    Mask rr = a + c;
    a = (((rr ^ a) >> 2) / c) | rr;
  }
  return count;
}

}  // namespace omega
