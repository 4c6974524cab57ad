// Rank-3 column states: covers of inseparable flats, parallel-class insertion,
// the recursive matrix assembly, and an independent exhaustive enumeration.

#include "omega/rank3.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "omega/expansion.hpp"
#include "omega/rank2.hpp"

namespace omega {

namespace {

// all admissible flats on [i]: size 3..i-1
std::vector<Mask> cover_candidates(int i) {
  std::vector<Mask> out;
  for (Mask m = 0; m <= full_mask(i); ++m) {
    int s = set_size(m);
    if (s >= 3 && s <= i - 1) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return std::make_pair(set_size(a), a) < std::make_pair(set_size(b), b);
  });
  return out;
}

bool flats_compatible(Mask f, Mask g) { return f != g && set_size(f & g) <= 1; }

Mask relabel_mask(Mask m, const std::vector<int>& perm) {
  Mask out = 0;
  for (int e : mask_to_elements(m)) out |= element_bit(perm[e - 1]);
  return out;
}

std::vector<Mask> relabel_flats(const std::vector<Mask>& flats, const std::vector<int>& perm) {
  std::vector<Mask> out;
  out.reserve(flats.size());
  for (Mask f : flats) out.push_back(relabel_mask(f, perm));
  std::sort(out.begin(), out.end());
  return out;
}

// Groups points by an iterated refinement invariant; any isomorphism maps a
// block onto the block with the same invariant, so searching block-respecting
// permutations is enough for canonical forms and automorphisms.
std::vector<std::vector<int>> refinement_blocks(const Cover& c) {
  int i = c.ground;
  std::vector<std::vector<long long>> key(i);
  for (int p = 1; p <= i; ++p)
    for (int s = 3; s <= i - 1; ++s) {
      long long cnt = 0;
      for (Mask f : c.flats)
        if (set_size(f) == s && contains(f, p)) ++cnt;
      key[p - 1].push_back(cnt);
    }

  size_t distinct = 0;
  for (int round = 0; round < i; ++round) {
    std::map<std::vector<long long>, long long> ids;
    for (int p = 1; p <= i; ++p) ids.emplace(key[p - 1], 0);
    long long next = 0;
    for (auto& kv : ids) kv.second = next++;
    if (ids.size() == (size_t)i || ids.size() == distinct) break;
    distinct = ids.size();

    // new invariant: own id plus the sorted view of each incident flat's ids
    std::vector<std::vector<long long>> refined(i);
    for (int p = 1; p <= i; ++p) {
      refined[p - 1].push_back(ids[key[p - 1]]);
      std::vector<std::vector<long long>> incident;
      for (Mask f : c.flats) {
        if (!contains(f, p)) continue;
        std::vector<long long> others;
        for (int q : mask_to_elements(f))
          if (q != p) others.push_back(ids[key[q - 1]]);
        std::sort(others.begin(), others.end());
        others.insert(others.begin(), set_size(f));
        incident.push_back(std::move(others));
      }
      std::sort(incident.begin(), incident.end());
      for (auto& v : incident) {
        refined[p - 1].push_back(-1);
        refined[p - 1].insert(refined[p - 1].end(), v.begin(), v.end());
      }
    }
    key = std::move(refined);
  }

  std::map<std::vector<long long>, std::vector<int>> blocks;
  for (int p = 1; p <= i; ++p) blocks[key[p - 1]].push_back(p);
  std::vector<std::vector<int>> out;
  for (auto& kv : blocks) out.push_back(kv.second);
  return out;
}

// Runs fn over block-respecting permutations. Automorphisms map each block
// onto itself; canonicalization instead sends the blocks, in invariant order,
// onto consecutive position ranges so isomorphic covers collide.
enum class PermImage { same_block, position_ranges };

void for_block_perms(const std::vector<std::vector<int>>& blocks, int i, PermImage image,
                     const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<std::vector<int>> target;
  if (image == PermImage::same_block) {
    target = blocks;
  } else {
    int off = 0;
    for (const auto& b : blocks) {
      std::vector<int> range(b.size());
      std::iota(range.begin(), range.end(), off + 1);
      off += (int)b.size();
      target.push_back(std::move(range));
    }
  }
  std::vector<int> perm(i);
  for (;;) {
    for (size_t b = 0; b < blocks.size(); ++b)
      for (size_t k = 0; k < blocks[b].size(); ++k) perm[blocks[b][k] - 1] = target[b][k];
    fn(perm);
    size_t b = 0;
    while (b < target.size() && !std::next_permutation(target[b].begin(), target[b].end())) ++b;
    if (b == target.size()) break;
  }
}

}  // namespace

std::vector<Mask> canonical_cover(const Cover& c) {
  if (c.flats.empty()) return {};
  std::vector<Mask> best;
  for_block_perms(refinement_blocks(c), c.ground, PermImage::position_ranges,
                  [&](const std::vector<int>& perm) {
    std::vector<Mask> img = relabel_flats(c.flats, perm);
    if (best.empty() || img < best) best = std::move(img);
  });
  return best;
}

std::vector<std::vector<int>> cover_automorphisms(const Cover& c) {
  std::vector<Mask> base = c.flats;
  std::sort(base.begin(), base.end());
  std::vector<std::vector<int>> out;
  for_block_perms(refinement_blocks(c), c.ground, PermImage::same_block,
                  [&](const std::vector<int>& perm) {
    if (relabel_flats(c.flats, perm) == base) out.push_back(perm);
  });
  return out;
}

std::vector<Cover> cycle_covers(int i) {
  if (i < 3 || i > kMaxGround) throw std::invalid_argument("point count out of range");
  std::vector<Mask> cands = cover_candidates(i);
  std::set<std::vector<Mask>> seen;
  seen.insert(std::vector<Mask>{});
  std::vector<std::vector<Mask>> level = {{}};
  // grow one flat at a time; every class with k+1 flats extends some class with
  // k flats, so extending each representative by every compatible flat is
  // exhaustive once images are deduplicated canonically
  while (!level.empty()) {
    std::vector<std::vector<Mask>> next;
    for (const auto& rep : level)
      for (Mask f : cands) {
        bool ok = true;
        for (Mask g : rep)
          if (!flats_compatible(f, g)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        Cover child{i, rep};
        child.flats.push_back(f);
        std::vector<Mask> key = canonical_cover(child);
        if (seen.insert(key).second) next.push_back(std::move(key));
      }
    level = std::move(next);
  }

  std::vector<std::vector<Mask>> all(seen.begin(), seen.end());
  std::sort(all.begin(), all.end(), [](const std::vector<Mask>& a, const std::vector<Mask>& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Cover> out;
  for (auto& flats : all) out.push_back({i, std::move(flats)});
  return out;
}

std::vector<Cover> cycle_covers_bruteforce(int i) {
  if (i < 3 || i > kMaxGround) throw std::invalid_argument("point count out of range");
  std::vector<Mask> cands = cover_candidates(i);
  std::set<std::vector<Mask>> seen;
  std::vector<Mask> current;
  std::function<void(size_t)> walk = [&](size_t start) {
    seen.insert(canonical_cover({i, current}));
    for (size_t j = start; j < cands.size(); ++j) {
      bool ok = true;
      for (Mask g : current)
        if (!flats_compatible(cands[j], g)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(cands[j]);
      walk(j + 1);
      current.pop_back();
    }
  };
  walk(0);

  std::vector<std::vector<Mask>> all(seen.begin(), seen.end());
  std::sort(all.begin(), all.end(), [](const std::vector<Mask>& a, const std::vector<Mask>& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Cover> out;
  for (auto& flats : all) out.push_back({i, std::move(flats)});
  return out;
}

Mask cover_coloops(const Cover& c) {
  if (c.ground == 3) return full_mask(3);
  Mask out = 0;
  for (Mask f : c.flats)
    if (set_size(f) == c.ground - 1) out |= full_mask(c.ground) & ~f;
  return out;
}

CyclicFlatLattice cover_lattice(const Cover& c, int n_total) {
  if (n_total < c.ground) throw std::invalid_argument("ground set smaller than the cover");
  // extra elements beyond the cover's points are free points of the same rank
  std::vector<int> ones(n_total, 1);
  return descriptor_to_lattice(rank3_cover_descriptor(n_total, 0, n_total, c.flats, ones));
}

Expansion simple_coefficients(const Cover& c, int n_total) {
  Expansion e{3, n_total};
  e.add({n_total, {1, 2, 3}}, 1 - (long long)c.flats.size());
  for (Mask f : c.flats) e.add({n_total, {1, 2, set_size(f) + 1}}, 1);
  return e;
}

Rank3State make_state(const Cover& c, const std::vector<int>& multiplicities, int loops) {
  int n = loops + std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
  Rank3State s;
  s.desc = rank3_cover_descriptor(n, loops, c.ground, c.flats, multiplicities);
  s.lattice = descriptor_to_lattice(s.desc);
  s.coeffs = schubert_expansion_oracle(s.lattice);
  return s;
}

namespace {

// inverse of the descriptor layout: parallel classes, their sizes, and the
// cover of inseparable flats as point-index masks
struct Parts {
  Mask loops = 0;
  std::vector<Mask> blocks;  // one per point, ordered by least element
  std::vector<int> m;
  Cover cover;
};

Parts decompose(const CyclicFlatLattice& z) {
  if (z.matroid_rank != 3) throw std::invalid_argument("not a rank-3 lattice");
  Parts p;
  p.loops = z.loops();
  Mask used = p.loops;
  for (const auto& f : z.flats)
    if (f.rank == 1) {
      p.blocks.push_back(f.set & ~p.loops);
      used |= f.set;
    }
  for (int e = 1; e <= z.n; ++e)
    if (!contains(used, e)) p.blocks.push_back(element_bit(e));
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](Mask a, Mask b) { return (a & -a) < (b & -b); });
  for (Mask b : p.blocks) p.m.push_back(set_size(b));

  p.cover.ground = (int)p.blocks.size();
  for (const auto& f : z.flats) {
    if (f.rank != 2) continue;
    Mask pts = 0;
    for (size_t k = 0; k < p.blocks.size(); ++k)
      if (subset_of(p.blocks[k], f.set)) pts |= element_bit((int)k + 1);
    // two-point rank-2 flats are unions of parallel classes, not cover flats
    if (set_size(pts) >= 3) p.cover.flats.push_back(pts);
  }
  std::sort(p.cover.flats.begin(), p.cover.flats.end());
  return p;
}

int point_of(const Parts& p, int e) {
  for (size_t k = 0; k < p.blocks.size(); ++k)
    if (contains(p.blocks[k], e)) return (int)k + 1;
  throw std::invalid_argument("element is not a point");
}

}  // namespace

StateStats state_stats(const Rank3State& s) {
  Parts p = decompose(s.lattice);
  StateStats st;
  st.t = (int)p.cover.flats.size();
  for (Mask f : p.cover.flats) {
    int size = 0;
    for (int q : mask_to_elements(f)) size += p.m[q - 1];
    st.flat_sizes.push_back(size);
  }
  std::sort(st.flat_sizes.begin(), st.flat_sizes.end());
  Mask covered = 0;
  for (Mask f : p.cover.flats) covered |= f;
  Mask k = cover_coloops(p.cover);
  for (int q = 1; q <= p.cover.ground; ++q) {
    if (p.m[q - 1] >= 2) {
      ++st.classes;
      if (contains(covered, q)) ++st.contained_classes;
    } else {
      if (!contains(covered, q)) ++st.free_points;
      if (contains(k, q)) ++st.coloops;
    }
  }
  return st;
}

InsertionKind classify_insertion(const Rank3State& s, int e) {
  if (e < 1 || e > s.lattice.n) throw std::invalid_argument("element out of range");
  Parts p = decompose(s.lattice);
  if (contains(p.loops, e)) throw std::invalid_argument("cannot insert parallel to a loop");
  int q = point_of(p, e);
  bool in_flat = false;
  for (Mask f : p.cover.flats)
    if (contains(f, q)) in_flat = true;

  InsertionKind out;
  if (p.m[q - 1] >= 2)
    out.c = in_flat ? InsertionCase::contained_class : InsertionCase::uncontained_class;
  else
    out.c = in_flat ? InsertionCase::covered_singleton : InsertionCase::free_uncontained;

  // a four-flat chain needs ranks 0 < 1 < 2 < 3: a class inside a rank-2 flat
  // plus the full-rank top
  bool top = s.lattice.max_flat().rank == 3;
  bool nested = false;
  for (const auto& a : s.lattice.flats)
    for (const auto& b : s.lattice.flats)
      if (a.rank == 1 && b.rank == 2 && subset_of(a.set, b.set)) nested = true;
  out.exceptional = !(top && nested);
  return out;
}

Rank3State insert_parallel(const Rank3State& s, int e) {
  if (e < 1 || e > s.lattice.n) throw std::invalid_argument("element out of range");
  Parts p = decompose(s.lattice);
  if (contains(p.loops, e)) throw std::invalid_argument("cannot insert parallel to a loop");
  int q = point_of(p, e);
  std::vector<int> m = p.m;
  ++m[q - 1];
  return make_state(p.cover, m, set_size(p.loops));
}

Expansion case1_inserted_coeffs(const Rank3State& s) {
  Parts p = decompose(s.lattice);
  Mask covered = 0;
  for (Mask f : p.cover.flats) covered |= f;
  bool has_free = false;
  for (int q = 1; q <= p.cover.ground; ++q)
    if (p.m[q - 1] == 1 && !contains(covered, q)) has_free = true;
  if (!has_free) throw std::invalid_argument("no free point to duplicate");

  int n1 = s.lattice.n + 1;
  Expansion out{3, n1};
  for (const auto& [lab, c] : s.coeffs.coeffs) out.add({n1, lab.xs}, c);

  // duplicating a free point turns it into a new class of size 2 joined to
  // every existing class by a rank-2 union flat
  std::vector<int> sizes;
  for (int mult : p.m)
    if (mult >= 2) sizes.push_back(mult);
  long long cls = (long long)sizes.size();
  out.add({n1, {1, 2, 3}}, cls - 1);
  out.add({n1, {1, 3, 4}}, 1 - cls);
  for (int sz : sizes) {
    out.add({n1, {1, sz + 1, sz + 2}}, -1);
    out.add({n1, {1, 2, sz + 3}}, -1);
    out.add({n1, {1, sz + 1, sz + 3}}, 1);
    out.add({n1, {1, 3, sz + 3}}, 1);
  }
  return out;
}

Expansion exceptional1_inserted_coeffs(const Rank3State& s) {
  // lattices without a four-flat chain obey the same update: the shorter chain
  // stock cancels against terms that vanish there anyway
  return case1_inserted_coeffs(s);
}

std::vector<Rank3State> enumerate_rank3_column_states(int n) {
  if (n < 3 || n > kMaxGround) throw std::invalid_argument("ground set size out of range");
  std::vector<Rank3State> out;
  for (int i = n; i >= 3; --i) {
    int extras = n - i;
    for (const Cover& c : cycle_covers(i)) {
      auto auts = cover_automorphisms(c);

      std::vector<std::vector<int>> patterns;
      std::vector<int> cur(i, 1);
      std::function<void(int, int)> gen = [&](int pos, int rem) {
        if (pos == i) {
          if (rem == 0) patterns.push_back(cur);
          return;
        }
        for (int add = 0; add <= rem; ++add) {
          cur[pos] = 1 + add;
          gen(pos + 1, rem - add);
        }
        cur[pos] = 1;
      };
      gen(0, extras);

      for (const auto& m : patterns) {
        // keep one pattern per orbit of the cover's symmetries
        bool minimal = true;
        std::vector<int> img(i);
        for (const auto& perm : auts) {
          for (int q = 1; q <= i; ++q) img[perm[q - 1] - 1] = m[q - 1];
          if (img < m) {
            minimal = false;
            break;
          }
        }
        if (!minimal) continue;

        // replay: start from the all-ones state and grow one class at a time
        Rank3State st = make_state(c, std::vector<int>(i, 1), 0);
        for (int q = 1; q <= i; ++q)
          for (int k = 1; k < m[q - 1]; ++k) {
            int e = 1;
            for (int w = 1; w < q; ++w) e += st.desc.multiplicities[w - 1];
            st = insert_parallel(st, e);
          }
        if (st.desc.multiplicities != m)
          throw std::logic_error("insertion replay lost the class layout");
        out.push_back(std::move(st));
      }
    }
  }
  return out;
}

SparseIntMatrix build_o3_step(const SparseIntMatrix& o3_prev, const SparseIntMatrix& o2_prev) {
  int n = o2_prev.n + 1;
  if (o2_prev.r != 2 || n < 3) throw std::invalid_argument("rank-2 matrix of unusable size");
  if (o3_prev.cols() > 0 && (o3_prev.r != 3 || o3_prev.n != n - 1))
    throw std::invalid_argument("rank-3 matrix of unusable size");

  SparseIntMatrix out = empty_matrix(3, n);
  std::map<std::vector<std::pair<std::vector<int>, long long>>, int> seen;
  auto push_unique = [&](MatrixColumn col) {
    std::vector<std::pair<std::vector<int>, long long>> key;
    for (const auto& [lab, c] : col.coeffs.coeffs) key.emplace_back(lab.xs, c);
    if (seen.emplace(std::move(key), out.cols()).second) out.columns.push_back(std::move(col));
  };

  for (auto& st : enumerate_rank3_column_states(n))
    push_unique({std::move(st.coeffs), std::move(st.desc)});

  // rank-2 classes with a coloop appended; the coloop never enters a cyclic
  // flat, so each label just gains the slack entry n
  for (const auto& col : o2_prev.columns) {
    MatrixColumn c;
    c.coeffs = Expansion{3, n};
    for (const auto& [lab, v] : col.coeffs.coeffs) {
      std::vector<int> xs = lab.xs;
      xs.push_back(n);
      c.coeffs.add({n, xs}, v);
    }
    if (col.desc.kind == DescriptorKind::schubert) {
      std::vector<int> xs = col.desc.label.xs;
      xs.push_back(n);
      c.desc = schubert_descriptor({n, xs});
    } else {
      c.desc = rank3_coloop_descriptor(n, col.desc.loops, col.desc.class_sizes);
    }
    push_unique(std::move(c));
  }

  // rank-3 classes with one loop added; relabeled so the loop is element 1,
  // every flat grows by it and each label shifts up by one
  for (const auto& col : o3_prev.columns) {
    MatrixColumn c;
    c.coeffs = Expansion{3, n};
    for (const auto& [lab, v] : col.coeffs.coeffs) {
      std::vector<int> xs = lab.xs;
      for (int& x : xs) ++x;
      c.coeffs.add({n, xs}, v);
    }
    switch (col.desc.kind) {
      case DescriptorKind::schubert: {
        std::vector<int> xs = col.desc.label.xs;
        for (int& x : xs) ++x;
        c.desc = schubert_descriptor({n, xs});
        break;
      }
      case DescriptorKind::rank3:
        if (col.desc.coloop)
          c.desc = rank3_coloop_descriptor(n, col.desc.loops + 1, col.desc.class_sizes);
        else
          c.desc = rank3_cover_descriptor(n, col.desc.loops + 1, col.desc.cover_ground,
                                          col.desc.cover, col.desc.multiplicities);
        break;
      default:
        throw std::logic_error("rank-2 descriptor in a rank-3 matrix");
    }
    push_unique(std::move(c));
  }
  return out;
}

SparseIntMatrix build_o3(int n) {
  if (n < 3) throw std::invalid_argument("n below supported range");
  if (n > kMaxGround) throw std::invalid_argument("n above supported range");
  SparseIntMatrix o2 = build_o2(2);
  SparseIntMatrix o3 = build_o3_step({}, o2);
  for (int k = 4; k <= n; ++k) {
    o2 = build_o2_step(o2);
    o3 = build_o3_step(o3, o2);
  }
  return o3;
}

namespace {

// families of pairwise disjoint subsets of `rest`, each of size >= 2; the least
// undecided element either stays a singleton or picks its whole class, so each
// family comes out exactly once
void class_families(Mask rest, std::vector<Mask>& cur, std::vector<std::vector<Mask>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  int e = mask_to_elements(rest).front();
  Mask others = rest & ~element_bit(e);
  class_families(others, cur, out);
  for (Mask sub = others; sub != 0; sub = (sub - 1) & others) {
    cur.push_back(sub | element_bit(e));
    class_families(others & ~sub, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CyclicFlatLattice> brute_force_rank3_lattices(int n) {
  if (n < 3 || n > 8) throw std::invalid_argument("exhaustive search limited to small ground sets");
  std::map<std::vector<std::pair<int, Mask>>, CyclicFlatLattice> found;

  for (int l = 0; l + 3 <= n; ++l) {
    Mask loops = full_mask(l);
    Mask rest = full_mask(n) & ~loops;

    std::vector<std::vector<Mask>> families;
    std::vector<Mask> cur;
    class_families(rest, cur, families);

    for (const auto& classes : families) {
      std::vector<Mask> units = classes;
      for (int e : mask_to_elements(rest)) {
        bool classed = false;
        for (Mask k : classes)
          if (contains(k, e)) classed = true;
        if (!classed) units.push_back(element_bit(e));
      }
      std::sort(units.begin(), units.end());

      // rank-2 candidates: unions of at least two whole units spanning at
      // least three elements, leaving every contained class a deficit of two
      std::vector<Mask> cands;
      int u = (int)units.size();
      for (Mask pick = 1; pick < full_mask(u); ++pick) {
        if (set_size(pick) < 2) continue;
        Mask set = 0;
        for (int k : mask_to_elements(pick)) set |= units[k - 1];
        if (set_size(set) < 3) continue;
        bool ok = true;
        for (Mask k : classes)
          if (subset_of(k, set) && set_size(set & ~k) < 2) ok = false;
        if (ok) cands.push_back(set);
      }
      std::sort(cands.begin(), cands.end());

      auto compatible = [&](Mask a, Mask b) {
        Mask inter = a & b;
        if (set_size(inter) <= 1) return true;
        for (Mask k : classes)
          if (inter == k) return true;
        return false;
      };

      std::vector<Mask> family;
      std::function<void(size_t)> walk = [&](size_t start) {
        for (int top = 0; top < 2; ++top) {
          // quick rank/top screens before the full axiom check
          if (top && l > n - 4) continue;
          bool oversized = false;
          for (Mask f : family)
            if (top && set_size(f) + l >= n - 1) oversized = true;
          if (oversized) continue;
          std::vector<CyclicFlat> flats;
          flats.push_back({loops, 0});
          for (Mask k : classes) flats.push_back({loops | k, 1});
          for (Mask f : family) flats.push_back({loops | f, 2});
          if (top) flats.push_back({full_mask(n), 3});
          if (!top) {
            Mask all = loops;
            for (const auto& f : flats) all |= f.set;
            int best_rank = -1;
            for (const auto& f : flats)
              if (f.set == all) best_rank = f.rank;
            if (best_rank < 0) continue;  // no unique maximum
            if (best_rank + n - set_size(all) != 3) continue;
          }
          if (validate_z_axioms(flats, n)) continue;
          CyclicFlatLattice z = make_lattice(std::move(flats), n);
          if (z.matroid_rank != 3) continue;
          found.emplace(canonical_key(z), z);
        }
        for (size_t j = start; j < cands.size(); ++j) {
          bool ok = true;
          for (Mask g : family)
            if (!compatible(cands[j], g)) {
              ok = false;
              break;
            }
          if (!ok) continue;
          family.push_back(cands[j]);
          walk(j + 1);
          family.pop_back();
        }
      };
      walk(0);
    }
  }

  std::vector<CyclicFlatLattice> out;
  out.reserve(found.size());
  for (auto& kv : found) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace omega
