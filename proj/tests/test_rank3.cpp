// Rank-3 machinery: cover enumeration, state reification, parallel insertion
// with its closed-form coefficient updates, the recursive matrix construction,
// and the independent brute-force cross-check.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "omega/expansion.hpp"
#include "omega/rank2.hpp"
#include "omega/rank3.hpp"

#include <map>
#include <set>

using namespace omega;

static Expansion exp_of(std::initializer_list<std::pair<std::vector<int>, long long>> terms,
                        int n) {
  Expansion e{3, n};
  for (const auto& [xs, c] : terms) e.add({n, xs}, c);
  return e;
}
static std::set<std::string> column_set(const SparseIntMatrix& m) {
  std::set<std::string> out;
  for (const auto& c : m.columns) out.insert(expansion_to_string(c.coeffs));
  return out;
}

TEST_CASE("cover enumeration: counts, brute-force agreement, canonical dedup") {
  const size_t expected[] = {0, 0, 0, 1, 2, 4, 9, 23};
  for (int i = 3; i <= 7; ++i) CHECK(cycle_covers(i).size() == expected[i]);
  for (int i = 3; i <= 6; ++i) {
    auto fast = cycle_covers(i);
    auto slow = cycle_covers_bruteforce(i);
    REQUIRE(fast.size() == slow.size());
    for (size_t k = 0; k < fast.size(); ++k) CHECK(fast[k].flats == slow[k].flats);
  }
  Cover a{5, {elements_to_mask({1, 2, 3}, 5)}};
  Cover b{5, {elements_to_mask({3, 4, 5}, 5)}};
  CHECK(canonical_cover(a) == canonical_cover(b));
  Cover c{5, {elements_to_mask({1, 2, 3, 4}, 5)}};
  CHECK(canonical_cover(a) != canonical_cover(c));
}

TEST_CASE("cover automorphisms") {
  CHECK(cover_automorphisms({4, {elements_to_mask({1, 2, 3}, 4)}}).size() == 6);
  CHECK(cover_automorphisms({5, {}}).size() == 120);
  Cover two_lines{5, {elements_to_mask({1, 2, 3}, 5), elements_to_mask({3, 4, 5}, 5)}};
  CHECK(cover_automorphisms(two_lines).size() == 8);
  // every reported permutation really fixes the flat list
  for (const auto& perm : cover_automorphisms(two_lines)) {
    std::vector<Mask> mapped;
    for (Mask f : two_lines.flats) {
      Mask img = 0;
      for (int e : mask_to_elements(f)) img |= element_bit(perm[e - 1]);
      mapped.push_back(img);
    }
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == two_lines.flats);
  }
}

TEST_CASE("coloops of a simple cover matroid") {
  CHECK(cover_coloops({3, {}}) == full_mask(3));
  CHECK(cover_coloops({5, {elements_to_mask({1, 2, 3, 4}, 5)}}) == elements_to_mask({5}, 5));
  CHECK(cover_coloops({5, {elements_to_mask({1, 2, 3}, 5)}}) == 0);
  CHECK(cover_coloops({4, {}}) == 0);  // U_{3,4} has no coloops
}

TEST_CASE("simple-matroid coefficients match the oracle for every cover") {
  for (int i = 4; i <= 7; ++i)
    for (const auto& c : cycle_covers(i)) {
      CHECK(simple_coefficients(c, i) == schubert_expansion_oracle(cover_lattice(c, i)));
    }
}

TEST_CASE("state statistics and insertion classification") {
  // three points on a line {1,2,3} plus a free point 4, point 2 doubled: n=5
  auto st = make_state({4, {elements_to_mask({1, 2, 3}, 4)}}, {1, 2, 1, 1});
  auto stats = state_stats(st);
  CHECK(stats.t == 1);
  CHECK(stats.flat_sizes == std::vector<int>{4});
  CHECK(stats.classes == 1);
  CHECK(stats.contained_classes == 1);
  CHECK(stats.free_points == 1);
  CHECK(stats.coloops == 1);  // the free point carries every basis
  CHECK(st.coeffs == schubert_expansion_oracle(st.lattice));
  // the sole free point is a coloop, so the top cyclic flat has rank 2 and no
  // four-flat chain exists
  for (int e = 1; e <= 5; ++e) CHECK(classify_insertion(st, e).exceptional);

  // same line and doubled point but two free points: no coloops, full chain
  auto st6 = make_state({5, {elements_to_mask({1, 2, 3}, 5)}}, {1, 2, 1, 1, 1});
  CHECK(state_stats(st6).free_points == 2);
  CHECK(state_stats(st6).coloops == 0);
  Mask cls = 0, line = 0;
  for (const auto& f : st6.lattice.flats) {
    if (f.rank == 1) cls = f.set;
    if (f.rank == 2) line = f.set;
  }
  REQUIRE(set_size(cls) == 2);
  REQUIRE(set_size(line) == 4);
  REQUIRE(subset_of(cls, line));
  for (int e = 1; e <= 6; ++e) {
    auto kind = classify_insertion(st6, e);
    CHECK_FALSE(kind.exceptional);  // chain 0 < class < line < [6] exists
    if (contains(cls, e))
      CHECK(kind.c == InsertionCase::contained_class);
    else if (contains(line, e))
      CHECK(kind.c == InsertionCase::covered_singleton);
    else
      CHECK(kind.c == InsertionCase::free_uncontained);
  }
  CHECK_THROWS_AS((void)classify_insertion(st6, 7), std::invalid_argument);
  CHECK_THROWS_AS((void)classify_insertion(st6, 0), std::invalid_argument);

  // classes outside every inseparable flat, in a coloop-free state; the union
  // of the two classes is still a rank-2 cyclic flat, so not exceptional
  auto pairs = make_state({4, {}}, {2, 2, 1, 1});
  Mask cls2 = 0;
  for (const auto& f : pairs.lattice.flats)
    if (f.rank == 1) cls2 |= f.set;
  REQUIRE(set_size(cls2) == 4);
  for (int e = 1; e <= 6; ++e) {
    auto kind = classify_insertion(pairs, e);
    CHECK_FALSE(kind.exceptional);
    if (contains(cls2, e))
      CHECK(kind.c == InsertionCase::uncontained_class);
    else
      CHECK(kind.c == InsertionCase::free_uncontained);
  }

  // one class, one free point, nothing else: no rank-2 cyclic flat at all
  auto lone = make_state({3, {}}, {2, 1, 1});
  for (int e = 1; e <= 4; ++e) CHECK(classify_insertion(lone, e).exceptional);

  auto with_loop = make_state({3, {}}, {1, 1, 1}, 1);
  REQUIRE(with_loop.lattice.loops() != 0);
  int loop_elem = mask_to_elements(with_loop.lattice.loops()).front();
  CHECK_THROWS_AS((void)insert_parallel(with_loop, loop_elem), std::invalid_argument);
}

TEST_CASE("insertion preserves the oracle contract everywhere reachable") {
  for (int n = 4; n <= 6; ++n)
    for (const auto& st : enumerate_rank3_column_states(n))
      for (int e = 1; e <= st.lattice.n; ++e) {
        auto next = insert_parallel(st, e);
        CHECK(next.lattice.n == st.lattice.n + 1);
        CHECK(next.coeffs == schubert_expansion_oracle(next.lattice));
      }
}

TEST_CASE("closed-form case-1 update matches the oracle") {
  int checked = 0;
  for (int n = 4; n <= 6; ++n)
    for (const auto& st : enumerate_rank3_column_states(n)) {
      bool has_free = state_stats(st).free_points > 0;
      if (!has_free) {
        CHECK_THROWS_AS((void)case1_inserted_coeffs(st), std::invalid_argument);
        continue;
      }
      auto got = case1_inserted_coeffs(st);
      // find the free point and insert there
      for (int e = 1; e <= st.lattice.n; ++e) {
        auto k = classify_insertion(st, e);
        if (k.c != InsertionCase::free_uncontained) continue;
        auto next = insert_parallel(st, e);
        CHECK(got == next.coeffs);
        if (k.exceptional) CHECK(exceptional1_inserted_coeffs(st) == next.coeffs);
        ++checked;
        break;
      }
    }
  CHECK(checked > 20);
}

TEST_CASE("state counts and the frozen small matrices") {
  CHECK(enumerate_rank3_column_states(4).size() == 3);
  CHECK(enumerate_rank3_column_states(5).size() == 9);
  CHECK(enumerate_rank3_column_states(6).size() == 25);

  auto o34 = build_o3(4);
  REQUIRE(o34.cols() == 4);
  std::set<std::string> expected4;
  for (const auto& s : canonical_schubert_order(3, 4)) {
    Expansion unit{3, 4};
    unit.add(s, 1);
    expected4.insert(expansion_to_string(unit));
  }
  CHECK(column_set(o34) == expected4);

  auto o35 = build_o3(5);
  REQUIRE(o35.cols() == 13);
  std::set<std::string> expected5;
  for (const auto& s : canonical_schubert_order(3, 5)) {
    Expansion unit{3, 5};
    unit.add(s, 1);
    expected5.insert(expansion_to_string(unit));
  }
  expected5.insert(expansion_to_string(exp_of({{{1, 2, 4}, 2}, {{1, 2, 3}, -1}}, 5)));
  expected5.insert(
      expansion_to_string(exp_of({{{1, 3, 4}, 1}, {{1, 2, 4}, 1}, {{1, 2, 3}, -1}}, 5)));
  expected5.insert(expansion_to_string(exp_of({{{1, 3, 5}, 2}, {{1, 2, 5}, -1}}, 5)));
  CHECK(column_set(o35) == expected5);
}

TEST_CASE("recursive step equals the direct build") {
  for (int n = 5; n <= 7; ++n) {
    auto direct = build_o3(n);
    auto stepped = build_o3_step(build_o3(n - 1), build_o2(n - 1));
    CHECK(to_triples(direct) == to_triples(stepped));
  }
  CHECK_THROWS(build_o3(2));
}

TEST_CASE("every column equals its descriptor's oracle expansion") {
  for (int n = 4; n <= 7; ++n)
    for (const auto& col : build_o3(n).columns)
      CHECK(col.coeffs == schubert_expansion_oracle(descriptor_to_lattice(col.desc)));
}

TEST_CASE("brute-force lattice enumeration matches the published census") {
  CHECK(brute_force_rank3_lattices(3).size() == 1);
  CHECK(brute_force_rank3_lattices(4).size() == 4);
  CHECK(brute_force_rank3_lattices(5).size() == 13);
  CHECK(brute_force_rank3_lattices(6).size() == 38);
}

TEST_CASE("construction is complete: brute-force expansions equal the columns") {
  for (int n = 4; n <= 6; ++n) {
    std::set<std::string> brute;
    for (const auto& z : brute_force_rank3_lattices(n))
      brute.insert(expansion_to_string(schubert_expansion_oracle(z)));
    CHECK(brute == column_set(build_o3(n)));
  }
}

TEST_CASE("construction is complete at n=7 against 108 census classes" * doctest::timeout(500)) {
  auto all = brute_force_rank3_lattices(7);
  CHECK(all.size() == 108);
  std::set<std::string> brute;
  for (const auto& z : all) brute.insert(expansion_to_string(schubert_expansion_oracle(z)));
  CHECK(brute.size() == 99);
  CHECK(brute == column_set(build_o3(7)));
}
