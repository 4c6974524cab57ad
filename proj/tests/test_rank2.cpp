// Rank-2 classification, counting, the closed-form expansion, and the recursive
// matrix construction.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "omega/expansion.hpp"
#include "omega/rank2.hpp"

#include <set>

using namespace omega;

static Expansion exp_of(std::initializer_list<std::pair<std::vector<int>, long long>> terms,
                        int n) {
  Expansion e{2, n};
  for (const auto& [xs, c] : terms) e.add({n, xs}, c);
  return e;
}

// the recursion reproduces these published class counts
static const long long kM2[] = {0, 0, 1, 3, 7, 13, 23, 37, 58, 87, 128, 183, 259, 359, 493, 668};

TEST_CASE("class counts match brute force and the published table") {
  for (int n = 2; n <= 15; ++n) {
    CHECK(count_m2(n) == kM2[n]);
    CHECK(count_m2_bruteforce(n) == kM2[n]);
    CHECK((long long)all_rank2_profiles(n).size() == kM2[n]);
  }
  CHECK(count_m2(27) == 14714);
}

TEST_CASE("partition counting") {
  CHECK(partitions_min2(2) == 1);
  CHECK(partitions_min2(3) == 1);
  CHECK(partitions_min2(4) == 2);
  CHECK(partitions_min2(5) == 2);
  CHECK(partitions_min2(6) == 4);
  CHECK(partitions_min2(7) == 4);
  // m2 recurrence: m2(n) = 2 m2(n-1) - m2(n-2) + partitions_min2(n)
  for (int n = 4; n <= 15; ++n)
    CHECK(count_m2(n) == 2 * count_m2(n - 1) - count_m2(n - 2) + partitions_min2(n));
}

TEST_CASE("the four schubert shapes") {
  CHECK(classify_rank2_schubert({5, {4, 5}}).type == 1);
  CHECK(classify_rank2_schubert({5, {3, 4}}).type == 2);
  CHECK(classify_rank2_schubert({5, {2, 5}}).type == 3);
  CHECK(classify_rank2_schubert({5, {2, 4}}).type == 4);
  for (const auto& s : canonical_schubert_order(2, 7)) {
    auto c = classify_rank2_schubert(s);
    CHECK(c.z.matroid_rank == 2);
    Expansion unit{2, 7};
    unit.add(s, 1);
    CHECK(schubert_expansion_oracle(c.z) == unit);
  }
}

TEST_CASE("profile validity") {
  CHECK(Rank2Profile{4, 0, {2, 2}}.valid());
  CHECK(Rank2Profile{4, 0, {}}.valid());     // U_{2,4}
  CHECK(Rank2Profile{4, 1, {3}}.free_elements() == 0);
  CHECK(!Rank2Profile{4, 1, {3}}.valid());   // one class, no free element: rank 1
  CHECK(Rank2Profile{5, 1, {3}}.valid());
  CHECK(!Rank2Profile{4, 2, {2}}.valid());
  CHECK(Rank2Profile{4, 0, {2}}.valid());    // one pair plus two free elements
  CHECK(!Rank2Profile{4, 3, {}}.valid());    // a single free element has rank 1
}

TEST_CASE("closed-form expansions match the oracle on every profile") {
  for (int n = 4; n <= 9; ++n)
    for (const auto& p : all_rank2_profiles(n)) {
      auto z = descriptor_to_lattice(rank2_descriptor(p.n, p.loops, p.class_sizes));
      CHECK(rank2_expansion(p) == schubert_expansion_oracle(z));
    }
}

TEST_CASE("frozen expansions") {
  CHECK(rank2_expansion({4, 0, {2, 2}}) == exp_of({{{1, 3}, 2}, {{1, 2}, -1}}, 4));
  CHECK(rank2_expansion({5, 1, {2, 2}}) == exp_of({{{2, 4}, 2}, {{2, 3}, -1}}, 5));
}

TEST_CASE("partition matrix and V block at small n") {
  auto pm = build_partition_matrix(4);
  REQUIRE(pm.columns.size() == 1);  // only 2+2
  auto v4 = build_v(4);
  REQUIRE(v4.size() == 1);
  CHECK(v4[0].coeffs == exp_of({{{1, 3}, 2}, {{1, 2}, -1}}, 4));
  auto v5 = build_v(5);
  REQUIRE(v5.size() == 2);  // the carried {2,2} profile plus the new 3+2
  CHECK(v5[0].coeffs == exp_of({{{1, 3}, 2}, {{1, 2}, -1}}, 5));
  CHECK(v5[1].coeffs == exp_of({{{1, 4}, 1}, {{1, 3}, 1}, {{1, 2}, -1}}, 5));
}

TEST_CASE("golden matrix bytes at n=4") {
  const std::string golden = "6 7 8\n1 1 1\n2 2 1\n3 3 1\n4 4 1\n5 5 1\n6 6 1\n5 7 2\n6 7 -1\n";
  CHECK(to_triples(build_o2(4)) == golden);
}

TEST_CASE("matrix recursion is consistent and lossless") {
  for (int n = 5; n <= 9; ++n) {
    auto prev = build_o2(n - 1);
    auto stepped = build_o2_step(prev);
    auto direct = build_o2(n);
    CHECK(to_triples(stepped) == to_triples(direct));
    CHECK((long long)direct.columns.size() == kM2[n]);
    // all columns distinct
    std::set<std::string> seen;
    for (const auto& c : direct.columns) seen.insert(expansion_to_string(c.coeffs));
    CHECK((long long)seen.size() == kM2[n]);
  }
}

TEST_CASE("every column equals its descriptor's oracle expansion") {
  for (int n = 4; n <= 9; ++n)
    for (const auto& col : build_o2(n).columns)
      CHECK(col.coeffs == schubert_expansion_oracle(descriptor_to_lattice(col.desc)));
}

TEST_CASE("cache round-trip preserves the matrix") {
  auto m = build_o2(7);
  auto back = matrix_from_cache(to_triples(m), sidecar_json(m));
  CHECK(to_triples(back) == to_triples(m));
  CHECK(back.columns.size() == m.columns.size());
  for (size_t i = 0; i < m.columns.size(); ++i) {
    CHECK(back.columns[i].desc == m.columns[i].desc);
    CHECK(back.columns[i].coeffs == m.columns[i].coeffs);
  }
  CHECK_THROWS(matrix_from_cache(to_triples(m) + "9 9 9\n", sidecar_json(m)));
}

TEST_CASE("extremal descriptor counts match the published table") {
  CHECK(extremal_rank2(9).size() == 54);
  CHECK(extremal_rank2(10).size() == 72);
}
