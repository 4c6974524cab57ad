// Cyclic-flat lattices: axiom validation, the derived rank function, canonical
// forms under relabeling, and basis counting.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "omega/descriptor.hpp"
#include "omega/lattice.hpp"

#include <random>

using namespace omega;

static CyclicFlat cf(std::vector<int> elems, int rank, int n) {
  return {elements_to_mask(elems, n), rank};
}

TEST_CASE("axiom validation accepts the standard small examples") {
  // uniform U_{2,4}: only the empty flat and the full set
  CHECK(validate_z_axioms({cf({}, 0, 4), cf({1, 2, 3, 4}, 2, 4)}, 4) == std::nullopt);
  // U_{3,3}: every element is a coloop, only the empty flat remains
  CHECK(validate_z_axioms({cf({}, 0, 3)}, 3) == std::nullopt);
  // two parallel pairs: U_{1,2} + U_{1,2}
  CHECK(validate_z_axioms(
            {cf({}, 0, 4), cf({1, 2}, 1, 4), cf({3, 4}, 1, 4), cf({1, 2, 3, 4}, 2, 4)}, 4) ==
        std::nullopt);
}

TEST_CASE("axiom validation rejects rank gaps exceeding size gaps") {
  // rank jumps by 1 from {1,2,3} to [4] while the size also jumps by 1: invalid
  auto v = validate_z_axioms({cf({}, 0, 4), cf({1, 2, 3}, 2, 4), cf({1, 2, 3, 4}, 3, 4)}, 4);
  REQUIRE(v.has_value());
  CHECK(v->axiom == "Z2");
  // same family without the top is fine (4 is a coloop)
  CHECK(validate_z_axioms({cf({}, 0, 4), cf({1, 2, 3}, 2, 4)}, 4) == std::nullopt);
}

TEST_CASE("axiom validation rejects structural garbage") {
  CHECK(validate_z_axioms({}, 4).has_value());                                   // no minimum
  CHECK(validate_z_axioms({cf({1}, 1, 4)}, 4).has_value());                      // min has rank 1
  CHECK(validate_z_axioms({cf({}, 0, 4), cf({1, 2}, 0, 4)}, 4).has_value());     // two rank-0 flats
  CHECK(validate_z_axioms({cf({}, 0, 4), cf({1, 2, 3, 4}, 5, 4)}, 4).has_value());
}

TEST_CASE("make_lattice normalizes and exposes loops and coloops") {
  // loop 1, line {2,3,4}, free points 5 and 6; flats passed out of order
  auto z = make_lattice({cf({1, 2, 3, 4, 5, 6}, 3, 6), cf({1}, 0, 6), cf({1, 2, 3, 4}, 2, 6)}, 6);
  CHECK(z.matroid_rank == 3);
  CHECK(z.flats.front().rank == 0);
  CHECK(z.flats.back().rank == 3);
  CHECK(z.loops() == elements_to_mask({1}, 6));
  CHECK(z.coloops() == 0);

  auto with_coloop = make_lattice({cf({}, 0, 5), cf({1, 2, 3}, 2, 5)}, 5);
  CHECK(with_coloop.matroid_rank == 4);  // {1,2,3} at rank 2 plus coloops 4 and 5
  CHECK(with_coloop.coloops() == elements_to_mask({4, 5}, 5));
  CHECK_THROWS_AS(make_lattice({cf({1, 2, 3}, 2, 4), cf({1, 2, 3, 4}, 3, 4)}, 4),
                  std::invalid_argument);
}

TEST_CASE("rank function on the two-pair matroid") {
  auto z = make_lattice(
      {cf({}, 0, 4), cf({1, 2}, 1, 4), cf({3, 4}, 1, 4), cf({1, 2, 3, 4}, 2, 4)}, 4);
  CHECK(rank_in(z, 0) == 0);
  CHECK(rank_in(z, elements_to_mask({1}, 4)) == 1);
  CHECK(rank_in(z, elements_to_mask({1, 2}, 4)) == 1);
  CHECK(rank_in(z, elements_to_mask({1, 3}, 4)) == 2);
  CHECK(rank_in(z, full_mask(4)) == 2);
}

TEST_CASE("derived rank satisfies the rank axioms") {
  std::vector<CyclicFlatLattice> samples = {
      make_lattice({cf({}, 0, 5), cf({1, 2, 3}, 2, 5), cf({3, 4, 5}, 2, 5),
                    cf({1, 2, 3, 4, 5}, 3, 5)},
                   5),
      make_lattice({cf({}, 0, 5), cf({1, 2}, 1, 5), cf({1, 2, 3, 4, 5}, 3, 5)}, 5),
      descriptor_to_lattice(rank2_descriptor(5, 1, {2, 2})),
  };
  for (const auto& z : samples) {
    for (Mask a = 0; a < (Mask(1) << z.n); ++a) {
      int ra = rank_in(z, a);
      CHECK(ra <= set_size(a));
      for (int e = 1; e <= z.n; ++e) {
        if (contains(a, e)) continue;
        Mask ae = a | element_bit(e);
        int rae = rank_in(z, ae);
        CHECK((rae == ra || rae == ra + 1));  // unit increase
        for (int f = e + 1; f <= z.n; ++f) {
          if (contains(a, f)) continue;
          // local submodularity: if adding e and f separately gains nothing,
          // adding both gains nothing
          if (rae == ra && rank_in(z, a | element_bit(f)) == ra)
            CHECK(rank_in(z, ae | element_bit(f)) == ra);
        }
      }
    }
  }
}

TEST_CASE("canonical key is a relabeling invariant") {
  std::mt19937 rng(7);
  auto z = make_lattice(
      {cf({}, 0, 6), cf({1, 2, 3}, 2, 6), cf({1, 4, 5}, 2, 6), cf({1, 2, 3, 4, 5, 6}, 3, 6)}, 6);
  auto key = canonical_key(z);
  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_key(relabel(z, perm)) == key);
  }
  // a genuinely different matroid gets a different key
  auto other = make_lattice(
      {cf({}, 0, 6), cf({1, 2, 3}, 2, 6), cf({4, 5, 6}, 2, 6), cf({1, 2, 3, 4, 5, 6}, 3, 6)}, 6);
  CHECK(canonical_key(other) != key);
}

TEST_CASE("basis counts of the frozen examples") {
  CHECK(basis_count(make_lattice({cf({}, 0, 4), cf({1, 2, 3, 4}, 2, 4)}, 4)) == 6);  // U_{2,4}
  auto two_lines_meeting = make_lattice(
      {cf({}, 0, 6), cf({1, 2, 3}, 2, 6), cf({1, 4, 5}, 2, 6), cf({1, 2, 3, 4, 5, 6}, 3, 6)}, 6);
  auto two_lines_disjoint = make_lattice(
      {cf({}, 0, 6), cf({1, 2, 3}, 2, 6), cf({4, 5, 6}, 2, 6), cf({1, 2, 3, 4, 5, 6}, 3, 6)}, 6);
  CHECK(basis_count(two_lines_meeting) == 18);
  CHECK(basis_count(two_lines_disjoint) == 18);
  CHECK(basis_count(descriptor_to_lattice(schubert_descriptor({4, {2, 3}}))) == 3);
}
