// Ground-set masks, Schubert labels and their lattices, and the Moebius
// machinery everything else leans on.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "omega/expansion.hpp"
#include "omega/poset.hpp"
#include "omega/schubert.hpp"
#include "omega/sets.hpp"

#include <algorithm>
#include <numeric>

using namespace omega;

TEST_CASE("mask helpers") {
  CHECK(full_mask(4) == 0b1111);
  CHECK(element_bit(3) == 0b100);
  CHECK(set_size(0b1011) == 3);
  CHECK(subset_of(0b0011, 0b1011));
  CHECK(!subset_of(0b0100, 0b1011));
  CHECK(mask_to_elements(0b1010) == std::vector<int>{2, 4});
  CHECK(elements_to_mask({1, 4}, 4) == 0b1001);
  CHECK_THROWS_AS((void)elements_to_mask({5}, 4), std::invalid_argument);
  CHECK(full_mask(0) == 0);
}

TEST_CASE("row order puts large labels first") {
  auto order = canonical_schubert_order(2, 4);
  REQUIRE(order.size() == 6);
  CHECK(order[0].xs == std::vector<int>{3, 4});
  CHECK(order[1].xs == std::vector<int>{2, 4});
  CHECK(order[2].xs == std::vector<int>{2, 3});
  CHECK(order[3].xs == std::vector<int>{1, 4});
  CHECK(order[4].xs == std::vector<int>{1, 3});
  CHECK(order[5].xs == std::vector<int>{1, 2});

  auto r3 = canonical_schubert_order(3, 5);
  REQUIRE(r3.size() == 10);
  CHECK(r3.front().xs == std::vector<int>{3, 4, 5});
  CHECK(r3.back().xs == std::vector<int>{1, 2, 3});
  RowOrder lt;
  CHECK(std::is_sorted(r3.begin(), r3.end(), lt));
}

TEST_CASE("label strings round-trip") {
  SchubertLabel s{5, {1, 3, 5}};
  CHECK(label_to_string(s) == "S(1,3,5)");
  CHECK(parse_label("S(1,3,5)", 5) == s);
  CHECK_THROWS(parse_label("S(3,1)", 5));
  CHECK_THROWS((void)parse_label("S(1,6)", 5));
}

TEST_CASE("schubert bases by definition match the closed count and the lattice") {
  for (int n = 2; n <= 6; ++n)
    for (int r = 2; r <= std::min(3, n); ++r)
      for (const auto& s : canonical_schubert_order(r, n)) {
        long long direct = 0;
        for (Mask a = 0; a < (Mask(1) << n); ++a) {
          if (set_size(a) != r) continue;
          auto elems = mask_to_elements(a);
          bool ok = true;
          for (int i = 0; i < r; ++i) ok = ok && elems[i] >= s.xs[i];
          direct += ok;
        }
        CHECK(direct == schubert_basis_count(s));
        CHECK(direct == basis_count(schubert_lattice(s)));
      }
}

TEST_CASE("schubert rank agrees with the lattice rank formula") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& s : canonical_schubert_order(3, n)) {
      auto z = schubert_lattice(s);
      CHECK(validate_z_axioms(z.flats, n) == std::nullopt);
      for (Mask a = 0; a < (Mask(1) << n); ++a) CHECK(schubert_rank(s, a) == rank_in(z, a));
    }
}

TEST_CASE("cyclic flats of a schubert matroid form a chain") {
  for (const auto& s : canonical_schubert_order(3, 6)) {
    auto z = schubert_lattice(s);
    for (size_t i = 1; i < z.flats.size(); ++i) CHECK(subset_of(z.flats[i - 1].set, z.flats[i].set));
    CHECK(z.matroid_rank == 3);
    // top-absent encoding: x_r = n exactly when the matroid has a coloop
    CHECK((s.xs.back() == 6) == (z.coloops() != 0));
  }
}

static FinitePoset divisor_poset(const std::vector<int>& divs) {
  std::vector<std::vector<bool>> leq(divs.size(), std::vector<bool>(divs.size()));
  for (size_t a = 0; a < divs.size(); ++a)
    for (size_t b = 0; b < divs.size(); ++b) leq[a][b] = divs[b] % divs[a] == 0;
  return FinitePoset(std::move(leq));
}

TEST_CASE("moebius on chains and divisor lattices") {
  FinitePoset chain({{true, true, true}, {false, true, true}, {false, false, true}});
  CHECK(chain.moebius(0, 0) == 1);
  CHECK(chain.moebius(0, 1) == -1);
  CHECK(chain.moebius(0, 2) == 0);

  // divisors of 12: classical values mu(1,12) = 0, mu(1,6) = 1
  std::vector<int> divs = {1, 2, 3, 4, 6, 12};
  auto p = divisor_poset(divs);
  CHECK(p.moebius(0, 5) == 0);
  CHECK(p.moebius(0, 4) == 1);
  CHECK(p.moebius(0, 1) == -1);

  // defining recurrence: the moebius values below any fixed top sum to zero
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b) || a == b) continue;
      long long total = 0;
      for (int c = 0; c < p.size(); ++c)
        if (p.leq(a, c) && p.leq(c, b)) total += p.moebius(c, b);
      CHECK(total == 0);
    }
}

TEST_CASE("poset constructor rejects broken relations") {
  CHECK_THROWS(FinitePoset({{true, true}, {true, true}}));                       // antisymmetry
  CHECK_THROWS(FinitePoset({{false, true}, {false, true}}));                     // reflexivity
  CHECK_THROWS(FinitePoset({{true, true, false},                                 // transitivity
                            {false, true, true},
                            {false, false, true}}));
}
