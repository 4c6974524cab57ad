#pragma once

// Schubert expansions of matroid base-polytope indicator functions. The oracle
// walks the lattice of chains of Z(M): each maximal-to-partial chain contributes
// the negated Moebius value from that chain to the adjoined top, and chains with
// the same (size, rank) signature aggregate onto one Schubert label.
//
// verify_expansion_indicator replays the defining identity pointwise: for every
// sample point and every arrangement of its coordinates, the matroid indicator
// must equal the coefficient-weighted sum of the Schubert indicators.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omega/lattice.hpp"
#include "omega/poset.hpp"
#include "omega/schubert.hpp"

namespace omega {

struct Expansion {
  int r = 0, n = 0;
  std::map<SchubertLabel, long long, RowOrder> coeffs;  // zero entries dropped; iteration = row order

  void add(const SchubertLabel& s, long long c);
  long long at(const SchubertLabel& s) const;
  long long coefficient_sum() const;
  friend bool operator==(const Expansion&, const Expansion&) = default;
};

std::string expansion_to_string(const Expansion& e);

struct ChainLattice {
  // each chain lists flat indices into the source lattice, ascending, always
  // containing the bottom and top flats
  std::vector<std::vector<int>> chains;
  FinitePoset poset;  // chains ordered by inclusion, plus an adjoined top at index chains.size()
  int top() const { return (int)chains.size(); }
};

ChainLattice build_chain_lattice(const CyclicFlatLattice& z);

// signature = (size, rank) of each flat along a chain, ascending
SchubertLabel chain_to_schubert_label(const std::vector<std::pair<int, int>>& signature, int r, int n);

Expansion schubert_expansion_oracle(const CyclicFlatLattice& z);

struct IndicatorCounterexample {
  std::vector<std::string> point;  // coordinates as exact rationals
  long long lhs = 0, rhs = 0;      // arrangement-summed indicator counts
};

std::optional<IndicatorCounterexample> verify_expansion_indicator(const CyclicFlatLattice& z,
                                                                  const Expansion& e, int samples,
                                                                  std::uint64_t seed);

// Base-polytope membership of an exact point, via the cyclic-flat inequalities.
bool in_base_polytope(const CyclicFlatLattice& z, const std::vector<mpq_class>& x);
// Same predicate straight from the definition, with one inequality per subset.
bool in_base_polytope_all_subsets(const CyclicFlatLattice& z, const std::vector<mpq_class>& x);

}  // namespace omega
