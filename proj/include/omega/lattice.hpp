#pragma once

// A matroid is stored as its lattice of cyclic flats together with their ranks.
// This determines the matroid completely: the rank of an arbitrary set A is
//   rk(A) = min over stored flats F of  rank(F) + |A \ F|.
// validate_z_axioms checks the axioms characterizing which (set, rank) families
// arise this way; everything downstream assumes a validated lattice.

#include <optional>
#include <string>
#include <vector>

#include "omega/sets.hpp"

namespace omega {

struct CyclicFlat {
  Mask set = 0;
  int rank = 0;
  friend bool operator==(const CyclicFlat&, const CyclicFlat&) = default;
};

struct ZViolation {
  std::string axiom;  // "structure", "Z0", "Z1", "Z2" or "Z3"
  std::string detail;
};

std::optional<ZViolation> validate_z_axioms(const std::vector<CyclicFlat>& flats, int n);

struct CyclicFlatLattice {
  int n = 0;
  std::vector<CyclicFlat> flats;  // unique, sorted by (rank, set)
  int matroid_rank = 0;

  const CyclicFlat& min_flat() const { return flats.front(); }
  const CyclicFlat& max_flat() const { return flats.back(); }
  Mask loops() const { return min_flat().set; }
  Mask coloops() const { return full_mask(n) & ~max_flat().set; }

  friend bool operator==(const CyclicFlatLattice&, const CyclicFlatLattice&) = default;
};

// Validates and normalizes; throws std::invalid_argument on an axiom violation.
CyclicFlatLattice make_lattice(std::vector<CyclicFlat> flats, int n);

int rank_in(const CyclicFlatLattice& z, Mask a);

// perm[e-1] is the image of element e.
CyclicFlatLattice relabel(const CyclicFlatLattice& z, const std::vector<int>& perm);

// Lexicographically least sorted (rank, set) encoding over all relabelings of the
// ground set. Intended for small n (full scan of n! permutations).
std::vector<std::pair<int, Mask>> canonical_key(const CyclicFlatLattice& z);

long long basis_count(const CyclicFlatLattice& z);

}  // namespace omega
