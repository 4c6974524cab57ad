#pragma once

// Rank-3 matroids. A loopless class is a pair (cover, multiplicities): the cover
// lists the inseparable rank-2 flats of the simplification on points [i], and
// each point carries the size of its parallel class. The matrix on [n] assembles
// from these states plus a loops block (every class on [n-1] with one loop
// added) and a coloops block (every rank-2 class on [n-1] with a coloop added).

#include <optional>
#include <vector>

#include "omega/matrix.hpp"

namespace omega {

struct Cover {
  int ground = 0;            // number of points i
  std::vector<Mask> flats;   // subsets of [i], sizes 3..i-1, pairwise sharing <= 1 point
};

// flats in canonical position: the lexicographically least sorted flat list over
// relabelings that respect the iterated point-degree refinement
std::vector<Mask> canonical_cover(const Cover& c);

std::vector<Cover> cycle_covers(int i);             // all covers up to isomorphism
std::vector<Cover> cycle_covers_bruteforce(int i);  // independent raw enumeration + dedup

std::vector<std::vector<int>> cover_automorphisms(const Cover& c);

// points whose removal drops the simple matroid to rank 2
Mask cover_coloops(const Cover& c);

// the cover's matroid on [n_total] >= i, extra elements free
CyclicFlatLattice cover_lattice(const Cover& c, int n_total);
Expansion simple_coefficients(const Cover& c, int n_total);

struct Rank3State {
  CyclicFlatLattice lattice;
  MatroidDescriptor desc;
  Expansion coeffs;  // always equal to the oracle on `lattice`
};

Rank3State make_state(const Cover& c, const std::vector<int>& multiplicities, int loops = 0);

// statistics of a state, as used by the closed-form insertion updates
struct StateStats {
  int t = 0;                       // inseparable flats
  std::vector<int> flat_sizes;     // blown-up sizes, one per cover flat, sorted
  int classes = 0;                 // parallel classes of size >= 2
  int contained_classes = 0;       // those lying inside an inseparable flat
  int free_points = 0;             // multiplicity-1 points outside every flat
  int coloops = 0;
};
StateStats state_stats(const Rank3State& s);

enum class InsertionCase {
  free_uncontained,    // case 1: e outside every class and inseparable flat
  covered_singleton,   // case 2: e a multiplicity-1 point of some inseparable flat
  contained_class,     // case 3: e in a class inside an inseparable flat
  uncontained_class,   // case 4: e in a class outside every inseparable flat
};
struct InsertionKind {
  InsertionCase c;
  bool exceptional = false;  // the lattice has no four-flat chain
};
InsertionKind classify_insertion(const Rank3State& s, int e);

// adds one element parallel to e; throws std::invalid_argument when e is a loop
Rank3State insert_parallel(const Rank3State& s, int e);

// closed-form coefficient updates, validated against the oracle in tests
Expansion case1_inserted_coeffs(const Rank3State& s);
Expansion exceptional1_inserted_coeffs(const Rank3State& s);

// every loopless rank-3 class on [n], one state per isomorphism class, built by
// replaying insertions over each cover's multiplicity patterns up to symmetry
std::vector<Rank3State> enumerate_rank3_column_states(int n);

SparseIntMatrix build_o3(int n);  // n >= 3
SparseIntMatrix build_o3_step(const SparseIntMatrix& o3_prev, const SparseIntMatrix& o2_prev);

// all valid rank-3 lattices on [n] up to isomorphism, loops and coloops
// included, by filtered exhaustive search; intended for n <= 6
std::vector<CyclicFlatLattice> brute_force_rank3_lattices(int n);

}  // namespace omega
