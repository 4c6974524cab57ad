#pragma once

// Schubert matroids S(x_1,...,x_r) on [n]: the bases are the r-subsets
// {b_1 < ... < b_r} with b_i >= x_i. Their labels index the rows of every
// matrix in this library, ordered descending-lexicographically.

#include <map>
#include <string>
#include <vector>

#include "omega/lattice.hpp"
#include "omega/sets.hpp"

namespace omega {

struct SchubertLabel {
  int n = 0;
  std::vector<int> xs;  // strictly increasing, 1 <= x_1 < ... < x_r <= n
  int rank() const { return (int)xs.size(); }
  friend bool operator==(const SchubertLabel&, const SchubertLabel&) = default;
};

void check_label(const SchubertLabel& s);

// Strict order putting labels in canonical row order: larger xs (lexicographically)
// come first, so S(n-r+1,...,n) leads and S(1,...,r) trails.
struct RowOrder {
  bool operator()(const SchubertLabel& a, const SchubertLabel& b) const;
};

std::vector<SchubertLabel> canonical_schubert_order(int r, int n);

std::string label_to_string(const SchubertLabel& s);  // "S(1,3,5)"
SchubertLabel parse_label(const std::string& text, int n);

int schubert_rank(const SchubertLabel& s, Mask a);
long long schubert_basis_count(const SchubertLabel& s);

CyclicFlatLattice schubert_lattice(const SchubertLabel& s);

}  // namespace omega
