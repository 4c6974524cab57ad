#pragma once

// Rank-2 matroids. An isomorphism class is a profile (loop count, multiset of
// parallel-class sizes >= 2, free elements making up the rest); the Schubert
// expansion of a profile has a closed form, and the full matrix over all classes
// on [n] assembles recursively from the matrix on [n-1], an identity block of
// loopless Schubert columns, and a block of loopless many-class columns driven
// by partitions of n into parts >= 2.

#include <vector>

#include "omega/matrix.hpp"

namespace omega {

struct Rank2Profile {
  int n = 0;
  int loops = 0;
  std::vector<int> class_sizes;  // descending, each >= 2

  int free_elements() const;
  bool valid() const;  // the profile describes a rank-2 matroid on [n]
};

// type 1: S(n-1,n), one bottom flat only
// type 2: S(k,k+1), k <= n-2, bottom plus full top
// type 3: S(k,n), k <= n-2, bottom plus one middle flat
// type 4: S(k1,k2), k1+2 <= k2 <= n-1, a three-flat chain
struct Rank2Class {
  int type = 0;
  CyclicFlatLattice z;
};
Rank2Class classify_rank2_schubert(const SchubertLabel& s);

Expansion rank2_expansion(const Rank2Profile& p);

std::vector<Rank2Profile> all_rank2_profiles(int n);
long long count_m2_bruteforce(int n);
long long count_m2(int n);
// partitions of n into parts >= 2 (the single-part partition counts)
long long partitions_min2(int n);

// columns = partitions of n into >= 2 parts each >= 2, in the canonical column
// order; rows = multiplicities of part sizes n-1 down to 2
struct PartitionMatrix {
  int n = 0;
  std::vector<int> part_sizes;
  std::vector<std::vector<int>> columns;
};
PartitionMatrix build_partition_matrix(int n);

// expansion columns of the loopless non-Schubert classes on [n]
std::vector<MatrixColumn> build_v(int n);

SparseIntMatrix build_o2(int n);
SparseIntMatrix build_o2_step(const SparseIntMatrix& prev);

// descriptors of the columns that are vertices of the column polytope
std::vector<MatroidDescriptor> extremal_rank2(int n);

}  // namespace omega
