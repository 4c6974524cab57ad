#pragma once

// Column descriptors: a compact, serializable record of which matroid a matrix
// column came from, convertible back into its lattice of cyclic flats.
//
// Layout convention for reified ground sets: loops first, then parallel classes
// in consecutive blocks (decreasing size for rank 2, cover-point order for rank
// 3), then the remaining elements; an appended coloop is the last element.

#include <string>
#include <vector>

#include "json.hpp"
#include "omega/lattice.hpp"
#include "omega/schubert.hpp"

namespace omega {

enum class DescriptorKind { schubert, rank2, rank3 };

struct MatroidDescriptor {
  DescriptorKind kind = DescriptorKind::schubert;
  int n = 0;

  // kind == schubert
  SchubertLabel label;

  // kind == rank2, and the rank-2 part of a coloop-extended rank 3
  int loops = 0;
  std::vector<int> class_sizes;  // descending, each >= 2; free elements implied

  // kind == rank3
  bool coloop = false;  // one coloop appended to a rank-2 part described by the fields above
  // rank-3 core: a cover of inseparable flats on [cover_ground] plus the size
  // of each point's parallel class; a multiplicity-1 point that is a coloop of
  // the simple matroid stays a coloop of the result
  int cover_ground = 0;
  std::vector<Mask> cover;
  std::vector<int> multiplicities;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static MatroidDescriptor from_json(const nlohmann::json& j);

  friend bool operator==(const MatroidDescriptor&, const MatroidDescriptor&) = default;
};

MatroidDescriptor schubert_descriptor(const SchubertLabel& s);
MatroidDescriptor rank2_descriptor(int n, int loops, std::vector<int> class_sizes);
MatroidDescriptor rank3_cover_descriptor(int n, int loops, int cover_ground, std::vector<Mask> cover,
                                         std::vector<int> multiplicities);
MatroidDescriptor rank3_coloop_descriptor(int n, int loops, std::vector<int> class_sizes);

CyclicFlatLattice descriptor_to_lattice(const MatroidDescriptor& d);

}  // namespace omega
