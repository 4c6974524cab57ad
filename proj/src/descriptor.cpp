#include "omega/descriptor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace omega {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("invalid descriptor: ") + what);
}

bool descending(const std::vector<int>& v) {
  return std::is_sorted(v.rbegin(), v.rend());
}

// Coloops of the simple matroid a cover describes: with three points everything
// is a coloop; otherwise only the point outside a flat covering all others.
Mask simple_cover_coloops(int ground, const std::vector<Mask>& cover) {
  if (ground == 3) return full_mask(3);
  Mask k = 0;
  for (Mask f : cover)
    if (set_size(f) == ground - 1) k |= full_mask(ground) & ~f;
  return k;
}

// Rank-2 flats (plus bottom) of the matroid "loops + parallel classes + free
// elements"; shared by the rank-2 and coloop-extended rank-3 reifications.
// Classes occupy consecutive blocks after the loops, decreasing in size.
std::vector<CyclicFlat> rank2_flats(int part_n, int loops, const std::vector<int>& sizes) {
  require(loops >= 0 && part_n >= 2, "rank-2 part needs two non-loop elements");
  require(descending(sizes), "class sizes must be listed in decreasing order");
  int covered = loops;
  for (int s : sizes) {
    require(s >= 2, "parallel classes have at least two elements");
    covered += s;
  }
  require(covered <= part_n, "classes exceed the ground set");
  int free_elems = part_n - covered;
  int p = (int)sizes.size();
  require(p >= 2 || (p == 1 && free_elems >= 1) || (p == 0 && free_elems >= 2),
          "profile does not produce a rank-2 matroid");

  std::vector<CyclicFlat> flats;
  Mask l = full_mask(loops);
  flats.push_back({l, 0});
  int at = loops;
  for (int s : sizes) {
    Mask c = 0;
    for (int e = at + 1; e <= at + s; ++e) c |= element_bit(e);
    flats.push_back({l | c, 1});
    at += s;
  }
  bool coloopless = p >= 2 || (p == 1 && free_elems >= 2) || (p == 0 && free_elems >= 3);
  if (coloopless) flats.push_back({full_mask(part_n), 2});
  return flats;
}

}  // namespace

MatroidDescriptor schubert_descriptor(const SchubertLabel& s) {
  check_label(s);
  MatroidDescriptor d;
  d.kind = DescriptorKind::schubert;
  d.n = s.n;
  d.label = s;
  return d;
}

MatroidDescriptor rank2_descriptor(int n, int loops, std::vector<int> class_sizes) {
  MatroidDescriptor d;
  d.kind = DescriptorKind::rank2;
  d.n = n;
  d.loops = loops;
  d.class_sizes = std::move(class_sizes);
  return d;
}

MatroidDescriptor rank3_cover_descriptor(int n, int loops, int cover_ground, std::vector<Mask> cover,
                                         std::vector<int> multiplicities) {
  MatroidDescriptor d;
  d.kind = DescriptorKind::rank3;
  d.n = n;
  d.loops = loops;
  d.cover_ground = cover_ground;
  std::sort(cover.begin(), cover.end());
  d.cover = std::move(cover);
  d.multiplicities = std::move(multiplicities);
  return d;
}

MatroidDescriptor rank3_coloop_descriptor(int n, int loops, std::vector<int> class_sizes) {
  MatroidDescriptor d;
  d.kind = DescriptorKind::rank3;
  d.n = n;
  d.loops = loops;
  d.coloop = true;
  d.class_sizes = std::move(class_sizes);
  return d;
}

CyclicFlatLattice descriptor_to_lattice(const MatroidDescriptor& d) {
  switch (d.kind) {
    case DescriptorKind::schubert: {
      require(d.label.n == d.n, "label ground set disagrees with n");
      return schubert_lattice(d.label);
    }
    case DescriptorKind::rank2:
      return make_lattice(rank2_flats(d.n, d.loops, d.class_sizes), d.n);
    case DescriptorKind::rank3: {
      if (d.coloop) {
        // same cyclic flats as the rank-2 part; the last element is the coloop
        return make_lattice(rank2_flats(d.n - 1, d.loops, d.class_sizes), d.n);
      }
      int i = d.cover_ground;
      require(i >= 3, "cover ground set needs at least three points");
      require((int)d.multiplicities.size() == i, "one multiplicity per point");
      int total = d.loops;
      for (int m : d.multiplicities) {
        require(m >= 1, "multiplicities are positive");
        total += m;
      }
      require(total == d.n, "multiplicities and loops must fill the ground set");
      for (Mask f : d.cover)
        require(subset_of(f, full_mask(i)) && set_size(f) >= 3 && set_size(f) <= i - 1,
                "cover flats span 3 to ground-1 points");
      for (size_t a = 0; a < d.cover.size(); ++a)
        for (size_t b = a + 1; b < d.cover.size(); ++b)
          require(set_size(d.cover[a] & d.cover[b]) <= 1, "cover flats share at most one point");
      // a coloop of the simple matroid stays a coloop unless its class grows
      Mask k = simple_cover_coloops(i, d.cover);
      bool coloopless = true;
      for (int e : mask_to_elements(k))
        if (d.multiplicities[e - 1] == 1) coloopless = false;

      // blocks: loops [1..loops], then the class of point e, in point order
      std::vector<Mask> blow(i);
      int at = d.loops;
      for (int e = 1; e <= i; ++e) {
        for (int j = 0; j < d.multiplicities[e - 1]; ++j) blow[e - 1] |= element_bit(at + 1 + j);
        at += d.multiplicities[e - 1];
      }
      Mask l = full_mask(d.loops);
      std::vector<CyclicFlat> flats;
      flats.push_back({l, 0});
      for (int e = 1; e <= i; ++e)
        if (d.multiplicities[e - 1] >= 2) flats.push_back({l | blow[e - 1], 1});
      for (Mask f : d.cover) {
        Mask big = 0;
        for (int e : mask_to_elements(f)) big |= blow[e - 1];
        flats.push_back({l | big, 2});
      }
      for (int e = 1; e <= i; ++e) {
        if (d.multiplicities[e - 1] < 2) continue;
        for (int f = e + 1; f <= i; ++f) {
          if (d.multiplicities[f - 1] < 2) continue;
          bool joined = false;
          for (Mask c : d.cover)
            if (contains(c, e) && contains(c, f)) joined = true;
          if (!joined) flats.push_back({l | blow[e - 1] | blow[f - 1], 2});
        }
      }
      if (coloopless) flats.push_back({full_mask(d.n), 3});
      return make_lattice(std::move(flats), d.n);
    }
  }
  throw std::invalid_argument("invalid descriptor: unknown kind");
}

std::string MatroidDescriptor::to_string() const {
  switch (kind) {
    case DescriptorKind::schubert:
      return label_to_string(label);
    case DescriptorKind::rank2: {
      std::string out = "rank2 loops=" + std::to_string(loops) + " classes=[";
      for (size_t i = 0; i < class_sizes.size(); ++i)
        out += (i ? "," : "") + std::to_string(class_sizes[i]);
      return out + "] n=" + std::to_string(n);
    }
    case DescriptorKind::rank3: {
      if (coloop) {
        std::string out = "rank3 coloop loops=" + std::to_string(loops) + " classes=[";
        for (size_t i = 0; i < class_sizes.size(); ++i)
          out += (i ? "," : "") + std::to_string(class_sizes[i]);
        return out + "] n=" + std::to_string(n);
      }
      std::string out = "rank3 loops=" + std::to_string(loops) + " cover=[";
      for (size_t i = 0; i < cover.size(); ++i) out += (i ? "," : "") + mask_to_string(cover[i]);
      out += "] mult=[";
      for (size_t i = 0; i < multiplicities.size(); ++i)
        out += (i ? "," : "") + std::to_string(multiplicities[i]);
      return out + "] n=" + std::to_string(n);
    }
  }
  return "?";
}

nlohmann::json MatroidDescriptor::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  switch (kind) {
    case DescriptorKind::schubert:
      j["kind"] = "schubert";
      j["label"] = label.xs;
      break;
    case DescriptorKind::rank2:
      j["kind"] = "rank2";
      j["loops"] = loops;
      j["classes"] = class_sizes;
      break;
    case DescriptorKind::rank3:
      j["kind"] = "rank3";
      j["loops"] = loops;
      if (coloop) {
        j["coloop"] = true;
        j["classes"] = class_sizes;
      } else {
        j["cover_ground"] = cover_ground;
        auto& arr = j["cover"] = nlohmann::json::array();
        for (Mask f : cover) arr.push_back(mask_to_elements(f));
        j["multiplicities"] = multiplicities;
      }
      break;
  }
  return j;
}

MatroidDescriptor MatroidDescriptor::from_json(const nlohmann::json& j) {
  MatroidDescriptor d;
  d.n = j.at("n").get<int>();
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "schubert") {
    d.kind = DescriptorKind::schubert;
    d.label.n = d.n;
    d.label.xs = j.at("label").get<std::vector<int>>();
    check_label(d.label);
  } else if (kind == "rank2") {
    d.kind = DescriptorKind::rank2;
    d.loops = j.at("loops").get<int>();
    d.class_sizes = j.at("classes").get<std::vector<int>>();
  } else if (kind == "rank3") {
    d.kind = DescriptorKind::rank3;
    d.loops = j.at("loops").get<int>();
    if (j.contains("coloop") && j.at("coloop").get<bool>()) {
      d.coloop = true;
      d.class_sizes = j.at("classes").get<std::vector<int>>();
    } else {
      d.cover_ground = j.at("cover_ground").get<int>();
      for (const auto& f : j.at("cover"))
        d.cover.push_back(elements_to_mask(f.get<std::vector<int>>(), d.cover_ground));
      std::sort(d.cover.begin(), d.cover.end());
      d.multiplicities = j.at("multiplicities").get<std::vector<int>>();
    }
  } else {
    throw std::invalid_argument("invalid descriptor: unknown kind " + kind);
  }
  return d;
}

}  // namespace omega
