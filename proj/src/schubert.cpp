#include "omega/schubert.hpp"

#include <algorithm>
#include <stdexcept>

namespace omega {

void check_label(const SchubertLabel& s) {
  if (s.n < 1 || s.n > kMaxGround) throw std::invalid_argument("label ground set out of range");
  if (s.xs.empty() || (int)s.xs.size() > s.n) throw std::invalid_argument("label rank out of range");
  int prev = 0;
  for (int x : s.xs) {
    if (x <= prev || x > s.n) throw std::invalid_argument("label entries must increase within [1, n]");
    prev = x;
  }
}

bool RowOrder::operator()(const SchubertLabel& a, const SchubertLabel& b) const {
  if (a.n != b.n) return a.n < b.n;
  if (a.xs.size() != b.xs.size()) return a.xs.size() < b.xs.size();
  return a.xs > b.xs;
}

std::vector<SchubertLabel> canonical_schubert_order(int r, int n) {
  if (r < 1 || n < r || n > kMaxGround) throw std::invalid_argument("rank or ground set out of range");
  std::vector<SchubertLabel> out;
  std::vector<int> xs(r);
  for (int i = 0; i < r; ++i) xs[i] = n - r + 1 + i;  // descending lex starts at the top
  while (true) {
    out.push_back({n, xs});
    // predecessor in lex order among increasing r-tuples
    int i = r - 1;
    while (i >= 0 && xs[i] == (i == 0 ? 1 : xs[i - 1] + 1)) --i;
    if (i < 0) break;
    --xs[i];
    for (int j = i + 1; j < r; ++j) xs[j] = n - r + 1 + j;
  }
  return out;
}

std::string label_to_string(const SchubertLabel& s) {
  std::string out = "S(";
  for (size_t i = 0; i < s.xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.xs[i]);
  }
  return out + ")";
}

SchubertLabel parse_label(const std::string& text, int n) {
  if (text.size() < 4 || text.substr(0, 2) != "S(" || text.back() != ')')
    throw std::invalid_argument("malformed label: " + text);
  SchubertLabel s;
  s.n = n;
  size_t pos = 2;
  while (pos < text.size() - 1) {
    size_t end = text.find(',', pos);
    if (end == std::string::npos || end > text.size() - 1) end = text.size() - 1;
    s.xs.push_back(std::stoi(text.substr(pos, end - pos)));
    pos = end + 1;
  }
  check_label(s);
  return s;
}

int schubert_rank(const SchubertLabel& s, Mask a) {
  // greedy matching: scan elements ascending, each must clear the next threshold
  int matched = 0;
  int r = s.rank();
  for (int e = 1; e <= s.n && matched < r; ++e)
    if (contains(a, e) && e >= s.xs[matched]) ++matched;
  return matched;
}

long long schubert_basis_count(const SchubertLabel& s) {
  // ways[j] = number of increasing j-tuples chosen from elements seen so far
  int r = s.rank();
  std::vector<long long> ways(r + 1, 0);
  ways[0] = 1;
  for (int e = 1; e <= s.n; ++e)
    for (int j = r; j >= 1; --j)
      if (e >= s.xs[j - 1]) ways[j] += ways[j - 1];
  return ways[r];
}

CyclicFlatLattice schubert_lattice(const SchubertLabel& s) {
  check_label(s);
  int r = s.rank();
  std::vector<CyclicFlat> flats;
  flats.push_back({full_mask(s.xs[0] - 1), 0});
  for (int j = 1; j < r; ++j)
    if (s.xs[j] >= s.xs[j - 1] + 2) flats.push_back({full_mask(s.xs[j] - 1), j});
  if (s.xs[r - 1] <= s.n - 1) flats.push_back({full_mask(s.n), r});
  return make_lattice(std::move(flats), s.n);
}

}  // namespace omega
