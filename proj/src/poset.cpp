#include "omega/poset.hpp"

#include <stdexcept>

namespace omega {

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  size_t n = leq_.size();
  for (const auto& row : leq_)
    if (row.size() != n) throw std::invalid_argument("relation matrix must be square");
  for (size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw std::invalid_argument("relation is not reflexive");
    for (size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a]) throw std::invalid_argument("relation is not antisymmetric");
      if (!leq_[a][b]) continue;
      for (size_t c = 0; c < n; ++c)
        if (leq_[b][c] && !leq_[a][c]) throw std::invalid_argument("relation is not transitive");
    }
  }
}

bool FinitePoset::leq(int a, int b) const {
  if (a < 0 || b < 0 || a >= size() || b >= size()) throw std::out_of_range("poset index out of range");
  return leq_[a][b];
}

long long FinitePoset::moebius(int a, int b) const {
  if (!leq(a, b)) return 0;
  if (a == b) return 1;
  auto it = memo_.find({a, b});
  if (it != memo_.end()) return it->second;
  long long sum = 0;
  for (int k = 0; k < size(); ++k)
    if (leq_[a][k] && leq_[k][b] && k != b) sum += moebius(a, k);
  long long value = -sum;
  memo_.emplace(std::make_pair(a, b), value);
  return value;
}

}  // namespace omega
