#pragma once

// Finite posets given by their full order relation, with a memoized Moebius
// function. Small instances only; nothing here is performance critical.

#include <map>
#include <vector>

namespace omega {

class FinitePoset {
 public:
  // leq[a][b] == true iff a <= b; the constructor rejects relations that are not
  // reflexive, antisymmetric and transitive.
  explicit FinitePoset(std::vector<std::vector<bool>> leq);

  int size() const { return (int)leq_.size(); }
  bool leq(int a, int b) const;
  long long moebius(int a, int b) const;

 private:
  std::vector<std::vector<bool>> leq_;
  mutable std::map<std::pair<int, int>, long long> memo_;
};

}  // namespace omega
