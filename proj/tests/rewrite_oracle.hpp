#pragma once

// Test-side ground truth for the commutation rule: computes b^j * a^i by
// literal rewriting on letter sequences, applying only the defining relators.
// ba -> a^-1 b^-1 and b^-1 a -> a^-1 b move a b-type letter right past a
// positive a; when a b-type letter meets a^-1, that letter is first expanded
// to a^{2n-1} via the a^{2n} = 1 relator. Independent of multiply().

#include "grpder/group.hpp"

#include <stdexcept>
#include <vector>

namespace grpder::testing {

inline GroupElement rewrite_commute(int j, int i, const GroupParams& p) {
  enum L { la, lA, lb, lB };  // a, a^-1, b, b^-1
  std::vector<int> w;
  for (int t = 0; t < j; ++t) w.push_back(lb);
  for (int t = 0; t < i; ++t) w.push_back(la);
  for (long guard = 0;; ++guard) {
    if (guard > 4'000'000) throw std::runtime_error("rewriting did not terminate");
    std::size_t t = w.size();
    for (std::size_t s = 0; s + 1 < w.size(); ++s)
      if ((w[s] == lb || w[s] == lB) && (w[s + 1] == la || w[s + 1] == lA)) {
        t = s;
        break;
      }
    if (t == w.size()) break;
    if (w[t + 1] == lA) {
      w.erase(w.begin() + t + 1);
      w.insert(w.begin() + t + 1, 2 * p.n - 1, la);
    } else if (w[t] == lb) {
      w[t] = lA;
      w[t + 1] = lB;
    } else {
      w[t] = lA;
      w[t + 1] = lb;
    }
  }
  long long ia = 0, jb = 0;
  for (const int c : w) {
    if (c == la) ++ia;
    else if (c == lA) --ia;
    else if (c == lb) ++jb;
    else --jb;
  }
  return normalized(ia, jb, p);
}

}  // namespace grpder::testing
