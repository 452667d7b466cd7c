#include "focalis/linalg.hpp"

namespace focalis {

bool next_subset(std::vector<int>& s, int n) {
  int k = static_cast<int>(s.size());
  int i = k - 1;
  while (i >= 0 && s[i] == n - k + i) --i;
  if (i < 0) return false;
  ++s[i];
  for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  return true;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  do {
    out.push_back(s);
  } while (next_subset(s, n));
  return out;
}

}  // namespace focalis
