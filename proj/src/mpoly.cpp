#include "focalis/mpoly.hpp"

namespace focalis {

int variable_rank(const std::string& name) {
  static const char* order[] = {"u", "v", "s", "lam", "mu"};
  for (int i = 0; i < 5; ++i)
    if (name == order[i]) return i;
  return 5;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  if (a == b) return a;
  std::vector<std::string> r = a;
  for (auto& n : b)
    if (std::find(r.begin(), r.end(), n) == r.end()) r.push_back(n);
  std::sort(r.begin(), r.end(), [](const std::string& x, const std::string& y) {
    int rx = variable_rank(x), ry = variable_rank(y);
    if (rx != ry) return rx < ry;
    return x < y;
  });
  return r;
}

}  // namespace focalis
