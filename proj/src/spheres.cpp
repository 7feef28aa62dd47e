#include "polyprod/spheres.hpp"

#include <algorithm>

#include "polyprod/exact.hpp"

namespace polyprod {

void SphereMultiset::add(int dim, long long mult) {
  if (mult == 0) return;
  long long& slot = counts[dim];
  slot = detail::checked_add(slot, mult);
  if (slot == 0) counts.erase(dim);
}

void SphereMultiset::cap(int max_dim) {
  bool cut = false;
  for (auto it = counts.begin(); it != counts.end();) {
    if (it->first > max_dim) {
      it = counts.erase(it);
      cut = true;
    } else {
      ++it;
    }
  }
  if (cut || ceiling) ceiling = ceiling ? std::min(*ceiling, max_dim) : max_dim;
}

long long SphereMultiset::size() const {
  long long n = 0;
  for (const auto& [dim, mult] : counts) n = detail::checked_add(n, mult);
  return n;
}

bool agree_below(const SphereMultiset& a, const SphereMultiset& b, int max_dim) {
  for (int d = 0; d <= max_dim; ++d)
    if (a[d] != b[d]) return false;
  return true;
}

}  // namespace polyprod
