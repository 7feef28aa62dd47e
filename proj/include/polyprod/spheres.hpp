#ifndef POLYPROD_SPHERES_HPP
#define POLYPROD_SPHERES_HPP

#include <map>
#include <optional>

namespace polyprod {

/**
 * A wedge of spheres, stored as dimension -> multiplicity.
 *
 * When `ceiling` is set the wedge was cut off: dimensions above it are
 * unknown rather than absent.
 */
struct SphereMultiset {
  std::map<int, long long> counts;
  std::optional<int> ceiling;

  bool truncated() const { return ceiling.has_value(); }
  bool empty() const { return counts.empty(); }

  long long operator[](int dim) const {
    auto it = counts.find(dim);
    return it == counts.end() ? 0 : it->second;
  }

  void add(int dim, long long mult);

  /// Restricts to dimensions <= max_dim, marking truncation if anything was cut.
  void cap(int max_dim);

  /// Total number of spheres.
  long long size() const;

  friend bool operator==(const SphereMultiset&, const SphereMultiset&) = default;
};

/// Multisets agree in all dimensions at most `max_dim`.
bool agree_below(const SphereMultiset& a, const SphereMultiset& b, int max_dim);

}  // namespace polyprod

#endif  // POLYPROD_SPHERES_HPP
