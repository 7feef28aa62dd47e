#ifndef POLYPROD_HOMOLOGY_HPP
#define POLYPROD_HOMOLOGY_HPP

#include <Eigen/Core>

#include <map>
#include <stdexcept>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/exact.hpp"
#include "polyprod/spheres.hpp"

namespace polyprod {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/**
 * Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
 *
 * Every intermediate entry is a minor of the input, so the division by the
 * previous pivot is exact. The argument is taken by value and destroyed.
 */
template <typename Scalar>
int exact_rank(DenseMatrix<Scalar> a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Scalar prev_pivot(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    const Scalar p = a(rank, col);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      const Scalar factor = a(r, col);
      for (Eigen::Index c = col + 1; c < cols; ++c) {
        const Scalar num = detail::checked_sub(detail::checked_mul(p, a(r, c)), detail::checked_mul(factor, a(rank, c)));
        a(r, c) = num / prev_pivot;
      }
      a(r, col) = Scalar(0);
    }
    prev_pivot = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

/// Matrix of the simplicial boundary map from faces of size k to faces of
/// size k-1 (k = 1 is the augmentation onto the empty face).
template <typename Scalar>
DenseMatrix<Scalar> boundary_matrix(const SimplicialComplex& K, int k);

/// Reduced Betti numbers indexed from degree -1.
struct ReducedBetti {
  std::vector<long long> values;  // values[i + 1] is b̃_i

  long long operator[](int degree) const {
    const int idx = degree + 1;
    return idx >= 0 && idx < static_cast<int>(values.size()) ? values[idx] : 0;
  }
  int top_degree() const { return static_cast<int>(values.size()) - 2; }
  friend bool operator==(const ReducedBetti&, const ReducedBetti&) = default;
};

/// Exact rational reduced homology. The complex {∅} has b̃_{-1} = 1.
ReducedBetti reduced_betti(const SimplicialComplex& K);

/// Betti numbers of the moment-angle complex, keyed by degree.
struct BettiTable {
  int ground_size = 0;
  std::map<int, long long> ranks;  // zero ranks are not stored

  long long operator[](int degree) const {
    auto it = ranks.find(degree);
    return it == ranks.end() ? 0 : it->second;
  }
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct HochsterOptions {
  int max_ground_size = 20;
  unsigned workers = 1;
  bool memoize = true;
};

class HochsterError : public std::invalid_argument {
 public:
  enum class Kind { GhostVertex, TooLarge, Disconnected };
  HochsterError(Kind kind, const std::string& msg) : std::invalid_argument(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// b_j(Z_K) = Σ_{I ⊆ [m]} b̃_{j-|I|-1}(K_I), enumerating all 2^m subsets.
BettiTable hochster_zk_betti(const SimplicialComplex& K, const HochsterOptions& opts = {});

/// Multiset {d: b_d(Z_K)} for d >= 1. Requires b_0 = 1.
SphereMultiset zk_sphere_multiset(const SimplicialComplex& K, const HochsterOptions& opts = {});

}  // namespace polyprod

#endif  // POLYPROD_HOMOLOGY_HPP
