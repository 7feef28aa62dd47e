#ifndef POLYPROD_DECOMP_HPP
#define POLYPROD_DECOMP_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/series.hpp"
#include "polyprod/space.hpp"
#include "polyprod/spheres.hpp"

namespace polyprod {

class DecompError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct NamedFactor {
  std::string name;
  Space term;
};

/// Total series divided by (1+t)^m, with m the number of vertices.
struct CircleWitness {
  int m = 0;
  Series quotient{0};
};

/**
 * A loop space decomposition: `total` is the product of the factors, in
 * order. Sphere lists are attached for the factors that are loops on a wedge
 * of spheres, keyed by factor name.
 */
struct DecompResult {
  std::string family;
  std::map<std::string, long long> params;
  Space total;
  std::vector<NamedFactor> factors;
  std::map<std::string, SphereMultiset> spheres;
  std::optional<Series> series;
  std::vector<std::string> provenance;
  std::optional<CircleWitness> circles;
  long long fibre_summands = 0;  // wedge summands under the fibre loop, if any

  const Space& factor(const std::string& name) const;
};

/// Computes the series of `total` to degree N.
void attach_series(DecompResult& r, int degree);

/// Ω of n folded copies: ΩX × Ω(⋁^{n-1} Σfibre).
DecompResult fold_decompose(int copies, const Space& x, const Space& fibre);

/// Ω(⋁^n X) = ∏_{i=0}^{n-1} Ω(ΣΩ)^i X.
DecompResult fold_decompose_iterated(int copies, const Space& x);

/// Ω(X,*)^K ≃ (ΩX)^m × Ω zk, zk standing for (CΩX,ΩX)^K.
DecompResult cone_loop_split(int m, const Space& x, const Space& zk);

/**
 * Ω(X,*)^{M_n} ≃ Ω(X,*)^{K_1} × Ω(⋁^{n-1} ΣG) for the gluing M_n of `spec`.
 * When `base_zk` is given the K_1 factor is split by cone_loop_split,
 * otherwise it stays an opaque atom.
 */
DecompResult poly_fold_decompose(const GluingSpec& spec, const Space& x, const Space& fibre_g,
                                 const std::optional<Space>& base_zk = std::nullopt);

/// The atom standing for an unspecified space X.
Space generic_x();

/// ⋁_{k=2}^{l} (Σ ΩX^{∧k})^{∨ (k-1)C(l,k)}; with circles ΩX = S¹ and the
/// summands become S^{k+1}.
Space porter_wedge(int l, bool circles, const Space& x = generic_x());

/// Fibre (CΩX,ΩX)^{P_l}, computed through the l disjoint points it reduces to.
Space path_fibre_reduce(int l, bool circles, const Space& x = generic_x());

/// Fibre of the inclusion of the two endpoints into P_l.
Space endpoint_fibre(int l, bool circles, const Space& x = generic_x());

/// The space C in F' = Ω(C ⋊ Ω(ΩX ∗ ΩX)) for the endpoint fibre of P_l.
Space book_c(int l, bool circles, const Space& x = generic_x());

/// ΩDJ of the path P_l: (S¹)^{l+1} × ΩZ_{P_l}.
DecompResult dj_path_decompose(int l, int degree, int max_dim);

/// ΩDJ of n disjoint points: (S¹)^n × ΩZ_{V_n}.
DecompResult dj_points_decompose(int n, int degree, int max_dim);

/// ΩDJ of the full simplex on n+1 vertices: (S¹)^{n+1}.
DecompResult dj_simplex_decompose(int n, int degree);

/// ΩDJ of the planar book B(l,2l,p): (S¹)^{l+1} × ΩZ_{P_l} × Ω(⋁^p ΣF).
DecompResult dj_book_decompose(int l, int p, int degree, int max_dim);

}  // namespace polyprod

#endif  // POLYPROD_DECOMP_HPP
