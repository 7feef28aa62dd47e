#ifndef POLYPROD_SPACEALG_HPP
#define POLYPROD_SPACEALG_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polyprod/series.hpp"
#include "polyprod/space.hpp"
#include "polyprod/spheres.hpp"

namespace polyprod {

/// A term could not be brought to the requested form (a wedge of spheres,
/// a computable series).
class ReductionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Infinite wedges and products are cut off; `ceiling` records where.
struct TruncatedSpace {
  Space term;
  std::optional<int> ceiling;
};

/**
 * Rewrites a term to normal form. Applied to a fixpoint:
 *
 *   - Wedge, Prod and Smash are flattened, equal children merged and sorted;
 *     Point is the unit of Wedge and Prod and absorbing for Smash.
 *   - Cone(x) = *, Join(x, y) = Σ(x ∧ y), Σ distributes over wedges, and
 *     Σ(x × y) = Σx ∨ Σy ∨ Σ(x ∧ y) over all factors.
 *   - Smash distributes over wedges, spheres merge, S^d ∧ y = Σ^d y and
 *     x ∧ Σy = Σ(x ∧ y).
 *   - Ω(x × y) = Ωx × Ωy.
 *   - Σc ⋊ b = Σc ∨ (c ∧ Σb) whenever the left side is a syntactic suspension.
 */
Space normalize(const Space& e);

/// The y with Σy = e, if e is syntactically a suspension.
std::optional<Space> desuspend(const Space& e);

/// Sphere(d), Susp(..) or a wedge of those (after normalization).
bool is_suspension(const Space& e);

/// ΣΩΣx = ⋁_{n>=1} Σ x^{∧n}, for x a wedge of spheres, cut at dimension `cutoff`.
TruncatedSpace james_split(const Space& x, int cutoff);

/// Lyndon words over {1..n} of length at most w, by length then lexicographic.
std::vector<std::vector<int>> lyndon_words(int alphabet_size, int max_length);

/// Lyndon words of length at most w in lexicographic order (Duval).
void for_each_lyndon_word(int alphabet_size, int max_length, const std::function<void(const std::vector<int>&)>& visit);

/// Ω(⋁ Σx_i) = ∏_{Lyndon ω} ΩΣ(x_ω), keeping factors whose sphere dimension
/// (estimated from connectivity for atoms) is at most `cutoff`.
TruncatedSpace hilton_milnor(const Space& wedge_of_suspensions, int cutoff);

/// Rational Poincaré series to degree N.
Series poincare_series(const Space& e, int degree);

/// Reduces e to a wedge of spheres of dimension at most `max_dim` using the
/// product splitting, James splitting of ΣΩ, and the half-smash rule.
SphereMultiset sphere_multiset_of(const Space& e, int max_dim);

/// Wedge of spheres as a term.
Space to_space(const SphereMultiset& spheres);

/// Poincaré series of a wedge of spheres (entries above N ignored).
Series series_of(const SphereMultiset& spheres, int degree);

}  // namespace polyprod

#endif  // POLYPROD_SPACEALG_HPP
