#ifndef POLYPROD_SPACE_HPP
#define POLYPROD_SPACE_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace polyprod {

/**
 * Immutable term describing a pointed homotopy type.
 *
 * Wedge, Prod and Smash are n-ary and carry multiplicities, so that a wedge
 * of 2^15 copies of one sphere or a product of a million loop factors stays a
 * handful of nodes. Unary and binary constructors store their arguments with
 * multiplicity 1.
 */
class Space {
 public:
  enum class Kind : std::uint8_t { Point, Sphere, Atom, Wedge, Prod, Smash, Susp, Loop, Join, RHalfSmash, Cone };

  struct Factor;

  /// Opaque space with optionally declared Poincaré data (reduced series of
  /// the space itself, full series of its loop space).
  struct AtomData {
    std::string name;
    std::optional<std::vector<long long>> reduced_series;
    std::optional<std::vector<long long>> loop_series;
    auto operator<=>(const AtomData&) const = default;
  };

  Space();  // the point

  Kind kind() const { return node_->kind; }
  int dim() const { return node_->dim; }
  const AtomData& atom() const { return *node_->atom; }
  const std::vector<Factor>& factors() const { return node_->children; }
  const Space& arg(std::size_t i = 0) const;

  bool is(Kind k) const { return kind() == k; }
  bool is_point() const { return is(Kind::Point); }

  friend std::strong_ordering operator<=>(const Space& a, const Space& b);
  friend bool operator==(const Space& a, const Space& b) { return (a <=> b) == 0; }

  // Raw constructors; no simplification is applied.
  static Space make_point();
  static Space make_sphere(int d);
  static Space make_atom(AtomData data);
  static Space make_nary(Kind k, std::vector<Factor> children);
  static Space make_unary(Kind k, Space x);
  static Space make_binary(Kind k, Space a, Space b);

 private:
  struct Node {
    Kind kind = Kind::Point;
    int dim = 0;
    std::shared_ptr<const AtomData> atom;
    std::vector<Factor> children;
  };
  explicit Space(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct Space::Factor {
  Space term;
  long long count = 1;
  friend bool operator==(const Factor& a, const Factor& b) { return a.count == b.count && a.term == b.term; }
};

using Factor = Space::Factor;
using SpaceKind = Space::Kind;

inline Space point() { return Space::make_point(); }
inline Space sphere(int d) { return Space::make_sphere(d); }
inline Space atom(std::string name, std::optional<std::vector<long long>> reduced_series = std::nullopt,
                  std::optional<std::vector<long long>> loop_series = std::nullopt) {
  return Space::make_atom({std::move(name), std::move(reduced_series), std::move(loop_series)});
}

Space wedge(std::vector<Space> xs);
Space wedge(std::vector<Factor> xs);
Space prod(std::vector<Space> xs);
Space prod(std::vector<Factor> xs);
Space smash(std::vector<Space> xs);
Space smash(std::vector<Factor> xs);

/// n copies of x under the given n-ary operation.
Space wedge_power(const Space& x, long long n);
Space prod_power(const Space& x, long long n);
Space smash_power(const Space& x, long long n);

inline Space susp(Space x) { return Space::make_unary(SpaceKind::Susp, std::move(x)); }
inline Space loop(Space x) { return Space::make_unary(SpaceKind::Loop, std::move(x)); }
inline Space cone(Space x) { return Space::make_unary(SpaceKind::Cone, std::move(x)); }
inline Space join(Space a, Space b) { return Space::make_binary(SpaceKind::Join, std::move(a), std::move(b)); }
/// a ⋊ b = (a × b)/(* × b)
inline Space rhalf_smash(Space a, Space b) {
  return Space::make_binary(SpaceKind::RHalfSmash, std::move(a), std::move(b));
}

/// CP^∞ as an atom whose loop space is declared to be a circle.
Space cp_infinity();

/// Term count including multiplicity-bearing children (for diagnostics).
std::size_t node_count(const Space& e);

// Text and JSON forms, e.g. (wedge (sphere 3) (rep 2 (sphere 4))).
std::string to_sexpr(const Space& e);
Space parse_sexpr(const std::string& text);

}  // namespace polyprod

#endif  // POLYPROD_SPACE_HPP
