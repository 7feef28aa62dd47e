#ifndef POLYPROD_COMPLEX_HPP
#define POLYPROD_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyprod {

using Vertex = int;
/// Strictly increasing list of vertex labels.
using Face = std::vector<Vertex>;
using Permutation = std::vector<Vertex>;

class ComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Finite abstract simplicial complex on the ground set {0, ..., m-1}.
 *
 * Faces are stored explicitly, including the empty face, sorted by size and
 * then lexicographically. A label below `ground_size()` without a singleton
 * face is a ghost vertex.
 */
class SimplicialComplex {
 public:
  /// The complex {∅} on an empty ground set.
  SimplicialComplex();

  /// Downward closure of `facets`. Facets need not be sorted or maximal.
  static SimplicialComplex from_facets(int ground_size, const std::vector<Face>& facets);

  int ground_size() const { return m_; }
  const std::vector<Face>& faces() const { return faces_; }

  bool contains(const Face& face) const;
  bool has_vertex(Vertex v) const { return contains(Face{v}); }
  bool has_ghosts() const;
  int dimension() const;

  /// Maximal faces, lexicographically sorted.
  std::vector<Face> facets() const;

  /// Checks closure under subsets and the label range; throws ComplexError.
  void validate() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(int m, std::vector<Face> faces);

  int m_ = 0;
  std::vector<Face> faces_;
};

/**
 * Data of the iterated pushout M_n: `copies` copies of `base`, where copy j+1
 * is attached to copy j by identifying the L_2 part of copy j with the L_1
 * part of copy j+1 through psi.
 */
struct GluingSpec {
  SimplicialComplex base;
  std::vector<Vertex> sub_a;  // vertices spanning L_1
  std::vector<Vertex> sub_b;  // vertices spanning L_2
  Permutation psi;            // empty means identity
  int copies = 2;
  std::vector<Permutation> phi;  // phi[j-2] labels copy j; empty means identity

  /// Throws ComplexError when psi or phi fail their invariants.
  void validate() const;
};

SimplicialComplex path_graph(int length);
SimplicialComplex cycle_graph(int length);
SimplicialComplex disjoint_points(int count);
SimplicialComplex simplex(int dim);

/// p cycles of length l glued along a shared path of length n. Shared path is
/// labelled 0..n, then each page's free vertices follow in page order.
SimplicialComplex book_graph(int n, int l, int p);

/// p+1 paths of length l sharing their endpoints, which are labelled 0 and 1.
SimplicialComplex planar_book(int l, int p);

/// Faces of K supported on `subset`, relabelled onto {0, ..., |subset|-1}
/// preserving order.
SimplicialComplex full_subcomplex(const SimplicialComplex& K, std::vector<Vertex> subset);

/// Same as above with the subset given as a bitmask (ground size <= 63).
SimplicialComplex full_subcomplex(const SimplicialComplex& K, std::uint64_t mask);

SimplicialComplex glue(const GluingSpec& spec);

/// p copies of C_l sharing the path 0..n; glues to a copy of book_graph(n, l, p).
GluingSpec book_gluing(int n, int l, int p);
/// p+1 copies of P_l sharing both endpoints; glues to a copy of planar_book(l, p).
GluingSpec planar_book_gluing(int l, int p);

bool is_flag(const SimplicialComplex& K);

/// Image of K under the bijection v -> perm[v].
SimplicialComplex relabel(const SimplicialComplex& K, const Permutation& perm);

/// Counts (f_{-1}, f_0, f_1, ...).
std::vector<long long> f_vector(const SimplicialComplex& K);

/// True if perm maps every face of K to a face of K.
bool is_automorphism(const SimplicialComplex& K, const Permutation& perm);

/// Backtracking search for perm with relabel(a, perm) == b.
std::optional<Permutation> find_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b);

/// Canonical text key: "m|f1;f2;..." over all faces.
std::string canonical_key(const SimplicialComplex& K);

}  // namespace polyprod

#endif  // POLYPROD_COMPLEX_HPP
