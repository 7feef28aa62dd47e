#ifndef POLYPROD_TESTS_SUPPORT_HPP
#define POLYPROD_TESTS_SUPPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/series.hpp"

namespace testing {

struct Named {
  std::string name;
  polyprod::SimplicialComplex K;
};

// Complexes used by the invariance and divisibility checks.
inline std::vector<Named> corpus() {
  using namespace polyprod;
  std::vector<Named> out;
  for (int l = 1; l <= 6; ++l) out.push_back({"path " + std::to_string(l), path_graph(l)});
  for (int l = 3; l <= 6; ++l) out.push_back({"cycle " + std::to_string(l), cycle_graph(l)});
  for (int n = 1; n <= 4; ++n) out.push_back({"points " + std::to_string(n), disjoint_points(n)});
  for (int d = 0; d <= 3; ++d) out.push_back({"simplex " + std::to_string(d), simplex(d)});
  for (auto [l, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}})
    out.push_back({"planar-book " + std::to_string(l) + " " + std::to_string(p), planar_book(l, p)});
  for (auto [n, l, p] : std::vector<std::tuple<int, int, int>>{{1, 3, 2}, {1, 4, 2}, {2, 5, 2}, {1, 3, 3}})
    out.push_back({"book " + std::to_string(n) + " " + std::to_string(l) + " " + std::to_string(p), book_graph(n, l, p)});
  out.push_back({"octahedron", SimplicialComplex::from_facets(6, {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                                                                   {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}})});
  out.push_back({"hollow tetrahedron", SimplicialComplex::from_facets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})});
  out.push_back({"triangle and edge", SimplicialComplex::from_facets(5, {{0, 1, 2}, {2, 3}, {3, 4}})});
  return out;
}

inline polyprod::Series series(int degree, std::vector<long long> c) { return polyprod::Series(degree, c); }

}  // namespace testing

#endif  // POLYPROD_TESTS_SUPPORT_HPP
