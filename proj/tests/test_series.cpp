#include <doctest.h>

#include <functional>

#include "polyprod/series.hpp"
#include "support.hpp"

using namespace polyprod;
using testing::series;

namespace {

// Number of monomials of degree d in m variables whose support is a face.
long long face_monomials(const SimplicialComplex& K, int d) {
  const int m = K.ground_size();
  long long count = 0;
  std::vector<int> exps(m, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == m) {
      if (left != 0) return;
      Face support;
      for (int v = 0; v < m; ++v)
        if (exps[v] > 0) support.push_back(v);
      if (K.contains(support)) ++count;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      exps[var] = e;
      rec(var + 1, left - e);
    }
    exps[var] = 0;
  };
  rec(0, d);
  return count;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("arithmetic") {
  const Series one_minus_t = series(6, {1, -1});
  CHECK(one_minus_t.inverse() == series(6, {1, 1, 1, 1, 1, 1, 1}));
  CHECK(invert(series(4, {1, -2})) == series(4, {1, 2, 4, 8, 16}));
  CHECK(series(5, {1, 1}).pow(3) == series(5, {1, 3, 3, 1}));
  CHECK(one_plus_t_pow(5, 3) == series(5, {1, 3, 3, 1}));
  CHECK(series(3, {1, 2}) * series(3, {1, -2}) == series(3, {1, 0, -4}));
  CHECK(series(3, {0, 1, 2}).shifted(2) == series(3, {0, 0, 0, 1}));
  CHECK(series(3, {0, 1, 2}).divided_by_t(1) == series(2, {1, 2}));
  CHECK(series(4, {1, 1, 1, 1, 1}).at_negative() == series(4, {1, -1, 1, -1, 1}));
  CHECK(series(3, {5, 1}).reduced() == series(3, {0, 1}));
  CHECK(-series(2, {1, -1}) == series(2, {-1, 1}));
  CHECK(series(4, {1, 2, 3}).truncate(1) == series(1, {1, 2}));
  CHECK(series(2, {1, 7, 9, 11, 13}) == series(2, {1, 7, 9}));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(series(3, {1}) + series(4, {1}), SeriesError);
  CHECK_THROWS_AS(series(3, {2, 1}).inverse(), SeriesError);
  CHECK_THROWS_AS(series(3, {1, 1}).divided_by_t(1), SeriesError);
  CHECK_THROWS_AS(series(3, {1}).truncate(5), SeriesError);
  CHECK_THROWS_AS(Series(-1), SeriesError);
  CHECK_THROWS_AS(series(2, {1, 1LL << 62}).scaled(4), OverflowError);
}

TEST_CASE("inverse round trip") {
  const Series s = series(10, {1, 3, -2, 0, 5, 7});
  CHECK(s * s.inverse() == Series::one(10));
  const Series neg = series(10, {-1, 4, 1});
  CHECK(neg * neg.inverse() == Series::one(10));
}

TEST_CASE("face ring Hilbert series counts face-supported monomials") {
  std::vector<SimplicialComplex> ks = {path_graph(1), path_graph(2), path_graph(3), cycle_graph(3), cycle_graph(4),
                                       disjoint_points(3), simplex(2), book_graph(1, 3, 2),
                                       SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}})};
  for (const auto& K : ks) {
    const Series h = hilbert_sr(K, 6);
    for (int d = 0; d <= 6; ++d) CHECK(h[d] == face_monomials(K, d));
  }
}

TEST_CASE("loop series from the Koszul dual") {
  // (1+t)^2/(1-t)
  CHECK(koszul_loop_series(path_graph(2), 6) == series(6, {1, 3, 4, 4, 4, 4, 4}));
  // (1+t)^2/((1-t)(1-2t))
  CHECK(koszul_loop_series(planar_book(2, 2), 7) == series(7, {1, 5, 14, 32, 68, 140, 284, 572}));
  CHECK(koszul_loop_series(planar_book(3, 2), 4) == series(4, {1, 8, 47, 266, 1502}));
  // full simplex: a torus
  CHECK(koszul_loop_series(simplex(2), 5) == series(5, {1, 3, 3, 1}));
  // two points: (1+t)/(1-t)
  CHECK(koszul_loop_series(disjoint_points(2), 4) == series(4, {1, 2, 2, 2, 2}));
}

TEST_CASE("Koszul oracle preconditions") {
  CHECK_THROWS_AS(koszul_loop_series(book_graph(1, 3, 2), 8), OraclePreconditionError);
  CHECK_THROWS_AS(hilbert_sr(SimplicialComplex::from_facets(3, {{0}, {2}}), 4), OraclePreconditionError);
}

TEST_CASE("stripping circles") {
  const Series p = koszul_loop_series(planar_book(2, 2), 10);
  const Series q = strip_circles(p, 5);
  CHECK(q * one_plus_t_pow(10, 5) == p);
  for (long long c : q.coeffs()) CHECK(c >= 0);
  CHECK(strip_circles(one_plus_t_pow(6, 2), 2) == Series::one(6));
  CHECK_THROWS_AS(strip_circles(series(6, {1, 0, 1}), 1), SeriesError);
}

TEST_CASE("closed forms") {
  CHECK(hilbert_closed_form(path_graph(1)) == "1/(1 - s)^2");
  CHECK(koszul_closed_form(path_graph(1)) == "(1 + t)^2");
  CHECK(hilbert_closed_form(disjoint_points(2)) == "(1 + s)/(1 - s)");
  CHECK(koszul_closed_form(path_graph(2)) == "(1 + t)^2/(1 - t)");
  CHECK(koszul_closed_form(disjoint_points(3)) == "(1 + t)/(1 - 2t)");
}

}
