#include <doctest.h>

#include <boost/rational.hpp>
#include <random>

#include "polyprod/homology.hpp"
#include "support.hpp"

using namespace polyprod;

namespace {

using Q = boost::rational<long long>;

// Plain Gaussian elimination over Q.
int rational_rank(const DenseMatrix<long long>& m) {
  std::vector<std::vector<Q>> a(m.rows(), std::vector<Q>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  int rank = 0;
  const int rows = static_cast<int>(m.rows());
  for (Eigen::Index col = 0; col < m.cols() && rank < rows; ++col) {
    int piv = rank;
    while (piv < rows && a[piv][col] == Q(0)) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == Q(0)) continue;
      const Q f = a[r][col] / a[rank][col];
      for (Eigen::Index c = col; c < m.cols(); ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

BettiTable table(int m, std::map<int, long long> ranks) { return {m, std::move(ranks)}; }

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("exact rank agrees with rational elimination") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> size(1, 8), entry(-3, 3), sparse(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    DenseMatrix<long long> m(size(rng), size(rng));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = sparse(rng) == 0 ? 0 : entry(rng);
    if (trial % 5 == 0 && m.rows() > 1) m.row(m.rows() - 1) = m.row(0) * 2;  // force dependence
    CHECK(exact_rank<long long>(m) == rational_rank(m));
    CHECK(exact_rank<__int128>(m.cast<__int128>()) == rational_rank(m));
  }
}

TEST_CASE("boundary of a boundary vanishes") {
  for (const auto& [name, K] : testing::corpus()) {
    CAPTURE(name);
    for (int k = 2; k <= K.dimension() + 1; ++k) {
      const auto d1 = boundary_matrix<long long>(K, k - 1);
      const auto d2 = boundary_matrix<long long>(K, k);
      if (d1.size() == 0 || d2.size() == 0) continue;
      CHECK((d1 * d2).isZero());
    }
  }
}

TEST_CASE("reduced Betti numbers") {
  CHECK(reduced_betti(SimplicialComplex())[-1] == 1);
  const auto pt = reduced_betti(simplex(0));
  CHECK(pt[-1] == 0);
  CHECK(pt[0] == 0);
  CHECK(reduced_betti(disjoint_points(3))[0] == 2);
  CHECK(reduced_betti(cycle_graph(5))[1] == 1);
  CHECK(reduced_betti(cycle_graph(5))[0] == 0);
  const auto sphere2 = reduced_betti(SimplicialComplex::from_facets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  CHECK(sphere2[2] == 1);
  CHECK(sphere2[1] == 0);
  CHECK(reduced_betti(simplex(4))[3] == 0);
  CHECK(reduced_betti(book_graph(1, 3, 3))[1] == 3);
}

TEST_CASE("Euler characteristic matches the f-vector") {
  for (const auto& [name, K] : testing::corpus()) {
    CAPTURE(name);
    const auto f = f_vector(K);
    const auto b = reduced_betti(K);
    long long chi_f = 0, chi_b = 0;
    for (std::size_t i = 0; i < f.size(); ++i) chi_f += (i % 2 == 0 ? -1 : 1) * f[i];
    for (int d = -1; d <= b.top_degree(); ++d) chi_b += (d % 2 == 0 ? 1 : -1) * b[d];
    CHECK(chi_f == chi_b);
  }
}

TEST_CASE("moment-angle Betti numbers") {
  CHECK(hochster_zk_betti(path_graph(3)) == table(4, {{0, 1}, {3, 3}, {4, 2}}));
  CHECK(hochster_zk_betti(cycle_graph(4)) == table(4, {{0, 1}, {3, 2}, {6, 1}}));
  CHECK(hochster_zk_betti(path_graph(2)) == table(3, {{0, 1}, {3, 1}}));
  CHECK(hochster_zk_betti(disjoint_points(1)) == table(1, {{0, 1}}));
  CHECK(hochster_zk_betti(simplex(3)) == table(4, {{0, 1}}));
  // boundary of a triangle: Z_K = S^5
  CHECK(hochster_zk_betti(cycle_graph(3)) == table(3, {{0, 1}, {5, 1}}));
  // pentagon: a surface-like 7-manifold, b_3 = b_4 = 5
  CHECK(hochster_zk_betti(cycle_graph(5)) == table(5, {{0, 1}, {3, 5}, {4, 5}, {7, 1}}));
  for (int n = 2; n <= 6; ++n) {
    const auto t = hochster_zk_betti(disjoint_points(n));
    CHECK(t.ranks.rbegin()->first == n + 1);
    CHECK(t.ranks.rbegin()->second == n - 1);
  }
}

TEST_CASE("sphere multiset of Z_K") {
  const auto s = zk_sphere_multiset(path_graph(3));
  CHECK(s.counts == std::map<int, long long>{{3, 3}, {4, 2}});
  CHECK_FALSE(s.truncated());
}

TEST_CASE("Hochster preconditions") {
  const auto ghost = SimplicialComplex::from_facets(3, {{0}, {2}});
  try {
    hochster_zk_betti(ghost);
    FAIL("expected an error");
  } catch (const HochsterError& e) {
    CHECK(e.kind() == HochsterError::Kind::GhostVertex);
  }
  HochsterOptions small;
  small.max_ground_size = 4;
  try {
    hochster_zk_betti(path_graph(4), small);
    FAIL("expected an error");
  } catch (const HochsterError& e) {
    CHECK(e.kind() == HochsterError::Kind::TooLarge);
  }
}

TEST_CASE("worker count and memoization do not change the result") {
  const auto K = planar_book(3, 2);
  HochsterOptions one;
  const auto base = hochster_zk_betti(K, one);
  for (unsigned w : {2u, 3u, 5u}) {
    HochsterOptions o;
    o.workers = w;
    CHECK(hochster_zk_betti(K, o) == base);
  }
  HochsterOptions plain;
  plain.memoize = false;
  plain.workers = 2;
  CHECK(hochster_zk_betti(K, plain) == base);
}

}
