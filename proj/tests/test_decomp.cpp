#include <doctest.h>

#include "polyprod/decomp.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/spacealg.hpp"
#include "support.hpp"

using namespace polyprod;
using testing::series;

namespace {

using Counts = std::map<int, long long>;

Series product_of_factors(const DecompResult& r, int degree) {
  Series s = Series::one(degree);
  for (const auto& f : r.factors) s *= poincare_series(f.term, degree);
  return s;
}

Series geometric(int degree, long long ratio) {
  return (Series::one(degree) - Series::monomial(degree, 1, ratio)).inverse();
}

}  // namespace

TEST_SUITE("decomp") {

TEST_CASE("Porter wedge") {
  CHECK(sphere_multiset_of(porter_wedge(2, true), 16).counts == Counts{{3, 1}});
  CHECK(sphere_multiset_of(porter_wedge(3, true), 16).counts == Counts{{3, 3}, {4, 2}});
  CHECK(sphere_multiset_of(porter_wedge(4, true), 16).counts == Counts{{3, 6}, {4, 8}, {5, 3}});
  CHECK_THROWS_AS(porter_wedge(1, true), DecompError);
  // symbolic summands are suspended smash powers of ΩX
  const Space sym = porter_wedge(3, false);
  CHECK(sym.factors().size() == 2);
  CHECK(to_sexpr(sym.factors()[1].term) == "(susp (smash (rep 3 (loop (atom X)))))");
  CHECK(sym.factors()[1].count == 2);
}

TEST_CASE("Porter wedge matches Hochster on paths") {
  for (int l = 2; l <= 6; ++l) {
    CAPTURE(l);
    CHECK(sphere_multiset_of(path_fibre_reduce(l, true), 16) == zk_sphere_multiset(path_graph(l)));
    CHECK(sphere_multiset_of(path_fibre_reduce(l, true), 16) == zk_sphere_multiset(disjoint_points(l)));
  }
  CHECK(path_fibre_reduce(1, true) == point());
}

TEST_CASE("book C") {
  CHECK(sphere_multiset_of(book_c(3, true), 16).counts == Counts{{3, 2}, {4, 2}});
  CHECK(sphere_multiset_of(book_c(4, true), 16).counts == Counts{{3, 5}, {4, 8}, {5, 3}});
  CHECK_THROWS_AS(book_c(2, true), DecompError);
  // symbolic form keeps the half-smash with ΩX
  const Space c = book_c(3, false);
  CHECK(c.factors().back().term.is(SpaceKind::RHalfSmash));
}

TEST_CASE("endpoint fibre") {
  CHECK(endpoint_fibre(2, true) == sphere(1));
  CHECK(endpoint_fibre(2, false) == loop(generic_x()));
  const Space f3 = endpoint_fibre(3, true);
  CHECK(to_sexpr(f3).rfind("(prod (rep 2 (sphere 1)) (loop (rhalfsmash", 0) == 0);
  CHECK_THROWS_AS(endpoint_fibre(1, true), DecompError);
  // ΣF for l = 2 is S^2
  CHECK(normalize(susp(endpoint_fibre(2, true))) == sphere(2));
}

TEST_CASE("fold decomposition") {
  const auto r = fold_decompose(3, sphere(2), loop(sphere(2)));
  CHECK(r.fibre_summands == 2);
  CHECK(to_sexpr(r.total) == "(prod (loop (sphere 2)) (loop (wedge (rep 2 (susp (loop (sphere 2)))))))");
  CHECK(poincare_series(r.total, 12) == geometric(12, 3));
  CHECK(poincare_series(r.total, 12) == poincare_series(loop(wedge_power(sphere(2), 3)), 12));
  CHECK(fold_decompose(2, atom("X"), loop(atom("X"))).factors.size() == 2);
  CHECK_THROWS_AS(fold_decompose(1, sphere(2), point()), DecompError);
}

TEST_CASE("iterated fold decomposition agrees with Hilton-Milnor") {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 3; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      const auto r = fold_decompose_iterated(n, sphere(d + 1));
      CHECK(r.factors.size() == static_cast<std::size_t>(n));
      const auto hm = hilton_milnor(wedge_power(sphere(d + 1), n), 17);
      CHECK(poincare_series(r.total, 16) == poincare_series(hm.term, 16));
    }
  }
}

TEST_CASE("cone-loop splitting") {
  const auto p2 = cone_loop_split(3, cp_infinity(), sphere(3));
  CHECK(poincare_series(p2.total, 12) == koszul_loop_series(path_graph(2), 12));
  const auto v2 = cone_loop_split(2, cp_infinity(), sphere(3));
  CHECK(poincare_series(v2.total, 12) == koszul_loop_series(disjoint_points(2), 12));
  const auto s = cone_loop_split(1, atom("X"), point());
  CHECK(normalize(s.total) == loop(atom("X")));
  CHECK_THROWS_AS(cone_loop_split(0, atom("X"), point()), DecompError);
}

TEST_CASE("polyhedral fold decomposition") {
  const auto planar = poly_fold_decompose(planar_book_gluing(2, 3), cp_infinity(), endpoint_fibre(2, true),
                                          path_fibre_reduce(2, true));
  CHECK(planar.fibre_summands == 3);
  CHECK(poincare_series(planar.total, 16) == koszul_loop_series(planar_book(2, 3), 16));

  const auto book = poly_fold_decompose(book_gluing(1, 4, 3), generic_x(), atom("G"));
  CHECK(book.fibre_summands == 2);
  CHECK(to_sexpr(book.factor("base")) == R"((loop (atom "(X,*)^K1")))");
  CHECK(to_sexpr(book.factor("fibre")) == "(loop (wedge (rep 2 (susp (atom G)))))");

  GluingSpec wedge_of_points;
  wedge_of_points.base = disjoint_points(2);
  wedge_of_points.sub_a = {0};
  wedge_of_points.sub_b = {0};
  wedge_of_points.copies = 2;
  const auto w = poly_fold_decompose(wedge_of_points, generic_x(), atom("G"));
  CHECK(w.fibre_summands == 1);

  GluingSpec broken = wedge_of_points;
  broken.sub_b = {1};
  broken.psi = {0, 1};
  CHECK_THROWS_AS(poly_fold_decompose(broken, generic_x(), atom("G")), DecompError);
}

TEST_CASE("DJ decompositions of paths") {
  const auto r = dj_path_decompose(2, 16, 16);
  // (1+t)^2/(1-t)
  CHECK((*r.series)[0] == 1);
  for (int d = 2; d <= 16; ++d) CHECK((*r.series)[d] == 4);
  for (int l = 2; l <= 6; ++l) {
    const auto p = dj_path_decompose(l, 16, 16);
    CHECK(*p.series == koszul_loop_series(path_graph(l), 16));
    CHECK(p.spheres.at("ZPl") == zk_sphere_multiset(path_graph(l)));
    CHECK(p.circles->m == l + 1);
  }
  const auto p3 = dj_path_decompose(3, 16, 16);
  CHECK(p3.spheres.at("ZPl").counts == Counts{{3, 3}, {4, 2}});
  const auto p1 = dj_path_decompose(1, 8, 16);
  CHECK(p1.spheres.at("ZPl").empty());
  CHECK(*p1.series == series(8, {1, 2, 1}));
}

TEST_CASE("DJ decompositions of points and simplices") {
  for (int n = 1; n <= 5; ++n) CHECK(*dj_points_decompose(n, 12, 16).series == koszul_loop_series(disjoint_points(n), 12));
  for (int n = 0; n <= 3; ++n) CHECK(*dj_simplex_decompose(n, 12).series == koszul_loop_series(simplex(n), 12));
}

TEST_CASE("DJ decompositions of planar books") {
  const auto b22 = dj_book_decompose(2, 2, 16, 16);
  CHECK(to_sexpr(b22.total) ==
        "(prod (prod (rep 3 (sphere 1))) (loop (sphere 3)) (loop (wedge (rep 2 (susp (sphere 1))))))");
  CHECK(b22.spheres.at("ZPl").counts == Counts{{3, 1}});
  CHECK(b22.spheres.at("fibre").counts == Counts{{2, 2}});
  CHECK_FALSE(b22.spheres.at("fibre").truncated());
  // (1+t)^2/((1-t)(1-2t))
  const Series closed = one_plus_t_pow(16, 2) * geometric(16, 1) * geometric(16, 2);
  CHECK(*b22.series == closed);
  CHECK(b22.circles->m == 5);

  const auto b23 = dj_book_decompose(2, 3, 16, 16);
  CHECK(b23.spheres.at("fibre").counts == Counts{{2, 3}});
  CHECK(*b23.series == koszul_loop_series(planar_book(2, 3), 16));

  const auto b32 = dj_book_decompose(3, 2, 16, 12);
  CHECK(b32.spheres.at("ZPl").counts == Counts{{3, 3}, {4, 2}});
  CHECK(b32.spheres.at("fibre").counts ==
        Counts{{2, 4}, {3, 6}, {4, 12}, {5, 24}, {6, 48}, {7, 96}, {8, 192}, {9, 384}, {10, 768}, {11, 1536}, {12, 3072}});
  CHECK(b32.spheres.at("fibre").ceiling == 12);
  CHECK(*b32.series == koszul_loop_series(planar_book(3, 2), 16));

  CHECK_THROWS_AS(dj_book_decompose(1, 2, 16, 16), DecompError);
  CHECK_THROWS_AS(dj_book_decompose(2, 1, 16, 16), DecompError);
}

TEST_CASE("fibre spheres carry the fibre series below the ceiling") {
  const int ceiling = 12;
  const auto r = dj_book_decompose(3, 2, ceiling, ceiling);
  const Series from_spheres = poincare_series(loop(to_space(r.spheres.at("fibre"))), ceiling - 1);
  CHECK(from_spheres == poincare_series(r.factor("fibre"), ceiling - 1));
}

TEST_CASE("series of the total is the product over factors") {
  std::vector<DecompResult> all = {dj_path_decompose(4, 14, 14), dj_points_decompose(3, 14, 14),
                                   dj_book_decompose(2, 2, 14, 14), dj_book_decompose(3, 3, 14, 14),
                                   fold_decompose(3, sphere(3), loop(sphere(3))),
                                   cone_loop_split(4, cp_infinity(), porter_wedge(4, true))};
  for (auto& r : all) {
    CAPTURE(r.family);
    attach_series(r, 14);
    CHECK(*r.series == product_of_factors(r, 14));
  }
}

}
