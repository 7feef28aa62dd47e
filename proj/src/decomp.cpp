#include "polyprod/decomp.hpp"

#include "polyprod/spacealg.hpp"

namespace polyprod {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Space loop_of(bool circles, const Space& x) { return circles ? sphere(1) : loop(x); }

Space product_of(const std::vector<NamedFactor>& fs) {
  std::vector<Space> terms;
  for (const auto& f : fs) terms.push_back(f.term);
  return terms.size() == 1 ? terms.front() : prod(terms);
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw DecompError(msg);
}

void attach_witness(DecompResult& r, int m) {
  r.circles = CircleWitness{m, strip_circles(*r.series, m)};
}

}  // namespace

const Space& DecompResult::factor(const std::string& name) const {
  for (const auto& f : factors)
    if (f.name == name) return f.term;
  throw DecompError("decomposition has no factor '" + name + "'");
}

void attach_series(DecompResult& r, int degree) { r.series = poincare_series(r.total, degree); }

Space generic_x() { return atom("X"); }

DecompResult fold_decompose(int copies, const Space& x, const Space& fibre) {
  require(copies >= 2, "fold decomposition needs at least 2 copies");
  DecompResult r;
  r.family = "fold";
  r.params["n"] = copies;
  r.factors = {{"base", loop(x)}, {"fibre", loop(wedge_power(susp(fibre), copies - 1))}};
  r.fibre_summands = copies - 1;
  r.total = product_of(r.factors);
  r.provenance = {"fold splitting"};
  return r;
}

DecompResult fold_decompose_iterated(int copies, const Space& x) {
  require(copies >= 1, "iterated fold decomposition needs at least 1 copy");
  DecompResult r;
  r.family = "fold-iterated";
  r.params["n"] = copies;
  Space level = x;
  for (int i = 0; i < copies; ++i) {
    r.factors.push_back({"level" + std::to_string(i), loop(level)});
    r.provenance.push_back("fold splitting");
    level = susp(loop(level));
  }
  r.total = product_of(r.factors);
  return r;
}

DecompResult cone_loop_split(int m, const Space& x, const Space& zk) {
  require(m >= 1, "cone-loop splitting needs at least one vertex");
  DecompResult r;
  r.family = "cone-loop";
  r.params["m"] = m;
  r.factors = {{"loops", prod_power(loop(x), m)}, {"zk", loop(zk)}};
  r.total = product_of(r.factors);
  r.provenance = {"cone-loop splitting"};
  return r;
}

DecompResult poly_fold_decompose(const GluingSpec& spec, const Space& x, const Space& fibre_g,
                                 const std::optional<Space>& base_zk) {
  try {
    spec.validate();
  } catch (const ComplexError& e) {
    throw DecompError(std::string("invalid gluing: ") + e.what());
  }
  DecompResult r;
  r.family = "glue";
  r.params["copies"] = spec.copies;
  r.params["m"] = spec.base.ground_size();
  if (base_zk) {
    const DecompResult base = cone_loop_split(spec.base.ground_size(), x, *base_zk);
    r.factors = base.factors;
    r.provenance = base.provenance;
  } else {
    r.factors.push_back({"base", loop(atom("(X,*)^K1"))});
  }
  r.fibre_summands = spec.copies - 1;
  r.factors.push_back({"fibre", loop(wedge_power(susp(fibre_g), r.fibre_summands))});
  r.provenance.push_back("polyhedral fold splitting");
  r.total = product_of(r.factors);
  return r;
}

Space porter_wedge(int l, bool circles, const Space& x) {
  require(l >= 2, "Porter wedge needs at least 2 points");
  const Space lx = loop_of(circles, x);
  std::vector<Factor> summands;
  for (int k = 2; k <= l; ++k) {
    const long long mult = (k - 1) * binomial(l, k);
    summands.push_back({circles ? sphere(k + 1) : susp(smash_power(lx, k)), mult});
  }
  return wedge(summands);
}

Space path_fibre_reduce(int l, bool circles, const Space& x) {
  require(l >= 1, "path length must be at least 1");
  if (l == 1) return point();
  return porter_wedge(l, circles, x);
}

Space book_c(int l, bool circles, const Space& x) {
  require(l >= 3, "C is defined for paths of length at least 3");
  const Space lx = loop_of(circles, x);
  // Subsets I of {0, ..., l-2}, excluding ∅ and {0}; only |I| matters.
  std::vector<Factor> summands;
  for (int j = 1; j <= l - 1; ++j) {
    const long long mult = binomial(l - 1, j) - (j == 1 ? 1 : 0);
    if (mult == 0) continue;
    summands.push_back({circles ? sphere(j + 2) : susp(smash_power(lx, j + 1)), mult});
  }
  summands.push_back({rhalf_smash(path_fibre_reduce(l - 1, circles, x), lx), 1});
  return wedge(summands);
}

Space endpoint_fibre(int l, bool circles, const Space& x) {
  require(l >= 2, "endpoint fibre needs a path of length at least 2");
  const Space lx = loop_of(circles, x);
  if (l == 2) return lx;
  const Space joined = circles ? sphere(3) : join(lx, lx);
  return prod({Factor{lx, l - 1}, Factor{loop(rhalf_smash(book_c(l, circles, x), loop(joined))), 1}});
}

DecompResult dj_path_decompose(int l, int degree, int max_dim) {
  require(l >= 1, "path length must be at least 1");
  DecompResult r;
  r.family = "P(l)";
  r.params["l"] = l;
  const Space zk = path_fibre_reduce(l, true);
  r.factors = {{"circles", prod_power(sphere(1), l + 1)}, {"ZPl", loop(normalize(zk))}};
  r.spheres["ZPl"] = sphere_multiset_of(zk, max_dim);
  r.total = product_of(r.factors);
  r.provenance = {"cone-loop splitting", "path to disjoint points", "Porter wedge"};
  attach_series(r, degree);
  attach_witness(r, l + 1);
  return r;
}

DecompResult dj_points_decompose(int n, int degree, int max_dim) {
  require(n >= 1, "need at least one point");
  DecompResult r;
  r.family = "V(n)";
  r.params["n"] = n;
  const Space zk = n == 1 ? point() : porter_wedge(n, true);
  r.factors = {{"circles", prod_power(sphere(1), n)}, {"ZK", loop(normalize(zk))}};
  r.spheres["ZK"] = sphere_multiset_of(zk, max_dim);
  r.total = product_of(r.factors);
  r.provenance = {"cone-loop splitting", "Porter wedge"};
  attach_series(r, degree);
  attach_witness(r, n);
  return r;
}

DecompResult dj_simplex_decompose(int n, int degree) {
  require(n >= 0, "simplex dimension must be non-negative");
  DecompResult r;
  r.family = "simplex(n)";
  r.params["n"] = n;
  r.factors = {{"circles", prod_power(sphere(1), n + 1)}};
  r.total = product_of(r.factors);
  r.provenance = {"cone-loop splitting"};
  attach_series(r, degree);
  attach_witness(r, n + 1);
  return r;
}

DecompResult dj_book_decompose(int l, int p, int degree, int max_dim) {
  require(l >= 2, "book decomposition needs l >= 2");
  require(p >= 2, "book decomposition needs p >= 2");
  require(max_dim >= 2, "sphere ceiling must be at least 2");
  const SimplicialComplex K = planar_book(l, p);
  require(is_flag(K), "planar book is not flag");

  DecompResult r;
  r.family = "B(l,2l,p)";
  r.params["l"] = l;
  r.params["p"] = p;
  const Space zk = path_fibre_reduce(l, true);
  const Space fibre = endpoint_fibre(l, true);
  const Space fibre_wedge = wedge_power(susp(fibre), p);
  r.factors = {{"circles", prod_power(sphere(1), l + 1)}, {"ZPl", loop(normalize(zk))}, {"fibre", loop(fibre_wedge)}};
  r.fibre_summands = p;
  r.total = product_of(r.factors);
  r.spheres["ZPl"] = sphere_multiset_of(zk, max_dim);
  r.spheres["fibre"] = sphere_multiset_of(fibre_wedge, max_dim);

  r.provenance = {"cone-loop splitting", "path to disjoint points", "Porter wedge", "polyhedral fold splitting",
                  "endpoint fibre"};
  if (l == 2) {
    r.provenance.push_back("join splitting");
  } else {
    r.provenance.insert(r.provenance.end(),
                        {"inclusion fibre", "suspension of a product", "half-smash splitting", "James splitting"});
  }
  r.provenance.push_back("wedge of spheres");

  attach_series(r, degree);
  attach_witness(r, K.ground_size());
  return r;
}

}  // namespace polyprod
