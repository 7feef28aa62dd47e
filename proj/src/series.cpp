#include "polyprod/series.hpp"

#include <algorithm>
#include <sstream>

namespace polyprod {

namespace {

void require_no_ghosts(const SimplicialComplex& K, const char* who) {
  if (K.has_ghosts()) throw OraclePreconditionError(std::string(who) + ": complex has ghost vertices");
}

// Coefficients of Σ_i f_{i-1} s^i (1-s)^{D-i}, D the largest face size.
std::vector<long long> h_polynomial(const SimplicialComplex& K) {
  const auto f = f_vector(K);
  const int D = static_cast<int>(f.size()) - 1;
  std::vector<long long> h(D + 1, 0);
  for (int i = 0; i <= D; ++i) {
    // (1-s)^{D-i} expanded by binomials
    long long binom = 1;
    for (int j = 0; j <= D - i; ++j) {
      const long long term = detail::checked_mul(f[i], (j % 2 ? -binom : binom));
      h[i + j] = detail::checked_add(h[i + j], term);
      binom = binom * (D - i - j) / (j + 1);
    }
  }
  return h;
}

std::string poly_string(const std::vector<long long>& c, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    long long v = c[i];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    const long long a = v < 0 ? -v : v;
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace

Series one_plus_t_pow(int degree, int k) { return Series(degree, {1, 1}).pow(static_cast<unsigned long long>(k)); }

Series hilbert_sr(const SimplicialComplex& K, int degree) {
  require_no_ghosts(K, "hilbert_sr");
  // (s/(1-s))^k contributes C(n-1, k-1) to s^n for n >= k.
  const auto f = f_vector(K);
  std::vector<std::vector<long long>> binom(degree + 1, std::vector<long long>(degree + 1, 0));
  for (int n = 0; n <= degree; ++n) {
    binom[n][0] = 1;
    for (int k = 1; k <= n; ++k) binom[n][k] = detail::checked_add(binom[n - 1][k - 1], binom[n - 1][k]);
  }
  Series h(degree);
  h[0] = f[0];
  for (int k = 1; k < static_cast<int>(f.size()); ++k)
    for (int n = k; n <= degree; ++n) h[n] = detail::checked_add(h[n], detail::checked_mul(f[k], binom[n - 1][k - 1]));
  return h;
}

Series koszul_loop_series(const SimplicialComplex& K, int degree) {
  require_no_ghosts(K, "koszul_loop_series");
  if (!is_flag(K)) throw OraclePreconditionError("koszul_loop_series: complex is not flag");
  return hilbert_sr(K, degree).at_negative().inverse();
}

Series strip_circles(const Series& p, int m) {
  if (m < 0) throw SeriesError("strip_circles: negative circle count");
  Series q = p;
  for (int r = 0; r < m; ++r)
    for (int i = 1; i <= q.degree(); ++i) q[i] = detail::checked_sub(q[i], q[i - 1]);
  for (int i = 0; i <= q.degree(); ++i)
    if (q[i] < 0)
      throw SeriesError("series is not divisible by (1+t)^" + std::to_string(m) + ": quotient has coefficient " +
                        std::to_string(q[i]) + " in degree " + std::to_string(i));
  return q;
}

namespace {

std::string power(const std::string& base, int e) {
  if (e == 0) return "1";
  return e == 1 ? base : base + "^" + std::to_string(e);
}

std::string fraction(const std::string& num, bool num_single, const std::string& den) {
  const std::string top = num_single ? num : "(" + num + ")";
  return den == "1" ? top : top + "/" + den;
}

bool single_term(const std::vector<long long>& p) {
  return std::count_if(p.begin(), p.end(), [](long long c) { return c != 0; }) <= 1;
}

}  // namespace

std::string hilbert_closed_form(const SimplicialComplex& K) {
  const auto h = h_polynomial(K);
  const int D = static_cast<int>(h.size()) - 1;
  return fraction(poly_string(h, "s"), single_term(h), power("(1 - s)", D));
}

std::string koszul_closed_form(const SimplicialComplex& K) {
  auto h = h_polynomial(K);
  const int D = static_cast<int>(h.size()) - 1;
  for (std::size_t i = 1; i < h.size(); i += 2) h[i] = -h[i];
  const std::string den = single_term(h) ? poly_string(h, "t") : "(" + poly_string(h, "t") + ")";
  return fraction(power("(1 + t)", D), true, den);
}

}  // namespace polyprod
