#ifndef POLYPROD_SERIES_HPP
#define POLYPROD_SERIES_HPP

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/exact.hpp"

namespace polyprod {

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An oracle was asked about input outside its domain of validity.
class OraclePreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Power series a_0 + a_1 t + ... + a_N t^N with exact coefficients.
 *
 * The truncation degree is part of the value: binary operations require both
 * operands to share it and never change it.
 */
template <typename Scalar = long long>
class TruncSeries {
 public:
  explicit TruncSeries(int degree) : coeffs_(check_degree(degree) + 1, Scalar(0)) {}

  /// Coefficients past `degree` are dropped; missing ones are zero.
  TruncSeries(int degree, const std::vector<Scalar>& coeffs) : TruncSeries(degree) {
    std::copy_n(coeffs.begin(), std::min(coeffs.size(), coeffs_.size()), coeffs_.begin());
  }
  TruncSeries(int degree, std::initializer_list<Scalar> coeffs) : TruncSeries(degree, std::vector<Scalar>(coeffs)) {}

  static TruncSeries one(int degree) { return monomial(degree, 0, Scalar(1)); }

  /// c t^k, or zero when k exceeds the truncation degree.
  static TruncSeries monomial(int degree, int k, Scalar c = Scalar(1)) {
    TruncSeries s(degree);
    if (k >= 0 && k <= degree) s.coeffs_[k] = c;
    return s;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& operator[](int i) const { return coeffs_.at(i); }
  Scalar& operator[](int i) { return coeffs_.at(i); }

  /// Copy truncated to a lower degree.
  TruncSeries truncate(int degree) const {
    if (degree > this->degree()) throw SeriesError("cannot raise the truncation degree of a series");
    return TruncSeries(degree, coeffs_);
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    same_degree(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = detail::checked_add(coeffs_[i], o.coeffs_[i]);
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    same_degree(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = detail::checked_sub(coeffs_[i], o.coeffs_[i]);
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator-(TruncSeries a) {
    for (auto& c : a.coeffs_) c = detail::checked_sub(Scalar(0), c);
    return a;
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.same_degree(b);
    const int n = a.degree();
    TruncSeries out(n);
    for (int i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      for (int j = 0; i + j <= n; ++j)
        out.coeffs_[i + j] = detail::checked_add(out.coeffs_[i + j], detail::checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return out;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  TruncSeries scaled(const Scalar& c) const {
    TruncSeries out(*this);
    for (auto& x : out.coeffs_) x = detail::checked_mul(x, c);
    return out;
  }

  /// Multiplicative inverse; requires a_0 = ±1.
  TruncSeries inverse() const {
    const Scalar a0 = coeffs_[0];
    if (a0 != Scalar(1) && a0 != Scalar(-1))
      throw SeriesError("series inversion needs constant term 1 or -1");
    const int n = degree();
    TruncSeries out(n);
    out.coeffs_[0] = a0;  // 1/a0 == a0 for a unit
    for (int k = 1; k <= n; ++k) {
      Scalar acc(0);
      for (int i = 1; i <= k; ++i)
        acc = detail::checked_add(acc, detail::checked_mul(coeffs_[i], out.coeffs_[k - i]));
      out.coeffs_[k] = detail::checked_mul(detail::checked_sub(Scalar(0), acc), a0);
    }
    return out;
  }

  TruncSeries pow(unsigned long long e) const {
    TruncSeries result = one(degree());
    TruncSeries base(*this);
    while (e) {
      if (e & 1ull) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  /// Multiplication by t^k, dropping terms past the truncation degree.
  TruncSeries shifted(int k) const {
    TruncSeries out(degree());
    for (int i = 0; i + k <= degree(); ++i) out.coeffs_[i + k] = coeffs_[i];
    return out;
  }

  /// Division by t^k; the result is k degrees shorter. Low terms must vanish.
  TruncSeries divided_by_t(int k) const {
    for (int i = 0; i < k; ++i)
      if (coeffs_[i] != Scalar(0)) throw SeriesError("series is not divisible by t^" + std::to_string(k));
    TruncSeries out(degree() - k);
    for (int i = k; i <= degree(); ++i) out.coeffs_[i - k] = coeffs_[i];
    return out;
  }

  /// The series with t replaced by -t.
  TruncSeries at_negative() const {
    TruncSeries out(*this);
    for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = detail::checked_sub(Scalar(0), out.coeffs_[i]);
    return out;
  }

  /// Series minus its constant term.
  TruncSeries reduced() const {
    TruncSeries out(*this);
    out.coeffs_[0] = Scalar(0);
    return out;
  }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  static int check_degree(int degree) {
    if (degree < 0) throw SeriesError("truncation degree must be non-negative");
    return degree;
  }
  void same_degree(const TruncSeries& o) const {
    if (o.degree() != degree())
      throw SeriesError("truncation degree mismatch: " + std::to_string(degree()) + " vs " + std::to_string(o.degree()));
  }

  std::vector<Scalar> coeffs_;
};

using Series = TruncSeries<long long>;

template <typename Scalar>
TruncSeries<Scalar> invert(const TruncSeries<Scalar>& s) {
  return s.inverse();
}

/// (1 + t)^k to degree N.
Series one_plus_t_pow(int degree, int k);

/// Face-ring Hilbert series Σ_{σ ∈ K} (s/(1-s))^{|σ|}, generators in degree 1.
Series hilbert_sr(const SimplicialComplex& K, int degree);

/// 1 / H(-t): the loop-homology Poincaré series of DJ_K for flag K.
Series koszul_loop_series(const SimplicialComplex& K, int degree);

/// p / (1+t)^m. The quotient must have non-negative coefficients, i.e. it
/// must itself be a Poincaré series; otherwise SeriesError.
Series strip_circles(const Series& p, int m);

/// Closed forms for display: "P(s)/(1-s)^d" and "(1+t)^d/P(-t)".
std::string hilbert_closed_form(const SimplicialComplex& K);
std::string koszul_closed_form(const SimplicialComplex& K);

}  // namespace polyprod

#endif  // POLYPROD_SERIES_HPP
