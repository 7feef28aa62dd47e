#ifndef POLYPROD_EXACT_HPP
#define POLYPROD_EXACT_HPP

#include <stdexcept>
#include <type_traits>

namespace polyprod {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Overflow-checked arithmetic for builtin integers; other scalar types are
// assumed to be unbounded and use their own operators.
namespace detail {

template <typename Scalar>
Scalar checked_mul(const Scalar& a, const Scalar& b) {
  if constexpr (std::is_integral_v<Scalar>) {
    Scalar r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in exact arithmetic");
    return r;
  } else {
    return a * b;
  }
}

template <typename Scalar>
Scalar checked_add(const Scalar& a, const Scalar& b) {
  if constexpr (std::is_integral_v<Scalar>) {
    Scalar r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in exact arithmetic");
    return r;
  } else {
    return a + b;
  }
}

template <typename Scalar>
Scalar checked_sub(const Scalar& a, const Scalar& b) {
  if constexpr (std::is_integral_v<Scalar>) {
    Scalar r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in exact arithmetic");
    return r;
  } else {
    return a - b;
  }
}

}  // namespace detail
}  // namespace polyprod

#endif  // POLYPROD_EXACT_HPP
