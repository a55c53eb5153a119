#pragma once

// Scalar plumbing shared by the double and exact-rational instantiations.

#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "paretail/errors.hpp"

namespace paretail {

using Rational = boost::multiprecision::cpp_rational;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
bool is_integral_value(const T& x) {
  if constexpr (is_exact_v<T>) {
    return boost::multiprecision::denominator(x) == 1;
  } else {
    using std::floor;
    using std::isfinite;
    return isfinite(x) && floor(x) == x;
  }
}

template <class T>
long long to_integer(const T& x) {
  if constexpr (is_exact_v<T>) {
    return static_cast<long long>(boost::multiprecision::numerator(x));
  } else {
    return static_cast<long long>(x);
  }
}

template <class T>
double to_double(const T& x) {
  return static_cast<double>(x);
}

template <class T>
bool is_finite_value(const T& x) {
  if constexpr (is_exact_v<T>) {
    return true;
  } else {
    using std::isfinite;
    return isfinite(x);
  }
}

template <class T>
T abs_value(const T& x) {
  return x < T(0) ? T(-x) : x;
}

/// base^e for integer e, by repeated squaring; exact for Rational.
template <class T>
T ipow(T base, long long e) {
  if (e < 0) {
    if (base == T(0)) throw SingularInputError("ipow: zero to a negative power");
    base = T(1) / base;
    e = -e;
  }
  T result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

/// base^e for real e. In exact mode only integral exponents (or a unit base)
/// are representable.
template <class T>
T real_pow(const T& base, const T& e) {
  if (is_integral_value(e)) return ipow(base, to_integer(e));
  if constexpr (is_exact_v<T>) {
    if (base == T(1)) return T(1);
    throw NotRepresentableError("real_pow: non-integral power of a rational is not exact");
  } else {
    using std::pow;
    if (base < T(0)) throw DomainError("real_pow: negative base with non-integral exponent");
    return pow(base, e);
  }
}

enum class FactorialKind { rising, falling };

/// Pochhammer symbol (x)_i = x(x+1)...(x+i-1); (x)_0 = 1.
template <class T>
T rising(const T& x, int i) {
  T r(1);
  for (int j = 0; j < i; ++j) r *= x + T(j);
  return r;
}

/// Falling factorial <x>_i = x(x-1)...(x-i+1); <x>_0 = 1.
template <class T>
T falling(const T& x, int i) {
  T r(1);
  for (int j = 0; j < i; ++j) r *= x - T(j);
  return r;
}

/// Product form of both factorial powers; total for every real x.
template <class T>
T factorial_powers(const T& x, int i, FactorialKind kind) {
  if (i < 0) throw ArgumentError("factorial_powers: negative index");
  return kind == FactorialKind::rising ? rising(x, i) : falling(x, i);
}

/// (x)_t = Gamma(x+t)/Gamma(x) for real t. Integral t uses products (negative
/// t included); other t need a floating scalar.
template <class T>
T rising_real(const T& x, const T& t) {
  if (is_integral_value(t)) {
    long long m = to_integer(t);
    if (m >= 0) return rising(x, static_cast<int>(m));
    T den(1);
    for (long long j = 1; j <= -m; ++j) den *= x - T(j);
    if (den == T(0)) throw InfiniteMomentError("rising_real: pole of the gamma ratio");
    return T(1) / den;
  }
  if constexpr (is_exact_v<T>) {
    throw NotRepresentableError("rising_real: non-integral index is not exact");
  } else {
    if (x <= T(0) || x + t <= T(0))
      throw InfiniteMomentError("rising_real: gamma argument must be positive");
    return T(1) / boost::math::tgamma_delta_ratio(x, t);
  }
}

/// <x>_t = Gamma(x+1)/Gamma(x-t+1) for real t.
template <class T>
T falling_real(const T& x, const T& t) {
  return rising_real(T(x - t + T(1)), t);
}

template <class T>
T factorial(int n) {
  T r(1);
  for (int j = 2; j <= n; ++j) r *= T(j);
  return r;
}

}  // namespace paretail
