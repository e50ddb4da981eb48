#pragma once

// Scalar fields used throughout the library.
//
// Two backends share one contract: exact rationals (the default everywhere)
// and complex doubles compared against a global zero tolerance. Every other
// module is templated on the scalar type and only talks to it through
// FieldTraits.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <complex>
#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qlsa {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Complex = std::complex<double>;

enum class Backend { exact, complex };

/// Zero tolerance of the complex backend (default 1e-9). Thread-safe.
double tolerance();
void set_tolerance(double tol);

/// Restores the previous tolerance on scope exit.
class ScopedTolerance {
 public:
  explicit ScopedTolerance(double tol) : saved_(tolerance()) { set_tolerance(tol); }
  ~ScopedTolerance() { set_tolerance(saved_); }
  ScopedTolerance(const ScopedTolerance&) = delete;
  ScopedTolerance& operator=(const ScopedTolerance&) = delete;

 private:
  double saved_;
};

class ScalarParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename S>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr Backend backend = Backend::exact;
  static constexpr std::string_view name = "exact";
  /// Exact elimination takes the first nonzero pivot.
  static constexpr bool magnitude_pivoting = false;

  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static double magnitude(const Rational& x) { return abs(x).convert_to<double>(); }
  static Complex to_complex(const Rational& x) { return {x.convert_to<double>(), 0.0}; }
};

template <>
struct FieldTraits<Complex> {
  static constexpr Backend backend = Backend::complex;
  static constexpr std::string_view name = "complex";
  static constexpr bool magnitude_pivoting = true;

  static bool is_zero(const Complex& x) { return std::abs(x) <= tolerance(); }
  static double magnitude(const Complex& x) { return std::abs(x); }
  static Complex to_complex(const Complex& x) { return x; }
};

template <typename S>
concept FieldScalar = requires(const S& x) {
  { FieldTraits<S>::is_zero(x) } -> std::convertible_to<bool>;
  { FieldTraits<S>::magnitude(x) } -> std::convertible_to<double>;
};

template <FieldScalar S>
bool is_zero(const S& x) {
  return FieldTraits<S>::is_zero(x);
}

/// `p/q` (or `p` when q = 1) for rationals; `a+bi` for complex numbers.
std::string format_scalar(const Rational& x);
std::string format_scalar(const Complex& x);

/// Inverse of format_scalar. Rationals accept `p` or `p/q`; complex numbers
/// accept `a`, `bi`, `a+bi`, `a-bi` and also exact `p/q` literals.
template <FieldScalar S>
S parse_scalar(std::string_view text);

template <>
Rational parse_scalar<Rational>(std::string_view text);
template <>
Complex parse_scalar<Complex>(std::string_view text);

/// Converts an exact scalar into the target backend.
template <FieldScalar S>
S from_rational(const Rational& x) {
  if constexpr (std::same_as<S, Rational>) {
    return x;
  } else {
    return FieldTraits<Rational>::to_complex(x);
  }
}

}  // namespace qlsa
