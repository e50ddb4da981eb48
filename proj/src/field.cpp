#include "qlsa/field.hpp"

#include <atomic>
#include <charconv>
#include <regex>
#include <system_error>

namespace qlsa {

namespace {

std::atomic<double> g_tolerance{1e-9};

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("cannot format double");
  return std::string(buf, end);
}

// std::from_chars rejects a leading '+'.
bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

double tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");
  g_tolerance.store(tol, std::memory_order_relaxed);
}

std::string format_scalar(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string format_scalar(const Complex& x) {
  std::string re = format_double(x.real());
  std::string im = format_double(x.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return re + im + "i";
}

template <>
Rational parse_scalar<Rational>(std::string_view text) {
  static const std::regex pattern(R"(([+-]?)(\d+)(?:/(\d+))?)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern))
    throw ScalarParseError("malformed rational '" + std::string(text) + "'");
  Integer num(m[2].str());
  Integer den = m[3].matched ? Integer(m[3].str()) : Integer(1);
  if (den == 0) throw ScalarParseError("zero denominator in '" + std::string(text) + "'");
  if (m[1].str() == "-") num = -num;
  return Rational(num, den);
}

template <>
Complex parse_scalar<Complex>(std::string_view text) {
  if (text.find('/') != std::string_view::npos)
    return FieldTraits<Rational>::to_complex(parse_scalar<Rational>(text));
  const auto bad = [&] { return ScalarParseError("malformed complex '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (text.back() != 'i') {
    double re = 0;
    if (!parse_double(text, re)) throw bad();
    return {re, 0.0};
  }
  std::string_view body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 0;) {
    if ((body[k] == '+' || body[k] == '-') && (k == 0 || (body[k - 1] != 'e' && body[k - 1] != 'E'))) {
      split = k;
      break;
    }
  }
  double re = 0, im = 0;
  if (split == std::string_view::npos || split == 0) {
    std::string_view imag = body;
    if (imag.empty() || imag == "+" || imag == "-") {
      im = imag == "-" ? -1.0 : 1.0;
    } else if (!parse_double(imag, im)) {
      throw bad();
    }
    return {0.0, im};
  }
  std::string_view real = body.substr(0, split);
  std::string_view imag = body.substr(split);
  if (!parse_double(real, re)) throw bad();
  if (imag == "+" || imag == "-") {
    im = imag == "-" ? -1.0 : 1.0;
  } else if (!parse_double(imag, im)) {
    throw bad();
  }
  return {re, im};
}

}  // namespace qlsa
