#include "monokit/numeric.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "monokit/errors.hpp"

namespace monokit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::OverflowingCoefficients: return "OverflowingCoefficients";
    case ErrorKind::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
    case ErrorKind::PathTooClose: return "PathTooClose";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::UnidentifiedSimpleFactor: return "UnidentifiedSimpleFactor";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NotMonicInY: return "NotMonicInY";
    case ErrorKind::SheetCollision: return "SheetCollision";
    case ErrorKind::RankThresholdAmbiguous: return "RankThresholdAmbiguous";
    case ErrorKind::WitnessVerificationFailed: return "WitnessVerificationFailed";
    case ErrorKind::NotPrimitiveInput: return "NotPrimitiveInput";
    case ErrorKind::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorKind::PoleOfInversion: return "PoleOfInversion";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

Integer pow10(int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

[[noreturn]] void bad_number(const std::string& text) {
  throw Error(ErrorKind::ParseError, "malformed number '" + text + "'");
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) bad_number(raw);

  if (auto slash = text.find('/'); slash != std::string::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + raw + "'");
    return num / den;
  }

  size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  std::string digits;
  int frac_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) bad_number(raw);
  int exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') bad_number(raw);
    ++i;
    const char* first = text.data() + i;
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last) bad_number(raw);
  }
  // cpp_int reads a leading zero as an octal prefix.
  const auto nz = digits.find_first_not_of('0');
  Integer mantissa(nz == std::string::npos ? std::string("0") : digits.substr(nz));
  int scale = exponent - frac_digits;
  Rational r = scale >= 0 ? Rational(mantissa * pow10(scale)) : Rational(mantissa, pow10(-scale));
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

GaussRational parse_gauss_rational(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) bad_number(raw);
  if (text.back() != 'i' && text.back() != 'j') return {parse_rational(text), 0};

  std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not part of an exponent.
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  if (!im_part.empty() && im_part.back() == '*') im_part.pop_back();
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return {re, parse_rational(im_part)};
}

std::string to_string(const GaussRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string s = z.re == 0 ? "" : to_string(z.re);
  std::string im = to_string(z.im);
  if (!s.empty() && z.im > 0) s += '+';
  return s + im + "i";
}

std::string format_complex(Complex z) {
  auto fmt = [](double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
  };
  double im = z.imag() == 0.0 ? 0.0 : z.imag();
  std::string s = fmt(z.real() == 0.0 ? 0.0 : z.real());
  if (im >= 0) s += '+';
  return s + fmt(im) + "i";
}

}  // namespace monokit
