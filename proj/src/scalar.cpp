#include "bicross/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace bicross {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

Scalar parse_decimal(std::string_view text) {
  std::string_view body = text;
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view ex = body.substr(e + 1);
    bool neg = false;
    if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
      neg = ex[0] == '-';
      ex.remove_prefix(1);
    }
    if (!all_digits(ex) || ex.size() > 6) throw std::invalid_argument("bad exponent in scalar: " + std::string(text));
    exponent = std::stol(std::string(ex));
    if (neg) exponent = -exponent;
    body = body.substr(0, e);
  }
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  std::string digits;
  long frac = 0;
  if (auto dotpos = body.find('.'); dotpos != std::string_view::npos) {
    std::string_view ip = body.substr(0, dotpos), fp = body.substr(dotpos + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw std::invalid_argument("bad scalar: " + std::string(text));
    digits = std::string(ip) + std::string(fp);
    frac = static_cast<long>(fp.size());
  } else {
    if (!all_digits(body)) throw std::invalid_argument("bad scalar: " + std::string(text));
    digits = std::string(body);
  }
  Scalar q(mpz_class(digits, 10));
  long shift = exponent - frac;
  if (shift > 0) q *= Scalar(pow10(shift));
  if (shift < 0) q /= Scalar(pow10(-shift));
  q.canonicalize();
  return negative ? Scalar(-q) : q;
}

}  // namespace

Scalar ratio(long p, long q) {
  if (q == 0) throw std::domain_error("ratio: zero denominator");
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty scalar");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  Scalar num = parse_decimal(text.substr(0, slash));
  Scalar den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in scalar: " + std::string(text));
  Scalar q = num / den;
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& q) { return q.get_str(); }

double to_double(const Scalar& q) { return q.get_d(); }

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vector add(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector size mismatch");
  Vector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
  return r;
}

Vector sub(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector size mismatch");
  Vector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
  return r;
}

Vector scaled(const Scalar& c, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Scalar dot(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector size mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace bicross
