#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bicross {

// Exact rational arithmetic throughout the algebraic layer.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

// p/q in lowest terms; throws on q == 0.
Scalar ratio(long p, long q);

// Accepts "p", "p/q" and finite decimals such as "-0.25" or "1e-3".
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& q);
double to_double(const Scalar& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector add(const Vector& u, const Vector& v);
Vector sub(const Vector& u, const Vector& v);
Vector scaled(const Scalar& c, const Vector& v);
Scalar dot(const Vector& u, const Vector& v);

}  // namespace bicross
