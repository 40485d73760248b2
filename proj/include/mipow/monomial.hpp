#pragma once

#include <string>
#include <vector>

namespace mipow {

/// A monomial x^a in a fixed ambient set of n variables, stored as its
/// exponent vector a with non-negative entries. Variable indices are 0-based
/// throughout the API; text output prints them 1-based as x1, ..., xn.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial unit(int vars);
  static Monomial variable(int vars, int index);

  int vars() const { return static_cast<int>(exps_.size()); }
  int exponent(int i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  int total_degree() const;
  bool is_unit() const;

  /// Indices of variables with positive exponent, ascending.
  std::vector<int> support() const;

  /// Renders like "x1^2*x3"; the unit monomial renders as "1".
  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<int> exps_;
};

/// u divides v, i.e. the exponent vector of u is componentwise <= that of v.
bool divides(const Monomial& u, const Monomial& v);

/// u*v; throws input_error on ambient mismatch or exponent overflow.
Monomial product(const Monomial& u, const Monomial& v);

Monomial lcm(const Monomial& u, const Monomial& v);

/// The monomial colon u : v = u / gcd(u, v), exponents max(u_i - v_i, 0).
Monomial colon(const Monomial& u, const Monomial& v);

/// Exact quotient u / v; requires v | u.
Monomial quotient(const Monomial& u, const Monomial& v);

/// Canonical order used everywhere: total degree ascending, ties broken by
/// the exponent vector lexicographically descending (x1-major first). For
/// equigenerated squarefree ideals this reproduces the usual textbook
/// listing order.
bool canonical_less(const Monomial& u, const Monomial& v);

} // namespace mipow
