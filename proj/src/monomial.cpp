#include "mipow/monomial.hpp"

#include <algorithm>
#include <limits>

#include "mipow/errors.hpp"

namespace mipow {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw input_error("monomial exponents must be non-negative");
}

Monomial Monomial::unit(int vars) {
  if (vars < 0) throw input_error("negative variable count");
  return Monomial(std::vector<int>(vars, 0));
}

Monomial Monomial::variable(int vars, int index) {
  if (index < 0 || index >= vars) throw input_error("variable index out of range");
  std::vector<int> e(vars, 0);
  e[index] = 1;
  return Monomial(std::move(e));
}

int Monomial::total_degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < vars(); ++i)
    if (exps_[i] > 0) s.push_back(i);
  return s;
}

std::string Monomial::str() const {
  std::string out;
  for (int i = 0; i < vars(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

namespace {
void check_same_vars(const Monomial& u, const Monomial& v) {
  if (u.vars() != v.vars())
    throw input_error("monomials live in different ambient variable sets");
}
} // namespace

bool divides(const Monomial& u, const Monomial& v) {
  check_same_vars(u, v);
  for (int i = 0; i < u.vars(); ++i)
    if (u.exponent(i) > v.exponent(i)) return false;
  return true;
}

Monomial product(const Monomial& u, const Monomial& v) {
  check_same_vars(u, v);
  std::vector<int> e(u.vars());
  for (int i = 0; i < u.vars(); ++i) {
    long s = static_cast<long>(u.exponent(i)) + v.exponent(i);
    if (s > std::numeric_limits<int>::max())
      throw input_error("exponent overflow in monomial product");
    e[i] = static_cast<int>(s);
  }
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  check_same_vars(u, v);
  std::vector<int> e(u.vars());
  for (int i = 0; i < u.vars(); ++i) e[i] = std::max(u.exponent(i), v.exponent(i));
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& u, const Monomial& v) {
  check_same_vars(u, v);
  std::vector<int> e(u.vars());
  for (int i = 0; i < u.vars(); ++i) e[i] = std::max(u.exponent(i) - v.exponent(i), 0);
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& u, const Monomial& v) {
  if (!divides(v, u)) throw input_error("quotient requires exact divisibility");
  std::vector<int> e(u.vars());
  for (int i = 0; i < u.vars(); ++i) e[i] = u.exponent(i) - v.exponent(i);
  return Monomial(std::move(e));
}

bool canonical_less(const Monomial& u, const Monomial& v) {
  int du = u.total_degree(), dv = v.total_degree();
  if (du != dv) return du < dv;
  return u.exponents() > v.exponents();
}

} // namespace mipow
