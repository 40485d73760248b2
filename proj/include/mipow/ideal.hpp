#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mipow/monomial.hpp"

namespace mipow {

/// A monomial ideal, stored by its unique minimal generating set G(I) in
/// canonical order (total degree ascending, then lexicographically
/// descending exponent vectors). The zero ideal has an empty generator set;
/// the unit ideal is generated by the unit monomial alone.
class MonomialIdeal {
public:
  explicit MonomialIdeal(int vars) : vars_(vars) {}

  static MonomialIdeal zero(int vars) { return MonomialIdeal(vars); }
  static MonomialIdeal unit(int vars);

  int vars() const { return vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
  bool is_proper() const { return !is_unit(); }

  std::string str() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  friend MonomialIdeal minimalize(int, std::vector<Monomial>);
  int vars_ = 0;
  std::vector<Monomial> gens_;
};

/// Builds the ideal generated by `gens`, dropping divisibility-redundant
/// generators and sorting canonically. Empty input yields the zero ideal.
MonomialIdeal minimalize(int vars, std::vector<Monomial> gens);

/// True iff some generator of I divides u.
bool contains(const MonomialIdeal& I, const Monomial& u);

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J);

/// I^k by iterated multiplication with intermediate minimalization.
/// power(I, 0) is the unit ideal by convention.
MonomialIdeal power(const MonomialIdeal& I, int k);

/// I : v = minimalize({u : gcd-quotient of u by v, u in G(I)}).
MonomialIdeal colon_monomial(const MonomialIdeal& I, const Monomial& v);

/// I : J, the intersection of I : v over v in G(J). J must be nonzero.
MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J);

/// I and J intersect as minimalize({lcm(u, v)}).
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

bool equals(const MonomialIdeal& I, const MonomialIdeal& J);

/// Union of the generator supports, ascending 0-based variable indices.
std::vector<int> support(const MonomialIdeal& I);

/// The common total degree of the generators, when they all agree.
/// The unit ideal is equigenerated of degree 0; the zero ideal reports none.
std::optional<int> is_equigenerated(const MonomialIdeal& I);

/// Finest partition of supp(I) into variable blocks over which G(I) is a
/// product set, i.e. I factors as a product of ideals in disjoint variable
/// sets. Returns a single block when no factorization exists. Blocks are
/// sorted by smallest member.
std::vector<std::vector<int>> product_blocks(const MonomialIdeal& I);

/// Projection of I onto the listed variables (coordinates are re-indexed in
/// list order). When `block` is a product block of I this is the factor of I
/// supported there.
MonomialIdeal project_to_block(const MonomialIdeal& I, const std::vector<int>& block);

} // namespace mipow
