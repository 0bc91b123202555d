#pragma once

#include "sugawara/suga.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace sugawara {

/// Linear functional on a: chi(E_ij^{(r)}); absent keys are zero.
using Chi = std::map<GenId, Rational>;

void validate_chi(const Pyramid& p, const Chi& chi);

/// Seeded values in {-3, ..., 3} for every basis vector. Used both for
/// random functionals and for random evaluation points.
Chi random_chi(const Pyramid& p, std::uint64_t seed);

/// Laurent polynomial in z^{-1} with U(a) coefficients (exponents <= 0).
class ZSeries {
 public:
  using Terms = std::map<int, Element>;

  void add(int exponent, const Element& e);
  const Element& coefficient(int exponent) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const ZSeries&) const = default;

 private:
  Terms terms_;
};

/// X[r] -> X z^r + d_{r,-1} chi(X), extended multiplicatively into U(a)[z^{-1}].
/// The engine must be in finite mode over the same pyramid.
ZSeries rho_chi(Pbw& finite, const Element& state, const Chi& chi);
ZSeries zmul(Pbw& finite, const ZSeries& a, const ZSeries& b);
/// Value at a nonzero rational z.
Element evaluate(const ZSeries& series, const Rational& z);

/// phi^{(r)}_{k(m)}: coefficient of z^{-k+m} in rho_chi(phi_k^{(r)}).
struct ShiftGenerator {
  int k = 0;
  int r = 0;
  int m = 0;
  Element element;
};

/// Generators of A_chi: every selected (k, r) with m = 0..k-1.
/// With include_constant_term the m = k components are appended per (k, r).
std::vector<ShiftGenerator> a_chi_generators(Pbw& finite, const SugaTable& table, const Chi& chi,
                                             bool include_constant_term = false);

/// Coefficients Phi_k^{(r)} of the column-determinant over U(a) with
/// diagonal x + (n-i) lambda_i + E_ii(u); all (k, r), selection as usual.
SugaTable center_table(Pbw& finite);

struct CenterGenerator {
  int k = 0;
  int r = 0;
  Element element;
};

std::vector<CenterGenerator> center_generators(Pbw& finite);

/// E_ij^{(p)} -> E_ij^{(p)} + d_{p0} d_ij c lambda_i, extended multiplicatively.
Element apply_automorphism(Pbw& finite, const Element& v, const Rational& c);

/// Commutative polynomial in the basis vectors of a. A monomial is the
/// sorted list of basis indices (repetitions allowed).
class SymPoly {
 public:
  using Terms = std::map<std::vector<int>, Rational>;

  static SymPoly constant(const Rational& c);
  static SymPoly variable(int index);

  void add(const std::vector<int>& mono, const Rational& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SymPoly& operator+=(const SymPoly& other);
  SymPoly derivative(int index) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  bool operator==(const SymPoly&) const = default;

 private:
  Terms terms_;
};

SymPoly operator*(const SymPoly& a, const SymPoly& b);

/// Coefficients of x^{n-k} u^r in det[d_ij x + Ebar_ij(u)] over S(a), keyed by (k, r).
std::map<std::pair<int, int>, SymPoly> symbols(const Pyramid& p);

/// Top-degree part of a U(a) element read as a commutative polynomial.
SymPoly principal_symbol(const Pyramid& p, const Element& v);

/// Exact rank of the Jacobian of polys at point (basis-indexed values).
int jacobian_rank(const Pyramid& p, const std::vector<SymPoly>& polys, const Chi& point);

/// Rank over the rationals by fraction-exact Gaussian elimination.
int exact_rank(std::vector<std::vector<Rational>> rows);

}  // namespace sugawara
