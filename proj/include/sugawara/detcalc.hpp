#pragma once

#include "sugawara/pbw.hpp"

#include <map>
#include <utility>
#include <vector>

namespace sugawara {

/// Polynomial in commuting variables u, x with Element coefficients.
class UXElem {
 public:
  using Key = std::pair<int, int>;  // (u exponent, x exponent)
  using Terms = std::map<Key, Element>;

  UXElem() = default;
  static UXElem constant(const Element& e);

  void add(int u, int x, const Element& e);
  /// Coefficient of u^u x^x (zero if absent).
  const Element& coefficient(int u, int x) const;

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Terms::const_iterator begin() const { return terms_.begin(); }
  Terms::const_iterator end() const { return terms_.end(); }

  UXElem& operator+=(const UXElem& other);
  UXElem& operator-=(const UXElem& other);
  UXElem& operator*=(const Rational& c);
  bool operator==(const UXElem&) const = default;

 private:
  Terms terms_;
};

/// Operator-valued matrix entry  x_flag * x + t_coeff * T + constant + mult_part.
/// mult_part is a polynomial in u (x exponent 0) acting by left
/// multiplication; T acts on the Element coefficients only.
struct MatrixEntry {
  int x_flag = 0;
  int t_coeff = 0;
  Rational constant = 0;
  UXElem mult_part;
};

using EntryMatrix = std::vector<std::vector<MatrixEntry>>;

/// Entries d_ij (x + lambda_i T) + E_ij(u) with E_ij(u) = sum_r E_ij^{(r)}[-1] u^r.
EntryMatrix build_entry_matrix(const Pyramid& p);
/// Entries over U(a): d_ij (x + (n-i) lambda_i) + sum_r E_ij^{(r)} u^r.
EntryMatrix build_center_matrix(const Pyramid& p);

UXElem apply_entry(Pbw& engine, const MatrixEntry& entry, const UXElem& state);

/// Column-determinant sum_sigma sgn(sigma) a_{sigma(1)1}(...(a_{sigma(n)n}(1))),
/// evaluated by column recursion memoized on the surviving row subset.
UXElem cdet(Pbw& engine, const EntryMatrix& matrix);
/// cdet(build_entry_matrix(p)) on a fresh vacuum-module engine.
UXElem cdet(const Pyramid& p);

/// Element of V(a) (x) C[tau], coefficients written to the left of tau powers,
/// with tau X[r] = X[r] tau - r X[r-1].
class TauPoly {
 public:
  using Terms = std::map<int, Element>;

  void add(int power, const Element& e);
  const Element& coefficient(int power) const;
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  int max_power() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  TauPoly& operator+=(const TauPoly& other);
  TauPoly& operator*=(const Rational& c);
  bool operator==(const TauPoly&) const = default;

 private:
  Terms terms_;
};

/// Product in the skew ring; engine must be in affine mode.
TauPoly tau_mul(Pbw& engine, const TauPoly& a, const TauPoly& b);

using TauMatrix = std::vector<std::vector<TauPoly>>;

/// d_ij tau^{lambda_j} + sum_r E_ij^{(r)}[-1] tau^{lambda_j - 1 - r}.
TauMatrix build_tau_matrix(const Pyramid& p);
TauPoly cdet_tau(Pbw& engine, const TauMatrix& matrix);
TauPoly cdet_tau(Pbw& engine, const Pyramid& p);

/// Coefficient phi°_k of tau^{N-k} in cdet_tau.
Element tau_coefficient(const TauPoly& det, const Pyramid& p, int k);

Element max_weight_component(const Element& v, int weight);

}  // namespace sugawara
