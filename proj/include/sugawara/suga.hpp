#pragma once

#include "sugawara/detcalc.hpp"
#include "sugawara/report.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace sugawara {

/// Coefficients phi_k^{(r)} of x^{n-k} u^r in the column-determinant, with
/// the subset singled out by the index condition
///   lambda_{n-k+2} + ... + lambda_n < r + k <= lambda_{n-k+1} + ... + lambda_n.
struct SugaTable {
  Pyramid pyramid;
  std::map<std::pair<int, int>, Element> entries;  // (k, r) -> nonzero coefficient
  std::set<std::pair<int, int>> selected;

  const Element& at(int k, int r) const;
  bool is_selected(int k, int r) const { return selected.count({k, r}) > 0; }
  /// Largest r with a nonzero entry for this k, or -1.
  int max_r(int k) const;
};

bool admissible(const Pyramid& p, int k, int r);
/// All (k, r) satisfying the index condition, ordered by k then r.
std::vector<std::pair<int, int>> admissible_indices(const Pyramid& p);

SugaTable phi_table(const Pyramid& p, const UXElem& det);
/// Builds the determinant with the given vacuum-module engine.
SugaTable phi_table(Pbw& engine);

/// Generator X[depth] as an Element, or zero when X is outside the window.
Element gen_or_zero(const Pyramid& p, int i, int j, int r, int depth);

/// Principal pyramid (N): phi_1^{(r)} = E_11^{(r)}[-1] for r = 0..N-1.
Report principal_check(const SugaTable& table);

/// n = 2: phi_1(u) = E_11(u) + E_22(u) and
/// phi_2^{(r)} = sum_{a+b=r} (E_11^{(a)} E_22^{(b)} - E_21^{(a)} E_12^{(b)})[-1] + lambda_1 E_22^{(r)}[-2].
Report phi_2_formula_check(Pbw& engine, const SugaTable& table);

/// Pyramid with rows 1,...,1,2 (n rows): closed forms of phi_1^{(0)},
/// phi_1^{(1)} and phi_2^{(1)}.
Report minimal_nilpotent_check(int n);

/// First r where Delta acts nontrivially on phi_k: lambda_{n-k+2}+...+lambda_n - k + 1.
int ladder_boundary(const Pyramid& p, int k);
/// -(k-1)(lambda_1 + ... + lambda_{n-k+1}).
Rational ladder_constant(const Pyramid& p, int k);

/// Delta phi_k^{(r)} = 0 above the boundary, and the constant multiple of
/// phi_{k-1}^{(r)} at the boundary, for every k.
Report delta_ladder(Pbw& engine, const SugaTable& table);

struct DeltaTower {
  std::vector<Element> powers;      // Delta^k phi, k = 0..n
  std::vector<Rational> constants;  // c_k with Delta^k phi = c_k phi_{n-k}^{(0)}
  Report report;
};

/// gl_n: phi = phi_n^{(0)} and its Delta-images, compared against the
/// constants obtained by iterating the ladder identity.
DeltaTower gln_delta_tower(int n);

/// For every selected (k, r): the weight-r component of the tau coefficient
/// phi°_{r+k} equals phi_k^{(r)}, and no component of higher weight exists.
Report tau_cross_check(Pbw& engine, const SugaTable& table);

}  // namespace sugawara
