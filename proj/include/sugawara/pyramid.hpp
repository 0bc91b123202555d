#pragma once

#include "sugawara/rational.hpp"

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sugawara {

/// Basis vector E_ij^{(r)} of the centralizer. Rows i, j are 1-based.
struct GenId {
  int i = 1;
  int j = 1;
  int r = 0;

  auto operator<=>(const GenId&) const = default;
};

std::string to_string(const GenId& g);  // "E[i,j,r]"
GenId parse_gen_id(std::string_view text);

/// Left-justified pyramid with row lengths lambda_1 <= ... <= lambda_n.
///
/// Rows are numbered from the top, boxes 1..N are filled row by row from
/// left to right. Every index exposed here is 1-based.
class Pyramid {
 public:
  /// Rejects empty input, nonpositive rows and decreasing sequences.
  explicit Pyramid(std::vector<int> lambdas);

  /// Parses "2,3,4".
  static Pyramid parse(std::string_view text);

  int rows() const { return static_cast<int>(lambdas_.size()); }
  int size() const { return total_; }
  int lambda(int i) const { return lambdas_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> lambdas() const { return lambdas_; }

  int row_of(int box) const;
  int col_of(int box) const;
  /// Box index in the given row and column.
  int box_at(int row, int col) const;

  /// Validity window lo <= r < hi of E_ij^{(r)}.
  int window_lo(int i, int j) const;
  int window_hi(int /*i*/, int j) const { return lambda(j); }
  bool valid(const GenId& g) const;
  void require_valid(const GenId& g) const;

  /// Canonically ordered basis (lexicographic in i, j, r).
  const std::vector<GenId>& basis() const { return basis_; }
  /// Position of g in basis(); throws if g is not valid.
  int index_of(const GenId& g) const;

  /// lambda_1 + ... + lambda_{i-1} + (n-i+1) lambda_i, the number of boxes
  /// in the first lambda_i columns.
  int boxes_in_first_columns(int i) const;

  /// lambda_from + ... + lambda_n (zero when from > n).
  int tail_sum(int from) const;

  std::string to_string() const;

  bool operator==(const Pyramid& other) const { return lambdas_ == other.lambdas_; }

 private:
  std::vector<int> lambdas_;
  std::vector<int> row_start_;  // first box of each row, 1-based
  int total_ = 0;
  std::vector<GenId> basis_;
};

/// Linear combination of basis vectors plus a scalar (central) part.
struct LieCombo {
  std::map<GenId, Rational> terms;
  Rational scalar = 0;

  void add(const GenId& g, const Rational& c);
  bool is_zero() const { return terms.empty() && scalar == 0; }
  bool operator==(const LieCombo&) const = default;
};

LieCombo operator+(LieCombo a, const LieCombo& b);
LieCombo operator-(LieCombo a, const LieCombo& b);
LieCombo operator*(const Rational& c, LieCombo a);

/// [E_ij^{(r)}, E_kl^{(s)}] = d_kj E_il^{(r+s)} - d_il E_kj^{(r+s)},
/// out-of-window terms dropped.
LieCombo bracket(const Pyramid& p, const GenId& a, const GenId& b);
/// Bilinear extension of bracket to combinations (scalar parts ignored).
LieCombo bracket(const Pyramid& p, const LieCombo& a, const LieCombo& b);

/// Invariant form at the critical level; nonzero only on weight-zero pairs.
Rational form(const Pyramid& p, const GenId& a, const GenId& b);
Rational form(const Pyramid& p, const LieCombo& a, const LieCombo& b);

/// Sparse element of gl_N in the elementary-matrix basis e_ab.
using GlCombo = std::map<std::pair<int, int>, Rational>;

GlCombo gln_expand(const Pyramid& p, const GenId& g);
GlCombo gln_expand(const Pyramid& p, const LieCombo& c);
/// [e_ab, e_cd] = d_cb e_ad - d_ad e_cb, extended bilinearly.
GlCombo gln_commutator(const GlCombo& x, const GlCombo& y);

}  // namespace sugawara
