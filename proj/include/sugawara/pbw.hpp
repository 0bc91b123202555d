#pragma once

#include "sugawara/pyramid.hpp"
#include "sugawara/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace sugawara {

/// Loop generator X[m] = X t^m for a basis vector X = E_ij^{(r)}.
///
/// Packed into one word whose unsigned order is the PBW order
/// (depth, i, j, r), so sorting LoopGens sorts monomials canonically.
class LoopGen {
 public:
  LoopGen() = default;
  LoopGen(const GenId& g, int depth);

  int depth() const { return static_cast<int>(key_ >> 24) - 128; }
  int i() const { return static_cast<int>((key_ >> 16) & 0xff); }
  int j() const { return static_cast<int>((key_ >> 8) & 0xff); }
  int r() const { return static_cast<int>(key_ & 0xff); }
  GenId gen() const { return GenId{i(), j(), r()}; }
  LoopGen with_depth(int depth) const { return LoopGen(gen(), depth); }
  std::uint32_t key() const { return key_; }

  auto operator<=>(const LoopGen&) const = default;

 private:
  std::uint32_t key_ = 0;
};

std::string to_string(const LoopGen& g);  // "E[i,j,r][depth]"

/// PBW monomial: generators in non-decreasing order. The empty monomial is 1.
using Monomial = std::vector<LoopGen>;

int degree(const Monomial& m);  // sum of -depth
int weight(const Monomial& m);  // sum of r

/// Finite linear combination of normal-ordered monomials. Zero coefficients
/// are never stored, so two equal elements compare equal structurally.
class Element {
 public:
  using Terms = std::map<Monomial, Rational>;

  Element() = default;
  static Element scalar(const Rational& c);
  static Element one() { return scalar(1); }
  static Element generator(const LoopGen& g, const Rational& c = 1);
  /// The monomial must already be sorted.
  static Element monomial(Monomial m, const Rational& c = 1);

  void add(const Monomial& m, const Rational& c);
  void add(Monomial&& m, const Rational& c);
  void add_scaled(const Element& other, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Terms::const_iterator begin() const { return terms_.begin(); }
  Terms::const_iterator end() const { return terms_.end(); }

  Rational coefficient(const Monomial& m) const;
  /// Largest monomial length present, 0 for scalars and zero.
  std::size_t max_length() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& c);
  Element operator-() const;

  bool operator==(const Element&) const = default;

 private:
  Terms terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(const Rational& c, Element a);

/// Human-readable form, e.g. "E[1,1,0][-1] E[2,2,0][-1] - E[2,2,0][-2]".
std::string to_text(const Element& v);

/// Homogeneous components by degree (deg X[m] = -m) and by weight.
std::map<int, Element> grade_by_degree(const Element& v);
std::map<int, Element> grade_by_weight(const Element& v);

enum class Mode {
  finite,           ///< U(a): every generator has depth 0, no cocycle
  affine_critical,  ///< vacuum module V(a) at the critical level
};

/// Loop-algebra bracket result: sum of generators plus a multiple of 1.
struct LoopCombo {
  std::vector<std::pair<LoopGen, Rational>> terms;
  Rational scalar = 0;
};

/// Lie data for the PBW engine: the centralizer bracket lifted to loops,
/// with the cocycle r d_{r,-s} <X,Y> in affine mode.
class LieContext {
 public:
  LieContext(Pyramid p, Mode mode);

  const Pyramid& pyramid() const { return pyramid_; }
  Mode mode() const { return mode_; }

  LoopCombo bracket(const LoopGen& a, const LoopGen& b) const;

  /// True when a normal-ordered monomial lies in the vacuum ideal
  /// (affine mode: last factor has depth >= 0).
  bool annihilated(const Monomial& m) const
  {
    return mode_ == Mode::affine_critical && !m.empty() && m.back().depth() >= 0;
  }

  /// Throws std::invalid_argument for invalid generators or depths that do
  /// not belong to this context (nonzero depth in finite mode).
  void check_generator(const LoopGen& g) const;
  /// Finite mode: all depths 0. Affine mode: all depths negative.
  void check_state(const Element& v) const;

 private:
  struct Entry {
    std::vector<std::pair<GenId, int>> terms;
    Rational form;
  };
  const Entry& entry(const GenId& a, const GenId& b) const;

  Pyramid pyramid_;
  Mode mode_;
  std::vector<Entry> table_;  // dim x dim, basis order
};

/// Normal-ordering engine over a LieContext.
///
/// Products are reduced by moving a generator rightwards through an already
/// sorted monomial, which is the leftmost out-of-order pair of the word.
/// Results of left_mul on (generator, monomial) are memoized, so an engine
/// should be reused across calls; it is not thread-safe.
class Pbw {
 public:
  Pbw(Pyramid p, Mode mode) : ctx_(std::move(p), mode) {}
  explicit Pbw(LieContext ctx) : ctx_(std::move(ctx)) {}

  const LieContext& context() const { return ctx_; }
  const Pyramid& pyramid() const { return ctx_.pyramid(); }
  Mode mode() const { return ctx_.mode(); }

  /// Normal-ordered product. In affine mode b must be a state and the result
  /// is the state a.b.1 of the vacuum module.
  Element mul(const Element& a, const Element& b);
  Element commutator(const Element& a, const Element& b);

  /// g . v, normal-ordered (and reduced by the vacuum rule in affine mode).
  Element left_mul(const LoopGen& g, const Element& v);
  /// word[0] word[1] ... word[k-1] . v
  Element apply_word(std::span<const LoopGen> word, const Element& v);

  /// Action of X[s], s >= 0, on a vacuum-module state.
  Element act(const LoopGen& g, const Element& state);

  /// Translation T: X[r] -> -r X[r-1].
  Element translate(const Element& state);
  /// Delta: [Delta, X[r]] = r X[r+1], Delta 1 = 0.
  Element delta(const Element& state);
  /// d: [d, X[r]] = r X[r].
  Element degree_d(const Element& state);

  std::size_t cache_size() const { return memo_.size(); }

 private:
  struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
  };
  using TermList = std::vector<std::pair<Monomial, Rational>>;
  using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

  // g . m for g > m.front(), memoized
  const TermList& reorder(const LoopGen& g, const Monomial& m);
  // out += c g . m
  void left_mul_into(const LoopGen& g, const Monomial& m, const Rational& c, Accumulator& out);
  void apply_word_into(std::span<const LoopGen> word, TermList current, const Rational& c, Accumulator& out);
  static TermList nonzero_terms(Accumulator&& acc);
  static Element to_element(Accumulator&& acc);
  void require_affine(const char* what) const;
  template <class Rule>
  Element derivation(const Element& state, Rule rule);

  LieContext ctx_;
  std::unordered_map<Monomial, TermList, MonomialHash> memo_;  // key is g followed by m
};

/// Independent normal-ordering by plain adjacent-swap rewriting on words.
/// Used to check that the memoized engine is schedule independent.
enum class Schedule { leftmost, rightmost };

struct RewriteStats {
  std::size_t steps = 0;
  /// Every rewrite strictly decreased (length, inversion count).
  bool measure_decreasing = true;
};

Element normal_order(const LieContext& ctx, const std::vector<std::pair<Monomial, Rational>>& words,
                     Schedule schedule, RewriteStats* stats = nullptr);

}  // namespace sugawara
