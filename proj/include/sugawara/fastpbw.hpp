#pragma once

#include "sugawara/pbw.hpp"

#include <absl/container/flat_hash_map.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>

namespace sugawara {

/// Raised when an input is outside what FastPbw handles (non-integral or
/// oversized coefficients, monomials that are too long, mixed depths).
/// Callers fall back to Pbw.
class FastPbwUnsupported : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Integer-coefficient products of vacuum-module states (every depth < 0)
/// or of U(a) elements (every depth 0). Same normal form as Pbw, but with
/// fixed-size monomials, int64 coefficients checked for overflow and flat
/// hash maps, so large commutators stay within desk-scale time and memory.
class FastPbw {
 public:
  static constexpr int max_length = 15;

  explicit FastPbw(LieContext ctx, std::size_t memo_limit = 1'500'000);

  Element mul(const Element& a, const Element& b);
  Element commutator(const Element& a, const Element& b);

  std::size_t cache_size() const { return memo_.size(); }

 private:
  struct Mono {
    std::array<std::uint16_t, max_length> g{};
    std::uint8_t len = 0;

    bool operator==(const Mono& o) const { return len == o.len && g == o.g; }
    bool operator<(const Mono& o) const
    {
      if (len != o.len) return len < o.len;
      return std::memcmp(g.data(), o.g.data(), sizeof(g)) < 0;
    }
    template <class H>
    friend H AbslHashValue(H h, const Mono& m)
    {
      return H::combine(H::combine_contiguous(std::move(h), m.g.data(), m.len), m.len);
    }
  };
  using Term = std::pair<Mono, std::int64_t>;
  using TermList = std::vector<Term>;
  using Accumulator = absl::flat_hash_map<Mono, std::int64_t>;
  struct BracketEntry {
    std::vector<std::pair<std::uint16_t, std::int64_t>> terms;
  };

  void prepare(int degree);
  std::uint16_t id_of(const LoopGen& g) const;
  Mono encode(const Monomial& m) const;
  Monomial decode(const Mono& m) const;
  TermList encode(const Element& v) const;

  const TermList& reorder(std::uint16_t g, const Mono& m);
  void left_mul_into(std::uint16_t g, const Mono& m, std::int64_t c, TermList& out);
  void left_mul_into(std::uint16_t g, const Mono& m, std::int64_t c, Accumulator& out);
  void product_into(const Element& a, const TermList& right, std::int64_t sign, Accumulator& out);
  static TermList nonzero_terms(Accumulator&& acc);
  static void merge(TermList& terms);

  LieContext ctx_;
  std::size_t memo_limit_;
  int degree_ = -1;  // generator table covers depths -degree_ .. -1 (affine)
  std::vector<LoopGen> gens_;
  std::vector<BracketEntry> brackets_;  // gens_.size()^2, row-major
  absl::flat_hash_map<Mono, TermList> memo_;  // key is g followed by m
};

}  // namespace sugawara
