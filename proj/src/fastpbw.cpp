#include "sugawara/fastpbw.hpp"

#include <algorithm>
#include <map>

namespace sugawara {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw FastPbwUnsupported("coefficient overflow");
  return r;
}

void checked_add(std::int64_t& slot, std::int64_t v)
{
  if (__builtin_add_overflow(slot, v, &slot)) throw FastPbwUnsupported("coefficient overflow");
}

std::int64_t to_int64(const Rational& q)
{
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw FastPbwUnsupported("non-integral coefficient");
  return q.get_num().get_si();
}

int max_degree(const Element& v)
{
  int d = 0;
  for (const auto& [m, c] : v) d = std::max(d, degree(m));
  return d;
}

}  // namespace

FastPbw::FastPbw(LieContext ctx, std::size_t memo_limit) : ctx_(std::move(ctx)), memo_limit_(memo_limit)
{
  const auto& basis = ctx_.pyramid().basis();
  if (!std::is_sorted(basis.begin(), basis.end())) throw std::logic_error("basis is not in canonical order");
  if (ctx_.mode() == Mode::finite) prepare(0);
}

void FastPbw::prepare(int degree)
{
  const bool affine = ctx_.mode() == Mode::affine_critical;
  if (!affine && degree_ == 0) return;
  if (affine && degree <= degree_) return;

  const auto& basis = ctx_.pyramid().basis();
  const int depths = affine ? degree : 1;
  if (static_cast<std::size_t>(depths) * basis.size() > 0xffff) throw FastPbwUnsupported("too many generators");
  gens_.clear();
  for (int level = 0; level < depths; ++level)
    for (const auto& g : basis) gens_.emplace_back(g, affine ? level - degree : 0);

  const std::size_t n = gens_.size();
  brackets_.assign(n * n, {});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      // only g > h is ever looked up
      if (affine && gens_[a].depth() + gens_[b].depth() < -degree) continue;
      const LoopCombo br = ctx_.bracket(gens_[a], gens_[b]);
      if (br.scalar != 0) throw std::logic_error("central term in a product of states");
      auto& entry = brackets_[a * n + b];
      for (const auto& [z, c] : br.terms) entry.terms.emplace_back(id_of(z), to_int64(c));
    }
  }
  degree_ = affine ? degree : 0;
  memo_.clear();
}

std::uint16_t FastPbw::id_of(const LoopGen& g) const
{
  const int dim = static_cast<int>(ctx_.pyramid().basis().size());
  const int index = ctx_.pyramid().index_of(g.gen());
  if (ctx_.mode() == Mode::finite) {
    if (g.depth() != 0) throw FastPbwUnsupported("U(a) element with nonzero depth");
    return static_cast<std::uint16_t>(index);
  }
  const int d = static_cast<int>(gens_.size()) / dim;
  if (g.depth() >= 0 || g.depth() < -d) throw FastPbwUnsupported("depth outside the prepared range");
  return static_cast<std::uint16_t>((g.depth() + d) * dim + index);
}

FastPbw::Mono FastPbw::encode(const Monomial& m) const
{
  if (m.size() > static_cast<std::size_t>(max_length)) throw FastPbwUnsupported("monomial too long");
  Mono out;
  for (const auto& g : m) out.g[out.len++] = id_of(g);
  return out;
}

Monomial FastPbw::decode(const Mono& m) const
{
  Monomial out;
  out.reserve(m.len);
  for (int k = 0; k < m.len; ++k) out.push_back(gens_[m.g[static_cast<std::size_t>(k)]]);
  return out;
}

FastPbw::TermList FastPbw::encode(const Element& v) const
{
  TermList out;
  out.reserve(v.size());
  for (const auto& [m, c] : v) out.emplace_back(encode(m), to_int64(c));
  return out;
}

FastPbw::TermList FastPbw::nonzero_terms(Accumulator&& acc)
{
  TermList out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, c);
  return out;
}

void FastPbw::merge(TermList& terms)
{
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::size_t kept = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term t = terms[i];
    for (++i; i < terms.size() && terms[i].first == t.first; ++i) checked_add(t.second, terms[i].second);
    if (t.second != 0) terms[kept++] = t;
  }
  terms.resize(kept);
}

void FastPbw::left_mul_into(std::uint16_t g, const Mono& m, std::int64_t c, TermList& out)
{
  if (m.len == 0 || g <= m.g[0]) {
    if (m.len + 1 > max_length) throw FastPbwUnsupported("monomial too long");
    Mono key;
    key.len = static_cast<std::uint8_t>(m.len + 1);
    key.g[0] = g;
    std::copy(m.g.begin(), m.g.begin() + m.len, key.g.begin() + 1);
    out.emplace_back(key, c);
    return;
  }
  for (const auto& [mono, coeff] : reorder(g, m)) out.emplace_back(mono, checked_mul(c, coeff));
}

void FastPbw::left_mul_into(std::uint16_t g, const Mono& m, std::int64_t c, Accumulator& out)
{
  if (m.len == 0 || g <= m.g[0]) {
    if (m.len + 1 > max_length) throw FastPbwUnsupported("monomial too long");
    Mono key;
    key.len = static_cast<std::uint8_t>(m.len + 1);
    key.g[0] = g;
    std::copy(m.g.begin(), m.g.begin() + m.len, key.g.begin() + 1);
    checked_add(out[key], c);
    return;
  }
  for (const auto& [mono, coeff] : reorder(g, m)) checked_add(out[mono], checked_mul(c, coeff));
}

const FastPbw::TermList& FastPbw::reorder(std::uint16_t g, const Mono& m)
{
  if (m.len + 1 > max_length) throw FastPbwUnsupported("monomial too long");
  Mono key;
  key.len = static_cast<std::uint8_t>(m.len + 1);
  key.g[0] = g;
  std::copy(m.g.begin(), m.g.begin() + m.len, key.g.begin() + 1);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (memo_.size() >= memo_limit_) memo_.clear();

  // g h rest = h (g rest) + [g, h] rest
  const std::uint16_t h = m.g[0];
  Mono rest;
  rest.len = static_cast<std::uint8_t>(m.len - 1);
  std::copy(m.g.begin() + 1, m.g.begin() + m.len, rest.g.begin());

  TermList moved;
  left_mul_into(g, rest, 1, moved);
  merge(moved);
  TermList result;
  for (const auto& [mono, c] : moved) left_mul_into(h, mono, c, result);
  for (const auto& [z, c] : brackets_[static_cast<std::size_t>(g) * gens_.size() + h].terms)
    left_mul_into(z, rest, c, result);
  merge(result);
  result.shrink_to_fit();
  return memo_.emplace(key, std::move(result)).first->second;
}

void FastPbw::product_into(const Element& a, const TermList& right, std::int64_t sign, Accumulator& out)
{
  struct Item {
    Mono m;
    int remaining;
    std::int64_t c;
  };
  std::vector<Item> items;
  for (const auto& [m, c] : a) {
    const Mono e = encode(m);
    items.push_back({e, e.len, checked_mul(sign, to_int64(c))});
  }

  // monomials of a that share a suffix share the partial product
  auto rec = [&](auto& self, const std::vector<Item>& group, const TermList& current) -> void {
    std::map<std::uint16_t, std::vector<Item>> next_groups;
    for (const auto& it : group) {
      if (it.remaining == 0) {
        for (const auto& [w, x] : current) checked_add(out[w], checked_mul(it.c, x));
        continue;
      }
      Item shorter = it;
      --shorter.remaining;
      next_groups[it.m.g[static_cast<std::size_t>(shorter.remaining)]].push_back(shorter);
    }
    for (const auto& [g, sub] : next_groups) {
      TermList next;
      for (const auto& [w, x] : current) left_mul_into(g, w, x, next);
      merge(next);
      self(self, sub, next);
    }
  };
  rec(rec, items, right);
}

Element FastPbw::mul(const Element& a, const Element& b)
{
  prepare(max_degree(a) + max_degree(b));
  Accumulator acc;
  product_into(a, encode(b), 1, acc);
  Element out;
  for (const auto& [m, c] : acc)
    if (c != 0) out.add(decode(m), Rational(static_cast<long>(c)));
  return out;
}

Element FastPbw::commutator(const Element& a, const Element& b)
{
  prepare(max_degree(a) + max_degree(b));
  Accumulator acc;
  product_into(a, encode(b), 1, acc);
  product_into(b, encode(a), -1, acc);
  Element out;
  for (const auto& [m, c] : acc)
    if (c != 0) out.add(decode(m), Rational(static_cast<long>(c)));
  return out;
}

}  // namespace sugawara
