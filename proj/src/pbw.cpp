#include "sugawara/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace sugawara {

LoopGen::LoopGen(const GenId& g, int depth)
{
  if (depth < -127 || depth > 127) throw std::out_of_range("loop depth out of range: " + std::to_string(depth));
  if (g.i < 1 || g.i > 255 || g.j < 1 || g.j > 255 || g.r < 0 || g.r > 255)
    throw std::out_of_range("generator indices out of range: " + to_string(g));
  key_ = (static_cast<std::uint32_t>(depth + 128) << 24) | (static_cast<std::uint32_t>(g.i) << 16) |
         (static_cast<std::uint32_t>(g.j) << 8) | static_cast<std::uint32_t>(g.r);
}

std::string to_string(const LoopGen& g)
{
  return to_string(g.gen()) + "[" + std::to_string(g.depth()) + "]";
}

int degree(const Monomial& m)
{
  int d = 0;
  for (const auto& g : m) d -= g.depth();
  return d;
}

int weight(const Monomial& m)
{
  int w = 0;
  for (const auto& g : m) w += g.r();
  return w;
}

// ---------------------------------------------------------------------------
// Element
// ---------------------------------------------------------------------------

Element Element::scalar(const Rational& c)
{
  Element e;
  e.add(Monomial{}, c);
  return e;
}

Element Element::generator(const LoopGen& g, const Rational& c)
{
  Element e;
  e.add(Monomial{g}, c);
  return e;
}

Element Element::monomial(Monomial m, const Rational& c)
{
  if (!std::is_sorted(m.begin(), m.end())) throw std::invalid_argument("monomial is not in PBW order");
  Element e;
  e.add(std::move(m), c);
  return e;
}

void Element::add(const Monomial& m, const Rational& c)
{
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Element::add(Monomial&& m, const Rational& c)
{
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Element::add_scaled(const Element& other, const Rational& c)
{
  if (c == 0) return;
  for (const auto& [m, v] : other.terms_) add(m, c * v);
}

Rational Element::coefficient(const Monomial& m) const
{
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t Element::max_length() const
{
  std::size_t len = 0;
  for (const auto& [m, c] : terms_) len = std::max(len, m.size());
  return len;
}

Element& Element::operator+=(const Element& other)
{
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other)
{
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Element Element::operator-() const
{
  Element e = *this;
  e *= -1;
  return e;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(const Rational& c, Element a) { return a *= c; }

std::string to_text(const Element& v)
{
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : v) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    const bool show_coeff = magnitude != 1 || m.empty();
    if (show_coeff) out += magnitude.get_str();
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k > 0 || show_coeff) out += " ";
      out += to_string(m[k]);
    }
  }
  return out;
}

std::map<int, Element> grade_by_degree(const Element& v)
{
  std::map<int, Element> out;
  for (const auto& [m, c] : v) out[degree(m)].add(m, c);
  return out;
}

std::map<int, Element> grade_by_weight(const Element& v)
{
  std::map<int, Element> out;
  for (const auto& [m, c] : v) out[weight(m)].add(m, c);
  return out;
}

// ---------------------------------------------------------------------------
// LieContext
// ---------------------------------------------------------------------------

LieContext::LieContext(Pyramid p, Mode mode) : pyramid_(std::move(p)), mode_(mode)
{
  const auto& basis = pyramid_.basis();
  table_.reserve(basis.size() * basis.size());
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      Entry e;
      for (const auto& [g, c] : sugawara::bracket(pyramid_, a, b).terms) e.terms.emplace_back(g, static_cast<int>(c.get_num().get_si()));
      e.form = sugawara::form(pyramid_, a, b);
      table_.push_back(std::move(e));
    }
  }
}

const LieContext::Entry& LieContext::entry(const GenId& a, const GenId& b) const
{
  const auto dim = pyramid_.basis().size();
  return table_[static_cast<std::size_t>(pyramid_.index_of(a)) * dim + static_cast<std::size_t>(pyramid_.index_of(b))];
}

LoopCombo LieContext::bracket(const LoopGen& a, const LoopGen& b) const
{
  const Entry& e = entry(a.gen(), b.gen());
  const int depth = a.depth() + b.depth();
  LoopCombo out;
  out.terms.reserve(e.terms.size());
  for (const auto& [g, c] : e.terms) out.terms.emplace_back(LoopGen(g, depth), c);
  if (mode_ == Mode::affine_critical && depth == 0 && a.depth() != 0) out.scalar = a.depth() * e.form;
  return out;
}

void LieContext::check_generator(const LoopGen& g) const
{
  pyramid_.require_valid(g.gen());
  if (mode_ == Mode::finite && g.depth() != 0)
    throw std::invalid_argument("mixed context: " + to_string(g) + " used in U(a), where every depth is 0");
}

void LieContext::check_state(const Element& v) const
{
  for (const auto& [m, c] : v) {
    for (const auto& g : m) {
      check_generator(g);
      if (mode_ == Mode::affine_critical && g.depth() >= 0)
        throw std::invalid_argument("mixed context: " + to_string(g) + " in a vacuum-module state (depth must be < 0)");
    }
  }
}

// ---------------------------------------------------------------------------
// Pbw
// ---------------------------------------------------------------------------

std::size_t Pbw::MonomialHash::operator()(const Monomial& m) const noexcept
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& g : m) {
    h ^= g.key();
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

Pbw::TermList Pbw::nonzero_terms(Accumulator&& acc)
{
  TermList out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, std::move(c));
  return out;
}

Element Pbw::to_element(Accumulator&& acc)
{
  Element out;
  for (auto& [m, c] : acc)
    if (c != 0) out.add(m, c);
  return out;
}

void Pbw::left_mul_into(const LoopGen& g, const Monomial& m, const Rational& c, Accumulator& out)
{
  if (m.empty() || g <= m.front()) {
    // already ordered: prepend
    if (ctx_.annihilated(m) || (m.empty() && ctx_.mode() == Mode::affine_critical && g.depth() >= 0)) return;
    Monomial key;
    key.reserve(m.size() + 1);
    key.push_back(g);
    key.insert(key.end(), m.begin(), m.end());
    out[std::move(key)] += c;
    return;
  }
  for (const auto& [mono, coeff] : reorder(g, m)) out[mono] += c * coeff;
}

const Pbw::TermList& Pbw::reorder(const LoopGen& g, const Monomial& m)
{
  Monomial key;
  key.reserve(m.size() + 1);
  key.push_back(g);
  key.insert(key.end(), m.begin(), m.end());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // g h rest = h (g rest) + [g, h] rest
  const LoopGen h = m.front();
  const Monomial rest(m.begin() + 1, m.end());
  Accumulator moved;
  left_mul_into(g, rest, 1, moved);
  Accumulator result;
  for (const auto& [mono, c] : moved)
    if (c != 0) left_mul_into(h, mono, c, result);

  const LoopCombo br = ctx_.bracket(g, h);
  for (const auto& [z, c] : br.terms) left_mul_into(z, rest, c, result);
  if (br.scalar != 0 && !ctx_.annihilated(rest)) result[rest] += br.scalar;
  // references to unordered_map elements survive the rehashing done by the recursion
  return memo_.emplace(std::move(key), nonzero_terms(std::move(result))).first->second;
}

Element Pbw::left_mul(const LoopGen& g, const Element& v)
{
  ctx_.check_generator(g);
  Accumulator out;
  for (const auto& [m, c] : v) left_mul_into(g, m, c, out);
  return to_element(std::move(out));
}

void Pbw::apply_word_into(std::span<const LoopGen> word, TermList current, const Rational& c, Accumulator& out)
{
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    ctx_.check_generator(*it);
    Accumulator next;
    for (const auto& [m, coeff] : current) left_mul_into(*it, m, coeff, next);
    current = nonzero_terms(std::move(next));
  }
  for (auto& [m, coeff] : current) out[m] += c * coeff;
}

Element Pbw::apply_word(std::span<const LoopGen> word, const Element& v)
{
  Accumulator out;
  apply_word_into(word, TermList(v.begin(), v.end()), 1, out);
  return to_element(std::move(out));
}

Element Pbw::mul(const Element& a, const Element& b)
{
  ctx_.check_state(b);
  if (mode() == Mode::finite) ctx_.check_state(a);
  const TermList right(b.begin(), b.end());
  Accumulator out;
  for (const auto& [m, c] : a) apply_word_into(m, right, c, out);
  return to_element(std::move(out));
}

Element Pbw::commutator(const Element& a, const Element& b)
{
  return mul(a, b) - mul(b, a);
}

void Pbw::require_affine(const char* what) const
{
  if (mode() != Mode::affine_critical)
    throw std::logic_error(std::string(what) + " is only defined on the vacuum module");
}

Element Pbw::act(const LoopGen& g, const Element& state)
{
  require_affine("act");
  if (g.depth() < 0) throw std::invalid_argument("act needs depth >= 0, got " + to_string(g) + "; use mul");
  ctx_.check_state(state);
  return left_mul(g, state);
}

template <class Rule>
Element Pbw::derivation(const Element& state, Rule rule)
{
  require_affine("derivation");
  ctx_.check_state(state);
  Element out;
  for (const auto& [m, c] : state) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      const auto [image, factor] = rule(m[k]);
      if (factor == 0) continue;
      Element tail = Element::monomial(Monomial(m.begin() + static_cast<std::ptrdiff_t>(k) + 1, m.end()));
      tail = left_mul(image, tail);
      tail = apply_word(std::span<const LoopGen>(m.data(), k), tail);
      out.add_scaled(tail, c * factor);
    }
  }
  return out;
}

Element Pbw::translate(const Element& state)
{
  return derivation(state, [](const LoopGen& g) {
    return std::pair<LoopGen, Rational>(g.with_depth(g.depth() - 1), -g.depth());
  });
}

Element Pbw::delta(const Element& state)
{
  return derivation(state, [](const LoopGen& g) {
    return std::pair<LoopGen, Rational>(g.with_depth(g.depth() + 1), g.depth());
  });
}

Element Pbw::degree_d(const Element& state)
{
  require_affine("d");
  ctx_.check_state(state);
  Element out;
  for (const auto& [m, c] : state) out.add(m, c * -degree(m));
  return out;
}

// ---------------------------------------------------------------------------
// Word rewriting
// ---------------------------------------------------------------------------

namespace {

std::size_t inversions(const Monomial& w)
{
  std::size_t count = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[b] < w[a]) ++count;
  return count;
}

bool smaller_measure(const Monomial& child, const Monomial& parent)
{
  if (child.size() != parent.size()) return child.size() < parent.size();
  return inversions(child) < inversions(parent);
}

}  // namespace

Element normal_order(const LieContext& ctx, const std::vector<std::pair<Monomial, Rational>>& words,
                     Schedule schedule, RewriteStats* stats)
{
  std::vector<std::pair<Monomial, Rational>> pending(words.rbegin(), words.rend());
  Element out;
  while (!pending.empty()) {
    auto [word, coeff] = std::move(pending.back());
    pending.pop_back();
    if (coeff == 0) continue;
    if (ctx.mode() == Mode::affine_critical && !word.empty() && word.back().depth() >= 0) continue;

    std::ptrdiff_t pos = -1;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k + 1] < word[k]) {
        pos = static_cast<std::ptrdiff_t>(k);
        if (schedule == Schedule::leftmost) break;
      }
    }
    if (pos < 0) {
      out.add(std::move(word), coeff);
      continue;
    }
    if (stats) ++stats->steps;

    const auto at = static_cast<std::size_t>(pos);
    const LoopCombo br = ctx.bracket(word[at], word[at + 1]);

    std::vector<std::pair<Monomial, Rational>> children;
    Monomial swapped = word;
    std::swap(swapped[at], swapped[at + 1]);
    children.emplace_back(std::move(swapped), coeff);
    for (const auto& [z, c] : br.terms) {
      Monomial w = word;
      w[at] = z;
      w.erase(w.begin() + pos + 1);
      children.emplace_back(std::move(w), coeff * c);
    }
    if (br.scalar != 0) {
      Monomial w = word;
      w.erase(w.begin() + pos, w.begin() + pos + 2);
      children.emplace_back(std::move(w), coeff * br.scalar);
    }
    for (auto& child : children) {
      if (stats && !smaller_measure(child.first, word)) stats->measure_decreasing = false;
      pending.push_back(std::move(child));
    }
  }
  return out;
}

}  // namespace sugawara
