#include "sugawara/detcalc.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

namespace sugawara {

namespace {

const Element& zero_element()
{
  static const Element zero;
  return zero;
}

// binomial coefficients for tau^a moving across an element
Rational binomial(int a, int k)
{
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
  return Rational(out);
}

template <class Value, class Step>
Value column_recursion(int n, Value base, Step step)
{
  if (n < 1 || n > 20) throw std::invalid_argument("matrix size out of range");
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::optional<Value>> memo(full + 1);
  memo[0] = std::move(base);

  // subsets in order of increasing size so every smaller subset is ready
  for (int size = 1; size <= n; ++size) {
    for (std::size_t set = 1; set <= full; ++set) {
      if (std::popcount(set) != size) continue;
      const int column = n - size;  // 0-based column filled by this factor
      Value acc{};
      int pos = 0;
      for (int row = 0; row < n; ++row) {
        if (!(set & (std::size_t{1} << row))) continue;
        ++pos;
        Value term = step(row, column, *memo[set & ~(std::size_t{1} << row)]);
        if (pos % 2 == 0) term *= -1;
        acc += term;
      }
      memo[set] = std::move(acc);
    }
  }
  return std::move(*memo[full]);
}

}  // namespace

// ---------------------------------------------------------------------------
// UXElem
// ---------------------------------------------------------------------------

UXElem UXElem::constant(const Element& e)
{
  UXElem out;
  out.add(0, 0, e);
  return out;
}

void UXElem::add(int u, int x, const Element& e)
{
  if (e.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{u, x}, e);
  if (!inserted) {
    it->second += e;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Element& UXElem::coefficient(int u, int x) const
{
  auto it = terms_.find(Key{u, x});
  return it == terms_.end() ? zero_element() : it->second;
}

UXElem& UXElem::operator+=(const UXElem& other)
{
  for (const auto& [key, e] : other.terms_) add(key.first, key.second, e);
  return *this;
}

UXElem& UXElem::operator-=(const UXElem& other)
{
  for (const auto& [key, e] : other.terms_) add(key.first, key.second, -e);
  return *this;
}

UXElem& UXElem::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, e] : terms_) e *= c;
  return *this;
}

// ---------------------------------------------------------------------------
// Entry matrices
// ---------------------------------------------------------------------------

EntryMatrix build_entry_matrix(const Pyramid& p)
{
  const int n = p.rows();
  EntryMatrix m(static_cast<std::size_t>(n), std::vector<MatrixEntry>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      MatrixEntry& e = m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (i == j) {
        e.x_flag = 1;
        e.t_coeff = p.lambda(i);
      }
      for (int r = p.window_lo(i, j); r < p.window_hi(i, j); ++r)
        e.mult_part.add(r, 0, Element::generator(LoopGen(GenId{i, j, r}, -1)));
    }
  }
  return m;
}

EntryMatrix build_center_matrix(const Pyramid& p)
{
  const int n = p.rows();
  EntryMatrix m(static_cast<std::size_t>(n), std::vector<MatrixEntry>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      MatrixEntry& e = m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (i == j) {
        e.x_flag = 1;
        e.constant = (n - i) * p.lambda(i);
      }
      for (int r = p.window_lo(i, j); r < p.window_hi(i, j); ++r)
        e.mult_part.add(r, 0, Element::generator(LoopGen(GenId{i, j, r}, 0)));
    }
  }
  return m;
}

UXElem apply_entry(Pbw& engine, const MatrixEntry& entry, const UXElem& state)
{
  UXElem out;
  for (const auto& [key, e] : state) {
    const auto [u, x] = key;
    if (entry.x_flag) out.add(u, x + 1, e);
    if (entry.t_coeff != 0) out.add(u, x, Rational(entry.t_coeff) * engine.translate(e));
    if (entry.constant != 0) out.add(u, x, entry.constant * e);
    for (const auto& [mkey, factor] : entry.mult_part) out.add(u + mkey.first, x + mkey.second, engine.mul(factor, e));
  }
  return out;
}

UXElem cdet(Pbw& engine, const EntryMatrix& matrix)
{
  const int n = static_cast<int>(matrix.size());
  return column_recursion<UXElem>(n, UXElem::constant(Element::one()), [&](int row, int column, const UXElem& rest) {
    return apply_entry(engine, matrix[static_cast<std::size_t>(row)][static_cast<std::size_t>(column)], rest);
  });
}

UXElem cdet(const Pyramid& p)
{
  Pbw engine(p, Mode::affine_critical);
  return cdet(engine, build_entry_matrix(p));
}

// ---------------------------------------------------------------------------
// Skew ring in tau
// ---------------------------------------------------------------------------

void TauPoly::add(int power, const Element& e)
{
  if (power < 0) throw std::invalid_argument("negative tau power");
  if (e.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, e);
  if (!inserted) {
    it->second += e;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Element& TauPoly::coefficient(int power) const
{
  auto it = terms_.find(power);
  return it == terms_.end() ? zero_element() : it->second;
}

TauPoly& TauPoly::operator+=(const TauPoly& other)
{
  for (const auto& [k, e] : other.terms_) add(k, e);
  return *this;
}

TauPoly& TauPoly::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, e] : terms_) e *= c;
  return *this;
}

TauPoly tau_mul(Pbw& engine, const TauPoly& a, const TauPoly& b)
{
  TauPoly out;
  for (const auto& [pb, eb] : b.terms()) {
    // T^k(eb), computed once per right factor
    std::vector<Element> derivatives{eb};
    for (const auto& [pa, ea] : a.terms()) {
      while (static_cast<int>(derivatives.size()) <= pa) derivatives.push_back(engine.translate(derivatives.back()));
      for (int k = 0; k <= pa; ++k) {
        if (derivatives[static_cast<std::size_t>(k)].is_zero()) continue;
        out.add(pa - k + pb, binomial(pa, k) * engine.mul(ea, derivatives[static_cast<std::size_t>(k)]));
      }
    }
  }
  return out;
}

TauMatrix build_tau_matrix(const Pyramid& p)
{
  const int n = p.rows();
  TauMatrix m(static_cast<std::size_t>(n), std::vector<TauPoly>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      TauPoly& e = m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (i == j) e.add(p.lambda(j), Element::one());
      for (int r = p.window_lo(i, j); r < p.window_hi(i, j); ++r)
        e.add(p.lambda(j) - 1 - r, Element::generator(LoopGen(GenId{i, j, r}, -1)));
    }
  }
  return m;
}

TauPoly cdet_tau(Pbw& engine, const TauMatrix& matrix)
{
  const int n = static_cast<int>(matrix.size());
  TauPoly base;
  base.add(0, Element::one());
  return column_recursion<TauPoly>(n, base, [&](int row, int column, const TauPoly& rest) {
    return tau_mul(engine, matrix[static_cast<std::size_t>(row)][static_cast<std::size_t>(column)], rest);
  });
}

TauPoly cdet_tau(Pbw& engine, const Pyramid& p)
{
  return cdet_tau(engine, build_tau_matrix(p));
}

Element tau_coefficient(const TauPoly& det, const Pyramid& p, int k)
{
  if (k < 0 || k > p.size()) throw std::out_of_range("tau coefficient index out of range");
  return det.coefficient(p.size() - k);
}

Element max_weight_component(const Element& v, int weight)
{
  Element out;
  for (const auto& [m, c] : v)
    if (sugawara::weight(m) == weight) out.add(m, c);
  return out;
}

}  // namespace sugawara
