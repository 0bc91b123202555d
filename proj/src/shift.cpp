#include "sugawara/shift.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace sugawara {

namespace {

const Element& zero_element()
{
  static const Element zero;
  return zero;
}

Rational chi_value(const Chi& chi, const GenId& g)
{
  auto it = chi.find(g);
  return it == chi.end() ? Rational(0) : it->second;
}

// Polynomials in (u, x) over S(a), used for the commutative determinant.
using UXSym = std::map<std::pair<int, int>, SymPoly>;

void add_to(UXSym& p, std::pair<int, int> key, const SymPoly& s)
{
  if (s.is_zero()) return;
  auto [it, inserted] = p.try_emplace(key, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) p.erase(it);
  }
}

UXSym times(const UXSym& a, const UXSym& b)
{
  UXSym out;
  for (const auto& [ka, sa] : a)
    for (const auto& [kb, sb] : b) add_to(out, {ka.first + kb.first, ka.second + kb.second}, sa * sb);
  return out;
}

}  // namespace

void validate_chi(const Pyramid& p, const Chi& chi)
{
  for (const auto& [g, v] : chi)
    if (!p.valid(g)) throw std::invalid_argument("chi key " + to_string(g) + " is not a basis element of pyramid " + p.to_string());
}

Chi random_chi(const Pyramid& p, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  Chi chi;
  for (const auto& g : p.basis()) {
    const int v = static_cast<int>(rng() % 7) - 3;
    if (v != 0) chi.emplace(g, v);
  }
  return chi;
}

// ---------------------------------------------------------------------------
// ZSeries and rho_chi
// ---------------------------------------------------------------------------

void ZSeries::add(int exponent, const Element& e)
{
  if (exponent > 0) throw std::invalid_argument("ZSeries holds only nonpositive powers of z");
  if (e.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, e);
  if (!inserted) {
    it->second += e;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Element& ZSeries::coefficient(int exponent) const
{
  auto it = terms_.find(exponent);
  return it == terms_.end() ? zero_element() : it->second;
}

ZSeries rho_chi(Pbw& finite, const Element& state, const Chi& chi)
{
  if (finite.mode() != Mode::finite) throw std::invalid_argument("rho_chi needs a U(a) engine");
  validate_chi(finite.pyramid(), chi);
  for (const auto& [m, c] : state)
    for (const auto& g : m)
      if (g.depth() >= 0) throw std::invalid_argument("rho_chi is defined on states only, got " + to_string(g));

  ZSeries out;
  for (const auto& [m, c] : state) {
    // positions where the chi constant may replace the generator
    std::vector<std::size_t> shiftable;
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m[k].depth() == -1 && chi_value(chi, m[k].gen()) != 0) shiftable.push_back(k);

    const std::size_t subsets = std::size_t{1} << shiftable.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      Rational factor = c;
      std::vector<bool> replaced(m.size(), false);
      for (std::size_t b = 0; b < shiftable.size(); ++b) {
        if (!(mask & (std::size_t{1} << b))) continue;
        replaced[shiftable[b]] = true;
        factor *= chi_value(chi, m[shiftable[b]].gen());
      }
      Monomial word;
      int exponent = 0;
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (replaced[k]) continue;
        word.push_back(m[k].with_depth(0));
        exponent += m[k].depth();
      }
      out.add(exponent, factor * finite.apply_word(word, Element::one()));
    }
  }
  return out;
}

ZSeries zmul(Pbw& finite, const ZSeries& a, const ZSeries& b)
{
  ZSeries out;
  for (const auto& [ea, va] : a.terms())
    for (const auto& [eb, vb] : b.terms()) out.add(ea + eb, finite.mul(va, vb));
  return out;
}

Element evaluate(const ZSeries& series, const Rational& z)
{
  if (z == 0) throw std::invalid_argument("z must be nonzero");
  Element out;
  for (const auto& [e, v] : series.terms()) {
    Rational power = 1;
    for (int k = 0; k < -e; ++k) power /= z;
    out.add_scaled(v, power);
  }
  return out;
}

std::vector<ShiftGenerator> a_chi_generators(Pbw& finite, const SugaTable& table, const Chi& chi,
                                             bool include_constant_term)
{
  std::vector<ShiftGenerator> out;
  for (const auto& [k, r] : table.selected) {
    const ZSeries image = rho_chi(finite, table.at(k, r), chi);
    const int last = include_constant_term ? k : k - 1;
    for (int m = 0; m <= last; ++m) out.push_back(ShiftGenerator{k, r, m, image.coefficient(-k + m)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Center of U(a)
// ---------------------------------------------------------------------------

SugaTable center_table(Pbw& finite)
{
  if (finite.mode() != Mode::finite) throw std::invalid_argument("center_table needs a U(a) engine");
  return phi_table(finite.pyramid(), cdet(finite, build_center_matrix(finite.pyramid())));
}

std::vector<CenterGenerator> center_generators(Pbw& finite)
{
  const SugaTable table = center_table(finite);
  std::vector<CenterGenerator> out;
  for (const auto& [k, r] : table.selected) out.push_back(CenterGenerator{k, r, table.at(k, r)});
  return out;
}

Element apply_automorphism(Pbw& finite, const Element& v, const Rational& c)
{
  if (finite.mode() != Mode::finite) throw std::invalid_argument("apply_automorphism needs a U(a) engine");
  const Pyramid& p = finite.pyramid();
  Element out;
  for (const auto& [m, coeff] : v) {
    Element acc = Element::one();
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      Element next = finite.left_mul(*it, acc);
      if (it->r() == 0 && it->i() == it->j()) next.add_scaled(acc, c * p.lambda(it->i()));
      acc = std::move(next);
    }
    out.add_scaled(acc, coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symbols
// ---------------------------------------------------------------------------

SymPoly SymPoly::constant(const Rational& c)
{
  SymPoly s;
  s.add({}, c);
  return s;
}

SymPoly SymPoly::variable(int index)
{
  SymPoly s;
  s.add({index}, 1);
  return s;
}

void SymPoly::add(const std::vector<int>& mono, const Rational& c)
{
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& other)
{
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

SymPoly SymPoly::derivative(int index) const
{
  SymPoly out;
  for (const auto& [m, c] : terms_) {
    const auto mult = std::count(m.begin(), m.end(), index);
    if (mult == 0) continue;
    std::vector<int> rest = m;
    rest.erase(std::find(rest.begin(), rest.end(), index));
    out.add(rest, c * static_cast<long>(mult));
  }
  return out;
}

Rational SymPoly::evaluate(const std::vector<Rational>& point) const
{
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int v : m) term *= point.at(static_cast<std::size_t>(v));
    sum += term;
  }
  return sum;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b)
{
  SymPoly out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add(m, ca * cb);
    }
  }
  return out;
}

std::map<std::pair<int, int>, SymPoly> symbols(const Pyramid& p)
{
  const int n = p.rows();
  std::vector<std::vector<UXSym>> matrix(static_cast<std::size_t>(n), std::vector<UXSym>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      UXSym& e = matrix[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (i == j) add_to(e, {0, 1}, SymPoly::constant(1));
      for (int r = p.window_lo(i, j); r < p.window_hi(i, j); ++r)
        add_to(e, {r, 0}, SymPoly::variable(p.index_of(GenId{i, j, r})));
    }
  }

  // commutative determinant by permutation expansion
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  UXSym det;
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (sigma[static_cast<std::size_t>(a)] > sigma[static_cast<std::size_t>(b)]) ++inversions;
    UXSym term;
    add_to(term, {0, 0}, SymPoly::constant(inversions % 2 ? -1 : 1));
    for (int col = 0; col < n; ++col)
      term = times(term, matrix[static_cast<std::size_t>(sigma[static_cast<std::size_t>(col)])][static_cast<std::size_t>(col)]);
    for (const auto& [key, s] : term) add_to(det, key, s);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  std::map<std::pair<int, int>, SymPoly> out;
  for (const auto& [key, s] : det) {
    const int k = n - key.second;
    if (k == 0) continue;
    out.emplace(std::pair{k, key.first}, s);
  }
  return out;
}

SymPoly principal_symbol(const Pyramid& p, const Element& v)
{
  const std::size_t top = v.max_length();
  SymPoly out;
  for (const auto& [m, c] : v) {
    if (m.size() != top) continue;
    std::vector<int> mono;
    for (const auto& g : m) mono.push_back(p.index_of(g.gen()));
    std::sort(mono.begin(), mono.end());
    out.add(mono, c);
  }
  return out;
}

int exact_rank(std::vector<std::vector<Rational>> rows)
{
  int rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < rows.size() && rows[found][col] == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[pivot_row][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[pivot_row][c];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

int jacobian_rank(const Pyramid& p, const std::vector<SymPoly>& polys, const Chi& point)
{
  validate_chi(p, point);
  const auto& basis = p.basis();
  std::vector<Rational> values(basis.size(), 0);
  for (const auto& [g, v] : point) values[static_cast<std::size_t>(p.index_of(g))] = v;

  std::vector<std::vector<Rational>> jac;
  for (const auto& poly : polys) {
    std::vector<Rational> row;
    for (std::size_t v = 0; v < basis.size(); ++v) row.push_back(poly.derivative(static_cast<int>(v)).evaluate(values));
    jac.push_back(std::move(row));
  }
  return exact_rank(std::move(jac));
}

}  // namespace sugawara
