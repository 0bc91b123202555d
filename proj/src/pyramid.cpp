#include "sugawara/pyramid.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace sugawara {

namespace {

int parse_int(std::string_view text, const std::string& context)
{
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw std::invalid_argument("expected integer in " + context + ", got '" + std::string(text) + "'");
  return value;
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

void add_to(GlCombo& m, std::pair<int, int> key, const Rational& c)
{
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

}  // namespace

std::string to_string(const GenId& g)
{
  return "E[" + std::to_string(g.i) + "," + std::to_string(g.j) + "," + std::to_string(g.r) + "]";
}

GenId parse_gen_id(std::string_view text)
{
  const std::string_view original = text;
  text = trim(text);
  if (text.size() < 4 || text.substr(0, 2) != "E[" || text.back() != ']')
    throw std::invalid_argument("malformed generator '" + std::string(original) + "', expected E[i,j,r]");
  text = text.substr(2, text.size() - 3);
  std::vector<int> parts;
  while (true) {
    auto comma = text.find(',');
    parts.push_back(parse_int(trim(text.substr(0, comma)), "generator"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (parts.size() != 3)
    throw std::invalid_argument("malformed generator '" + std::string(original) + "', expected three indices");
  return GenId{parts[0], parts[1], parts[2]};
}

Pyramid::Pyramid(std::vector<int> lambdas) : lambdas_(std::move(lambdas))
{
  if (lambdas_.empty()) throw std::invalid_argument("pyramid must have at least one row");
  for (std::size_t k = 0; k < lambdas_.size(); ++k) {
    if (lambdas_[k] <= 0) throw std::invalid_argument("pyramid row lengths must be positive");
    if (k > 0 && lambdas_[k] < lambdas_[k - 1])
      throw std::invalid_argument("pyramid row lengths must be non-decreasing (row " + std::to_string(k + 1) + ")");
  }
  if (lambdas_.size() > 200 || lambdas_.back() > 200) throw std::invalid_argument("pyramid too large");

  int start = 1;
  for (int len : lambdas_) {
    row_start_.push_back(start);
    start += len;
  }
  total_ = start - 1;

  const int n = rows();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int r = window_lo(i, j); r < window_hi(i, j); ++r) basis_.push_back(GenId{i, j, r});
}

Pyramid Pyramid::parse(std::string_view text)
{
  std::vector<int> rows;
  std::string_view rest = trim(text);
  if (rest.empty()) throw std::invalid_argument("empty pyramid");
  while (true) {
    auto comma = rest.find(',');
    rows.push_back(parse_int(trim(rest.substr(0, comma)), "pyramid entry " + std::to_string(rows.size() + 1)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Pyramid(std::move(rows));
}

int Pyramid::row_of(int box) const
{
  if (box < 1 || box > total_)
    throw std::out_of_range("box index " + std::to_string(box) + " outside 1.." + std::to_string(total_));
  auto it = std::upper_bound(row_start_.begin(), row_start_.end(), box);
  return static_cast<int>(it - row_start_.begin());
}

int Pyramid::col_of(int box) const
{
  const int row = row_of(box);
  return box - row_start_[static_cast<std::size_t>(row - 1)] + 1;
}

int Pyramid::box_at(int row, int col) const
{
  if (row < 1 || row > rows() || col < 1 || col > lambda(row))
    throw std::out_of_range("no box at row " + std::to_string(row) + ", column " + std::to_string(col));
  return row_start_[static_cast<std::size_t>(row - 1)] + col - 1;
}

int Pyramid::window_lo(int i, int j) const
{
  return lambda(j) - std::min(lambda(i), lambda(j));
}

bool Pyramid::valid(const GenId& g) const
{
  if (g.i < 1 || g.i > rows() || g.j < 1 || g.j > rows()) return false;
  return g.r >= window_lo(g.i, g.j) && g.r < window_hi(g.i, g.j);
}

void Pyramid::require_valid(const GenId& g) const
{
  if (!valid(g))
    throw std::invalid_argument(sugawara::to_string(g) + " is not a basis element for pyramid " + to_string());
}

int Pyramid::index_of(const GenId& g) const
{
  require_valid(g);
  auto it = std::lower_bound(basis_.begin(), basis_.end(), g);
  return static_cast<int>(it - basis_.begin());
}

int Pyramid::boxes_in_first_columns(int i) const
{
  int sum = 0;
  for (int k = 1; k < i; ++k) sum += lambda(k);
  return sum + (rows() - i + 1) * lambda(i);
}

int Pyramid::tail_sum(int from) const
{
  int sum = 0;
  for (int k = std::max(from, 1); k <= rows(); ++k) sum += lambda(k);
  return sum;
}

std::string Pyramid::to_string() const
{
  std::string out;
  for (std::size_t k = 0; k < lambdas_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(lambdas_[k]);
  }
  return out;
}

void LieCombo::add(const GenId& g, const Rational& c)
{
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

LieCombo operator+(LieCombo a, const LieCombo& b)
{
  for (const auto& [g, c] : b.terms) a.add(g, c);
  a.scalar += b.scalar;
  return a;
}

LieCombo operator-(LieCombo a, const LieCombo& b)
{
  for (const auto& [g, c] : b.terms) a.add(g, -c);
  a.scalar -= b.scalar;
  return a;
}

LieCombo operator*(const Rational& c, LieCombo a)
{
  if (c == 0) return {};
  for (auto& [g, v] : a.terms) v *= c;
  a.scalar *= c;
  return a;
}

LieCombo bracket(const Pyramid& p, const GenId& a, const GenId& b)
{
  p.require_valid(a);
  p.require_valid(b);
  LieCombo out;
  const int shift = a.r + b.r;
  auto emit = [&](const GenId& g, int sign) {
    if (shift >= p.window_hi(g.i, g.j)) return;
    // the centralizer is closed under brackets, so the lower bound always holds
    if (shift < p.window_lo(g.i, g.j)) throw std::logic_error("bracket left the centralizer: " + to_string(g));
    out.add(g, sign);
  };
  if (b.i == a.j) emit(GenId{a.i, b.j, shift}, 1);
  if (a.i == b.j) emit(GenId{b.i, a.j, shift}, -1);
  return out;
}

LieCombo bracket(const Pyramid& p, const LieCombo& a, const LieCombo& b)
{
  LieCombo out;
  for (const auto& [ga, ca] : a.terms)
    for (const auto& [gb, cb] : b.terms) out = out + (ca * cb) * bracket(p, ga, gb);
  return out;
}

Rational form(const Pyramid& p, const GenId& a, const GenId& b)
{
  p.require_valid(a);
  p.require_valid(b);
  if (a.r != 0 || b.r != 0) return 0;
  if (a.i == a.j && b.i == b.j) {
    Rational value = std::min(p.lambda(a.i), p.lambda(b.i));
    if (a.i == b.i) value -= p.boxes_in_first_columns(a.i);
    return value;
  }
  if (a.i != a.j && a.i == b.j && a.j == b.i && p.lambda(a.i) == p.lambda(a.j))
    return -p.boxes_in_first_columns(a.i);
  return 0;
}

Rational form(const Pyramid& p, const LieCombo& a, const LieCombo& b)
{
  Rational sum = 0;
  for (const auto& [ga, ca] : a.terms)
    for (const auto& [gb, cb] : b.terms) sum += ca * cb * form(p, ga, gb);
  return sum;
}

GlCombo gln_expand(const Pyramid& p, const GenId& g)
{
  p.require_valid(g);
  GlCombo out;
  // boxes a in row i and b in row j with col(b) - col(a) = r
  for (int ca = 1; ca <= p.lambda(g.i); ++ca) {
    const int cb = ca + g.r;
    if (cb < 1 || cb > p.lambda(g.j)) continue;
    add_to(out, {p.box_at(g.i, ca), p.box_at(g.j, cb)}, 1);
  }
  return out;
}

GlCombo gln_expand(const Pyramid& p, const LieCombo& c)
{
  GlCombo out;
  for (const auto& [g, coeff] : c.terms)
    for (const auto& [key, v] : gln_expand(p, g)) add_to(out, key, coeff * v);
  return out;
}

GlCombo gln_commutator(const GlCombo& x, const GlCombo& y)
{
  GlCombo out;
  for (const auto& [ab, cx] : x) {
    for (const auto& [cd, cy] : y) {
      const auto [a, b] = ab;
      const auto [c, d] = cd;
      if (c == b) add_to(out, {a, d}, cx * cy);
      if (a == d) add_to(out, {c, b}, -cx * cy);
    }
  }
  return out;
}

}  // namespace sugawara
