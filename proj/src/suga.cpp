#include "sugawara/suga.hpp"

#include <stdexcept>
#include <string>

namespace sugawara {

namespace {

const Element& zero_element()
{
  static const Element zero;
  return zero;
}

Case kr_case(std::string name, int k, int r)
{
  Case c;
  c.generator = std::move(name);
  c.k = k;
  c.r = r;
  return c;
}

Element product(Pbw& engine, const Element& a, const Element& b)
{
  if (a.is_zero() || b.is_zero()) return {};
  return engine.mul(a, b);
}

}  // namespace

const Element& SugaTable::at(int k, int r) const
{
  auto it = entries.find({k, r});
  return it == entries.end() ? zero_element() : it->second;
}

int SugaTable::max_r(int k) const
{
  int best = -1;
  for (const auto& [key, e] : entries)
    if (key.first == k) best = std::max(best, key.second);
  return best;
}

bool admissible(const Pyramid& p, int k, int r)
{
  const int n = p.rows();
  if (k < 1 || k > n || r < 0) return false;
  return p.tail_sum(n - k + 2) < r + k && r + k <= p.tail_sum(n - k + 1);
}

std::vector<std::pair<int, int>> admissible_indices(const Pyramid& p)
{
  std::vector<std::pair<int, int>> out;
  const int n = p.rows();
  for (int k = 1; k <= n; ++k)
    for (int r = 0; r + k <= p.tail_sum(n - k + 1); ++r)
      if (admissible(p, k, r)) out.emplace_back(k, r);
  return out;
}

SugaTable phi_table(const Pyramid& p, const UXElem& det)
{
  SugaTable table{p, {}, {}};
  const int n = p.rows();
  for (const auto& [key, e] : det) {
    const auto [u, x] = key;
    const int k = n - x;
    if (k == 0) continue;
    if (k < 1 || k > n) throw std::logic_error("unexpected x power in column-determinant");
    table.entries.emplace(std::pair{k, u}, e);
  }
  for (const auto& kr : admissible_indices(p)) table.selected.insert(kr);
  return table;
}

SugaTable phi_table(Pbw& engine)
{
  if (engine.mode() != Mode::affine_critical) throw std::invalid_argument("phi_table needs a vacuum-module engine");
  return phi_table(engine.pyramid(), cdet(engine, build_entry_matrix(engine.pyramid())));
}

Element gen_or_zero(const Pyramid& p, int i, int j, int r, int depth)
{
  GenId g{i, j, r};
  if (!p.valid(g)) return {};
  return Element::generator(LoopGen(g, depth));
}

Report principal_check(const SugaTable& table)
{
  const Pyramid& p = table.pyramid;
  if (p.rows() != 1) throw std::invalid_argument("principal_check needs a one-row pyramid");
  Report report{"principal", p.to_string(), {}, {}, 0};
  for (int r = 0; r < p.size(); ++r) {
    Case c = kr_case("phi", 1, r);
    if (!table.is_selected(1, r)) {
      c.status = Status::fail;
      c.note = "index not selected";
      report.cases.push_back(c);
      continue;
    }
    report.record(c, table.at(1, r) - gen_or_zero(p, 1, 1, r, -1));
  }
  return report;
}

Report phi_2_formula_check(Pbw& engine, const SugaTable& table)
{
  const Pyramid& p = table.pyramid;
  if (p.rows() != 2) throw std::invalid_argument("phi_2_formula_check needs a two-row pyramid");
  Report report{"phi2-formula", p.to_string(), {}, {}, 0};

  const int max1 = std::max(p.lambda(2) - 1, table.max_r(1));
  for (int r = 0; r <= max1; ++r) {
    Element expected = gen_or_zero(p, 1, 1, r, -1) + gen_or_zero(p, 2, 2, r, -1);
    report.record(kr_case("phi", 1, r), table.at(1, r) - expected);
  }

  const int max2 = std::max(p.lambda(1) + p.lambda(2) - 2, table.max_r(2));
  for (int r = 0; r <= max2; ++r) {
    Element expected = Rational(p.lambda(1)) * gen_or_zero(p, 2, 2, r, -2);
    for (int a = 0; a <= r; ++a) {
      const int b = r - a;
      expected += product(engine, gen_or_zero(p, 1, 1, a, -1), gen_or_zero(p, 2, 2, b, -1));
      expected -= product(engine, gen_or_zero(p, 2, 1, a, -1), gen_or_zero(p, 1, 2, b, -1));
    }
    report.record(kr_case("phi", 2, r), table.at(2, r) - expected);
  }
  return report;
}

Report minimal_nilpotent_check(int n)
{
  if (n < 1) throw std::invalid_argument("minimal nilpotent case needs n >= 1");
  std::vector<int> rows(static_cast<std::size_t>(n), 1);
  rows.back() = 2;
  Pyramid p(rows);
  Pbw engine(p, Mode::affine_critical);
  const SugaTable table = phi_table(engine);
  Report report{"minimal-nilpotent", p.to_string(), {}, {}, 0};

  Element phi10;
  for (int i = 1; i <= n; ++i) phi10 += gen_or_zero(p, i, i, 0, -1);
  report.record(kr_case("phi", 1, 0), table.at(1, 0) - phi10);
  report.record(kr_case("phi", 1, 1), table.at(1, 1) - gen_or_zero(p, n, n, 1, -1));

  if (n >= 2) {
    Element phi21 = Rational(n - 1) * gen_or_zero(p, n, n, 1, -2);
    for (int i = 1; i < n; ++i) {
      phi21 += product(engine, gen_or_zero(p, i, i, 0, -1), gen_or_zero(p, n, n, 1, -1));
      phi21 -= product(engine, gen_or_zero(p, n, i, 0, -1), gen_or_zero(p, i, n, 1, -1));
    }
    report.record(kr_case("phi", 2, 1), table.at(2, 1) - phi21);
  }
  return report;
}

int ladder_boundary(const Pyramid& p, int k)
{
  return p.tail_sum(p.rows() - k + 2) - k + 1;
}

Rational ladder_constant(const Pyramid& p, int k)
{
  int head = 0;
  for (int i = 1; i <= p.rows() - k + 1; ++i) head += p.lambda(i);
  return Rational(-(k - 1) * head);
}

Report delta_ladder(Pbw& engine, const SugaTable& table)
{
  const Pyramid& p = table.pyramid;
  Report report{"delta-ladder", p.to_string(), {}, {}, 0};
  for (int k = 1; k <= p.rows(); ++k) {
    const int boundary = ladder_boundary(p, k);
    const int top = std::max(boundary, table.max_r(k));
    for (int r = std::max(boundary, 0); r <= top; ++r) {
      Element expected;
      if (r == boundary && k > 1) expected = ladder_constant(p, k) * table.at(k - 1, r);
      Case c = kr_case("Delta", k, r);
      c.note = r == boundary ? "boundary" : "above boundary";
      report.record(c, engine.delta(table.at(k, r)) - expected);
    }
  }
  return report;
}

DeltaTower gln_delta_tower(int n)
{
  if (n < 1) throw std::invalid_argument("gl_n tower needs n >= 1");
  Pyramid p(std::vector<int>(static_cast<std::size_t>(n), 1));
  Pbw engine(p, Mode::affine_critical);
  const SugaTable table = phi_table(engine);

  DeltaTower tower;
  tower.report = Report{"gl-delta-tower", p.to_string(), {}, {}, 0};
  tower.powers.push_back(table.at(n, 0));
  tower.constants.push_back(1);
  for (int k = 1; k <= n; ++k) {
    // Delta phi_{n-k+1}^{(0)} = ladder_constant * phi_{n-k}^{(0)}, boundary r = 0 for gl_n
    if (ladder_boundary(p, n - k + 1) != 0) throw std::logic_error("gl_n ladder boundary is not zero");
    tower.constants.push_back(tower.constants.back() * ladder_constant(p, n - k + 1));
    tower.powers.push_back(engine.delta(tower.powers.back()));
  }
  for (int k = 0; k <= n; ++k) {
    const Element expected = k < n ? tower.constants[static_cast<std::size_t>(k)] * table.at(n - k, 0) : Element{};
    Case c;
    c.generator = "Delta^k phi";
    c.k = k;
    tower.report.record(c, tower.powers[static_cast<std::size_t>(k)] - expected);
  }
  return tower;
}

Report tau_cross_check(Pbw& engine, const SugaTable& table)
{
  const Pyramid& p = table.pyramid;
  Report report{"tau-cross-check", p.to_string(), {}, {}, 0};
  const TauPoly det = cdet_tau(engine, p);

  Case lead;
  lead.generator = "leading tau^N";
  report.record(lead, det.coefficient(p.size()) - Element::one());

  for (const auto& [k, r] : table.selected) {
    const Element coeff = tau_coefficient(det, p, r + k);
    report.record(kr_case("phi-tau", k, r), max_weight_component(coeff, r) - table.at(k, r));

    Element above;
    for (const auto& [w, part] : grade_by_weight(coeff))
      if (w > r) above += part;
    Case c = kr_case("phi-tau max weight", k, r);
    c.note = "components of weight above r";
    report.record(c, above);
  }
  return report;
}

}  // namespace sugawara
