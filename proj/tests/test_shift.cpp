#include "sugawara/shift.hpp"
#include "sugawara/suga.hpp"
#include "sugawara/verify.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace sugawara;
using testutil::gen;

namespace {

Element product(std::initializer_list<std::tuple<int, int, int>> gens, const Rational& c = 1)
{
  Monomial m;
  for (const auto& [i, j, r] : gens) m.emplace_back(GenId{i, j, r}, 0);
  return Element::monomial(m, c);
}

}  // namespace

TEST_CASE("chi validation and seeded choice")
{
  const Pyramid p({1, 2});
  CHECK_NOTHROW(validate_chi(p, Chi{{GenId{1, 2, 1}, 3}}));
  CHECK_THROWS_AS(validate_chi(p, Chi{{GenId{1, 2, 0}, 3}}), std::invalid_argument);
  CHECK(random_chi(p, 5) == random_chi(p, 5));
  for (const auto& [g, v] : random_chi(p, 5)) {
    CHECK(p.valid(g));
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}

TEST_CASE("rho_chi on simple states")
{
  const Pyramid p({1, 1});
  Pbw finite(p, Mode::finite);
  const Chi chi{{GenId{1, 1, 0}, 2}};
  const ZSeries a = rho_chi(finite, gen(1, 1, 0, -1), chi);
  CHECK(a.coefficient(-1) == gen(1, 1, 0, 0));
  CHECK(a.coefficient(0) == Element::scalar(2));
  const ZSeries b = rho_chi(finite, gen(1, 1, 0, -2), chi);
  CHECK(b.terms().size() == 1);
  CHECK(b.coefficient(-2) == gen(1, 1, 0, 0));
  CHECK(rho_chi(finite, Element::one(), chi).coefficient(0) == Element::one());
  // E21[-1] E12[-1] is stored as E12[-1] E21[-1]; its image is the ordered U(a) product
  const ZSeries c = rho_chi(finite, Element::monomial({LoopGen(GenId{1, 2, 0}, -1), LoopGen(GenId{2, 1, 0}, -1)}), {});
  CHECK(c.coefficient(-2) == product({{1, 2, 0}, {2, 1, 0}}));
  CHECK(evaluate(a, 2) == Element::scalar(2) + gen(1, 1, 0, 0, Rational(1, 2)));
  CHECK_THROWS_AS(evaluate(a, 0), std::invalid_argument);
  CHECK_THROWS_AS(rho_chi(finite, gen(1, 1, 0, 0), chi), std::invalid_argument);
  Pbw affine(p, Mode::affine_critical);
  CHECK_THROWS_AS(rho_chi(affine, gen(1, 1, 0, -1), chi), std::invalid_argument);
}

TEST_CASE("rho_chi is multiplicative")
{
  std::mt19937_64 rng(31);
  int checked = 0;
  for (const auto& p : {Pyramid({1, 1}), Pyramid({1, 2}), Pyramid({2, 3}), Pyramid({1, 1, 2})}) {
    Pbw finite(p, Mode::finite);
    Pbw affine(p, Mode::affine_critical);
    for (int trial = 0; trial < 13; ++trial) {
      const Chi chi = random_chi(p, rng());
      const Element a = testutil::random_element(p, Mode::affine_critical, rng, 2, 2);
      const Element b = testutil::random_element(p, Mode::affine_critical, rng, 2, 2);
      CHECK(rho_chi(finite, affine.mul(a, b), chi) == zmul(finite, rho_chi(finite, a, chi), rho_chi(finite, b, chi)));
      ++checked;
    }
  }
  CHECK(checked >= 50);
}

TEST_CASE("generators with chi = 0")
{
  const Pyramid p({1, 1});
  Pbw finite(p, Mode::finite);
  Pbw affine(p, Mode::affine_critical);
  const SugaTable table = phi_table(affine);
  const auto gens = a_chi_generators(finite, table, {});
  REQUIRE(gens.size() == 3);
  CHECK(gens[0].k == 1);
  CHECK(gens[0].element == gen(1, 1, 0, 0) + gen(2, 2, 0, 0));
  CHECK(gens[1].m == 0);
  CHECK(gens[1].element == gen(1, 1, 0, 0) + product({{1, 1, 0}, {2, 2, 0}}) - product({{1, 2, 0}, {2, 1, 0}}));
  CHECK(gens[2].m == 1);
  CHECK(gens[2].element.is_zero());
  CHECK(a_chi_generators(finite, table, {}, true).size() == 5);
}

TEST_CASE("m = 0 generators do not depend on chi")
{
  for (const auto& p : {Pyramid({1, 2}), Pyramid({2, 2}), Pyramid({1, 1, 2})}) {
    Pbw finite(p, Mode::finite);
    Pbw affine(p, Mode::affine_critical);
    const SugaTable table = phi_table(affine);
    const auto plain = a_chi_generators(finite, table, {});
    const auto shifted = a_chi_generators(finite, table, random_chi(p, 77));
    REQUIRE(plain.size() == shifted.size());
    for (std::size_t a = 0; a < plain.size(); ++a)
      if (plain[a].m == 0) CHECK(plain[a].element == shifted[a].element);
  }
}

TEST_CASE("generators commute for pyramid (1,1) and (1,2)")
{
  for (const auto& p : {Pyramid({1, 1}), Pyramid({1, 2})}) {
    Pbw finite(p, Mode::finite);
    Pbw affine(p, Mode::affine_critical);
    const SugaTable table = phi_table(affine);
    std::vector<Labeled> labeled;
    for (const auto& g : a_chi_generators(finite, table, random_chi(p, 4)))
      labeled.push_back(Labeled{"g", g.k, g.r, g.m, g.element});
    CHECK(commutativity_check(p, Mode::finite, labeled).passed());
  }
}

TEST_CASE("center generators for gl_2")
{
  Pbw finite(Pyramid({1, 1}), Mode::finite);
  const auto gens = center_generators(finite);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].element == Element::one() + gen(1, 1, 0, 0) + gen(2, 2, 0, 0));
  CHECK(gens[1].element == gen(1, 1, 0, 0) + product({{1, 1, 0}, {2, 2, 0}}) - product({{1, 2, 0}, {2, 1, 0}}));
  std::vector<Labeled> labeled;
  for (const auto& g : gens) labeled.push_back(Labeled{"Phi", g.k, g.r, std::nullopt, g.element});
  CHECK(centrality_check(finite.pyramid(), labeled).passed());
}

TEST_CASE("diagonal shift automorphism")
{
  Pbw finite(Pyramid({1, 1}), Mode::finite);
  const auto gens = center_generators(finite);
  for (const auto& g : gens) CHECK(apply_automorphism(finite, g.element, 0) == g.element);
  const Element shifted = apply_automorphism(finite, gens[1].element, -1);
  CHECK(shifted == product({{1, 1, 0}, {2, 2, 0}}) - product({{1, 2, 0}, {2, 1, 0}}) - gen(2, 2, 0, 0));
  CHECK(centrality_check(finite.pyramid(), {Labeled{"shifted", 2, 0, std::nullopt, shifted}}).passed());

  std::mt19937_64 rng(8);
  for (const auto& p : {Pyramid({1, 2}), Pyramid({2, 2}), Pyramid({1, 1, 2})}) {
    Pbw engine(p, Mode::finite);
    for (int trial = 0; trial < 8; ++trial) {
      const Element a = testutil::random_element(p, Mode::finite, rng, 2, 2);
      const Element b = testutil::random_element(p, Mode::finite, rng, 2, 2);
      const Rational c(static_cast<long>(rng() % 5) - 2, 3);
      CHECK(apply_automorphism(engine, engine.mul(a, b), c) ==
            engine.mul(apply_automorphism(engine, a, c), apply_automorphism(engine, b, c)));
    }
  }
}

TEST_CASE("symbols for gl_2")
{
  const Pyramid p({1, 1});
  const auto s = symbols(p);
  REQUIRE(s.size() == 2);
  SymPoly trace = SymPoly::variable(0);
  trace += SymPoly::variable(3);
  CHECK(s.at({1, 0}) == trace);
  SymPoly det = SymPoly::variable(0) * SymPoly::variable(3);
  det += SymPoly::constant(-1) * SymPoly::variable(1) * SymPoly::variable(2);
  CHECK(s.at({2, 0}) == det);
  CHECK(det.derivative(0) == SymPoly::variable(3));
  CHECK(det.evaluate({1, 2, 3, 4}) == -2);

  const std::vector<SymPoly> polys{s.at({1, 0}), s.at({2, 0})};
  CHECK(jacobian_rank(p, polys, Chi{{GenId{1, 1, 0}, 1}}) == 2);
  CHECK(jacobian_rank(p, polys, Chi{}) == 1);
}

TEST_CASE("symbols agree with top terms of the quantum vectors")
{
  for (const auto& p : testutil::pyramids_up_to(5)) {
    const auto s = symbols(p);
    Pbw finite(p, Mode::finite);
    for (const auto& g : center_generators(finite)) {
      const auto it = s.find({g.k, g.r});
      REQUIRE(it != s.end());
      CHECK_MESSAGE(principal_symbol(p, g.element) == it->second, p.to_string());
    }
    Pbw affine(p, Mode::affine_critical);
    const SugaTable table = phi_table(affine);
    for (const auto& [k, r] : table.selected) CHECK(principal_symbol(p, table.at(k, r)) == s.at({k, r}));
  }
}

TEST_CASE("exact rank")
{
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(exact_rank({{0, 1, 0}, {1, 0, 0}, {1, 1, 0}}) == 2);
  CHECK(exact_rank({{Rational(1, 2), 1}, {1, Rational(1, 3)}}) == 2);
}
