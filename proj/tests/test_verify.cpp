#include "sugawara/serialize.hpp"
#include "sugawara/suga.hpp"
#include "sugawara/verify.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace sugawara;
using testutil::gen;

namespace {

SugaTable table_for(const Pyramid& p)
{
  Pbw engine(p, Mode::affine_critical);
  return phi_table(engine);
}

}  // namespace

TEST_CASE("generating family")
{
  const Pyramid p({1, 2});
  const auto family = generating_family(p, 0);
  const std::vector<LoopGen> expected{LoopGen(GenId{2, 1, 0}, 0), LoopGen(GenId{1, 2, 1}, 0), LoopGen(GenId{1, 1, 0}, 0),
                                      LoopGen(GenId{2, 2, 0}, 0), LoopGen(GenId{2, 2, 1}, 0)};
  CHECK(family == expected);
  for (const auto& q : testutil::pyramids_up_to(6))
    CHECK(generating_family(q, 2).size() == static_cast<std::size_t>(2 * (q.rows() - 1) + 3 * q.size()));
}

TEST_CASE("vectors are annihilated, with vacuous cases above the degree")
{
  for (const auto& p : testutil::pyramids_up_to(5)) {
    const SugaTable table = table_for(p);
    CHECK_MESSAGE(annihilation_check(table).passed(), p.to_string());
    AnnihilationOptions opts;
    opts.family = Family::generating;
    CHECK(annihilation_check(table, opts).passed());
  }
  AnnihilationOptions opts;
  opts.s_max = 5;
  const Report r = annihilation_check(table_for(Pyramid({1, 1})), opts);
  CHECK(r.passed());
  CHECK(r.count(Status::vacuous) > 0);
  for (const auto& c : r.cases)
    if (c.status == Status::vacuous) CHECK(*c.s > *c.k);
}

TEST_CASE("a non-vector is caught")
{
  SugaTable table = table_for(Pyramid({1, 1}));
  table.entries[{2, 0}] = gen(1, 1, 0, -1) + gen(1, 1, 0, -2);
  const Report basis = annihilation_check(table);
  CHECK_FALSE(basis.passed());
  AnnihilationOptions opts;
  opts.family = Family::generating;
  const Report family = annihilation_check(table, opts);
  CHECK_FALSE(family.passed());
  CHECK(family_reduction_check(family, basis).passed());
  for (const auto& c : basis.cases)
    if (c.status == Status::fail) CHECK(c.difference.has_value());
  // a family that misses the failure flags the reduction
  Report clean = family;
  clean.cases.clear();
  CHECK_FALSE(family_reduction_check(clean, basis).passed());
}

TEST_CASE("commutativity and centrality checks")
{
  const Pyramid p({1, 1});
  CHECK(commutativity_check(p, Mode::affine_critical, labeled_vectors(table_for(p))).passed());
  const std::vector<Labeled> bad{Labeled{"a", {}, {}, {}, gen(1, 1, 0, 0)}, Labeled{"b", {}, {}, {}, gen(1, 2, 0, 0)}};
  const Report comm = commutativity_check(p, Mode::finite, bad);
  CHECK_FALSE(comm.passed());
  REQUIRE(comm.cases.size() == 1);
  CHECK(*comm.cases[0].difference == gen(1, 2, 0, 0));
  CHECK_FALSE(centrality_check(p, {bad[0]}).passed());
  CHECK(centrality_check(p, {Labeled{"one", {}, {}, {}, Element::one()}}).passed());
  // a single element has no pairs
  CHECK(commutativity_check(p, Mode::finite, {bad[0]}).cases.empty());
}

TEST_CASE("re-derivation of the higher modes through Delta")
{
  for (const auto& p : {Pyramid({1, 1}), Pyramid({1, 2}), Pyramid({2, 3}), Pyramid({1, 1, 2})}) {
    const auto states = sample_states(p, 42, 5);
    CHECK(states.size() == 5);
    CHECK(rered_consistency(p, states, {1, 2, 3}).passed());
  }
  CHECK_THROWS_AS(rered_consistency(Pyramid({1}), {}, {0}), std::invalid_argument);
  CHECK(sample_states(Pyramid({2, 3}), 7, 3) == sample_states(Pyramid({2, 3}), 7, 3));
}

TEST_CASE("worker count does not change results")
{
  for (const auto& p : {Pyramid({2, 3}), Pyramid({1, 1, 2})}) {
    const SugaTable table = table_for(p);
    AnnihilationOptions one, three;
    three.workers = 3;
    CHECK(report_to_json(annihilation_check(table, one)) == report_to_json(annihilation_check(table, three)));
    const auto labeled = labeled_vectors(table);
    CHECK(report_to_json(commutativity_check(p, Mode::affine_critical, labeled, 1)) ==
          report_to_json(commutativity_check(p, Mode::affine_critical, labeled, 3)));
  }
}
