// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "sugawara/shift.hpp"
#include "sugawara/suga.hpp"
#include "sugawara/verify.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

using namespace sugawara;
using testutil::acceptance_pyramids;
using testutil::pyramids_up_to;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what)
  {
    if (!cond) {
      if (ok) detail << "first failure: " << what;
      ok = false;
    }
  }
};

int workers()
{
  return static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency())));
}

SugaTable table_for(const Pyramid& p)
{
  Pbw engine(p, Mode::affine_critical);
  return phi_table(engine);
}

void examples(Outcome& o)
{
  for (int n = 1; n <= 5; ++n) o.require(principal_check(table_for(Pyramid({n}))).passed(), "principal N=" + std::to_string(n));
  for (const char* text : {"1,1", "2,2", "1,2", "2,3"}) {
    const Pyramid p = Pyramid::parse(text);
    Pbw engine(p, Mode::affine_critical);
    o.require(phi_2_formula_check(engine, phi_table(engine)).passed(), std::string("two-row ") + text);
  }
  for (int n = 1; n <= 4; ++n) o.require(minimal_nilpotent_check(n).passed(), "minimal n=" + std::to_string(n));
}

void annihilation(Outcome& o)
{
  std::size_t cases = 0;
  for (const auto& p : acceptance_pyramids()) {
    AnnihilationOptions opts;
    opts.workers = workers();
    const Report r = annihilation_check(table_for(p), opts);
    o.require(r.passed() && r.count(Status::vacuous) == 0, "annihilation " + p.to_string());
    cases += r.cases.size();
  }
  o.detail << cases << " (X, s, k, r) cases";
}

void selected_count(Outcome& o)
{
  for (const auto& p : acceptance_pyramids()) {
    const SugaTable table = table_for(p);
    o.require(static_cast<int>(table.selected.size()) == p.size(), "total " + p.to_string());
    const int n = p.rows();
    for (int k = 1; k <= n; ++k) {
      int count = 0;
      for (const auto& [kk, r] : table.selected)
        if (kk == k) {
          ++count;
          o.require(!table.at(kk, r).is_zero(), "nonzero " + p.to_string());
        }
      o.require(count == p.lambda(n - k + 1), "per-k " + p.to_string());
    }
  }
}

void ladder(Outcome& o)
{
  for (const auto& p : acceptance_pyramids()) {
    Pbw engine(p, Mode::affine_critical);
    o.require(delta_ladder(engine, phi_table(engine)).passed(), "ladder " + p.to_string());
  }
}

void tau(Outcome& o)
{
  int count = 0;
  for (const auto& p : pyramids_up_to(6)) {
    Pbw engine(p, Mode::affine_critical);
    o.require(tau_cross_check(engine, phi_table(engine)).passed(), "tau " + p.to_string());
    ++count;
  }
  o.detail << count << " pyramids";
}

void tower(Outcome& o)
{
  for (int n = 2; n <= 4; ++n) {
    const DeltaTower t = gln_delta_tower(n);
    o.require(t.report.passed(), "tower n=" + std::to_string(n));
    // c_k = prod_{j=1..k} -(n-j) j
    Rational c = 1;
    for (int k = 1; k <= n; ++k) {
      c *= -(n - k) * k;
      o.require(t.constants[static_cast<std::size_t>(k)] == c, "constant n=" + std::to_string(n));
    }
    o.require(t.powers.back().is_zero(), "Delta^n phi = 0, n=" + std::to_string(n));
  }
}

void commutativity(Outcome& o)
{
  std::size_t pairs = 0;
  for (const auto& p : pyramids_up_to(6)) {
    const Report r = commutativity_check(p, Mode::affine_critical, labeled_vectors(table_for(p)), workers());
    o.require(r.passed(), "vacuum " + p.to_string());
    pairs += r.cases.size();
  }
  for (const auto& p : pyramids_up_to(5)) {
    Pbw finite(p, Mode::finite);
    const SugaTable table = table_for(p);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      std::vector<Labeled> labeled;
      for (const auto& g : a_chi_generators(finite, table, random_chi(p, seed)))
        labeled.push_back(Labeled{"g", g.k, g.r, g.m, g.element});
      const Report r = commutativity_check(p, Mode::finite, labeled, workers());
      o.require(r.passed(), "shift " + p.to_string() + " seed " + std::to_string(seed));
      pairs += r.cases.size();
    }
  }
  o.detail << pairs << " commutators";
}

void centrality(Outcome& o)
{
  for (const auto& p : pyramids_up_to(6)) {
    Pbw finite(p, Mode::finite);
    std::vector<Labeled> plain, shifted;
    const Rational c = -p.rows() + 1;
    for (const auto& g : center_generators(finite)) {
      plain.push_back(Labeled{"Phi", g.k, g.r, std::nullopt, g.element});
      shifted.push_back(Labeled{"Phi", g.k, g.r, std::nullopt, apply_automorphism(finite, g.element, c)});
    }
    o.require(plain.size() == static_cast<std::size_t>(p.size()), "count " + p.to_string());
    o.require(centrality_check(p, plain, workers()).passed(), "central " + p.to_string());
    o.require(centrality_check(p, shifted, workers()).passed(), "shifted " + p.to_string());
  }
}

Chi rational_point(const Pyramid& p, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  Chi point;
  for (const auto& g : p.basis()) {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = 1 + static_cast<long>(rng() % 9);
    Rational v(num, den);
    v.canonicalize();
    if (v != 0) point[g] = v;
  }
  return point;
}

void independence(Outcome& o)
{
  for (const auto& p : acceptance_pyramids()) {
    const auto syms = symbols(p);
    std::vector<SymPoly> polys;
    for (const auto& kr : admissible_indices(p)) polys.push_back(syms.count(kr) ? syms.at(kr) : SymPoly{});
    for (std::uint64_t seed : {11u, 12u, 13u}) {
      const int rank = jacobian_rank(p, polys, rational_point(p, seed));
      o.require(rank == p.size(), "rank " + p.to_string() + " = " + std::to_string(rank));
    }
  }
}

void engine_properties(Outcome& o)
{
  for (const auto& p : pyramids_up_to(9)) {
    std::vector<GlCombo> images;
    for (const auto& g : p.basis()) images.push_back(gln_expand(p, g));
    for (std::size_t a = 0; a < images.size(); ++a)
      for (std::size_t b = 0; b < images.size(); ++b)
        o.require(gln_expand(p, bracket(p, p.basis()[a], p.basis()[b])) == gln_commutator(images[a], images[b]),
                  "gl_N oracle " + p.to_string());
  }

  for (const auto& p : pyramids_up_to(7)) {
    const auto& basis = p.basis();
    std::vector<LieCombo> single;
    for (const auto& g : basis) {
      LieCombo c;
      c.add(g, 1);
      single.push_back(c);
    }
    bool jacobi = true, invariant = true;
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const LieCombo ab = bracket(p, basis[a], basis[b]);
        for (std::size_t c = 0; c < basis.size(); ++c) {
          invariant &= form(p, ab, single[c]) + form(p, single[b], bracket(p, basis[a], basis[c])) == 0;
          if (c < b) continue;
          jacobi &= (bracket(p, single[a], bracket(p, basis[b], basis[c])) +
                     bracket(p, single[b], bracket(p, basis[c], basis[a])) + bracket(p, single[c], ab))
                        .is_zero();
        }
      }
    o.require(jacobi, "Jacobi " + p.to_string());
    o.require(invariant, "invariance " + p.to_string());
  }

  std::mt19937_64 rng(2024);
  int states = 0;
  for (const auto& p : acceptance_pyramids()) {
    Pbw engine(p, Mode::affine_critical);
    for (int t = 0; t < 10; ++t, ++states) {
      const Element v = testutil::random_element(p, Mode::affine_critical, rng, 3, 3);
      const Element tv = engine.translate(v);
      o.require(engine.delta(tv) - engine.translate(engine.delta(v)) == Rational(2) * engine.degree_d(v), "[Delta,T]");
      o.require(engine.degree_d(tv) - engine.translate(engine.degree_d(v)) == -tv, "[d,T]");
    }
  }
  o.require(states >= 100, "state count");

  for (const auto& p : pyramids_up_to(7)) {
    if (p.rows() > 4) continue;
    Pbw engine(p, Mode::affine_critical);
    const EntryMatrix m = build_entry_matrix(p);
    o.require(cdet(engine, m) == testutil::cdet_by_permutations(engine, m), "cdet " + p.to_string());
  }

  int products = 0;
  for (const auto& p : acceptance_pyramids()) {
    if (p.size() > 6) continue;
    Pbw finite(p, Mode::finite);
    Pbw affine(p, Mode::affine_critical);
    for (int t = 0; t < 6; ++t, ++products) {
      const Chi chi = random_chi(p, rng());
      const Element a = testutil::random_element(p, Mode::affine_critical, rng, 2, 2);
      const Element b = testutil::random_element(p, Mode::affine_critical, rng, 2, 2);
      o.require(rho_chi(finite, affine.mul(a, b), chi) == zmul(finite, rho_chi(finite, a, chi), rho_chi(finite, b, chi)),
                "rho " + p.to_string());
    }
  }
  o.require(products >= 50, "product count");
  o.detail << states << " states, " << products << " products";
}

struct Criterion {
  const char* name;
  std::function<void(Outcome&)> body;
  double limit_s = 0;  // 0: no runtime bound
};

}  // namespace

int main(int argc, char** argv)
{
  const std::vector<Criterion> criteria{
      {"closed-form examples", examples, 10},
      {"annihilation of every selected vector", annihilation, 300},
      {"selected-count identity", selected_count},
      {"Delta ladder", ladder},
      {"tau construction agrees", tau},
      {"gl_n Delta tower", tower},
      {"commutativity (vacuum module and shifted subalgebra)", commutativity},
      {"centrality of the U(a) generators", centrality},
      {"Jacobian rank of symbols equals N", independence},
      {"engine properties", engine_properties},
  };

  int failed = 0, ran = 0;
  for (std::size_t idx = 0; idx < criteria.size(); ++idx) {
    const auto& c = criteria[idx];
    // optional argument: run only the listed criterion numbers
    if (argc > 1 && std::find_if(argv + 1, argv + argc, [&](const char* a) { return std::atoi(a) == static_cast<int>(idx + 1); }) == argv + argc)
      continue;
    ++ran;
    Outcome o;
    const auto start = Clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_s > 0 && seconds >= c.limit_s) o.require(false, "runtime over limit");
    if (!o.ok) ++failed;
    std::printf("%s [%zu] %s (%.2f s%s%s) %s\n", o.ok ? "PASS" : "FAIL", idx + 1, c.name, seconds,
                c.limit_s > 0 ? ", limit " : "", c.limit_s > 0 ? std::to_string(static_cast<int>(c.limit_s)).append(" s").c_str() : "",
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria failed\n", failed, ran);
  return failed == 0 ? 0 : 1;
}
