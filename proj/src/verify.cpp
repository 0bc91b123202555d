#include "sugawara/verify.hpp"

#include "sugawara/fastpbw.hpp"
#include "sugawara/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <random>
#include <stdexcept>

namespace sugawara {

std::string to_string(Status s)
{
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
  }
  return "unknown";
}

bool Report::passed() const
{
  return count(Status::fail) == 0;
}

std::size_t Report::count(Status s) const
{
  std::size_t n = 0;
  for (const auto& c : cases)
    if (c.status == s) ++n;
  return n;
}

Case& Report::record(Case c, const Element& difference)
{
  if (difference.is_zero()) {
    c.status = Status::pass;
    c.difference.reset();
  } else {
    c.status = Status::fail;
    c.difference = difference;
  }
  cases.push_back(std::move(c));
  return cases.back();
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point start)
{
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// One lazily built engine per worker.
class EnginePool {
 public:
  EnginePool(Pyramid p, Mode mode, int workers)
      : pyramid_(std::move(p)),
        mode_(mode),
        engines_(static_cast<std::size_t>(std::max(workers, 1))),
        fast_(engines_.size())
  {
  }
  Pbw& operator[](int worker)
  {
    auto& slot = engines_[static_cast<std::size_t>(worker)];
    if (!slot) slot = std::make_unique<Pbw>(pyramid_, mode_);
    return *slot;
  }

  /// Commutator through the integer engine, falling back to the exact one.
  Element commutator(int worker, const Element& a, const Element& b)
  {
    auto& slot = fast_[static_cast<std::size_t>(worker)];
    if (!slot) slot = std::make_unique<FastPbw>(LieContext(pyramid_, mode_));
    try {
      return slot->commutator(a, b);
    } catch (const FastPbwUnsupported&) {
      return (*this)[worker].commutator(a, b);
    }
  }

 private:
  Pyramid pyramid_;
  Mode mode_;
  std::vector<std::unique_ptr<Pbw>> engines_;
  std::vector<std::unique_ptr<FastPbw>> fast_;
};

void fill_labels(Case& c, const Labeled& e)
{
  if (e.k) c.k = e.k;
  if (e.r) c.r = e.r;
  if (e.m) c.m = e.m;
}

}  // namespace

std::vector<LoopGen> generating_family(const Pyramid& p, int s_max)
{
  std::vector<LoopGen> out;
  const int n = p.rows();
  for (int i = 1; i < n; ++i) {
    out.emplace_back(GenId{i + 1, i, 0}, 0);
    out.emplace_back(GenId{i, i + 1, p.lambda(i + 1) - p.lambda(i)}, 0);
  }
  for (int s = 0; s <= s_max; ++s)
    for (int i = 1; i <= n; ++i)
      for (int q = 0; q < p.lambda(i); ++q) out.emplace_back(GenId{i, i, q}, s);
  return out;
}

Report annihilation_check(const SugaTable& table, const AnnihilationOptions& options)
{
  const auto start = Clock::now();
  const Pyramid& p = table.pyramid;
  Report report{options.family == Family::all_basis ? "annihilation" : "annihilation-family", p.to_string(), {}, {}, 0};

  struct Job {
    LoopGen gen;
    int k, r;
    bool vacuous;
  };
  std::vector<Job> jobs;
  for (const auto& [k, r] : table.selected) {
    const int upper = options.s_max.value_or(k);
    if (options.family == Family::all_basis) {
      for (const auto& g : p.basis())
        for (int s = 0; s <= upper; ++s) jobs.push_back({LoopGen(g, s), k, r, s > k});
    } else {
      for (const auto& g : generating_family(p, upper)) jobs.push_back({g, k, r, g.depth() > k});
    }
  }

  std::vector<Case> cases(jobs.size());
  EnginePool engines(p, Mode::affine_critical, options.workers);
  parallel_for(jobs.size(), options.workers, [&](std::size_t idx, int worker) {
    const Job& job = jobs[idx];
    Case& c = cases[idx];
    c.generator = to_string(job.gen.gen());
    c.s = job.gen.depth();
    c.k = job.k;
    c.r = job.r;
    if (job.vacuous) {
      c.status = Status::vacuous;
      c.note = "s exceeds degree";
      return;
    }
    Element image = engines[worker].act(job.gen, table.at(job.k, job.r));
    if (image.is_zero()) {
      c.status = Status::pass;
    } else {
      c.status = Status::fail;
      c.difference = std::move(image);
    }
  });
  report.cases = std::move(cases);
  report.elapsed_ms = elapsed_since(start);
  return report;
}

Report family_reduction_check(const Report& family, const Report& basis)
{
  Report report{"family-reduction", basis.pyramid, {}, {}, 0};
  Case c;
  c.generator = "generating family vs full basis";
  if (family.passed() && !basis.passed()) {
    c.status = Status::fail;
    c.note = "family annihilates but some basis mode does not";
  } else {
    c.status = Status::pass;
    c.note = family.passed() ? "both annihilate" : "family already fails";
  }
  report.cases.push_back(c);
  return report;
}

Report commutativity_check(const Pyramid& p, Mode mode, const std::vector<Labeled>& elements, int workers)
{
  const auto start = Clock::now();
  Report report{mode == Mode::finite ? "commutativity-U(a)" : "commutativity", p.to_string(), {}, {}, 0};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = a + 1; b < elements.size(); ++b) pairs.emplace_back(a, b);

  std::vector<Case> cases(pairs.size());
  EnginePool engines(p, mode, workers);
  parallel_for(pairs.size(), workers, [&](std::size_t idx, int worker) {
    const auto& x = elements[pairs[idx].first];
    const auto& y = elements[pairs[idx].second];
    Case& c = cases[idx];
    c.generator = "[" + x.label + ", " + y.label + "]";
    Element diff = engines.commutator(worker, x.element, y.element);
    c.status = diff.is_zero() ? Status::pass : Status::fail;
    if (!diff.is_zero()) c.difference = std::move(diff);
  });
  report.cases = std::move(cases);
  report.elapsed_ms = elapsed_since(start);
  return report;
}

Report centrality_check(const Pyramid& p, const std::vector<Labeled>& elements, int workers)
{
  const auto start = Clock::now();
  Report report{"centrality", p.to_string(), {}, {}, 0};
  const auto& basis = p.basis();
  const std::size_t total = elements.size() * basis.size();
  std::vector<Case> cases(total);
  EnginePool engines(p, Mode::finite, workers);
  parallel_for(total, workers, [&](std::size_t idx, int worker) {
    const Labeled& e = elements[idx / basis.size()];
    const GenId& g = basis[idx % basis.size()];
    Case& c = cases[idx];
    c.generator = to_string(g);
    fill_labels(c, e);
    Element diff = engines.commutator(worker, Element::generator(LoopGen(g, 0)), e.element);
    c.status = diff.is_zero() ? Status::pass : Status::fail;
    if (!diff.is_zero()) c.difference = std::move(diff);
  });
  report.cases = std::move(cases);
  report.elapsed_ms = elapsed_since(start);
  return report;
}

Report rered_consistency(const Pyramid& p, const std::vector<Element>& states, const std::vector<int>& s_values)
{
  const auto start = Clock::now();
  Report report{"rered", p.to_string(), {}, {}, 0};
  Pbw engine(p, Mode::affine_critical);
  for (int s : s_values) {
    if (s < 1) throw std::invalid_argument("rered_consistency needs s >= 1");
    for (int i = 1; i <= p.rows(); ++i) {
      for (int q = 0; q < p.lambda(i); ++q) {
        const LoopGen lower(GenId{i, i, q}, s);
        const LoopGen upper(GenId{i, i, q}, s + 1);
        for (std::size_t idx = 0; idx < states.size(); ++idx) {
          const Element& v = states[idx];
          const Element lhs = Rational(s) * engine.act(upper, v);
          const Element rhs = engine.delta(engine.act(lower, v)) - engine.act(lower, engine.delta(v));
          Case c;
          c.generator = to_string(lower.gen());
          c.s = s;
          c.note = "state " + std::to_string(idx);
          report.record(c, lhs - rhs);
        }
      }
    }
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

std::vector<Element> sample_states(const Pyramid& p, std::uint64_t seed, int count, int max_factors)
{
  std::mt19937_64 rng(seed);
  const auto& basis = p.basis();
  std::vector<Element> out;
  for (int n = 0; n < count; ++n) {
    Element v;
    const int terms = 1 + static_cast<int>(rng() % 2);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      const int factors = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_factors));
      for (int f = 0; f < factors; ++f)
        m.emplace_back(basis[rng() % basis.size()], -1 - static_cast<int>(rng() % 3));
      std::sort(m.begin(), m.end());
      v.add(m, Rational(1 + static_cast<int>(rng() % 3)));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Labeled> labeled_vectors(const SugaTable& table, bool selected_only)
{
  std::vector<Labeled> out;
  for (const auto& [key, e] : table.entries) {
    if (selected_only && !table.is_selected(key.first, key.second)) continue;
    out.push_back(Labeled{"phi_" + std::to_string(key.first) + "^(" + std::to_string(key.second) + ")", key.first,
                          key.second, std::nullopt, e});
  }
  return out;
}

}  // namespace sugawara
