#pragma once

#include "sugawara/report.hpp"
#include "sugawara/suga.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sugawara {

/// E^{(0)}_{i+1,i}[0] and E^{(lambda_{i+1}-lambda_i)}_{i,i+1}[0] for i < n,
/// then E_ii^{(p)}[s] for s = 0..s_max, all i and p. These generate a[t].
std::vector<LoopGen> generating_family(const Pyramid& p, int s_max);

enum class Family { all_basis, generating };

struct AnnihilationOptions {
  Family family = Family::all_basis;
  /// Modes s above the degree k of the target are recorded as vacuous.
  /// Defaults to k for each target.
  std::optional<int> s_max;
  int workers = 1;
};

/// act(X[s], phi_k^{(r)}) == 0 for every selected (k, r).
Report annihilation_check(const SugaTable& table, const AnnihilationOptions& options = {});

/// Fails if the generating family annihilates everything while the full
/// basis does not; that would contradict the family generating a[t].
Report family_reduction_check(const Report& family, const Report& basis);

/// An element with the indices it is reported under.
struct Labeled {
  std::string label;
  std::optional<int> k;
  std::optional<int> r;
  std::optional<int> m;
  Element element;
};

/// Pairwise commutators vanish, computed in the given mode.
Report commutativity_check(const Pyramid& p, Mode mode, const std::vector<Labeled>& elements, int workers = 1);

/// Every element commutes with every basis vector of a inside U(a).
Report centrality_check(const Pyramid& p, const std::vector<Labeled>& elements, int workers = 1);

/// s E_ii^{(p)}[s+1] v == Delta(E_ii^{(p)}[s] v) - E_ii^{(p)}[s] Delta(v) for
/// every diagonal generator, each s (>= 1) and each sample state.
Report rered_consistency(const Pyramid& p, const std::vector<Element>& states, const std::vector<int>& s_values);

/// Seeded vacuum-module states: up to `count` elements of 1..max_factors
/// generators at depths -1..-3 with small integer coefficients.
std::vector<Element> sample_states(const Pyramid& p, std::uint64_t seed, int count, int max_factors = 2);

std::vector<Labeled> labeled_vectors(const SugaTable& table, bool selected_only = true);

}  // namespace sugawara
