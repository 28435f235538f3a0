#pragma once

#include <optional>

#include "stressforge/conditions.hpp"
#include "stressforge/model.hpp"

namespace stressforge {

struct WitnessSearchOptions {
    /// Primes for the modular rank prefilter are drawn from this seed.
    std::uint64_t prime_seed = 0xC0FFEEULL;
    /// n = 7 only: restrict candidates to supersets of this edge set.
    std::optional<Graph> seed_subgraph;
    /// n = 7 batch mode: number of random candidate subgraphs to try.
    int random_batch = 0;
};

/// Subgraphs of K_n with dim W = 0 on every off sample and dim W = 1 on
/// every on sample: the subgraphs that locally identify the stratum cut out
/// by the sampled condition. Full enumeration for n = 6; for n = 7 either
/// seed-superset enumeration or random batches. Deterministic output order.
std::vector<Graph> witness_subgraph_search(int n,
                                           const ConditionId& target,
                                           const std::vector<Configuration>& on_samples,
                                           const std::vector<Configuration>& off_samples,
                                           const WitnessSearchOptions& options = {});

} // namespace stressforge
