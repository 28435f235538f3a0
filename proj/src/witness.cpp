#include "stressforge/witness.hpp"

#include <algorithm>

#include "stressforge/parallel.hpp"
#include "stressforge/stress.hpp"

namespace stressforge {

namespace {

Graph graph_from_mask(int n, const std::vector<Edge>& all_edges, std::uint32_t mask) {
    Graph g(n);
    for (std::size_t e = 0; e < all_edges.size(); ++e)
        if (mask & (1u << e)) g.add_edge(all_edges[e].a, all_edges[e].b);
    return g;
}

bool min_degree_two_on_support(int n, const std::vector<Edge>& all_edges, std::uint32_t mask) {
    std::array<int, 8> deg{};
    for (std::size_t e = 0; e < all_edges.size(); ++e) {
        if (mask & (1u << e)) {
            ++deg[all_edges[e].a - 1];
            ++deg[all_edges[e].b - 1];
        }
    }
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) return false;
    return true;
}

/// dim W(G,P) with the two-prime modular prefilter and exact confirmation.
/// Returns the exact dimension only when `want` demands it; otherwise it
/// may report early that the dimension differs from `want`.
bool dimension_is(const Framework& f, int want, std::uint64_t p1, std::uint64_t p2) {
    RationalMatrix a = equilibrium_matrix(f);
    const int m = a.cols();
    int upper = m; // dim W <= m - rank_mod_p for every good prime
    for (std::uint64_t p : {p1, p2}) {
        try {
            upper = std::min(upper, m - rank_mod_p(a, p));
        } catch (const Error&) {
            continue; // bad prime for this matrix, try the next
        }
        if (upper < want) return false;
        if (upper == 0) return want == 0; // dim = 0 proven exactly
    }
    return m - exact_rank(a) == want;
}

} // namespace

std::vector<Graph> witness_subgraph_search(int n,
                                           const ConditionId& target,
                                           const std::vector<Configuration>& on_samples,
                                           const std::vector<Configuration>& off_samples,
                                           const WitnessSearchOptions& options) {
    if (n != 6 && n != 7)
        throw Error(ErrorKind::UnsupportedN, "witness search supports n = 6 or 7");
    if (on_samples.empty() || off_samples.empty())
        throw Error(ErrorKind::EmptySample, "on and off sample lists must be nonempty");
    for (const Configuration& c : on_samples) {
        if (c.size() != n)
            throw Error(ErrorKind::InvalidSample, "sample size != n");
        if (!check_condition(target, c).holds)
            throw Error(ErrorKind::InvalidSample, "on sample does not satisfy the condition");
    }
    for (const Configuration& c : off_samples) {
        if (c.size() != n)
            throw Error(ErrorKind::InvalidSample, "sample size != n");
        if (check_condition(target, c).holds)
            throw Error(ErrorKind::InvalidSample, "off sample satisfies the condition");
    }

    const std::vector<Edge> all_edges = Graph::complete(n).edges();
    const int m_full = static_cast<int>(all_edges.size());

    std::vector<std::uint32_t> candidates;
    if (n == 6) {
        candidates.reserve(1u << m_full);
        for (std::uint32_t mask = 1; mask < (1u << m_full); ++mask)
            if (min_degree_two_on_support(n, all_edges, mask)) candidates.push_back(mask);
    } else if (options.seed_subgraph) {
        std::uint32_t seed_mask = 0;
        for (std::size_t e = 0; e < all_edges.size(); ++e)
            if (options.seed_subgraph->has_edge(all_edges[e].a, all_edges[e].b))
                seed_mask |= (1u << e);
        std::vector<int> free_bits;
        for (int e = 0; e < m_full; ++e)
            if (!(seed_mask & (1u << e))) free_bits.push_back(e);
        const std::uint32_t count = 1u << free_bits.size();
        for (std::uint32_t extra = 0; extra < count; ++extra) {
            std::uint32_t mask = seed_mask;
            for (std::size_t b = 0; b < free_bits.size(); ++b)
                if (extra & (1u << b)) mask |= (1u << free_bits[b]);
            if (min_degree_two_on_support(n, all_edges, mask)) candidates.push_back(mask);
        }
    } else {
        const int batch = options.random_batch > 0 ? options.random_batch : 200000;
        std::mt19937_64 rng(options.prime_seed ^ 0x5eedULL);
        std::set<std::uint32_t> seen;
        while (static_cast<int>(seen.size()) < batch) {
            std::uint32_t mask = static_cast<std::uint32_t>(rng()) & ((1u << m_full) - 1);
            if (mask && min_degree_two_on_support(n, all_edges, mask)) seen.insert(mask);
        }
        candidates.assign(seen.begin(), seen.end());
    }

    const std::uint64_t p1 = primes::random_prime_62(options.prime_seed, 0);
    const std::uint64_t p2 = primes::random_prime_62(options.prime_seed, 1);

    std::vector<char> keep(candidates.size(), 0);
    parallel_for(static_cast<int>(candidates.size()), [&](int idx) {
        Graph g = graph_from_mask(n, all_edges, candidates[idx]);
        for (const Configuration& c : off_samples)
            if (!dimension_is(Framework{g, c}, 0, p1, p2)) return;
        for (const Configuration& c : on_samples)
            if (!dimension_is(Framework{g, c}, 1, p1, p2)) return;
        keep[idx] = 1;
    });

    std::vector<std::pair<std::pair<int, std::uint32_t>, Graph>> found;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!keep[i]) continue;
        Graph g = graph_from_mask(n, all_edges, candidates[i]);
        found.push_back({{g.edge_count(), candidates[i]}, g});
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [key, g] : found) out.push_back(std::move(g));
    return out;
}

} // namespace stressforge
