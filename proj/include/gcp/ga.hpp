#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gcp/partition.hpp"
#include "gcp/rng.hpp"

namespace gcp {

struct GaConfig {
    int population = 50;      // even
    int generations = 300;
    double temperature = 1.0; // softmax temperature on standardized costs
    int mutation_pairs = 10;  // slot pairs probed per mutation
    int mutation_interval = 0; // layer window per probe; 0 means full depth
    int elite = 1;
    bool raw_softmax = false; // sample proportionally to exp(cost) instead
    std::uint64_t seed = 0;

    /// Plain key-value round trip ("population = 50" per line, '#' comments).
    static GaConfig parse(const std::string& text);
    std::string serialize() const;
};

struct Candidate {
    Assignment assignment;
    double cost = 0.0;
};

struct GaResult {
    std::vector<Candidate> population; // sorted by cost, ascending
    EbitReport best_report;
    std::vector<double> best_history; // best cost at each generation
    double best_cost = 0.0;
};

/// Called once per generation with the cost-sorted population.
using GenerationObserver = std::function<void(int, const std::vector<Candidate>&)>;

/// Static seeding: each candidate is a random capacity-respecting row,
/// improved by greedy pair-swap descent on the summed (static) interaction
/// graph, then replicated over the full depth.
std::vector<Candidate> initialize_population(const InteractionGraph& g,
                                             const QpuNetwork& net, const GaConfig& cfg,
                                             Rng& rng);

/// Two independent index draws from softmax-of-fitness; lower cost is more
/// likely (unless raw_softmax).
std::pair<int, int> select_parents(const std::vector<double>& costs, const GaConfig& cfg,
                                   Rng& rng);

/// Single-point row crossover; children swap whole layer blocks, so capacity
/// constraints survive. Depth <= 1 returns the parents unchanged.
std::pair<Candidate, Candidate> crossover(const Candidate& a, const Candidate& b, Rng& rng);

/// Kernighan-Lin-flavoured mutation: probe `mutation_pairs` random slot
/// pairs over a random layer window and swap their labels across the window
/// whenever the local cost delta is an improvement. Costs are left stale;
/// callers re-evaluate.
void mutate(Candidate& c, const InteractionGraph& g, const QpuNetwork& net,
            const GaConfig& cfg, Rng& rng);

GaResult run_ga(const InteractionGraph& g, const QpuNetwork& net, const GaConfig& cfg,
                const GenerationObserver& observer = {});

/// Min-cut baseline: greedy pair-swap descent on the static interaction
/// graph, costed as a constant assignment under the graph's own mode.
EbitReport static_baseline(const InteractionGraph& g, const QpuNetwork& net,
                           std::uint64_t seed);

/// Cut weight of a single-row assignment on the summed interaction graph.
double static_cut(const InteractionGraph& g, const std::vector<std::uint8_t>& row,
                  const QpuNetwork& net);

/// Greedy descent used by both the initializer and the baseline; exposed for
/// tests.
void static_descent(const InteractionGraph& g, std::vector<std::uint8_t>& row,
                    const QpuNetwork& net);

} // namespace gcp
