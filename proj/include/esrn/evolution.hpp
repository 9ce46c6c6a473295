#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "esrn/dimensional.hpp"
#include "esrn/expression.hpp"
#include "esrn/network.hpp"
#include "esrn/rng.hpp"
#include "esrn/sample.hpp"

namespace esrn {

enum class RankMetric { r2, neg_rmse };

struct EsrnConfig {
    int population_size = 100;          // N
    int generations = 200;              // T
    std::vector<int> topology = {5, 3, 1};  // S_n: per-layer neuron maxima, last = 1
    RankMetric metric = RankMetric::r2;
    double crossover_rate = 0.5;        // per selected pair
    double activation_mutation_rate = 0.1;  // per neuron
    double candidate_mutation_rate = 0.2;   // per network
    std::uint64_t seed = 0;
    int epochs = 500;   // training epochs per new candidate
    double lr = 0.01;
};

struct GenerationEntry {
    int index = 0;  // 1-based
    double train_metric = 0.0;
    double test_metric = 0.0;
    SymbolicNetwork top;
};
using GenerationLog = std::vector<GenerationEntry>;

/// A population member; score is the ranking metric on the training set in
/// physical (Dl) space, NaN while untrained. Originals keep their trained
/// weights and score across generations, so the top training score never
/// regresses.
struct Candidate {
    SymbolicNetwork net;
    double score = std::numeric_limits<double>::quiet_NaN();
    bool scored = false;
};

inline constexpr double kDeadScore = -std::numeric_limits<double>::infinity();

/// N random networks: input slots draw distinct groups, the output
/// normalizer and all activations draw uniformly, layer sizes draw within
/// the topology bounds, weights are uniform [-1, 1] with zero biases.
std::vector<Candidate> init_population(const EsrnConfig& config,
                                       const CandidateSet& candidates, Rng& rng);

/// Exchange a random subset of the output neuron's incoming sub-networks
/// (each a penultimate-layer neuron with its full upstream cone, including
/// referenced input groups) between the parents at matching positions.
/// Offspring are new values; layer bounds are re-enforced by dropping
/// excess neurons with the smallest outgoing weight.
std::pair<SymbolicNetwork, SymbolicNetwork> crossover(const SymbolicNetwork& a,
                                                      const SymbolicNetwork& b, Rng& rng,
                                                      const std::vector<int>& topology);

struct ActivationMutation {
    SymbolicNetwork net;
    int redrawn = 0;  // neurons whose activation was re-drawn (may coincide)
};
/// Each neuron independently with probability p gets its activation
/// re-drawn from the full five-entry table. The caller keeps the original.
ActivationMutation mutate_activation(const SymbolicNetwork& net, Rng& rng, double p);

struct CandidateMutation {
    SymbolicNetwork net;
    bool changed = false;
};
/// With probability p, re-draw one input slot (to a group unused by the
/// other slots) or the output normalizer (to a different one); weights are
/// untouched. The caller keeps the original.
CandidateMutation mutate_candidate(const SymbolicNetwork& net,
                                   const CandidateSet& candidates, Rng& rng, double p);

/// Train any unscored member, score by the ranking metric on the training
/// samples, sort descending and keep the first N. Ties break toward fewer
/// active edges, then the earlier pool position. Dead candidates score
/// -inf. Throws std::runtime_error when every candidate is dead.
void rank_and_select(std::vector<Candidate>& pool, const EsrnConfig& config,
                     const CandidateSet& candidates,
                     const std::vector<Sample>& train_samples);

/// Ranking metric of a network in Dl space (-inf when dead/undefined).
double score_network(const SymbolicNetwork& net, const CandidateSet& candidates,
                     const std::vector<Sample>& samples, RankMetric metric);

/// Generation index (1-based) with the maximal test metric; earliest wins
/// ties. This is the overfitting guard over the metric-generation curve.
int select_best_generation(const GenerationLog& log);

struct EvolutionResult {
    SymbolicNetwork best;          // top network of the selected generation
    Expression best_expression;    // its exact decoded form
    GenerationLog log;
    int best_generation = 0;
};

/// The full loop: select, log the top candidate's train/test metric, then
/// breed (crossover pairs, activation mutants, candidate mutants; originals
/// always retained alongside) and repeat for T generations. Offspring are
/// capped at 2N per generation so the merged pool stays within 3N.
/// Deterministic for a fixed seed.
EvolutionResult run(const EsrnConfig& config, const CandidateSet& candidates,
                    const std::vector<Sample>& train_samples,
                    const std::vector<Sample>& test_samples);

}  // namespace esrn
