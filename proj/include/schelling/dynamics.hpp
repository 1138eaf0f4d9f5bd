#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "schelling/ring.hpp"

namespace schelling {

class InfectedTracker;

struct RunConfig {
    ProcessParams params;
    uint64_t seed{1};
    long long max_stages{0};      // 0 = default 50n
    long long record_every{0};    // 0 = default max(1, n/1000)
    bool track_infected{false};

    long long effective_max_stages() const {
        return max_stages > 0 ? max_stages : 50LL * params.n;
    }
    long long effective_record_every() const {
        return record_every > 0 ? record_every : std::max(1, params.n / 1000);
    }
    void validate() const;
};

struct SwapEvent {
    long long stage{0};
    int alpha_site{-1}; // pre-swap position of the alpha participant
    int beta_site{-1};  // pre-swap position of the beta participant
    bool bogus{false};
    SwapDelta delta;
};

struct StoppingTimes {
    std::optional<long long> t_g;    // G_s <= tau*rho*n/(4w)   (needs tracking)
    std::optional<long long> t_y;    // Y_s > G_s, stopped at t_g (needs tracking)
    std::optional<long long> t_mix;  // MIX < n(w+1)*tau*rho_star
    std::optional<long long> t_stop; // U_alpha = 0
};

enum class Outcome : uint8_t { CompleteSegregation, Dormant, NoLegalPair, StageCapReached };
const char* outcome_name(Outcome o);

struct RunSummary {
    Outcome outcome{Outcome::StageCapReached};
    long long stages_executed{0};
    long long swap_count{0};
    long long distinct_swapped_nodes{0};
    MetricSet final_metrics;
    StoppingTimes stopping;
    std::optional<long long> ratio_threshold_stage; // first U*_b < 4w^2 * U_a
    Rational rho_star;
    long long bogus_count{0};
};

/// Per-sample record written at stage 0 and then every record_every swaps.
struct SampleRecord {
    long long s{0};
    long long V{0};
    long long MIX{0};
    int U_a{0};
    int U_b{0};
    int U_b_star{0};
    int k_b{0};
    // Infected-area variables; only meaningful when tracking is on.
    long long Z{-1}, Y{-1}, D{-1}, G{-1};
    long long bogus_count{0};
};

/// Receives trace records as the run executes.
class TraceSink {
  public:
    virtual ~TraceSink() = default;
    virtual void on_metadata(const RunConfig& config, const RingState& initial,
                             const InfectedTracker* tracker) = 0;
    virtual void on_sample(const SampleRecord& rec) = 0;
    virtual void on_swap(const SwapEvent& ev) = 0;
};

class NullSink : public TraceSink {
  public:
    void on_metadata(const RunConfig&, const RingState&, const InfectedTracker*) override {}
    void on_sample(const SampleRecord&) override {}
    void on_swap(const SwapEvent&) override {}
};

/// In-memory trace, used by tests and post-hoc analysis.
struct MemoryTrace : TraceSink {
    RunConfig config;
    std::string types0;
    std::vector<SampleRecord> samples;
    std::vector<SwapEvent> swaps;
    void on_metadata(const RunConfig& c, const RingState& initial,
                     const InfectedTracker*) override;
    void on_sample(const SampleRecord& rec) override { samples.push_back(rec); }
    void on_swap(const SwapEvent& ev) override { swaps.push_back(ev); }
};

using Rng = std::mt19937_64;

/// Unbiased bounded draw from [0, bound) by masked rejection; deterministic
/// across platforms for a fixed seed.
uint64_t uniform_below(Rng& rng, uint64_t bound);

/// I.i.d. initial state: each site is beta with probability rho.
RingState sample_initial(const ProcessParams& params, uint64_t seed);

/// Every legal (unhappy alpha, unhappy beta) pair; brute-force oracle order.
std::vector<std::pair<int, int>> enumerate_legal_pairs(const RingState& state);

struct StepResult {
    bool swapped{false};
    SwapEvent event;          // valid when swapped
    StateClass terminal{};    // valid when !swapped
    bool no_legal_pair{false};
};

/// One stage: a uniform draw over legal pairs (rejection sampling with exact
/// enumeration fallback), applied to the state. The tracker, when given, is
/// consulted for the bogus flag before the swap and advanced after it.
StepResult step(RingState& state, Rng& rng, long long stage, InfectedTracker* tracker = nullptr);

/// Full run: iterates step() until a terminal state or the stage cap,
/// recording samples, swap events and stopping times.
RunSummary run(const RunConfig& config, TraceSink& sink);
RunSummary run(const RunConfig& config); // discards the trace

} // namespace schelling
