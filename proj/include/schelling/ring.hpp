#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "schelling/rational.hpp"

namespace schelling {

enum class NodeType : uint8_t { Alpha = 0, Beta = 1 };

inline NodeType other(NodeType t) { return t == NodeType::Alpha ? NodeType::Beta : NodeType::Alpha; }
inline char type_char(NodeType t) { return t == NodeType::Alpha ? 'a' : 'b'; }

enum class NodeStatus : uint8_t {
    HappyAlpha,
    UnhappyAlpha,
    HappyBeta,
    UnhappyBeta,
    VeryUnhappyBeta,
};

enum class StateClass : uint8_t { CompleteSegregation, Dormant, Live };

/// Model parameters (n, w, tau, rho). tau and rho are exact rationals.
struct ProcessParams {
    int n{0};
    int w{0};
    Rational tau;
    Rational rho;

    void validate() const;
    int window() const { return 2 * w + 1; }
};

/// Clockwise interval on the ring, normalized so start is in [0, n).
struct Interval {
    int start{0};
    int length{0};
};

struct MetricSet {
    long long social_welfare{0};   // V
    long long mixing_index{0};     // MIX
    int unhappy_alpha{0};          // U_alpha
    int unhappy_beta{0};           // U_beta
    int very_unhappy_beta{0};      // U*_beta
    int beta_blocks{0};            // k_beta
    int alpha_blocks{0};           // k_alpha
    int longest_alpha_block{0};
    int longest_beta_block{0};
};

struct SwapDelta {
    long long d_mix{0};
    long long d_v{0};
    int d_unhappy_alpha{0};
    int d_unhappy_beta{0};
};

/// Dense index set over [0, n) with O(1) insert/erase/uniform access.
class IndexSet {
  public:
    void reset(int n) {
        items_.clear();
        pos_.assign(n, -1);
    }
    bool contains(int i) const { return pos_[i] >= 0; }
    int size() const { return static_cast<int>(items_.size()); }
    int at(int k) const { return items_[k]; }
    void insert(int i) {
        if (pos_[i] >= 0) return;
        pos_[i] = static_cast<int>(items_.size());
        items_.push_back(i);
    }
    void erase(int i) {
        int p = pos_[i];
        if (p < 0) return;
        int last = items_.back();
        items_[p] = last;
        pos_[last] = p;
        items_.pop_back();
        pos_[i] = -1;
    }
    const std::vector<int32_t>& items() const { return items_; }

  private:
    std::vector<int32_t> items_;
    std::vector<int32_t> pos_;
};

/// Ring configuration with incrementally maintained same-type counts and
/// state metrics. Single writer; cheap to copy for scratch work.
class RingState {
  public:
    RingState(ProcessParams params, std::vector<NodeType> types);

    const ProcessParams& params() const { return params_; }
    int n() const { return params_.n; }
    int w() const { return params_.w; }
    NodeType type(int u) const { return types_[u]; }
    const std::vector<NodeType>& types() const { return types_; }
    int same_count(int u) const { return same_count_[u]; }
    int n_alpha() const { return n_alpha_; }
    int n_beta() const { return n_beta_; }
    Rational rho_star() const { return Rational(n_beta_, params_.n); }

    int ring_distance(int u, int v) const {
        int d = u - v;
        if (d < 0) d = -d;
        return d <= params_.n - d ? d : params_.n - d;
    }
    int wrap(long long i) const {
        int n = params_.n;
        int r = static_cast<int>(i % n);
        return r < 0 ? r + n : r;
    }

    bool happy(int u) const {
        return params_.tau.leq_scaled(same_count_[u], params_.window());
    }
    NodeStatus status(int u) const;

    /// Metric snapshot; longest block lengths are computed by scan on demand,
    /// everything else comes from the incremental caches.
    MetricSet metrics() const;

    long long mixing_index() const { return mix_; }
    long long social_welfare() const {
        return static_cast<long long>(params_.window()) * params_.n - 2 * mix_;
    }
    int unhappy_alpha_count() const { return unhappy_alpha_.size(); }
    int unhappy_beta_count() const { return unhappy_beta_.size(); }
    int very_unhappy_beta_count() const { return very_unhappy_beta_; }
    int beta_block_count() const { return k_beta_; }
    int alpha_block_count() const { return k_alpha_; }
    const IndexSet& unhappy_alpha() const { return unhappy_alpha_; }
    const IndexSet& unhappy_beta() const { return unhappy_beta_; }

    /// Legality of swapping sites u and v per the transition rule: both
    /// unhappy, opposite types, and neither same-type count may drop at the
    /// destination. Evaluated in O(1) from the cached counts; equivalent to
    /// the simulated post-swap recount.
    bool swap_legal(int u, int v) const;

    /// Applies a legal swap, updating all caches over the affected sites.
    /// Throws std::invalid_argument if the swap is illegal; state unchanged.
    SwapDelta apply_swap(int u, int v);

    StateClass classify() const;

    /// (#gamma nodes) - (#other nodes) over the interval.
    long long interval_bias(Interval iv, NodeType gamma) const;

    /// All length-w windows holding at least tau*(2w+1) gamma-nodes.
    std::vector<Interval> stable_intervals(NodeType gamma) const;

    /// Maximal runs of gamma in clockwise order, wrap-around merged.
    std::vector<Interval> maximal_blocks(NodeType gamma) const;
    int longest_block(NodeType gamma) const;

    /// Compact text snapshot: "n w tau rho" header then the a/b sequence.
    void write_snapshot(std::ostream& os) const;
    static RingState read_snapshot(std::istream& is);

  private:
    void flip_block_counts(int x, NodeType from, NodeType to);
    void refresh_status(int u);

    ProcessParams params_;
    std::vector<NodeType> types_;
    std::vector<int32_t> same_count_;
    IndexSet unhappy_alpha_;
    IndexSet unhappy_beta_;
    std::vector<uint8_t> very_unhappy_flag_;
    int very_unhappy_beta_{0};
    int n_alpha_{0};
    int n_beta_{0};
    int k_alpha_{0};
    int k_beta_{0};
    long long mix_{0};
};

/// Builds a state from a type sequence, populating every cache by full scan.
RingState build_state(const ProcessParams& params, const std::vector<NodeType>& types);

std::vector<NodeType> types_from_string(const std::string& s);
std::string types_to_string(const std::vector<NodeType>& types);

} // namespace schelling
