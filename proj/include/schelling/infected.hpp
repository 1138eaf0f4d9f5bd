#pragma once

#include <optional>
#include <set>
#include <vector>

#include "schelling/dynamics.hpp"
#include "schelling/ring.hpp"

namespace schelling {

/// Table-4 style per-stage variables for the infected area.
struct InfectedVars {
    long long Z{0};     // alpha-nodes in infected area
    long long Y{0};     // unhappy beta-nodes in infected area
    long long D{0};     // anomalous nodes (cumulative)
    long long G{0};     // beta-nodes outside infected area
    long long Zstar{0}; // max(Z - D, 11 w^2 C)
    std::optional<double> p_hat; // Y/G, absent when G = 0
};

/// One infected segment: an interval grown from its incubator. Coordinates
/// are unwrapped (lo may be negative, hi may exceed n); empty when lo > hi.
struct InfectedSegment {
    long long lo{0}, hi{-1};
    long long inc_lo{0}, inc_hi{-1}; // fixed incubator bounds
    int ua_count{0};                 // unhappy alpha-nodes inside the extent
    bool active{false};              // activity at the end of the last stage
};

/// Incubators, live infected segments, anomalous-node history and the
/// exact counters Z, Y, D, G, maintained stage by stage. Owned by one run.
class InfectedTracker {
  public:
    /// Incubator detection on the initial state: length-w windows with
    /// fewer than eps* = w(1-rho+tau)/2 alpha-nodes seed the infected area.
    explicit InfectedTracker(const RingState& initial);

    /// Advances the segments by one executed stage, in stage order.
    /// `state_after` must already reflect the swap of `event`.
    void update(const RingState& state_after, const SwapEvent& event);

    bool in_infected(int site) const { return seg_of_[site] >= 0; }
    InfectedVars vars() const;

    long long C() const { return c_total_; }
    Rational epsilon_star() const { return eps_star_; }
    long long stage() const { return stage_; }
    int segment_count() const { return static_cast<int>(segments_.size()); }
    const std::vector<InfectedSegment>& segments() const { return segments_; }
    std::vector<Interval> incubators() const;
    std::vector<Interval> segment_intervals() const; // non-empty extents
    bool ever_anomalous(int site) const { return anomalous_ever_[site] != 0; }

    /// Unhappy alpha-nodes currently outside every segment; zero in the
    /// tau>0.5, tau+rho<1 regime the definitions were built for.
    int coverage_violations(const RingState& state) const;

  private:
    void mark_anomalous(int site);
    void absorb_range(int seg_idx, long long from, long long to, const RingState& state);
    void scan_zone_for_anomalous(const RingState& state, long long zlo, long long zhi);
    std::optional<long long> first_ua_offset(long long lo, long long len) const;
    std::optional<long long> last_ua_offset(long long lo, long long len) const;

    int n_{0};
    int w_{0};
    Rational eps_star_;
    long long c_total_{0};
    long long stage_{0};

    std::vector<InfectedSegment> segments_;
    std::vector<int32_t> seg_of_;        // site -> owning segment or -1
    std::vector<uint8_t> ua_flag_;       // cached unhappy-alpha statuses
    std::vector<uint8_t> ub_flag_;       // cached unhappy-beta statuses
    std::vector<uint8_t> anomalous_ever_;
    std::set<int> ua_sites_;

    long long z_{0};
    long long y_{0};
    long long g_{0};
    long long d_{0};
    long long area_size_{0};
    std::vector<int32_t> pending_;       // segments that may need expansion
    std::vector<uint8_t> pending_flag_;
};

/// Post-hoc generally-anomalous counts: for each recorded sample stage s,
/// the number of nodes in the stage-s infected area that are actively
/// anomalous at some stage of the whole trace. Requires the full trace;
/// if it was truncated before a terminal state the counts are lower bounds.
std::vector<long long> generally_anomalous(const MemoryTrace& trace);

} // namespace schelling
