#include "schelling/ring.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace schelling {

void ProcessParams::validate() const {
    if (n <= 0) throw std::invalid_argument("params: n must be positive");
    if (w <= 0) throw std::invalid_argument("params: w must be positive");
    if (2 * w + 1 > n) throw std::invalid_argument("params: 2w+1 must be <= n");
    if (!(Rational(0) < tau && tau < Rational(1)))
        throw std::invalid_argument("params: tau must be in (0,1)");
    if (!(Rational(0) <= rho && rho <= Rational(1)))
        throw std::invalid_argument("params: rho must be in [0,1]");
}

RingState::RingState(ProcessParams params, std::vector<NodeType> types)
    : params_(params), types_(std::move(types)) {
    params_.validate();
    const int n = params_.n;
    const int w = params_.w;
    if (static_cast<int>(types_.size()) != n)
        throw std::invalid_argument("build_state: types length != n");

    for (int i = 0; i < n; ++i) (types_[i] == NodeType::Beta ? n_beta_ : n_alpha_)++;

    // Same-type counts by sliding window over the neighbourhood [u-w, u+w].
    same_count_.assign(n, 0);
    int alpha_in_window = 0;
    for (int i = -w; i <= w; ++i)
        if (types_[wrap(i)] == NodeType::Alpha) ++alpha_in_window;
    for (int u = 0; u < n; ++u) {
        same_count_[u] =
            types_[u] == NodeType::Alpha ? alpha_in_window : (2 * w + 1) - alpha_in_window;
        if (types_[wrap(u - w)] == NodeType::Alpha) --alpha_in_window;
        if (types_[wrap(u + w + 1)] == NodeType::Alpha) ++alpha_in_window;
    }

    // MIX as the sum over alpha-nodes of opposite-type neighbours.
    mix_ = 0;
    for (int u = 0; u < n; ++u)
        if (types_[u] == NodeType::Alpha) mix_ += (2 * w + 1) - same_count_[u];

    unhappy_alpha_.reset(n);
    unhappy_beta_.reset(n);
    very_unhappy_flag_.assign(n, 0);
    for (int u = 0; u < n; ++u) refresh_status(u);

    // Block counts by run scan.
    k_alpha_ = k_beta_ = 0;
    for (int u = 0; u < n; ++u)
        if (types_[u] != types_[wrap(u - 1)]) (types_[u] == NodeType::Alpha ? k_alpha_ : k_beta_)++;
    if (k_alpha_ == 0 && k_beta_ == 0) (types_[0] == NodeType::Alpha ? k_alpha_ : k_beta_) = 1;
}

RingState build_state(const ProcessParams& params, const std::vector<NodeType>& types) {
    return RingState(params, types);
}

NodeStatus RingState::status(int u) const {
    const bool is_happy = happy(u);
    if (types_[u] == NodeType::Alpha)
        return is_happy ? NodeStatus::HappyAlpha : NodeStatus::UnhappyAlpha;
    if (is_happy) return NodeStatus::HappyBeta;
    const int alpha_around = params_.window() - same_count_[u];
    if (params_.tau.leq_scaled(alpha_around, params_.window())) return NodeStatus::VeryUnhappyBeta;
    return NodeStatus::UnhappyBeta;
}

void RingState::refresh_status(int u) {
    const NodeStatus st = status(u);
    const bool was_vub = very_unhappy_flag_[u] != 0;
    switch (st) {
        case NodeStatus::HappyAlpha:
            unhappy_alpha_.erase(u);
            unhappy_beta_.erase(u);
            break;
        case NodeStatus::UnhappyAlpha:
            unhappy_alpha_.insert(u);
            unhappy_beta_.erase(u);
            break;
        case NodeStatus::HappyBeta:
            unhappy_alpha_.erase(u);
            unhappy_beta_.erase(u);
            break;
        case NodeStatus::UnhappyBeta:
        case NodeStatus::VeryUnhappyBeta:
            unhappy_alpha_.erase(u);
            unhappy_beta_.insert(u);
            break;
    }
    const bool is_vub = st == NodeStatus::VeryUnhappyBeta;
    if (is_vub != was_vub) {
        very_unhappy_flag_[u] = is_vub ? 1 : 0;
        very_unhappy_beta_ += is_vub ? 1 : -1;
    }
}

bool RingState::swap_legal(int u, int v) const {
    if (u == v) return false;
    if (types_[u] == types_[v]) return false;
    if (happy(u) || happy(v)) return false;
    // Destination same-type counts may not drop. With X_a = #alpha in
    // N(u)\{u,v} and Y_a the same around v, both sides reduce to Y_a >= X_a,
    // i.e. sc[u] + sc[v] <= 2w + 2 - [dist <= w].
    const int overlap = ring_distance(u, v) <= params_.w ? 1 : 0;
    return same_count_[u] + same_count_[v] <= 2 * params_.w + 2 - overlap;
}

void RingState::flip_block_counts(int x, NodeType from, NodeType to) {
    const NodeType l = types_[wrap(x - 1)];
    const NodeType r = types_[wrap(x + 1)];
    int& k_from = from == NodeType::Alpha ? k_alpha_ : k_beta_;
    int& k_to = to == NodeType::Alpha ? k_alpha_ : k_beta_;
    const int n_from = from == NodeType::Alpha ? n_alpha_ : n_beta_;
    const int n_to = to == NodeType::Alpha ? n_alpha_ : n_beta_;

    if (l == from && r == from) {
        if (n_from < params_.n) ++k_from; // interior removal splits the run
    } else if (l != from && r != from) {
        --k_from;
    }
    if (l == to && r == to) {
        if (n_to < params_.n - 1) --k_to; // joins two distinct runs
    } else if (l != to && r != to) {
        ++k_to;
    }
}

SwapDelta RingState::apply_swap(int u, int v) {
    if (!swap_legal(u, v)) throw std::invalid_argument("apply_swap: illegal swap");
    const int w = params_.w;
    const int n = params_.n;
    const int overlap = ring_distance(u, v) <= w ? 1 : 0;

    SwapDelta delta;
    delta.d_mix = 2LL * (same_count_[u] + same_count_[v]) - (4LL * w + 4) + 2 * overlap;
    delta.d_v = -2 * delta.d_mix;
    const int ua_before = unhappy_alpha_.size();
    const int ub_before = unhappy_beta_.size();

    for (int x : {u, v}) {
        const NodeType from = types_[x];
        const NodeType to = other(from);
        flip_block_counts(x, from, to);
        types_[x] = to;
        (from == NodeType::Alpha ? n_alpha_ : n_beta_)--;
        (to == NodeType::Alpha ? n_alpha_ : n_beta_)++;
        for (int i = x - w; i <= x + w; ++i) {
            int y = wrap(i);
            if (y == x) continue;
            same_count_[y] += types_[y] == to ? 1 : -1;
        }
    }
    for (int x : {u, v}) {
        int c = 0;
        for (int i = x - w; i <= x + w; ++i)
            if (types_[wrap(i)] == types_[x]) ++c;
        same_count_[x] = c;
    }
    mix_ += delta.d_mix;

    // Statuses can change only within w of the flipped sites. Visit u's
    // window, then the part of v's window not already covered.
    if (2 * (2 * w + 1) >= n) {
        for (int y = 0; y < n; ++y) refresh_status(y);
    } else {
        for (int i = u - w; i <= u + w; ++i) refresh_status(wrap(i));
        for (int i = v - w; i <= v + w; ++i) {
            int y = wrap(i);
            if (ring_distance(y, u) > w) refresh_status(y);
        }
    }

    delta.d_unhappy_alpha = unhappy_alpha_.size() - ua_before;
    delta.d_unhappy_beta = unhappy_beta_.size() - ub_before;
    return delta;
}

MetricSet RingState::metrics() const {
    MetricSet m;
    m.mixing_index = mix_;
    m.social_welfare = social_welfare();
    m.unhappy_alpha = unhappy_alpha_.size();
    m.unhappy_beta = unhappy_beta_.size();
    m.very_unhappy_beta = very_unhappy_beta_;
    m.beta_blocks = k_beta_;
    m.alpha_blocks = k_alpha_;
    m.longest_alpha_block = longest_block(NodeType::Alpha);
    m.longest_beta_block = longest_block(NodeType::Beta);
    return m;
}

StateClass RingState::classify() const {
    if (n_alpha_ == 0 || n_beta_ == 0) return StateClass::CompleteSegregation;
    if (k_alpha_ == 1 && k_beta_ == 1) return StateClass::CompleteSegregation;
    if (unhappy_alpha_.size() == 0 || unhappy_beta_.size() == 0) return StateClass::Dormant;
    return StateClass::Live;
}

long long RingState::interval_bias(Interval iv, NodeType gamma) const {
    if (iv.length < 0 || iv.length > params_.n) throw std::invalid_argument("interval_bias: bad length");
    long long bias = 0;
    for (int i = 0; i < iv.length; ++i) bias += types_[wrap(iv.start + i)] == gamma ? 1 : -1;
    return bias;
}

std::vector<Interval> RingState::stable_intervals(NodeType gamma) const {
    const int n = params_.n;
    const int w = params_.w;
    std::vector<Interval> out;
    int count = 0;
    for (int i = 0; i < w; ++i)
        if (types_[i] == gamma) ++count;
    for (int s = 0; s < n; ++s) {
        if (params_.tau.leq_scaled(count, params_.window())) out.push_back({s, w});
        if (types_[s] == gamma) --count;
        if (types_[wrap(s + w)] == gamma) ++count;
    }
    return out;
}

std::vector<Interval> RingState::maximal_blocks(NodeType gamma) const {
    const int n = params_.n;
    std::vector<Interval> out;
    int start = -1;
    // Start the scan just after a boundary so wrap-around runs stay whole.
    int anchor = 0;
    while (anchor < n && types_[anchor] == gamma && types_[wrap(anchor - 1)] == gamma) ++anchor;
    if (anchor == n) return {{0, n}}; // homogeneous ring of gamma
    int run = 0;
    for (int k = 0; k < n; ++k) {
        int u = wrap(anchor + k);
        if (types_[u] == gamma) {
            if (run == 0) start = u;
            ++run;
        } else if (run > 0) {
            out.push_back({start, run});
            run = 0;
        }
    }
    if (run > 0) out.push_back({start, run});
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.start < b.start; });
    return out;
}

int RingState::longest_block(NodeType gamma) const {
    int best = 0;
    for (const auto& b : maximal_blocks(gamma)) best = std::max(best, b.length);
    return best;
}

void RingState::write_snapshot(std::ostream& os) const {
    os << params_.n << ' ' << params_.w << ' ' << params_.tau.str() << ' ' << params_.rho.str()
       << '\n';
    os << types_to_string(types_) << '\n';
}

RingState RingState::read_snapshot(std::istream& is) {
    ProcessParams p;
    std::string tau_s, rho_s, types_s;
    if (!(is >> p.n >> p.w >> tau_s >> rho_s >> types_s))
        throw std::invalid_argument("snapshot: malformed header or body");
    p.tau = Rational::parse(tau_s);
    p.rho = Rational::parse(rho_s);
    return RingState(p, types_from_string(types_s));
}

std::vector<NodeType> types_from_string(const std::string& s) {
    std::vector<NodeType> out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == 'a') out.push_back(NodeType::Alpha);
        else if (c == 'b') out.push_back(NodeType::Beta);
        else throw std::invalid_argument("types: expected only 'a'/'b'");
    }
    return out;
}

std::string types_to_string(const std::vector<NodeType>& types) {
    std::string s(types.size(), 'a');
    for (size_t i = 0; i < types.size(); ++i) s[i] = type_char(types[i]);
    return s;
}

} // namespace schelling
