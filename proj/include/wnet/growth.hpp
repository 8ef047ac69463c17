#pragma once

#include <cstdint>
#include <vector>

#include "wnet/distributions.hpp"
#include "wnet/multigraph.hpp"
#include "wnet/rng.hpp"

namespace wnet {

// Largest number of links a single run may request. Guards the
// preallocated sampling structures (capacity error, not a silent clamp).
inline constexpr std::int64_t kMaxLinks = 1LL << 24;

struct GrowthConfig {
    double entry_prob = 0.0;         // a: endpoint assigned to a new node
    double random_assignment = 0.0;  // b: uniform (vs. preferential) choice
    std::int64_t initial_nodes = 1;  // n0
    std::int64_t links = 0;          // m, non-self-loop links to add
    std::uint64_t seed = 0;

    // Throws std::invalid_argument when out of range.
    void validate() const;
};

// Fenwick (binary indexed) tree over per-node attachment weights.
// Sampling a node proportionally to its weight is O(log n).
class FenwickTree {
  public:
    explicit FenwickTree(std::size_t capacity) : tree_(capacity + 1, 0) {}

    void add(std::size_t index, std::int64_t delta);
    std::int64_t value(std::size_t index) const;
    std::int64_t total() const { return total_; }

    // Smallest index whose cumulative sum exceeds `r`; requires
    // 0 <= r < total().
    std::size_t find(std::int64_t r) const;

    std::size_t capacity() const { return tree_.size() - 1; }

  private:
    std::vector<std::int64_t> tree_;
    std::int64_t total_ = 0;
};

// Evolving state of one growth run. Attachment weight of a node is its
// non-self-loop degree plus 1 if it carries an initialization self-loop,
// so the total attachment weight after t steps is 2t + n0.
class GrowthState {
  public:
    GrowthState(std::int64_t initial_nodes, std::int64_t link_budget);

    std::int64_t step() const { return step_; }
    std::int64_t node_count() const { return node_count_; }
    std::int64_t initial_nodes() const { return initial_nodes_; }
    const std::vector<std::pair<std::int64_t, std::int64_t>>& links() const {
        return links_;
    }

    // Non-self-loop degree.
    std::int64_t degree(std::int64_t node) const { return degrees_[node]; }
    std::int64_t attachment_weight(std::int64_t node) const {
        return attach_.value(static_cast<std::size_t>(node));
    }
    std::int64_t total_attachment_weight() const { return attach_.total(); }

    friend void grow_step(GrowthState& state, const GrowthConfig& config,
                          RandomStream& rng);
    friend class GrowthStateTestAccess;

  private:
    std::int64_t add_node(bool with_self_loop);

    std::int64_t initial_nodes_;
    std::int64_t node_count_;
    std::int64_t step_ = 0;
    std::vector<std::int64_t> degrees_;
    std::vector<std::pair<std::int64_t, std::int64_t>> links_;
    FenwickTree attach_;
};

// Fresh state with n0 nodes, each carrying one self-loop, and no links.
GrowthState init_state(std::int64_t initial_nodes,
                       std::int64_t link_budget = 0);

// Adds exactly one link. Endpoint rule, per endpoint:
//   - new node with probability a;
//   - otherwise an existing node, uniformly with probability b, else
//     proportionally to attachment weight.
// The target draw excludes the source (weights renormalized by the
// exclusion); when no eligible existing target remains, the target is a
// new node.
void grow_step(GrowthState& state, const GrowthConfig& config,
               RandomStream& rng);

// Runs the full process: n0 self-loops then `links` grow steps seeded by
// config.seed. Deterministic given the config.
MultiGraph generate(const GrowthConfig& config);

// Analytic degree model for the process at time t:
// a = 0 gives an exponential law with mean 2t/n0; 0 < a < 1 gives a
// power-law body of exponent 2 + a/(1-a) with exponential cutoff scale
// (1 + 2t/n0)^(1-a) - 1.
DistributionModel theoretical_degree_model(double entry_prob, std::int64_t t,
                                           std::int64_t initial_nodes);

}  // namespace wnet
