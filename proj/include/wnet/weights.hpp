#pragma once

#include <cstdint>
#include <vector>

#include "wnet/multigraph.hpp"
#include "wnet/rng.hpp"

namespace wnet {

// Lognormal parameters for initial link weights (mu_w, sigma_w) and for
// the per-period multiplicative shocks (mu_x, sigma_x).
struct WeightModel {
    double mu_w = 0.0;
    double sigma_w = 0.0;
    double mu_x = 0.0;
    double sigma_x = 0.0;
    // When set, mu_x is replaced by -sigma_x^2/2 so the shock has unit mean.
    bool martingale = false;

    double effective_mu_x() const {
        return martingale ? -0.5 * sigma_x * sigma_x : mu_x;
    }

    void validate() const;  // throws std::invalid_argument
};

struct PanelEdge {
    std::int64_t id = 0;
    std::int64_t source = 0;
    std::int64_t target = 0;
};

// Link weights over discrete periods. Only non-self-loop edges carry
// weights; all weights are strictly positive in every period.
class WeightedPanel {
  public:
    WeightedPanel() = default;
    WeightedPanel(std::int64_t node_count, std::vector<PanelEdge> edges);

    std::size_t period_count() const { return weights_.size(); }
    std::int64_t node_count() const { return node_count_; }
    const std::vector<PanelEdge>& edges() const { return edges_; }

    // Weights for one period, aligned with edges().
    const std::vector<double>& weights(std::size_t period) const;
    void append_period(std::vector<double> weights);

  private:
    std::int64_t node_count_ = 0;
    std::vector<PanelEdge> edges_;
    std::vector<std::vector<double>> weights_;
};

// One independent lognormal(mu_w, sigma_w) weight per non-self-loop edge;
// the result has a single period.
WeightedPanel assign_initial_weights(const MultiGraph& graph,
                                     const WeightModel& model,
                                     RandomStream& rng);

// Appends `steps` periods; each weight is multiplied per period by an
// independent lognormal(mu_x, sigma_x) shock. Trajectories use per-edge
// substreams, so the result does not depend on edge iteration order.
void evolve_weights(WeightedPanel& panel, const WeightModel& model,
                    int steps, RandomStream& rng);

// Strength (sum of incident non-self-loop weights) per node, dense over
// node ids; nodes with no weighted edges have strength 0.
// Throws std::out_of_range for an invalid period.
std::vector<double> node_strength(const WeightedPanel& panel,
                                  std::size_t period);

enum class GrowthLevel { node, edge };

struct GrowthRates {
    std::vector<double> values;
    // Node-period pairs skipped for zero strength in either period.
    std::size_t skipped = 0;
};

// Log growth rates g = ln(value(t+1)/value(t)) for every consecutive
// period pair, at node-strength or edge-weight level. Requires at least
// two periods.
GrowthRates growth_rates(const WeightedPanel& panel, GrowthLevel level);

}  // namespace wnet
