#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "riskmap/scene_graph.hpp"

namespace riskmap {

// Propagation weight between a node and a higher-risk neighbor.
//   plain:       w = correlation * (1 - distance_norm); the risk difference
//                multiplies the influence term only.
//   risk_scaled: w additionally carries the risk difference, so the
//                normalizer includes it too.
enum class WeightForm { plain, risk_scaled };

// sources_only: nodes below the share threshold emit no influence but still
// receive it. full: they neither emit nor receive.
enum class ShareFilterMode { sources_only, full };

struct PropagationConfig {
    int max_iterations = 50;
    double tolerance = 1e-4;
    double epsilon = 1e-9;  // stabilizer in the weight denominator
    double theta_share = 0.005;
    WeightForm weight_form = WeightForm::plain;
    ShareFilterMode share_filter_mode = ShareFilterMode::sources_only;

    void validate() const;
};

struct PropagationResult {
    std::vector<int> object_ids;     // ascending
    std::vector<double> final_risk;  // parallel to object_ids, in [0,1]
    int iterations_run = 0;
    bool converged = false;
    std::vector<double> max_diff_trace;  // one entry per iteration

    std::optional<double> risk_for(int object_id) const;
};

// Receives every in-place node update (after clipping, before the
// iteration's renormalization) and every iteration end (after
// renormalization).
class PropagationObserver {
public:
    virtual ~PropagationObserver() = default;
    virtual void node_update(int iteration, int object_id, double delta, double risk) {
        (void)iteration;
        (void)object_id;
        (void)delta;
        (void)risk;
    }
    virtual void iteration_end(int iteration, const std::vector<double>& risks,
                               double max_diff) {
        (void)iteration;
        (void)risks;
        (void)max_diff;
    }
};

// Writes one TSV line per node update: iteration, object id, delta, risk.
class TraceWriter : public PropagationObserver {
public:
    explicit TraceWriter(std::ostream& out) : out_(out) {}
    void node_update(int iteration, int object_id, double delta, double risk) override;

private:
    std::ostream& out_;
};

// Iterative asymmetric risk propagation over the graph. Nodes are swept in
// ascending id order with in-place updates; influence flows only from
// higher-risk neighbors; each sweep ends with a min-max renormalization
// (skipped when all scores are equal). Stops when the largest per-node
// delta of a sweep falls below the tolerance.
PropagationResult propagate(const SceneGraph& graph, const PropagationConfig& config,
                            PropagationObserver* observer = nullptr);

// Assign initial risks for every configured type, then build and propagate
// one graph per type. Per-type runs are independent and execute in
// parallel.
std::map<std::string, PropagationResult> propagate_all_types(Scene& scene,
                                                             const RiskTable& table,
                                                             const PropagationConfig& config,
                                                             double radius);

}  // namespace riskmap
