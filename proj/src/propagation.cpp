#include "riskmap/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace riskmap {

void PropagationConfig::validate() const {
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
    if (tolerance < 0.0) throw std::invalid_argument("tolerance must be >= 0");
    if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be > 0");
    if (theta_share < 0.0 || theta_share > 1.0) {
        throw std::invalid_argument("theta_share must be in [0,1]");
    }
}

std::optional<double> PropagationResult::risk_for(int object_id) const {
    for (std::size_t i = 0; i < object_ids.size(); ++i) {
        if (object_ids[i] == object_id) return final_risk[i];
    }
    return std::nullopt;
}

void TraceWriter::node_update(int iteration, int object_id, double delta, double risk) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d\t%d\t%.17g\t%.17g\n", iteration, object_id, delta, risk);
    out_ << buf;
}

PropagationResult propagate(const SceneGraph& graph, const PropagationConfig& config,
                            PropagationObserver* observer) {
    config.validate();
    const int n = graph.node_count();

    PropagationResult result;
    result.object_ids.reserve(n);
    for (const auto& node : graph.nodes) result.object_ids.push_back(node.object_id);
    if (n == 0) {
        result.converged = true;
        return result;
    }

    std::vector<double> risk(n);
    bool outside = false;
    for (int i = 0; i < n; ++i) {
        risk[i] = graph.nodes[i].risk;
        if (risk[i] < 0.0 || risk[i] > 1.0) outside = true;
    }
    if (outside) {
        const auto [mn_it, mx_it] = std::minmax_element(risk.begin(), risk.end());
        const double mn = *mn_it, mx = *mx_it;
        if (mx > mn) {
            for (auto& r : risk) r = (r - mn) / (mx - mn);
        } else {
            for (auto& r : risk) r = std::clamp(r, 0.0, 1.0);
        }
    }

    std::vector<char> can_source(n), can_receive(n);
    for (int i = 0; i < n; ++i) {
        const bool passes = graph.nodes[i].report_share >= config.theta_share;
        can_source[i] = passes ? 1 : 0;
        can_receive[i] = (config.share_filter_mode == ShareFilterMode::full && !passes) ? 0 : 1;
    }

    for (int iteration = 1; iteration <= config.max_iterations; ++iteration) {
        double max_diff = 0.0;
        for (int i = 0; i < n; ++i) {
            double influence = 0.0;
            double total_weight = 0.0;
            if (can_receive[i]) {
                for (const auto& nb : graph.adjacency[i]) {
                    if (!can_source[nb.node]) continue;
                    const double rj = risk[nb.node];
                    if (rj <= risk[i]) continue;
                    const auto& edge = graph.edges[nb.edge];
                    const double base = edge.correlation * (1.0 - edge.distance_norm);
                    if (config.weight_form == WeightForm::plain) {
                        influence += base * (rj - risk[i]);
                        total_weight += std::abs(base);
                    } else {
                        const double w = base * (rj - risk[i]);
                        influence += w;
                        total_weight += std::abs(w);
                    }
                }
            }
            const double delta = influence / (total_weight + config.epsilon);
            risk[i] = std::clamp(risk[i] + delta, 0.0, 1.0);
            max_diff = std::max(max_diff, std::abs(delta));
            if (observer != nullptr) {
                observer->node_update(iteration, graph.nodes[i].object_id, delta, risk[i]);
            }
        }

        const auto [mn_it, mx_it] = std::minmax_element(risk.begin(), risk.end());
        const double mn = *mn_it, mx = *mx_it;
        if (mx > mn) {
            for (auto& r : risk) r = (r - mn) / (mx - mn);
        }

        result.iterations_run = iteration;
        result.max_diff_trace.push_back(max_diff);
        if (observer != nullptr) observer->iteration_end(iteration, risk, max_diff);
        if (max_diff < config.tolerance) {
            result.converged = true;
            break;
        }
    }

    result.final_risk = std::move(risk);
    return result;
}

std::map<std::string, PropagationResult> propagate_all_types(Scene& scene,
                                                             const RiskTable& table,
                                                             const PropagationConfig& config,
                                                             double radius) {
    config.validate();
    if (radius <= 0.0) throw std::invalid_argument("influence radius must be positive");
    assign_initial_risks(scene, table);

    const auto& labels = table.types().labels();
    const int n_types = static_cast<int>(labels.size());
    std::vector<PropagationResult> results(n_types);

#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < n_types; ++t) {
        const SceneGraph graph = build_graph(scene, table, labels[t], radius);
        results[t] = propagate(graph, config);
    }

    std::map<std::string, PropagationResult> out;
    for (int t = 0; t < n_types; ++t) out[labels[t]] = std::move(results[t]);
    return out;
}

}  // namespace riskmap
