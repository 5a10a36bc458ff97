#include "riskmap/scene_graph.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace riskmap {

void assign_initial_risk(Scene& scene, const RiskTable& table, const std::string& type) {
    const int idx = table.types().require(type);
    for (auto& obj : scene.objects) {
        obj.initial_risk[type] = table.risk_score(obj.label, idx);
    }
}

void assign_initial_risks(Scene& scene, const RiskTable& table) {
    for (const auto& type : table.types().labels()) assign_initial_risk(scene, table, type);
}

SceneGraph build_graph(const Scene& scene, const RiskTable& table, const std::string& type,
                       double radius) {
    if (radius <= 0.0) throw std::invalid_argument("influence radius must be positive");
    const int type_idx = table.types().require(type);

    SceneGraph graph;
    graph.scene_id = scene.scene_id;
    graph.accident_type = type;
    graph.influence_radius = radius;

    std::vector<const SceneObject*> ordered;
    ordered.reserve(scene.objects.size());
    for (const auto& obj : scene.objects) ordered.push_back(&obj);
    std::sort(ordered.begin(), ordered.end(),
              [](const SceneObject* a, const SceneObject* b) { return a->id < b->id; });

    for (const SceneObject* obj : ordered) {
        const auto it = obj->initial_risk.find(type);
        if (it == obj->initial_risk.end()) {
            throw std::logic_error("object " + std::to_string(obj->id) +
                                   " has no initial risk for type '" + type + "'");
        }
        GraphNode node;
        node.object_id = obj->id;
        node.label = obj->label;
        node.risk = it->second;
        node.report_share = table.report_share(obj->label);
        graph.nodes.push_back(std::move(node));
    }

    graph.adjacency.resize(graph.nodes.size());
    for (int i = 0; i < graph.node_count(); ++i) {
        for (int j = i + 1; j < graph.node_count(); ++j) {
            const double d = centroid_distance(*ordered[i], *ordered[j]);
            if (d > radius) continue;
            GraphEdge edge;
            edge.a = i;
            edge.b = j;
            edge.distance_norm = d / radius;
            edge.correlation = table.accident_correlation(graph.nodes[i].label,
                                                          graph.nodes[j].label, type_idx);
            const int edge_idx = static_cast<int>(graph.edges.size());
            graph.edges.push_back(edge);
            graph.adjacency[i].push_back({j, edge_idx});
            graph.adjacency[j].push_back({i, edge_idx});
        }
    }
    // The double loop above emits neighbors in ascending index order already;
    // keep the guarantee explicit.
    for (auto& list : graph.adjacency) {
        std::sort(list.begin(), list.end(),
                  [](const Neighbor& x, const Neighbor& y) { return x.node < y.node; });
    }
    return graph;
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string canonical_text(const SceneGraph& graph) {
    std::string out;
    out += "scene\t" + graph.scene_id + "\ttype\t" + graph.accident_type + "\tradius\t" +
           fmt_double(graph.influence_radius) + "\n";
    for (const auto& node : graph.nodes) {
        out += "node\t" + std::to_string(node.object_id) + "\t" + node.label + "\t" +
               fmt_double(node.risk) + "\t" + fmt_double(node.report_share) + "\n";
    }
    for (const auto& edge : graph.edges) {
        out += "edge\t" + std::to_string(graph.nodes[edge.a].object_id) + "\t" +
               std::to_string(graph.nodes[edge.b].object_id) + "\t" +
               fmt_double(edge.distance_norm) + "\t" + fmt_double(edge.correlation) + "\n";
    }
    return out;
}

}  // namespace riskmap
