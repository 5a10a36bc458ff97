#pragma once

#include <string>
#include <vector>

#include "riskmap/accident_db.hpp"
#include "riskmap/scene.hpp"

namespace riskmap {

struct GraphNode {
    int object_id = 0;
    std::string label;
    double risk = 0.0;          // current score for the graph's accident type
    double report_share = 0.0;  // fraction of all reports involving this label
};

// Edge between node indices a < b. distance_norm is the centroid distance
// divided by the influence radius; correlation is the pairwise smoothed
// accident score for the graph's type.
struct GraphEdge {
    int a = 0;
    int b = 0;
    double distance_norm = 0.0;
    double correlation = 0.0;
};

struct Neighbor {
    int node = 0;
    int edge = 0;
};

// Spatial-semantic scene graph for one (scene, accident type) pair. Nodes
// are ordered by ascending object id; adjacency lists by ascending
// neighbor index.
struct SceneGraph {
    std::string scene_id;
    std::string accident_type;
    double influence_radius = 0.0;
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    std::vector<std::vector<Neighbor>> adjacency;

    int node_count() const { return static_cast<int>(nodes.size()); }
};

// Set every object's initial_risk[type] from the table. Unknown labels get
// the uniform prior.
void assign_initial_risk(Scene& scene, const RiskTable& table, const std::string& type);
// Same, for every configured type.
void assign_initial_risks(Scene& scene, const RiskTable& table);

// Build the graph for one accident type: nodes carry the assigned initial
// risk, edges link every object pair whose centroid distance is within
// `radius`, weighted by normalized distance and pairwise correlation.
// Requires assign_initial_risk to have run for `type`.
SceneGraph build_graph(const Scene& scene, const RiskTable& table, const std::string& type,
                       double radius);

// Stable text form of the whole graph; byte-identical for identical inputs.
std::string canonical_text(const SceneGraph& graph);

}  // namespace riskmap
