#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riskmap/types.hpp"

namespace riskmap {

// Run-length encoded binary region, row-major within the owning bbox.
// counts[0] is the leading background run (possibly 0).
struct RleMask {
    std::vector<std::uint32_t> counts;

    std::uint64_t span() const {
        std::uint64_t s = 0;
        for (auto c : counts) s += c;
        return s;
    }
};

// Decode to width*height bytes (0/1), row-major. Throws ParseError when the
// run lengths do not cover exactly width*height pixels.
std::vector<std::uint8_t> decode_mask(const RleMask& mask, int width, int height);
RleMask encode_mask(const std::vector<std::uint8_t>& bits, int width, int height);

// One detected object. bbox is half-open pixel coordinates
// [x_min, x_max) x [y_min, y_max); the mask, when present, covers exactly
// the bbox. centroid is in meters.
struct SceneObject {
    int id = 0;
    std::string label;
    std::array<double, 3> centroid{0.0, 0.0, 0.0};
    std::array<int, 4> bbox{0, 0, 0, 0};  // x_min, y_min, x_max, y_max
    std::optional<RleMask> mask;
    std::map<std::string, double> initial_risk;  // accident type -> [0,1]

    int bbox_width() const { return bbox[2] - bbox[0]; }
    int bbox_height() const { return bbox[3] - bbox[1]; }
};

struct Scene {
    std::string scene_id;
    int width = 0;
    int height = 0;
    std::vector<SceneObject> objects;
};

// Parse a scene JSON document and enforce the invariants (unique ids,
// in-bounds bboxes, mask spans matching bbox area).
Scene load_scene(const std::filesystem::path& path);
void save_scene(const Scene& scene, const std::filesystem::path& path);

// Validation shared by load_scene and programmatic construction.
void validate_scene(const Scene& scene);

// Map every object label through the alias table.
void apply_aliases(Scene& scene, const AliasMap& aliases);

// Euclidean distance between the 3D centroids of two objects.
double centroid_distance(const SceneObject& a, const SceneObject& b);

}  // namespace riskmap
