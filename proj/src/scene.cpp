#include "riskmap/scene.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

namespace riskmap {

namespace {
using nlohmann::json;
using ordered_json = nlohmann::ordered_json;
}  // namespace

std::vector<std::uint8_t> decode_mask(const RleMask& mask, int width, int height) {
    const std::uint64_t area = static_cast<std::uint64_t>(width) * height;
    if (mask.span() != area) {
        throw ParseError("mask run lengths cover " + std::to_string(mask.span()) +
                         " pixels, expected " + std::to_string(area));
    }
    std::vector<std::uint8_t> bits;
    bits.reserve(area);
    std::uint8_t value = 0;  // leading run is background
    for (auto run : mask.counts) {
        bits.insert(bits.end(), run, value);
        value = value == 0 ? 1 : 0;
    }
    return bits;
}

RleMask encode_mask(const std::vector<std::uint8_t>& bits, int width, int height) {
    const std::size_t area = static_cast<std::size_t>(width) * height;
    if (bits.size() != area) throw ParseError("mask bit buffer does not match dimensions");
    RleMask mask;
    std::uint8_t value = 0;
    std::uint32_t run = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const std::uint8_t b = bits[i] ? 1 : 0;
        if (b != value) {
            mask.counts.push_back(run);
            run = 0;
            value = b;
        }
        ++run;
    }
    mask.counts.push_back(run);
    return mask;
}

void validate_scene(const Scene& scene) {
    if (scene.width <= 0 || scene.height <= 0) {
        throw ParseError("scene '" + scene.scene_id + "': image dimensions must be positive");
    }
    std::set<int> ids;
    for (const auto& obj : scene.objects) {
        const std::string where =
            "scene '" + scene.scene_id + "' object " + std::to_string(obj.id);
        if (!ids.insert(obj.id).second) throw ParseError(where + ": duplicate id");
        if (obj.label.empty()) throw ParseError(where + ": empty label");
        const auto& b = obj.bbox;
        if (b[0] >= b[2] || b[1] >= b[3]) throw ParseError(where + ": degenerate bbox");
        if (b[0] < 0 || b[1] < 0 || b[2] > scene.width || b[3] > scene.height) {
            throw ParseError(where + ": bbox outside image bounds");
        }
        if (obj.mask) {
            // decode_mask throws when the span does not match the bbox area
            decode_mask(*obj.mask, obj.bbox_width(), obj.bbox_height());
        }
        for (const auto& [type, value] : obj.initial_risk) {
            if (value < 0.0 || value > 1.0) {
                throw ParseError(where + ": initial risk for '" + type + "' outside [0,1]");
            }
        }
    }
}

Scene load_scene(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scene file: " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("scene " + path.string() + ": " + e.what());
    }

    Scene scene;
    try {
        scene.scene_id = j.at("scene_id").get<std::string>();
        scene.width = j.at("image").at("width").get<int>();
        scene.height = j.at("image").at("height").get<int>();
        for (const auto& o : j.at("objects")) {
            SceneObject obj;
            obj.id = o.at("id").get<int>();
            obj.label = normalize_label(o.at("label").get<std::string>());
            const auto c = o.at("centroid_3d").get<std::vector<double>>();
            if (c.size() != 3) throw ParseError("centroid_3d must have 3 components");
            obj.centroid = {c[0], c[1], c[2]};
            const auto b = o.at("bbox_2d").get<std::vector<int>>();
            if (b.size() != 4) throw ParseError("bbox_2d must have 4 components");
            obj.bbox = {b[0], b[1], b[2], b[3]};
            if (o.contains("mask")) {
                RleMask mask;
                mask.counts = o.at("mask").at("counts").get<std::vector<std::uint32_t>>();
                obj.mask = std::move(mask);
            }
            if (o.contains("initial_risk")) {
                obj.initial_risk = o.at("initial_risk").get<std::map<std::string, double>>();
            }
            scene.objects.push_back(std::move(obj));
        }
    } catch (const json::exception& e) {
        throw ParseError("scene " + path.string() + ": " + e.what());
    }

    try {
        validate_scene(scene);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return scene;
}

void save_scene(const Scene& scene, const std::filesystem::path& path) {
    ordered_json j;
    j["scene_id"] = scene.scene_id;
    j["image"] = {{"width", scene.width}, {"height", scene.height}};
    ordered_json objects = ordered_json::array();
    for (const auto& obj : scene.objects) {
        ordered_json o;
        o["id"] = obj.id;
        o["label"] = obj.label;
        o["centroid_3d"] = {obj.centroid[0], obj.centroid[1], obj.centroid[2]};
        o["bbox_2d"] = {obj.bbox[0], obj.bbox[1], obj.bbox[2], obj.bbox[3]};
        if (obj.mask) o["mask"] = {{"counts", obj.mask->counts}};
        if (!obj.initial_risk.empty()) o["initial_risk"] = obj.initial_risk;
        objects.push_back(std::move(o));
    }
    j["objects"] = std::move(objects);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write scene file: " + path.string());
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void apply_aliases(Scene& scene, const AliasMap& aliases) {
    for (auto& obj : scene.objects) obj.label = aliases.canonical(obj.label);
}

double centroid_distance(const SceneObject& a, const SceneObject& b) {
    const double dx = a.centroid[0] - b.centroid[0];
    const double dy = a.centroid[1] - b.centroid[1];
    const double dz = a.centroid[2] - b.centroid[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace riskmap
