#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "riskmap/pnm.hpp"
#include "riskmap/propagation.hpp"
#include "riskmap/scene.hpp"

namespace riskmap {

// Per-accident-type risk raster in [0,1], plus provenance.
struct RiskMap {
    std::string scene_id;
    std::string accident_type;
    std::string stage;  // "initial" or "propagated"
    int width = 0;
    int height = 0;
    double sigma = 0.0;  // 0 until smoothed
    std::vector<double> values;  // row-major

    double at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
    double& at(int x, int y) { return values[static_cast<std::size_t>(y) * width + x]; }
};

// Whether the [0,1] min-max normalization runs on the raster before the
// Gaussian blur or on the blurred output (the default).
enum class NormalizePhase { after_blur, before_blur };

// Paint each object's score over its mask (bbox fill when no mask is
// present); overlapping pixels take the maximum; background stays 0.
// Throws when `result` is missing a score for any scene object.
// Row-parallel; rasterize_serial is the single-threaded baseline kept for
// tests and the kernel benchmark.
RiskMap rasterize(const Scene& scene, const PropagationResult& result, const std::string& type);
RiskMap rasterize_serial(const Scene& scene, const PropagationResult& result,
                         const std::string& type);

// Separable Gaussian convolution, kernel radius ceil(3*sigma), weights
// normalized to sum 1, replicate-edge handling. No normalization step.
RiskMap gaussian_blur(const RiskMap& map, double sigma);
RiskMap gaussian_blur_serial(const RiskMap& map, double sigma);

// Blur plus min-max normalization. With max == min the map becomes all 1.0
// when the constant is positive, all 0.0 otherwise.
RiskMap smooth(const RiskMap& map, double sigma,
               NormalizePhase phase = NormalizePhase::after_blur);
RiskMap smooth_serial(const RiskMap& map, double sigma,
                      NormalizePhase phase = NormalizePhase::after_blur);

// Min-max rescale with the degenerate rule above; exposed for the
// normalize-first pipeline variant and tests.
void min_max_normalize(std::vector<double>& values);

// Fixed 256-entry blue-to-red lookup: entry i is (i, 0, 255-i).
const std::array<Rgb8, 256>& blue_red_colormap();

// Map values through the colormap: 0 -> pure blue, 1 -> pure red; the table
// index is round(value * 255) clamped to [0,255].
ColorImage colorize(const RiskMap& map);
ColorImage colorize_serial(const RiskMap& map);

// Per-channel 0.5*rgb + 0.5*colored, rounded half away from zero.
ColorImage blend_overlay(const ColorImage& rgb, const ColorImage& colored);

// Write the grayscale raster (16-bit graymap) and colorized map (pixmap);
// optionally an overlay, which requires the scene RGB image.
void write_maps(const RiskMap& map, const std::filesystem::path& gray_path,
                const std::filesystem::path& color_path,
                const std::optional<std::filesystem::path>& overlay_path = std::nullopt,
                const ColorImage* rgb = nullptr);

// "{scene_id}.{type}.{stage}.{ext}"
std::string map_filename(const std::string& scene_id, const std::string& type,
                         const std::string& stage, const std::string& ext);

}  // namespace riskmap
