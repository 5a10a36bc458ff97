#pragma once

// Internal helpers shared by the parallel and serial heatmap kernels.

#include <cstdint>
#include <string>
#include <vector>

#include "riskmap/heatmap.hpp"

namespace riskmap::detail {

struct PaintJob {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // half-open bbox
    double value = 0.0;
    bool has_mask = false;
    std::vector<std::uint8_t> mask;  // bbox-local bits when has_mask
};

// Resolve per-object scores and decode masks once. Throws when `result`
// lacks a score for any object.
std::vector<PaintJob> prepare_paint_jobs(const Scene& scene, const PropagationResult& result,
                                         const std::string& type);

RiskMap empty_map(const Scene& scene, const std::string& type);

// Normalized 1D Gaussian taps for offsets -radius..radius.
std::vector<double> gaussian_kernel(double sigma, int& radius);

}  // namespace riskmap::detail
