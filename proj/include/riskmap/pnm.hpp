#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace riskmap {

struct Rgb8 {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Rgb8&) const = default;
};

struct ColorImage {
    int width = 0;
    int height = 0;
    std::vector<Rgb8> pixels;  // row-major

    const Rgb8& at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    Rgb8& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> values;  // row-major, [0,1]
};

// Binary portable graymap, maxval 65535 (two bytes per sample, MSB first).
// Values are clamped to [0,1] and quantized by rounding. Writes are atomic
// (temp file + rename).
void write_pgm16(const std::filesystem::path& path, int width, int height,
                 const std::vector<double>& values);

// Reads binary P5 with maxval up to 65535; samples scaled to [0,1].
GrayImage read_pgm(const std::filesystem::path& path);

// Binary portable pixmap, maxval 255. Atomic write.
void write_ppm8(const std::filesystem::path& path, const ColorImage& image);
ColorImage read_ppm8(const std::filesystem::path& path);

}  // namespace riskmap
