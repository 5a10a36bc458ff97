#include "riskmap/pnm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "riskmap/types.hpp"

namespace riskmap {

namespace {

void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() +
                                     ": " + ec.message());
}

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in, const std::filesystem::path& path) {
    std::string token;
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    while (c != EOF && !std::isspace(c)) {
        token.push_back(static_cast<char>(c));
        c = in.get();
    }
    if (token.empty()) throw ParseError("truncated PNM header: " + path.string());
    return token;
}

int parse_int(const std::string& token, const std::filesystem::path& path) {
    try {
        return std::stoi(token);
    } catch (const std::exception&) {
        throw ParseError("bad PNM header field '" + token + "' in " + path.string());
    }
}

}  // namespace

void write_pgm16(const std::filesystem::path& path, int width, int height,
                 const std::vector<double>& values) {
    if (values.size() != static_cast<std::size_t>(width) * height) {
        throw std::invalid_argument("value buffer does not match dimensions");
    }
    std::string bytes = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n65535\n";
    bytes.reserve(bytes.size() + values.size() * 2);
    for (double v : values) {
        const long q = std::lround(std::clamp(v, 0.0, 1.0) * 65535.0);
        bytes.push_back(static_cast<char>((q >> 8) & 0xff));
        bytes.push_back(static_cast<char>(q & 0xff));
    }
    atomic_write(path, bytes);
}

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open graymap: " + path.string());
    if (next_token(in, path) != "P5") throw ParseError("not a binary graymap: " + path.string());
    GrayImage img;
    img.width = parse_int(next_token(in, path), path);
    img.height = parse_int(next_token(in, path), path);
    const int maxval = parse_int(next_token(in, path), path);
    if (img.width <= 0 || img.height <= 0 || maxval <= 0 || maxval > 65535) {
        throw ParseError("bad graymap dimensions in " + path.string());
    }
    const std::size_t count = static_cast<std::size_t>(img.width) * img.height;
    const int sample_bytes = maxval > 255 ? 2 : 1;
    std::vector<char> raw(count * sample_bytes);
    in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
        throw ParseError("truncated graymap data: " + path.string());
    }
    img.values.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        unsigned value;
        if (sample_bytes == 2) {
            value = (static_cast<unsigned char>(raw[2 * i]) << 8) |
                    static_cast<unsigned char>(raw[2 * i + 1]);
        } else {
            value = static_cast<unsigned char>(raw[i]);
        }
        img.values[i] = static_cast<double>(value) / maxval;
    }
    return img;
}

void write_ppm8(const std::filesystem::path& path, const ColorImage& image) {
    if (image.pixels.size() != static_cast<std::size_t>(image.width) * image.height) {
        throw std::invalid_argument("pixel buffer does not match dimensions");
    }
    std::string bytes =
        "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
    bytes.reserve(bytes.size() + image.pixels.size() * 3);
    for (const auto& p : image.pixels) {
        bytes.push_back(static_cast<char>(p.r));
        bytes.push_back(static_cast<char>(p.g));
        bytes.push_back(static_cast<char>(p.b));
    }
    atomic_write(path, bytes);
}

ColorImage read_ppm8(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open pixmap: " + path.string());
    if (next_token(in, path) != "P6") throw ParseError("not a binary pixmap: " + path.string());
    ColorImage img;
    img.width = parse_int(next_token(in, path), path);
    img.height = parse_int(next_token(in, path), path);
    const int maxval = parse_int(next_token(in, path), path);
    if (img.width <= 0 || img.height <= 0 || maxval != 255) {
        throw ParseError("unsupported pixmap header in " + path.string());
    }
    const std::size_t count = static_cast<std::size_t>(img.width) * img.height;
    std::vector<char> raw(count * 3);
    in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
        throw ParseError("truncated pixmap data: " + path.string());
    }
    img.pixels.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        img.pixels[i] = {static_cast<std::uint8_t>(raw[3 * i]),
                         static_cast<std::uint8_t>(raw[3 * i + 1]),
                         static_cast<std::uint8_t>(raw[3 * i + 2])};
    }
    return img;
}

}  // namespace riskmap
