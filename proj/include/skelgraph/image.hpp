#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "skelgraph/errors.hpp"
#include "skelgraph/geometry.hpp"
#include "skelgraph/random.hpp"

namespace skelgraph {

/// Which intensity range counts as "character" when thresholding a
/// gray-scale image. Scanned print is usually dark-on-light, MNIST digits
/// are light-on-dark.
enum class Polarity { DarkIsForeground, LightIsForeground };

struct Pixel {
    int x = 0;
    int y = 0;

    auto operator<=>(const Pixel&) const = default;
};

/// 8-bit gray-scale raster, row-major, row 0 on top.
class GrayImage {
public:
    GrayImage(int width, int height, std::vector<std::uint8_t> intensities);

    int width() const { return width_; }
    int height() const { return height_; }
    std::uint8_t at(int x, int y) const { return intensities_[static_cast<std::size_t>(y) * width_ + x]; }
    const std::vector<std::uint8_t>& intensities() const { return intensities_; }

    bool operator==(const GrayImage&) const = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> intensities_;
};

/// Character mask: the set of pixels that belong to the character. Stored
/// as a bitmap; set semantics (no duplicate coordinates) hold by
/// construction.
class BinaryImage {
public:
    BinaryImage(int width, int height);
    BinaryImage(int width, int height, const std::vector<Pixel>& foreground);

    int width() const { return width_; }
    int height() const { return height_; }
    bool contains(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_ &&
               mask_[static_cast<std::size_t>(y) * width_ + x] != 0;
    }
    /// Number of character pixels.
    std::size_t foreground_count() const { return count_; }
    /// Character pixels in row-major order.
    std::vector<Pixel> foreground() const;

    bool operator==(const BinaryImage&) const = default;

private:
    friend BinaryImage binarize(const GrayImage&, int, Polarity);
    friend BinaryImage trim(const BinaryImage&, int);
    void set(int x, int y);

    int width_;
    int height_;
    std::vector<std::uint8_t> mask_;
    std::size_t count_ = 0;
};

/// Pixel-deletion noise: remove round(xi * foreground_count) character
/// pixels, chosen uniformly without replacement.
struct NoiseSpec {
    double xi = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

enum class PgmFormat { Plain, Binary };  // P2 / P5

/// Parse a PGM file (magic P2 or P5, maxval <= 255). Throws ParseError with
/// the failing byte offset on malformed input.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);
GrayImage read_pgm(const std::string& bytes);

/// Encode as PGM with maxval 255.
std::string write_pgm(const GrayImage& image, PgmFormat format = PgmFormat::Binary);

/// Number of images stored in an IDX image file (big-endian magic 2051).
std::size_t idx_image_count(std::span<const std::uint8_t> bytes);

/// Extract one image from an IDX image file.
GrayImage read_idx_image(std::span<const std::uint8_t> bytes, std::size_t index);
GrayImage read_idx_image(const std::string& bytes, std::size_t index);

/// Threshold a gray image. DarkIsForeground keeps intensity < threshold,
/// LightIsForeground keeps intensity >= threshold.
BinaryImage binarize(const GrayImage& image, int threshold, Polarity polarity);

/// Render a mask back to gray: foreground black on white for
/// DarkIsForeground, white on black for LightIsForeground.
GrayImage to_gray(const BinaryImage& image, Polarity polarity);

/// Crop to the foreground bounding box expanded by `margin`, clamped to the
/// original bounds; coordinates are re-based to the new origin. Throws on an
/// empty foreground ("nothing to trim").
BinaryImage trim(const BinaryImage& image, int margin);

/// Delete round(xi * rho) foreground pixels uniformly at random, rho being
/// the current foreground count. Deterministic for a fixed seed.
BinaryImage inject_noise(const BinaryImage& image, const NoiseSpec& spec);

/// Draws training inputs from character pixels: uniform over the mask in
/// binary mode, intensity-weighted in gray mode (DarkIsForeground weights a
/// pixel by 255 - intensity, LightIsForeground by intensity). A sampler owns
/// its engine; do not share one across threads.
class PixelSampler {
public:
    PixelSampler(const BinaryImage& image, std::mt19937_64 engine);
    PixelSampler(const GrayImage& image, Polarity polarity, std::mt19937_64 engine);

    Vec2 draw();

private:
    std::vector<Pixel> pixels_;
    std::vector<std::uint64_t> cumulative_;  // empty in uniform mode
    std::mt19937_64 engine_;
};

}  // namespace skelgraph
