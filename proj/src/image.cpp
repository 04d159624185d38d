#include "skelgraph/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace skelgraph {

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> intensities)
    : width_(width), height_(height), intensities_(std::move(intensities)) {
    if (width_ < 1 || height_ < 1)
        throw Error("image dimensions must be at least 1x1");
    if (intensities_.size() != static_cast<std::size_t>(width_) * height_)
        throw Error("intensity buffer size does not match " + std::to_string(width_) + "x" +
                    std::to_string(height_));
}

BinaryImage::BinaryImage(int width, int height) : width_(width), height_(height) {
    if (width_ < 1 || height_ < 1)
        throw Error("image dimensions must be at least 1x1");
    mask_.assign(static_cast<std::size_t>(width_) * height_, 0);
}

BinaryImage::BinaryImage(int width, int height, const std::vector<Pixel>& foreground)
    : BinaryImage(width, height) {
    for (const Pixel& p : foreground) {
        if (p.x < 0 || p.x >= width_ || p.y < 0 || p.y >= height_)
            throw Error("foreground pixel (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                        ") outside " + std::to_string(width_) + "x" + std::to_string(height_));
        set(p.x, p.y);
    }
}

void BinaryImage::set(int x, int y) {
    std::uint8_t& cell = mask_[static_cast<std::size_t>(y) * width_ + x];
    if (!cell) {
        cell = 1;
        ++count_;
    }
}

std::vector<Pixel> BinaryImage::foreground() const {
    std::vector<Pixel> out;
    out.reserve(count_);
    for (int y = 0; y < height_; ++y)
        for (int x = 0; x < width_; ++x)
            if (mask_[static_cast<std::size_t>(y) * width_ + x]) out.push_back({x, y});
    return out;
}

void NoiseSpec::validate() const {
    if (!(xi >= 0.0 && xi <= 1.0))
        throw Error("noise rate must lie in [0, 1], got " + std::to_string(xi));
}

namespace {

bool is_pgm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Tokenizer over a PGM header: whitespace-separated fields, '#' comments run
// to end of line.
struct PgmCursor {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }

    void skip_space_and_comments() {
        while (!eof()) {
            if (is_pgm_space(bytes[pos])) {
                ++pos;
            } else if (bytes[pos] == '#') {
                while (!eof() && bytes[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    long read_int(const char* what) {
        skip_space_and_comments();
        if (eof()) throw ParseError(std::string("truncated header: missing ") + what, pos);
        if (bytes[pos] < '0' || bytes[pos] > '9')
            throw ParseError(std::string("malformed ") + what + ": expected a digit", pos);
        long value = 0;
        while (!eof() && bytes[pos] >= '0' && bytes[pos] <= '9') {
            value = value * 10 + (bytes[pos] - '0');
            if (value > 1'000'000'000L) throw ParseError(std::string(what) + " out of range", pos);
            ++pos;
        }
        return value;
    }
};

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2) throw ParseError("not a PGM file: too short", 0);
    if (bytes[0] != 'P') throw ParseError("not a PGM file: bad magic", 0);
    const char kind = static_cast<char>(bytes[1]);
    if (kind != '2' && kind != '5')
        throw ParseError(std::string("unsupported PGM magic 'P") + kind + "' (want P2 or P5)", 1);

    PgmCursor cur{bytes, 2};
    const long width = cur.read_int("width");
    const long height = cur.read_int("height");
    const long maxval = cur.read_int("maxval");
    if (width < 1 || height < 1)
        throw ParseError("invalid dimensions " + std::to_string(width) + "x" + std::to_string(height),
                         cur.pos);
    if (maxval < 1 || maxval > 255)
        throw ParseError("unsupported maxval " + std::to_string(maxval) + " (must be <= 255)",
                         cur.pos);

    const std::size_t n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<std::uint8_t> data;
    data.reserve(n);

    if (kind == '2') {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t at = cur.pos;
            const long v = cur.read_int("pixel value");
            if (v > maxval)
                throw ParseError("pixel value " + std::to_string(v) + " exceeds maxval", at);
            data.push_back(static_cast<std::uint8_t>(v));
        }
    } else {
        // exactly one whitespace byte separates the header from the payload
        if (cur.eof() || !is_pgm_space(bytes[cur.pos]))
            throw ParseError("missing separator before binary payload", cur.pos);
        ++cur.pos;
        if (bytes.size() - cur.pos < n)
            throw ParseError("truncated payload: need " + std::to_string(n) + " bytes, have " +
                                 std::to_string(bytes.size() - cur.pos),
                             bytes.size());
        data.assign(bytes.begin() + cur.pos, bytes.begin() + cur.pos + n);
    }

    return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(data));
}

GrayImage read_pgm(const std::string& bytes) {
    return read_pgm(std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

std::string write_pgm(const GrayImage& image, PgmFormat format) {
    std::string out;
    if (format == PgmFormat::Binary) {
        out = "P5\n" + std::to_string(image.width()) + " " + std::to_string(image.height()) +
              "\n255\n";
        out.append(reinterpret_cast<const char*>(image.intensities().data()),
                   image.intensities().size());
    } else {
        out = "P2\n" + std::to_string(image.width()) + " " + std::to_string(image.height()) +
              "\n255\n";
        std::size_t line_len = 0;
        for (std::size_t i = 0; i < image.intensities().size(); ++i) {
            const std::string v = std::to_string(image.intensities()[i]);
            if (line_len > 0 && line_len + 1 + v.size() > 70) {
                out += '\n';
                line_len = 0;
            } else if (line_len > 0) {
                out += ' ';
                ++line_len;
            }
            out += v;
            line_len += v.size();
        }
        out += '\n';
    }
    return out;
}

namespace {

constexpr std::uint32_t kIdxImageMagic = 2051;  // 0x00000803

std::uint32_t read_be32(std::span<const std::uint8_t> bytes, std::size_t pos) {
    if (bytes.size() < pos + 4)
        throw ParseError("truncated IDX header", bytes.size());
    return (static_cast<std::uint32_t>(bytes[pos]) << 24) |
           (static_cast<std::uint32_t>(bytes[pos + 1]) << 16) |
           (static_cast<std::uint32_t>(bytes[pos + 2]) << 8) |
           static_cast<std::uint32_t>(bytes[pos + 3]);
}

struct IdxHeader {
    std::size_t count, rows, cols;
};

IdxHeader read_idx_header(std::span<const std::uint8_t> bytes) {
    const std::uint32_t magic = read_be32(bytes, 0);
    if (magic != kIdxImageMagic)
        throw ParseError("wrong IDX magic " + std::to_string(magic) + " (want " +
                             std::to_string(kIdxImageMagic) + " for an image file)",
                         0);
    const std::uint32_t count = read_be32(bytes, 4);
    const std::uint32_t rows = read_be32(bytes, 8);
    const std::uint32_t cols = read_be32(bytes, 12);
    if (rows == 0 || cols == 0) throw ParseError("invalid IDX image dimensions", 8);
    return {count, rows, cols};
}

}  // namespace

std::size_t idx_image_count(std::span<const std::uint8_t> bytes) {
    return read_idx_header(bytes).count;
}

GrayImage read_idx_image(std::span<const std::uint8_t> bytes, std::size_t index) {
    const IdxHeader h = read_idx_header(bytes);
    if (index >= h.count)
        throw Error("IDX index " + std::to_string(index) + " out of range (file holds " +
                    std::to_string(h.count) + " images)");
    const std::size_t image_size = h.rows * h.cols;
    const std::size_t offset = 16 + index * image_size;
    if (bytes.size() < offset + image_size)
        throw ParseError("truncated IDX payload", bytes.size());
    std::vector<std::uint8_t> data(bytes.begin() + offset, bytes.begin() + offset + image_size);
    return GrayImage(static_cast<int>(h.cols), static_cast<int>(h.rows), std::move(data));
}

GrayImage read_idx_image(const std::string& bytes, std::size_t index) {
    return read_idx_image(
        std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()), index);
}

BinaryImage binarize(const GrayImage& image, int threshold, Polarity polarity) {
    if (threshold < 0 || threshold > 255)
        throw Error("threshold must lie in [0, 255], got " + std::to_string(threshold));
    BinaryImage out(image.width(), image.height());
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            const int v = image.at(x, y);
            const bool fg =
                polarity == Polarity::DarkIsForeground ? v < threshold : v >= threshold;
            if (fg) out.set(x, y);
        }
    }
    return out;
}

GrayImage to_gray(const BinaryImage& image, Polarity polarity) {
    const std::uint8_t fg = polarity == Polarity::DarkIsForeground ? 0 : 255;
    const std::uint8_t bg = 255 - fg;
    std::vector<std::uint8_t> data(static_cast<std::size_t>(image.width()) * image.height(), bg);
    for (const Pixel& p : image.foreground())
        data[static_cast<std::size_t>(p.y) * image.width() + p.x] = fg;
    return GrayImage(image.width(), image.height(), std::move(data));
}

BinaryImage trim(const BinaryImage& image, int margin) {
    if (margin < 0) throw Error("trim margin must be non-negative");
    if (image.foreground_count() == 0) throw Error("nothing to trim: empty foreground");

    int min_x = image.width(), max_x = -1, min_y = image.height(), max_y = -1;
    for (const Pixel& p : image.foreground()) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    min_x = std::max(0, min_x - margin);
    min_y = std::max(0, min_y - margin);
    max_x = std::min(image.width() - 1, max_x + margin);
    max_y = std::min(image.height() - 1, max_y + margin);

    BinaryImage out(max_x - min_x + 1, max_y - min_y + 1);
    for (const Pixel& p : image.foreground()) out.set(p.x - min_x, p.y - min_y);
    return out;
}

BinaryImage inject_noise(const BinaryImage& image, const NoiseSpec& spec) {
    spec.validate();
    std::vector<Pixel> pixels = image.foreground();
    const std::size_t rho = pixels.size();
    const auto removed = static_cast<std::size_t>(std::llround(spec.xi * static_cast<double>(rho)));

    // partial Fisher-Yates: the first `removed` entries are the deleted ones
    std::mt19937_64 engine(spec.seed);
    for (std::size_t i = 0; i < removed; ++i) {
        const std::size_t j = i + uniform_below(engine, rho - i);
        std::swap(pixels[i], pixels[j]);
    }
    return BinaryImage(image.width(), image.height(),
                       std::vector<Pixel>(pixels.begin() + removed, pixels.end()));
}

PixelSampler::PixelSampler(const BinaryImage& image, std::mt19937_64 engine)
    : pixels_(image.foreground()), engine_(engine) {
    if (pixels_.empty()) throw Error("no sampleable pixel: empty foreground");
}

PixelSampler::PixelSampler(const GrayImage& image, Polarity polarity, std::mt19937_64 engine)
    : engine_(engine) {
    std::uint64_t total = 0;
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            const int v = image.at(x, y);
            const std::uint64_t w = polarity == Polarity::DarkIsForeground
                                        ? static_cast<std::uint64_t>(255 - v)
                                        : static_cast<std::uint64_t>(v);
            if (w > 0) {
                pixels_.push_back({x, y});
                total += w;
                cumulative_.push_back(total);
            }
        }
    }
    if (total == 0) throw Error("no sampleable pixel: total intensity weight is zero");
}

Vec2 PixelSampler::draw() {
    std::size_t idx;
    if (cumulative_.empty()) {
        idx = static_cast<std::size_t>(uniform_below(engine_, pixels_.size()));
    } else {
        const std::uint64_t u = uniform_below(engine_, cumulative_.back());
        idx = static_cast<std::size_t>(
            std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin());
    }
    const Pixel p = pixels_[idx];
    return {static_cast<double>(p.x), static_cast<double>(p.y)};
}

}  // namespace skelgraph
