#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "skelgraph/image.hpp"

using namespace skelgraph;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) {
    return std::vector<std::uint8_t>(s.begin(), s.end());
}

std::vector<std::uint8_t> make_idx(std::uint32_t magic, std::uint32_t count, std::uint32_t rows,
                                   std::uint32_t cols, const std::vector<std::uint8_t>& payload) {
    std::vector<std::uint8_t> out;
    for (std::uint32_t v : {magic, count, rows, cols})
        for (int shift = 24; shift >= 0; shift -= 8)
            out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xff));
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

BinaryImage random_mask(std::mt19937_64& engine, int w, int h, double density) {
    std::vector<Pixel> fg;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (uniform_unit(engine) < density) fg.push_back({x, y});
    return BinaryImage(w, h, fg);
}

}  // namespace

TEST_CASE("read_pgm parses a plain P2 file") {
    const auto img = read_pgm(std::string("P2\n2 2\n255\n0 255 255 0\n"));
    CHECK(img.width() == 2);
    CHECK(img.height() == 2);
    CHECK(img.intensities() == std::vector<std::uint8_t>{0, 255, 255, 0});
    CHECK(img.at(0, 0) == 0);
    CHECK(img.at(1, 0) == 255);
}

TEST_CASE("plain and binary encodings parse to the same image") {
    std::string p5 = "P5\n2 2\n255\n";
    p5 += '\0';
    p5 += static_cast<char>(255);
    p5 += static_cast<char>(255);
    p5 += '\0';
    CHECK(read_pgm(p5) == read_pgm(std::string("P2\n2 2\n255\n0 255 255 0\n")));
}

TEST_CASE("read_pgm handles comments and odd whitespace") {
    const auto img = read_pgm(std::string("P2 # magic\n# a comment line\n 2\t2 \n255\n0 1\n2 3"));
    CHECK(img.width() == 2);
    CHECK(img.intensities() == std::vector<std::uint8_t>{0, 1, 2, 3});
}

TEST_CASE("read_pgm rejects bad input") {
    CHECK_THROWS_WITH_AS(read_pgm(std::string("P3\n2 2\n255\n0 0 0 0\n")),
                         doctest::Contains("P3"), ParseError);
    CHECK_THROWS_AS(read_pgm(std::string("P2\n2 2\n65535\n0 0 0 0\n")), ParseError);
    CHECK_THROWS_AS(read_pgm(std::string("P2\n2 2\n255\n0 0 0\n")), ParseError);   // short payload
    CHECK_THROWS_AS(read_pgm(std::string("P5\n4 4\n255\nabc")), ParseError);       // truncated
    CHECK_THROWS_AS(read_pgm(std::string("P2\n2 2\n100\n0 0 0 101\n")), ParseError);
    CHECK_THROWS_AS(read_pgm(std::string("")), ParseError);
    // errors carry the byte offset
    try {
        read_pgm(std::string("P2\n2 2\n255\nx"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("at byte") != std::string::npos);
        CHECK(e.byte_offset() == 11);
    }
}

TEST_CASE("write_pgm round-trips through read_pgm in both formats") {
    std::mt19937_64 engine(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int w = 1 + static_cast<int>(uniform_below(engine, 9));
        const int h = 1 + static_cast<int>(uniform_below(engine, 9));
        std::vector<std::uint8_t> data;
        for (int i = 0; i < w * h; ++i)
            data.push_back(static_cast<std::uint8_t>(uniform_below(engine, 256)));
        const GrayImage img(w, h, data);
        CHECK(read_pgm(write_pgm(img, PgmFormat::Plain)) == img);
        CHECK(read_pgm(write_pgm(img, PgmFormat::Binary)) == img);
    }
}

TEST_CASE("read_idx_image extracts images from a hand-built IDX file") {
    const auto file = make_idx(2051, 1, 2, 2, {0, 255, 128, 64});
    const auto img = read_idx_image(std::span(file), 0);
    CHECK(img.width() == 2);
    CHECK(img.height() == 2);
    CHECK(img.intensities() == std::vector<std::uint8_t>{0, 255, 128, 64});
    CHECK(idx_image_count(std::span(file)) == 1);

    CHECK_THROWS_WITH_AS(read_idx_image(std::span(file), 1), doctest::Contains("out of range"),
                         Error);

    const auto labels = make_idx(2049, 1, 2, 2, {0, 255, 128, 64});
    CHECK_THROWS_WITH_AS(read_idx_image(std::span(labels), 0), doctest::Contains("magic"),
                         ParseError);

    auto truncated = make_idx(2051, 2, 2, 2, {0, 255, 128, 64});  // claims 2, holds 1
    CHECK_THROWS_AS(read_idx_image(std::span(truncated), 1), ParseError);
}

TEST_CASE("read_idx_image picks the right slice in a multi-image file") {
    const auto file = make_idx(2051, 3, 2, 3, {0, 1, 2, 3, 4, 5,       //
                                               10, 11, 12, 13, 14, 15,  //
                                               20, 21, 22, 23, 24, 25});
    const auto img = read_idx_image(std::span(file), 1);
    CHECK(img.width() == 3);
    CHECK(img.height() == 2);
    CHECK(img.intensities() == std::vector<std::uint8_t>{10, 11, 12, 13, 14, 15});
}

TEST_CASE("binarize applies threshold and polarity") {
    const GrayImage img(2, 2, {0, 255, 255, 0});

    const auto dark = binarize(img, 128, Polarity::DarkIsForeground);
    CHECK(dark.foreground() == std::vector<Pixel>{{0, 0}, {1, 1}});

    const auto light = binarize(img, 128, Polarity::LightIsForeground);
    CHECK(light.foreground() == std::vector<Pixel>{{1, 0}, {0, 1}});

    const GrayImage zeros(2, 2, {0, 0, 0, 0});
    CHECK(binarize(zeros, 0, Polarity::DarkIsForeground).foreground_count() == 0);  // strict <
}

TEST_CASE("trim crops to the bounding box and re-bases coordinates") {
    const BinaryImage img(10, 10, {{3, 3}, {5, 6}});
    const auto t = trim(img, 0);
    CHECK(t.width() == 3);
    CHECK(t.height() == 4);
    CHECK(t.foreground() == std::vector<Pixel>{{0, 0}, {2, 3}});
}

TEST_CASE("trim with full-frame foreground is the identity") {
    std::vector<Pixel> all;
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 3; ++x) all.push_back({x, y});
    const BinaryImage img(3, 4, all);
    CHECK(trim(img, 0) == img);
}

TEST_CASE("trim clamps the margin at the image border") {
    const BinaryImage img(10, 10, {{0, 0}});
    const auto t = trim(img, 2);
    CHECK(t.width() == 3);
    CHECK(t.height() == 3);
    CHECK(t.foreground() == std::vector<Pixel>{{0, 0}});
}

TEST_CASE("trim refuses an empty foreground") {
    const BinaryImage img(5, 5);
    CHECK_THROWS_WITH_AS(trim(img, 1), doctest::Contains("nothing to trim"), Error);
}

TEST_CASE("binarize then trim preserves foreground cardinality") {
    std::mt19937_64 engine(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int w = 2 + static_cast<int>(uniform_below(engine, 20));
        const int h = 2 + static_cast<int>(uniform_below(engine, 20));
        std::vector<std::uint8_t> data;
        for (int i = 0; i < w * h; ++i)
            data.push_back(static_cast<std::uint8_t>(uniform_below(engine, 256)));
        const auto mask = binarize(GrayImage(w, h, data), 128, Polarity::DarkIsForeground);
        if (mask.foreground_count() == 0) continue;
        const int margin = static_cast<int>(uniform_below(engine, 4));
        CHECK(trim(mask, margin).foreground_count() == mask.foreground_count());
    }
}

TEST_CASE("inject_noise removes exactly round(xi * rho) pixels") {
    std::vector<Pixel> fg;
    for (int i = 0; i < 200; ++i) fg.push_back({i % 20, i / 20});
    const BinaryImage img(20, 10, fg);
    REQUIRE(img.foreground_count() == 200);

    CHECK(inject_noise(img, {0.0, 42}) == img);
    CHECK(inject_noise(img, {1.0, 42}).foreground_count() == 0);
    CHECK(inject_noise(img, {0.95, 42}).foreground_count() == 10);
}

TEST_CASE("inject_noise output is a subset and deterministic per seed") {
    std::mt19937_64 engine(13);
    const auto img = random_mask(engine, 15, 15, 0.4);
    const double rho = static_cast<double>(img.foreground_count());

    for (double xi : {0.1, 0.33, 0.5, 0.77}) {
        const NoiseSpec spec{xi, 99};
        const auto noised = inject_noise(img, spec);
        const auto expected_removed = static_cast<std::size_t>(std::llround(xi * rho));
        CHECK(noised.foreground_count() == img.foreground_count() - expected_removed);
        for (const Pixel& p : noised.foreground()) CHECK(img.contains(p.x, p.y));
        CHECK(inject_noise(img, spec) == noised);          // same seed, same result
        if (expected_removed > 0 && expected_removed < rho)
            CHECK(inject_noise(img, {xi, 100}) != noised);  // another seed moves pixels
    }

    CHECK_THROWS_AS(inject_noise(img, {1.5, 0}), Error);
    CHECK_THROWS_AS(inject_noise(img, {-0.1, 0}), Error);
}

TEST_CASE("sampler on a singleton foreground always returns it") {
    const BinaryImage img(10, 10, {{4, 7}});
    PixelSampler sampler(img, std::mt19937_64(5));
    for (int i = 0; i < 100; ++i) {
        const Vec2 p = sampler.draw();
        CHECK(p.x == 4.0);
        CHECK(p.y == 7.0);
    }
}

TEST_CASE("sampler over two pixels is balanced to three sigma") {
    const BinaryImage img(4, 4, {{0, 0}, {3, 3}});
    PixelSampler sampler(img, std::mt19937_64(17));
    const int draws = 100000;
    int first = 0;
    for (int i = 0; i < draws; ++i)
        if (sampler.draw().x == 0.0) ++first;
    const double sigma = std::sqrt(draws * 0.25);
    CHECK(std::abs(first - draws / 2.0) <= 3.0 * sigma);
}

TEST_CASE("sampler visits only foreground coordinates") {
    std::mt19937_64 engine(23);
    const auto img = random_mask(engine, 12, 9, 0.3);
    if (img.foreground_count() == 0) return;
    PixelSampler sampler(img, std::mt19937_64(29));
    for (int i = 0; i < 2000; ++i) {
        const Vec2 p = sampler.draw();
        CHECK(img.contains(static_cast<int>(p.x), static_cast<int>(p.y)));
    }
}

TEST_CASE("gray sampler weights pixels by intensity") {
    // dark-is-foreground: weight 255 - intensity; the 0-intensity pixel gets
    // weight 255, the 255 pixel gets weight 0 and must never be drawn
    const GrayImage img(2, 1, {0, 255});
    PixelSampler sampler(img, Polarity::DarkIsForeground, std::mt19937_64(31));
    for (int i = 0; i < 1000; ++i) CHECK(sampler.draw().x == 0.0);

    // 2:1 weights land near a 2/3 share
    const GrayImage graded(2, 1, {255, 128});
    PixelSampler weighted(graded, Polarity::LightIsForeground, std::mt19937_64(37));
    const int draws = 90000;
    int heavy = 0;
    for (int i = 0; i < draws; ++i)
        if (weighted.draw().x == 0.0) ++heavy;
    const double p = 255.0 / (255.0 + 128.0);
    const double sigma = std::sqrt(draws * p * (1 - p));
    CHECK(std::abs(heavy - draws * p) <= 4.0 * sigma);
}

TEST_CASE("samplers reject empty sources") {
    CHECK_THROWS_AS(PixelSampler(BinaryImage(3, 3), std::mt19937_64(1)), Error);
    const GrayImage black(2, 2, {0, 0, 0, 0});
    CHECK_THROWS_AS(PixelSampler(black, Polarity::LightIsForeground, std::mt19937_64(1)), Error);
}

TEST_CASE("to_gray renders the mask back with the requested polarity") {
    const BinaryImage img(2, 2, {{0, 0}, {1, 1}});
    const auto dark = to_gray(img, Polarity::DarkIsForeground);
    CHECK(dark.intensities() == std::vector<std::uint8_t>{0, 255, 255, 0});
    const auto light = to_gray(img, Polarity::LightIsForeground);
    CHECK(light.intensities() == std::vector<std::uint8_t>{255, 0, 0, 255});
    // binarize(to_gray(m)) == m, both polarities
    CHECK(binarize(dark, 128, Polarity::DarkIsForeground) == img);
    CHECK(binarize(light, 128, Polarity::LightIsForeground) == img);
}
