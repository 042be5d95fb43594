#include <doctest.h>

#include <melita/domains/image_metrics.hpp>

#include <cmath>

using namespace melita;
using namespace melita::domains;

namespace {

Image solid(std::size_t w, std::size_t h, double r, double g, double b)
{
    Image img(w, h);
    for (std::size_t i = 0; i < img.pixel_count(); ++i) {
        img.rgb[3 * i] = r;
        img.rgb[3 * i + 1] = g;
        img.rgb[3 * i + 2] = b;
    }
    return img;
}

// Direct 3x3 convolution with the textbook Sobel kernels, scaled by 1/4.
double edge_ratio_oracle(const Image& img, double tau)
{
    static const int kx[3][3] = {{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}};
    static const int ky[3][3] = {{-1, -2, -1}, {0, 0, 0}, {1, 2, 1}};
    auto lum = [&](std::size_t x, std::size_t y) {
        return 0.299 * img.at(x, y, 0) + 0.587 * img.at(x, y, 1) + 0.114 * img.at(x, y, 2);
    };
    int edges = 0, interior = 0;
    for (std::size_t y = 1; y + 1 < img.height; ++y)
        for (std::size_t x = 1; x + 1 < img.width; ++x) {
            double gx = 0, gy = 0;
            for (int j = 0; j < 3; ++j)
                for (int i = 0; i < 3; ++i) {
                    const double l = lum(x + i - 1, y + j - 1);
                    gx += kx[j][i] * l;
                    gy += ky[j][i] * l;
                }
            gx /= 4;
            gy /= 4;
            ++interior;
            edges += std::sqrt(gx * gx + gy * gy) > tau ? 1 : 0;
        }
    return double(edges) / interior;
}

Image half_black_white()
{
    Image img(32, 32);
    for (std::size_t y = 0; y < 32; ++y)
        for (std::size_t x = 16; x < 32; ++x)
            for (std::size_t c = 0; c < 3; ++c)
                img.at(x, y, c) = 1.0;
    return img;
}

Image checkerboard(std::size_t n)
{
    Image img(n, n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t c = 0; c < 3; ++c)
                img.at(x, y, c) = (x + y) % 2 ? 1.0 : 0.0;
    return img;
}

Image random_image(Rng& rng, std::size_t w, std::size_t h)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Image img(w, h);
    for (auto& c : img.rgb)
        c = u(rng);
    return img;
}

Image mirror_x(const Image& img)
{
    Image out(img.width, img.height);
    for (std::size_t y = 0; y < img.height; ++y)
        for (std::size_t x = 0; x < img.width; ++x)
            for (std::size_t c = 0; c < 3; ++c)
                out.at(img.width - 1 - x, y, c) = img.at(x, y, c);
    return out;
}

Image mirror_y(const Image& img)
{
    Image out(img.width, img.height);
    for (std::size_t y = 0; y < img.height; ++y)
        for (std::size_t x = 0; x < img.width; ++x)
            for (std::size_t c = 0; c < 3; ++c)
                out.at(x, img.height - 1 - y, c) = img.at(x, y, c);
    return out;
}

} // namespace

TEST_CASE("edge complexity")
{
    CHECK(edge_complexity(solid(32, 32, 0.3, 0.6, 0.1)) == 0.0);

    const auto half = half_black_white();
    CHECK(edge_complexity(half) == edge_ratio_oracle(half, 0.25));
    CHECK(edge_complexity(half) == doctest::Approx(60.0 / 900.0).epsilon(1e-12));

    // Each pixel's neighbours cancel pairwise, so the 1-pixel checkerboard has
    // zero gradient everywhere under this operator.
    const auto board = checkerboard(32);
    CHECK(edge_complexity(board) == edge_ratio_oracle(board, 0.25));
    CHECK(edge_complexity(board) == 0.0);

    Rng rng(4);
    for (int i = 0; i < 20; ++i) {
        const auto img = random_image(rng, 9 + i, 7 + i);
        CHECK(edge_complexity(img) == doctest::Approx(edge_ratio_oracle(img, 0.25)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(edge_complexity(Image(2, 5)), ContractViolation);
}

TEST_CASE("colourfulness")
{
    CHECK(colourfulness(solid(8, 8, 0.4, 0.4, 0.4)) == 0.0);
    CHECK(colourfulness(solid(8, 8, 1.0, 0.0, 0.0)) == doctest::Approx(85.53).epsilon(1e-2 / 85.53));
    CHECK(colourfulness(solid(8, 8, 1.0, 0.0, 0.0)) ==
          doctest::Approx(0.3 * std::sqrt(255.0 * 255.0 + 127.5 * 127.5)).epsilon(1e-12));

    Image two(2, 1);
    two.at(0, 0, 0) = 1.0;
    two.at(1, 0, 2) = 1.0;
    CHECK(colourfulness(two) == doctest::Approx(272.62).epsilon(1e-2 / 272.62));
    CHECK(colourfulness(two) ==
          doctest::Approx(std::sqrt(127.5 * 127.5 + 191.25 * 191.25) + 0.3 * std::sqrt(127.5 * 127.5 + 63.75 * 63.75))
              .epsilon(1e-12));

    Rng rng(6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        Image gray(6, 5);
        for (std::size_t p = 0; p < gray.pixel_count(); ++p)
            gray.rgb[3 * p] = gray.rgb[3 * p + 1] = gray.rgb[3 * p + 2] = u(rng);
        CHECK(colourfulness(gray) == 0.0);
    }
    CHECK_THROWS_AS(colourfulness(Image(1, 1)), ContractViolation);
}

TEST_CASE("metrics are mirror invariant")
{
    Rng rng(8);
    for (int i = 0; i < 30; ++i) {
        const auto img = random_image(rng, 12, 10);
        CHECK(edge_complexity(mirror_x(img)) == edge_complexity(img));
        CHECK(edge_complexity(mirror_y(img)) == edge_complexity(img));
        CHECK(colourfulness(mirror_x(img)) == doctest::Approx(colourfulness(img)).epsilon(1e-12));
        CHECK(colourfulness(mirror_y(img)) == doctest::Approx(colourfulness(img)).epsilon(1e-12));
    }
}

TEST_CASE("bin4")
{
    const std::array<double, 3> t{0.05, 0.15, 0.30};
    CHECK(bin4(0.0, t) == 0);
    CHECK(bin4(0.05, t) == 1);
    CHECK(bin4(0.2, t) == 2);
    CHECK(bin4(0.30, t) == 3);
    CHECK(bin4(7.0, t) == 3);
    CHECK_THROWS_AS(bin4(0.1, {0.3, 0.2, 0.4}), ContractViolation);
    CHECK_THROWS_AS(bin4(0.1, {0.1, 0.1, 0.4}), ContractViolation);
}

TEST_CASE("box blur")
{
    const auto flat = solid(7, 5, 0.3, 0.7, 0.123456789);
    CHECK(box_blur(flat) == flat);

    Rng rng(9);
    const auto img = random_image(rng, 6, 4);
    const auto out = box_blur(img);
    for (std::size_t y = 0; y < 4; ++y)
        for (std::size_t x = 0; x < 6; ++x)
            for (std::size_t c = 0; c < 3; ++c) {
                double sum = 0;
                int n = 0;
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int xx = int(x) + dx, yy = int(y) + dy;
                        if (xx < 0 || yy < 0 || xx >= 6 || yy >= 4)
                            continue;
                        sum += img.at(xx, yy, c);
                        ++n;
                    }
                CHECK(out.at(x, y, c) == doctest::Approx(sum / n).epsilon(1e-12));
            }
}
