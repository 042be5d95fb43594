#include <melita/domains/image_metrics.hpp>

#include <algorithm>
#include <cmath>

namespace melita::domains {

std::vector<double> luminance(const Image& img)
{
    require(img.rgb.size() == 3 * img.pixel_count(), "image buffer does not match its dimensions");
    std::vector<double> lum(img.pixel_count());
    for (std::size_t i = 0; i < lum.size(); ++i)
        lum[i] = 0.299 * img.rgb[3 * i] + 0.587 * img.rgb[3 * i + 1] + 0.114 * img.rgb[3 * i + 2];
    return lum;
}

std::vector<bool> edge_map(const Image& img, double threshold)
{
    require(img.width >= 3 && img.height >= 3, "edge detection needs at least 3x3 pixels");
    const auto lum = luminance(img);
    const std::size_t w = img.width;
    auto L = [&](std::size_t x, std::size_t y) { return lum[y * w + x]; };

    std::vector<bool> edges(img.pixel_count(), false);
    for (std::size_t y = 1; y + 1 < img.height; ++y) {
        for (std::size_t x = 1; x + 1 < w; ++x) {
            // Pairs are summed commutatively so mirrored images give bit-identical magnitudes.
            const double right = 2.0 * L(x + 1, y) + (L(x + 1, y - 1) + L(x + 1, y + 1));
            const double left = 2.0 * L(x - 1, y) + (L(x - 1, y - 1) + L(x - 1, y + 1));
            const double below = 2.0 * L(x, y + 1) + (L(x - 1, y + 1) + L(x + 1, y + 1));
            const double above = 2.0 * L(x, y - 1) + (L(x - 1, y - 1) + L(x + 1, y - 1));
            const double gx = (right - left) / 4.0;
            const double gy = (below - above) / 4.0;
            edges[y * w + x] = std::sqrt(gx * gx + gy * gy) > threshold;
        }
    }
    return edges;
}

double edge_complexity(const Image& img, double threshold)
{
    const auto edges = edge_map(img, threshold);
    std::size_t count = 0;
    for (bool e : edges)
        count += e ? 1 : 0;
    const double interior = static_cast<double>((img.width - 2) * (img.height - 2));
    return static_cast<double>(count) / interior;
}

double colourfulness(const Image& img)
{
    const std::size_t n = img.pixel_count();
    require(n >= 2 && img.rgb.size() == 3 * n, "colourfulness needs at least two pixels");

    double sum_rg = 0.0, sum_yb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = 255.0 * img.rgb[3 * i], g = 255.0 * img.rgb[3 * i + 1], b = 255.0 * img.rgb[3 * i + 2];
        sum_rg += r - g;
        sum_yb += 0.5 * (r + g) - b;
    }
    const double mean_rg = sum_rg / static_cast<double>(n);
    const double mean_yb = sum_yb / static_cast<double>(n);

    double var_rg = 0.0, var_yb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = 255.0 * img.rgb[3 * i], g = 255.0 * img.rgb[3 * i + 1], b = 255.0 * img.rgb[3 * i + 2];
        const double drg = (r - g) - mean_rg;
        const double dyb = (0.5 * (r + g) - b) - mean_yb;
        var_rg += drg * drg;
        var_yb += dyb * dyb;
    }
    var_rg /= static_cast<double>(n);
    var_yb /= static_cast<double>(n);

    return std::sqrt(var_rg + var_yb) + 0.3 * std::sqrt(mean_rg * mean_rg + mean_yb * mean_yb);
}

int bin4(double x, const std::array<double, 3>& t)
{
    require(t[0] < t[1] && t[1] < t[2], "bin4 thresholds must be strictly increasing");
    if (x < t[0])
        return 0;
    if (x < t[1])
        return 1;
    if (x < t[2])
        return 2;
    return 3;
}

Image box_blur(const Image& img)
{
    Image out(img.width, img.height);
    for (std::size_t y = 0; y < img.height; ++y) {
        for (std::size_t x = 0; x < img.width; ++x) {
            const std::size_t x0 = x == 0 ? 0 : x - 1, x1 = std::min(x + 1, img.width - 1);
            const std::size_t y0 = y == 0 ? 0 : y - 1, y1 = std::min(y + 1, img.height - 1);
            const double count = static_cast<double>((x1 - x0 + 1) * (y1 - y0 + 1));
            for (std::size_t c = 0; c < 3; ++c) {
                // Offsets from the centre keep flat regions exactly unchanged.
                const double centre = img.at(x, y, c);
                double offset = 0.0;
                for (std::size_t yy = y0; yy <= y1; ++yy)
                    for (std::size_t xx = x0; xx <= x1; ++xx)
                        offset += img.at(xx, yy, c) - centre;
                out.at(x, y, c) = std::clamp(centre + offset / count, 0.0, 1.0);
            }
        }
    }
    return out;
}

} // namespace melita::domains
