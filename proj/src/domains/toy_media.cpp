#include <melita/domains/toy_media.hpp>
#include <melita/domains/image_metrics.hpp>

#include <algorithm>
#include <cmath>

namespace melita::domains {

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr CoherenceMatrix make_coherence_matrix()
{
    CoherenceMatrix m{};
    std::uint64_t state = coherence_matrix_seed;
    for (auto& row : m)
        for (auto& x : row)
            x = 2.0 * (static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53) - 1.0;
    return m;
}

constexpr CoherenceMatrix kCoherenceMatrix = make_coherence_matrix();

const Image& as_image(const Artefact& a)
{
    const auto* img = std::get_if<Image>(&a.payload);
    require(img != nullptr, "toy-media image artefact must carry an image");
    require(img->width * img->height >= 4 && img->rgb.size() == 3 * img->pixel_count(),
            "toy-media image has inconsistent dimensions");
    return *img;
}

const TokenText& as_text(const Artefact& a)
{
    const auto* text = std::get_if<TokenText>(&a.payload);
    require(text != nullptr, "toy-media text artefact must carry tokens");
    require(!text->tokens.empty(), "toy-media text must not be empty");
    return *text;
}

// Gray point plus a scaled chroma offset.
std::array<double, 3> saturate(std::array<double, 3> colour, double saturation)
{
    const double gray = (colour[0] + colour[1] + colour[2]) / 3.0;
    for (auto& c : colour)
        c = std::clamp(gray + saturation * (c - gray), 0.0, 1.0);
    return colour;
}

} // namespace

const CoherenceMatrix& coherence_matrix()
{
    return kCoherenceMatrix;
}

std::size_t toy_describe_image(const Image& img)
{
    return static_cast<std::size_t>(4 * bin4(edge_complexity(img), complexity_thresholds)
                                    + bin4(colourfulness(img), colourfulness_thresholds));
}

std::optional<std::size_t> toy_classify_text(const TokenText& text, const TopicModel& model)
{
    return model.classify(text.tokens);
}

std::array<double, image_statistic_count> image_statistics(const Image& img)
{
    const std::size_t w = img.width, h = img.height;
    const auto lum = luminance(img);
    const auto edges = edge_map(img);
    std::array<double, image_statistic_count> s{};

    std::array<double, 4> lum_sum{}, lum_n{}, edge_sum{}, edge_n{};
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            const std::size_t q = (y < h / 2 ? 0 : 2) + (x < w / 2 ? 0 : 1);
            lum_sum[q] += lum[y * w + x];
            lum_n[q] += 1.0;
            if (x > 0 && y > 0 && x + 1 < w && y + 1 < h) {
                edge_sum[q] += edges[y * w + x] ? 1.0 : 0.0;
                edge_n[q] += 1.0;
            }
        }
    }
    for (std::size_t q = 0; q < 4; ++q) {
        s[q] = lum_n[q] > 0 ? lum_sum[q] / lum_n[q] : 0.0;
        s[4 + q] = edge_n[q] > 0 ? edge_sum[q] / edge_n[q] : 0.0;
    }

    const double n = static_cast<double>(img.pixel_count());
    for (std::size_t c = 0; c < 3; ++c) {
        double sum = 0.0;
        for (std::size_t i = 0; i < img.pixel_count(); ++i)
            sum += img.rgb[3 * i + c];
        s[8 + c] = sum / n;
    }
    s[11] = std::min(colourfulness(img) / 300.0, 1.0);
    s[12] = edge_complexity(img);

    double mean = 0.0;
    for (double l : lum)
        mean += l;
    mean /= n;
    double var = 0.0;
    for (double l : lum)
        var += (l - mean) * (l - mean);
    s[13] = std::sqrt(var / n);

    double dx = 0.0, dy = 0.0;
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x + 1 < w; ++x)
            dx += std::abs(lum[y * w + x + 1] - lum[y * w + x]);
    for (std::size_t y = 0; y + 1 < h; ++y)
        for (std::size_t x = 0; x < w; ++x)
            dy += std::abs(lum[(y + 1) * w + x] - lum[y * w + x]);
    s[14] = dx / static_cast<double>(h * (w - 1));
    s[15] = dy / static_cast<double>((h - 1) * w);
    return s;
}

Coherence toy_cohere_detailed(const Image& img, const TokenText& text, const TopicModel& model)
{
    const auto e_img = image_statistics(img);
    const auto e_txt = model.posterior(text.tokens);
    const auto& m = coherence_matrix();

    double dot = 0.0, yy = 0.0, tt = 0.0;
    for (std::size_t i = 0; i < TopicModel::topic_count; ++i) {
        double y = 0.0;
        for (std::size_t j = 0; j < image_statistic_count; ++j)
            y += m[i][j] * e_img[j];
        dot += y * e_txt[i];
        yy += y * y;
        tt += e_txt[i] * e_txt[i];
    }
    if (yy == 0.0 || tt == 0.0)
        return {0.5, true};
    const double cosine = std::clamp(dot / std::sqrt(yy * tt), -1.0, 1.0);
    return {(1.0 + cosine) / 2.0, false};
}

double toy_cohere(const Image& img, const TokenText& text, const TopicModel& model)
{
    return toy_cohere_detailed(img, text, model).value;
}

TokenText generate_text(std::size_t topic, const TopicModel& model, Rng& rng)
{
    std::uniform_int_distribution<std::size_t> length(min_text_length, max_text_length);
    TokenText text;
    text.tokens.resize(length(rng));
    for (auto& t : text.tokens)
        t = model.sample_token(topic, rng);
    return text;
}

TokenText toy_vary_text(const TokenText& parent, const TopicModel& model, double full_rate, Rng& rng)
{
    std::bernoulli_distribution full(full_rate);
    if (full(rng)) {
        std::uniform_int_distribution<std::size_t> topic(0, TopicModel::topic_count - 1);
        return generate_text(topic(rng), model, rng);
    }

    const std::size_t length = parent.tokens.size();
    require(length >= min_text_length && length <= max_text_length, "parent text length out of bounds");
    std::uniform_int_distribution<std::size_t> split(length / 3, (2 * length) / 3);
    const std::size_t cut = split(rng);
    const std::size_t topic = model.top_topic(parent.tokens);

    TokenText child;
    child.tokens.assign(parent.tokens.begin(), parent.tokens.begin() + static_cast<std::ptrdiff_t>(cut));
    while (child.tokens.size() < length)
        child.tokens.push_back(model.sample_token(topic, rng));
    return child;
}

Image toy_vary_image(const Image& parent, double sigma, Rng& rng)
{
    require(sigma >= 0.0, "image noise sigma must be non-negative");
    Image noisy = parent;
    if (sigma > 0.0) {
        std::normal_distribution<double> noise(0.0, sigma);
        for (auto& c : noisy.rgb)
            c = std::clamp(c + noise(rng), 0.0, 1.0);
    }
    return box_blur(noisy);
}

ToyMediaDomain::ToyMediaDomain(ToyMediaParams params) : params_(params)
{
    require(params_.image_size >= 3, "toy-media images must be at least 3x3");
    require(params_.noise_sigma >= 0.0, "toy-media noise sigma must be non-negative");
    require(params_.full_mutation_rate >= 0.0 && params_.full_mutation_rate <= 1.0,
            "full mutation rate must lie in [0,1]");

    Rng theme_rng(params_.domain_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto& w : topic_weights_)
        w = std::exp(gauss(theme_rng));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (auto& c : palette_)
        c = unit(theme_rng);
}

Image ToyMediaDomain::generate_image(Rng& rng) const
{
    const std::size_t size = params_.image_size;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto random_colour = [&] {
        std::array<double, 3> c{};
        for (std::size_t i = 0; i < 3; ++i)
            c[i] = 0.5 * palette_[i] + 0.5 * unit(rng);
        const double saturation = 2.0 * unit(rng);
        return saturate(c, saturation);
    };

    Image img(size, size);
    const auto base = random_colour();
    for (std::size_t i = 0; i < img.pixel_count(); ++i)
        for (std::size_t c = 0; c < 3; ++c)
            img.rgb[3 * i + c] = base[c];

    std::uniform_int_distribution<int> rect_count(0, 6);
    std::uniform_int_distribution<std::size_t> pos(0, size - 1);
    std::uniform_int_distribution<std::size_t> extent(2, std::max<std::size_t>(2, size / 2));
    const int rects = rect_count(rng);
    for (int r = 0; r < rects; ++r) {
        const auto colour = random_colour();
        const std::size_t x0 = pos(rng), y0 = pos(rng);
        const std::size_t x1 = std::min(size, x0 + extent(rng)), y1 = std::min(size, y0 + extent(rng));
        for (std::size_t y = y0; y < y1; ++y)
            for (std::size_t x = x0; x < x1; ++x)
                for (std::size_t c = 0; c < 3; ++c)
                    img.at(x, y, c) = colour[c];
    }

    const double sigma = 0.3 * unit(rng);
    if (sigma > 0.0) {
        std::normal_distribution<double> noise(0.0, sigma);
        for (auto& c : img.rgb)
            c = std::clamp(c + noise(rng), 0.0, 1.0);
    }
    return img;
}

std::vector<Artefact> ToyMediaDomain::generate(Rng& rng) const
{
    std::discrete_distribution<std::size_t> topic(topic_weights_.begin(), topic_weights_.end());
    std::vector<Artefact> out;
    out.push_back({0, generate_text(topic(rng), model_, rng)});
    out.push_back({1, generate_image(rng)});
    return out;
}

std::optional<Artefact> ToyMediaDomain::vary(std::size_t modality, const Solution& parent, Rng& rng) const
{
    require(modality < 2, "toy-media has two modalities");
    if (modality == 0)
        return Artefact{0, toy_vary_text(as_text(parent.artefacts.at(0)), model_, params_.full_mutation_rate, rng)};
    return Artefact{1, toy_vary_image(as_image(parent.artefacts.at(1)), params_.noise_sigma, rng)};
}

std::optional<std::size_t> ToyMediaDomain::describe(std::size_t modality, const Artefact& artefact) const
{
    require(modality < 2 && artefact.modality == modality, "toy-media describe: modality mismatch");
    if (modality == 0)
        return toy_classify_text(as_text(artefact), model_);
    return toy_describe_image(as_image(artefact));
}

double ToyMediaDomain::cohere(std::span<const Artefact> artefacts) const
{
    require(artefacts.size() == 2, "toy-media cohere: need two artefacts");
    return toy_cohere(as_image(artefacts[1]), as_text(artefacts[0]), model_);
}

} // namespace melita::domains
