#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace melita {

/// Every stochastic operation in the library draws from this engine, passed explicitly.
using Rng = std::mt19937_64;

/// Per-axis bin indices of a cell.
using Coords = std::vector<std::size_t>;

/// Raised when a caller breaks a documented precondition (bad coordinates,
/// malformed payloads, unordered thresholds, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Selection was requested from an archive holding no elites.
class NoElites : public std::runtime_error {
public:
    NoElites() : std::runtime_error("archive holds no elites") {}
};

inline void require(bool condition, const char* what)
{
    if (!condition)
        throw ContractViolation(what);
}

struct RealVector {
    std::vector<double> values;
    bool operator==(const RealVector&) const = default;
};

/// Row-major RGB image, channels in [0,1].
struct Image {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> rgb; // size 3 * width * height

    Image() = default;
    Image(std::size_t w, std::size_t h, double fill = 0.0) : width(w), height(h), rgb(3 * w * h, fill) {}

    double& at(std::size_t x, std::size_t y, std::size_t c) { return rgb[3 * (y * width + x) + c]; }
    double at(std::size_t x, std::size_t y, std::size_t c) const { return rgb[3 * (y * width + x) + c]; }
    std::size_t pixel_count() const { return width * height; }

    bool operator==(const Image&) const = default;
};

struct TokenText {
    std::vector<int> tokens;
    bool operator==(const TokenText&) const = default;
};

using Payload = std::variant<RealVector, Image, TokenText>;

/// One single-modality piece of a multimodal solution.
struct Artefact {
    std::size_t modality = 0;
    Payload payload;

    bool operator==(const Artefact&) const = default;
};

/// A complete multimodal individual with its cached fitness and cell.
struct Solution {
    std::vector<Artefact> artefacts; // artefacts[i].modality == i
    double fitness = 0.0;
    Coords coords;

    bool operator==(const Solution&) const = default;
};

struct Elite {
    Solution solution;
    std::uint64_t birth_step = 0;

    bool operator==(const Elite&) const = default;
};

} // namespace melita
