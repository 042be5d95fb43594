#pragma once

#include <melita/core/types.hpp>

#include <array>

namespace melita::domains {

/// Rec. 601 luma: 0.299 R + 0.587 G + 0.114 B.
std::vector<double> luminance(const Image& img);

/// Per-pixel edge flags over the luminance channel. A pixel is an edge when
/// its normalised Sobel gradient magnitude exceeds `threshold`; the kernels are
/// divided by 4 so a unit step yields magnitude 1. Border pixels are never edges.
std::vector<bool> edge_map(const Image& img, double threshold = 0.25);

/// Fraction of interior pixels that are edges. Requires at least 3x3 pixels.
double edge_complexity(const Image& img, double threshold = 0.25);

/// Hasler-Suesstrunk colourfulness on 0..255 channels with population moments:
///   C = sqrt(var_rg + var_yb) + 0.3 sqrt(mean_rg^2 + mean_yb^2)
/// where rg = R - G and yb = (R + G)/2 - B.
double colourfulness(const Image& img);

/// Four-way quantisation: x < a -> 0, x < b -> 1, x < c -> 2, else 3.
int bin4(double x, const std::array<double, 3>& thresholds);

/// 3x3 mean filter; border pixels average their in-bounds neighbours.
Image box_blur(const Image& img);

} // namespace melita::domains
