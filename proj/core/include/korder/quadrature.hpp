#pragma once

#include <array>

namespace korder {

inline constexpr int kGaussNodes = 64;

struct GaussLegendreRule {
    std::array<double, kGaussNodes> nodes;    // on [-1, 1], ascending
    std::array<double, kGaussNodes> weights;
};

/// 64-point Gauss-Legendre rule, computed once by Newton iteration on P_64.
const GaussLegendreRule& gauss_legendre_64();

}  // namespace korder
