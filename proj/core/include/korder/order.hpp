#pragma once

#include <complex>

namespace korder {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// The order alpha in [0, 1) of the class K(alpha), with the three derived
/// parameters used throughout:
///   beta  = 2 - 2 alpha   (exponent of k_alpha' = (1 - z)^-beta)
///   gamma = 2 alpha - 1   (exponent in the closed form of k_alpha)
///   c     = alpha - 1/2   (half of gamma)
class Order {
public:
    /// Throws DomainError unless 0 <= alpha < 1.
    explicit Order(double alpha);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double gamma() const noexcept { return gamma_; }
    double c() const noexcept { return c_; }

    bool is_half() const noexcept { return alpha_ == 0.5; }

    friend bool operator==(const Order&, const Order&) = default;

private:
    double alpha_;
    double beta_;
    double gamma_;
    double c_;
};

}  // namespace korder
