#include "korder/order.hpp"

#include <cmath>
#include <string>

#include "korder/error.hpp"

namespace korder {

Order::Order(double alpha)
    : alpha_(alpha), beta_(2.0 - 2.0 * alpha), gamma_(2.0 * alpha - 1.0), c_(alpha - 0.5) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha >= 1.0) {
        throw DomainError("order alpha must lie in [0, 1), got " + std::to_string(alpha));
    }
}

}  // namespace korder
