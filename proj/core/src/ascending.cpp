#include "edgex/ascending.hpp"

#include <cmath>
#include <limits>

namespace edgex {

double SignedLog::value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_abs);
}

SignedLog log_ascending_factorial(double x, std::uint64_t j) {
    if (j == 0) return {0.0, 1};
    if (x > 0.0) {
        return {std::lgamma(x + static_cast<double>(j)) - std::lgamma(x), 1};
    }
    double log_abs = 0.0;
    int sign = 1;
    for (std::uint64_t i = 0; i < j; ++i) {
        const double factor = x + static_cast<double>(i);
        if (factor == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
        if (factor < 0.0) sign = -sign;
        log_abs += std::log(std::fabs(factor));
    }
    return {log_abs, sign};
}

}  // namespace edgex
