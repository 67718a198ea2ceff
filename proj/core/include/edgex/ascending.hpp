#ifndef EDGEX_ASCENDING_HPP
#define EDGEX_ASCENDING_HPP

#include <cstdint>

namespace edgex {

// log-magnitude plus sign, for products that may be negative or zero
struct SignedLog {
    double log_abs;  // -inf when the value is exactly 0
    int sign;        // -1, 0, +1

    double value() const;
};

// x^{j} rising: x (x+1) ... (x+j-1), as a SignedLog. The empty product
// (j = 0) is 1. For x > 0 this is a log-gamma difference; otherwise the
// factors are accumulated one by one with sign tracking.
SignedLog log_ascending_factorial(double x, std::uint64_t j);

}  // namespace edgex

#endif
