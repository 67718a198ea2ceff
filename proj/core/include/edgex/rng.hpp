#ifndef EDGEX_RNG_HPP
#define EDGEX_RNG_HPP

#include <cstdint>
#include <random>

namespace edgex {

// Seedable generator wrapper. std::mt19937_64 is fully specified by the
// standard, so the raw 64-bit stream is identical across platforms. All
// variate transforms below are hand-rolled (uniform_real_distribution and
// friends are implementation-defined, which would break the byte-for-byte
// reproducibility contract).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform on [0, 1), 53 bits
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // uniform on (0, 1)
    double uniform_pos();

    // uniform integer on [0, n)
    std::uint64_t uniform_below(std::uint64_t n);

    double normal();                       // standard normal (Box-Muller)
    double gamma(double shape);            // unit scale (Marsaglia-Tsang)
    double beta(double a, double b);

private:
    std::mt19937_64 engine_;
};

// Derives the seed of the i-th replicate stream from a master seed
// (golden-ratio increment followed by the splitmix64 finalizer). Replicate
// streams are what the parallel drivers hand out, one per task index.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

}  // namespace edgex

#endif
