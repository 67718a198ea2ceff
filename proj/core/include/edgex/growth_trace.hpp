#ifndef EDGEX_GROWTH_TRACE_HPP
#define EDGEX_GROWTH_TRACE_HPP

#include <cstdint>
#include <vector>

namespace edgex {

// (n, v, e, m) checkpoints along one growing trajectory, simulated or
// observed. Checkpoints are geometric (n = ceil(1.5^i), deduplicated, plus
// the final step) so that a million-edge run stays a few dozen rows.
struct GrowthPoint {
    std::uint64_t step;  // edges so far (= e)
    std::uint64_t v;
    std::uint64_t e;
    std::uint64_t m;
};

struct GrowthTrace {
    std::vector<GrowthPoint> points;

    bool empty() const { return points.empty(); }
    const GrowthPoint& back() const { return points.back(); }
};

// The checkpoint schedule for trajectories of length n.
std::vector<std::uint64_t> growth_checkpoints(std::uint64_t n);

}  // namespace edgex

#endif
