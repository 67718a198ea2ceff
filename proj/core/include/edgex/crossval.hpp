#ifndef EDGEX_CROSSVAL_HPP
#define EDGEX_CROSSVAL_HPP

#include <cstdint>
#include <vector>

#include "edgex/likelihood.hpp"
#include "edgex/network.hpp"

namespace edgex {

struct CrossValResult {
    double mean_relative_error;
    double sd_relative_error;  // sample sd across iterations
    std::vector<double> relative_errors;
};

// Data-splitting check of the new-vertex prediction. Each iteration draws
// a uniform subsample of `sample_size` interactions without replacement,
// fits the model on the subsample, evaluates the predicted probability
// that the next interaction contains an unseen vertex, and compares it to
// the empirical fraction of held-out interactions containing a vertex
// absent from the subsample. Relative error is (predicted - empirical) /
// empirical. Requires sample_size < number of interactions. A fit failure
// is rethrown with the iteration index attached.
CrossValResult cross_validate_prediction(const std::vector<std::vector<RawId>>& interactions, bool directed,
                                         std::uint64_t sample_size, std::uint32_t iterations,
                                         std::uint64_t seed,
                                         const RegimeRequest& regime = RegimeRequest::infinite());

}  // namespace edgex

#endif
