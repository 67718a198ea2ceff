#include "edgex/crossval.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "edgex/analytics.hpp"
#include "edgex/rng.hpp"

namespace edgex {

CrossValResult cross_validate_prediction(const std::vector<std::vector<RawId>>& interactions, bool directed,
                                         std::uint64_t sample_size, std::uint32_t iterations,
                                         std::uint64_t seed, const RegimeRequest& regime) {
    const std::uint64_t n = interactions.size();
    if (sample_size < 2 || sample_size >= n)
        throw std::invalid_argument("sample size must be in [2, #interactions); the held-out set may not be empty");
    if (iterations < 1) throw std::invalid_argument("need at least one iteration");

    CrossValResult result;
    result.relative_errors.reserve(iterations);

    std::vector<std::uint64_t> index(n);
    for (std::uint64_t i = 0; i < n; ++i) index[i] = i;

    for (std::uint32_t iter = 0; iter < iterations; ++iter) {
        Rng rng(split_seed(seed, iter));
        // partial Fisher-Yates: the first sample_size entries become the sample
        for (std::uint64_t i = 0; i < sample_size; ++i) {
            const std::uint64_t j = i + rng.uniform_below(n - i);
            std::swap(index[i], index[j]);
        }

        std::vector<std::vector<RawId>> sample;
        sample.reserve(sample_size);
        std::unordered_set<RawId> seen;
        for (std::uint64_t i = 0; i < sample_size; ++i) {
            const auto& edge = interactions[index[i]];
            sample.push_back(edge);
            seen.insert(edge.begin(), edge.end());
        }

        double predicted;
        try {
            const EdgeLabeledNetwork net = canonicalize(sample, directed);
            const MleFit fit = fit_mle(net, regime);
            predicted = predict_new_vertex_probability(stats(net), fit.chosen.params());
        } catch (const std::exception& e) {
            throw std::runtime_error("cross-validation iteration " + std::to_string(iter) +
                                     " failed: " + e.what());
        }

        std::uint64_t with_new = 0;
        for (std::uint64_t i = sample_size; i < n; ++i) {
            for (RawId v : interactions[index[i]]) {
                if (seen.count(v) == 0) {
                    ++with_new;
                    break;
                }
            }
        }
        const double empirical = static_cast<double>(with_new) / static_cast<double>(n - sample_size);
        if (empirical == 0.0)
            throw std::runtime_error("cross-validation iteration " + std::to_string(iter) +
                                     ": no held-out interaction contains a new vertex");
        result.relative_errors.push_back((predicted - empirical) / empirical);
    }

    double mean = 0.0;
    for (double x : result.relative_errors) mean += x;
    mean /= static_cast<double>(result.relative_errors.size());
    double ss = 0.0;
    for (double x : result.relative_errors) ss += (x - mean) * (x - mean);
    result.mean_relative_error = mean;
    result.sd_relative_error =
        result.relative_errors.size() > 1
            ? std::sqrt(ss / static_cast<double>(result.relative_errors.size() - 1))
            : 0.0;
    return result;
}

}  // namespace edgex
