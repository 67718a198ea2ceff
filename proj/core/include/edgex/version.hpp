#ifndef EDGEX_VERSION_HPP
#define EDGEX_VERSION_HPP

namespace edgex {

inline constexpr const char* kVersion = "0.1.0";

// Generator recorded in provenance headers. Outputs are reproducible
// byte-for-byte for a fixed (seed, params, n, version) tuple.
inline constexpr const char* kRngName = "mt19937_64";

}  // namespace edgex

#endif
