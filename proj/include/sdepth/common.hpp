#ifndef SDEPTH_COMMON_HPP
#define SDEPTH_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#define SDEPTH_VERSION "0.1.0"

namespace sdepth {

// Thrown when a configured search or table cap is exceeded. The CLI maps
// this to its own exit code so scripted sweeps can distinguish "too big"
// from "wrong".
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Global knobs for the exponential-size computations. Defaults are desk
// scale; the CLI exposes --max-states for the partition search budget.
struct Limits {
    int max_order_generators = 20;       // subset-DP state space is 2^m
    int max_betti_generators = 12;       // lcm scan is 2^m multidegrees
    std::uint64_t max_partition_nodes = 50'000'000;
};

} // namespace sdepth

#endif
