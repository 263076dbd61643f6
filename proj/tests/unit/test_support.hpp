#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "seqlab/sequence.hpp"

namespace seqlab::test {

inline std::string data(const std::string& name) { return std::string(SEQLAB_TEST_DATA) + "/" + name; }

// Deterministic prefix of uniform values in [lo, hi].
inline SequencePrefix random_prefix(std::uint32_t seed, Index n, double lo = -5.0, double hi = 5.0) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(gen);
    return SequencePrefix(std::move(v), "random:" + std::to_string(seed));
}

}  // namespace seqlab::test
