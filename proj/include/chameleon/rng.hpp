#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace chm {

/// Deterministic RNG with named substreams. Built on std::mt19937_64 (whose
/// output sequence is pinned by the standard) with in-house uniform/normal
/// conversions, so identical seeds give bitwise-identical draws on any
/// platform. `split` derives an independent child stream from a tag; every
/// task, seed and pipeline stage gets its own stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double next_double();

    /// Uniform integer in [lo, hi] inclusive; rejection sampled (no modulo bias).
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    double uniform_real(double lo, double hi);

    /// Standard normal via polar Box-Muller (no cached spare, stream-stable).
    double normal(double mean = 0.0, double stddev = 1.0);

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// Sample k distinct elements of [0, n) in draw order.
    std::vector<int> sample_without_replacement(int n, int k);

    /// Child stream keyed by tag; children with distinct tags are independent.
    Rng split(const std::string& tag) const;
    Rng split(std::uint64_t stream_id) const;

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to derive child seeds.
std::uint64_t mix_u64(std::uint64_t x);

}  // namespace chm
