#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace qineq {

/// Reproducible uniform stream. Substreams are keyed by (master seed, ids...)
/// through std::seed_seq, so replicate r of a study draws the same numbers
/// whatever order or thread it runs on. Not shareable between threads.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) { reseed({seed}); }

    /// Independent stream for (master, ids...).
    static RandomStream substream(std::uint64_t master, std::initializer_list<std::uint64_t> ids) {
        std::vector<std::uint64_t> key{master};
        key.insert(key.end(), ids.begin(), ids.end());
        return RandomStream(key);
    }

    /// Uniform double in the open interval (0,1) with 53 random bits.
    double uniform() {
        const std::uint64_t bits = engine_() >> 11;
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    std::uint64_t next_u64() { return engine_(); }

private:
    explicit RandomStream(const std::vector<std::uint64_t>& key) { reseed(key); }

    void reseed(const std::vector<std::uint64_t>& key) {
        std::vector<std::uint32_t> words;
        words.reserve(2 * key.size());
        for (auto k : key) {
            words.push_back(static_cast<std::uint32_t>(k));
            words.push_back(static_cast<std::uint32_t>(k >> 32));
        }
        std::seed_seq seq(words.begin(), words.end());
        engine_.seed(seq);
    }

    std::mt19937_64 engine_;
};

}  // namespace qineq
