#pragma once

#include <cstdint>

namespace locc {

// Counter-based generator: the k-th draw of a stream depends only on
// (seed, stream, k), so partitioning work across threads cannot change
// the sequence.
class CounterRng {
public:
    CounterRng(uint64_t seed, uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    // k-th raw 64-bit value of this stream: three finalizer rounds with the
    // key material injected between rounds (sponge-style), so distinct
    // (seed, stream, index) triples decorrelate fully.
    uint64_t bits(uint64_t index) const {
        uint64_t x = mix(seed_ + 0x9e3779b97f4a7c15ull);
        x = mix(x ^ (stream_ + 0xbf58476d1ce4e5b9ull));
        x = mix(x ^ (index + 0x94d049bb133111ebull));
        return x;
    }

    // k-th uniform double in [0,1).
    double uniform(uint64_t index) const {
        return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
    }

private:
    static uint64_t mix(uint64_t x) {
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ull;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebull;
        x ^= x >> 31;
        return x;
    }

    uint64_t seed_;
    uint64_t stream_;
};

}  // namespace locc
