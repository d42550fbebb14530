#ifndef ROUTELAB_RANDOM_HPP
#define ROUTELAB_RANDOM_HPP

#include <cstdint>
#include <random>

#include "routelab/weight.hpp"

namespace routelab {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Per-instance seed so results do not depend on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, std::uint64_t salt = 0) {
    return splitmix64(splitmix64(master ^ splitmix64(salt)) + index);
}

// mt19937_64 with distribution code kept in-house so sequences are the same
// across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1)); }

    // k / den with k uniform in [lo * den, hi * den].
    Weight rational(std::int64_t lo, std::int64_t hi, std::int64_t den) {
        Weight w(mpz_class(static_cast<long>(uniform_int(lo * den, hi * den))), mpz_class(static_cast<long>(den)));
        w.canonicalize();
        return w;
    }

    template <class It>
    void shuffle(It first, It last) {
        for (auto n = last - first; n > 1; --n) {
            auto j = static_cast<decltype(n)>(index(static_cast<std::size_t>(n)));
            std::iter_swap(first + (n - 1), first + j);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace routelab

#endif  // ROUTELAB_RANDOM_HPP
