#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace twforge {

struct Rng {
    std::mt19937_64 engine;

    explicit Rng(uint64_t seed = 0) : engine(seed) {}

    int below(int n) { return n <= 1 ? 0 : int(engine() % uint64_t(n)); }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(engine) < p;
    }
    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (int i = int(xs.size()) - 1; i > 0; --i) std::swap(xs[i], xs[below(i + 1)]);
    }
    std::vector<int> sample(const std::vector<int>& pool, int k) {
        std::vector<int> xs = pool;
        shuffle(xs);
        if (int(xs.size()) > k) xs.resize(k);
        return xs;
    }
};

}  // namespace twforge
