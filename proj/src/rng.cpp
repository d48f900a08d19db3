#include "mlrsa/rng.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mlrsa {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    // Decorrelate (seed, stream) pairs through splitmix64 before seeding the
    // Mersenne engine; adjacent seeds/streams then share no state structure.
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ull * (stream + 1));
    std::array<std::uint32_t, 16> words{};
    for (int i = 0; i < 8; ++i) {
        const std::uint64_t z = splitmix64(s);
        words[2 * i] = static_cast<std::uint32_t>(z);
        words[2 * i + 1] = static_cast<std::uint32_t>(z >> 32);
    }
    std::seed_seq seq(words.begin(), words.end());
    eng_.seed(seq);
}

double Rng::uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform(); }

double Rng::exponential(double rate) {
    if (rate <= 0) throw std::invalid_argument("Rng::exponential: rate must be > 0");
    return -std::log1p(-uniform()) / rate;
}

std::uint64_t Rng::uniform_int(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::uniform_int: n must be >= 1");
    // Accept values in [m, 2^64); that range has size divisible by n.
    std::uint64_t m = (std::numeric_limits<std::uint64_t>::max() % n) + 1;
    if (m == n) m = 0;
    std::uint64_t v = eng_();
    while (v < m) v = eng_();
    return v % n;
}

}  // namespace mlrsa
