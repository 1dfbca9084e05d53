#ifndef DISTILLED_RANDOM_HPP
#define DISTILLED_RANDOM_HPP

#include <concepts>
#include <cstdint>
#include <random>
#include <vector>

namespace distilled {

using Rng = std::mt19937_64;

/// Independent stream identifiers mixed into per-trial seeds.
enum class StreamTag : std::uint64_t {
    signal = 0x5157,
    distilled = 0xd157,
    nonadaptive = 0x0a0a,
    pilot = 0x9110,
    lemma = 0x1e44,
};

/// splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for (master, trial, stream). Each argument passes through the
/// splitmix64 finalizer before being folded in, so nearby trial indices give
/// unrelated streams and the result does not depend on scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial, StreamTag tag) noexcept;

/// Anything that yields one standard-Gaussian deviate per call.
template <typename N>
concept NoiseSource = requires(N& n) {
    { n() } -> std::convertible_to<double>;
};

class GaussianNoise {
public:
    explicit GaussianNoise(std::uint64_t seed) : rng_(seed) {}
    double operator()() { return dist_(rng_); }

private:
    Rng rng_;
    std::normal_distribution<double> dist_{0.0, 1.0};
};

/// Noiseless stream (w == 0), for degenerate checks.
struct ZeroNoise {
    double operator()() const noexcept { return 0.0; }
};

/// Replays a fixed sequence; throws once exhausted.
class ReplayNoise {
public:
    explicit ReplayNoise(std::vector<double> values) : values_(std::move(values)) {}
    double operator()();
    std::size_t consumed() const noexcept { return next_; }

private:
    std::vector<double> values_;
    std::size_t next_ = 0;
};

/// Wraps another source and records every draw.
template <NoiseSource N>
class RecordingNoise {
public:
    explicit RecordingNoise(N inner) : inner_(std::move(inner)) {}
    double operator()()
    {
        const double w = inner_();
        draws_.push_back(w);
        return w;
    }
    const std::vector<double>& draws() const noexcept { return draws_; }

private:
    N inner_;
    std::vector<double> draws_;
};

} // namespace distilled

#endif // DISTILLED_RANDOM_HPP
