#include "distilled/random.hpp"

#include <stdexcept>

namespace distilled {

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial, StreamTag tag) noexcept
{
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ splitmix64(trial + 0x632be59bd9b4e019ULL));
    h = splitmix64(h ^ splitmix64(static_cast<std::uint64_t>(tag)));
    return h;
}

double ReplayNoise::operator()()
{
    if (next_ >= values_.size())
        throw std::out_of_range("ReplayNoise: sequence exhausted");
    return values_[next_++];
}

} // namespace distilled
