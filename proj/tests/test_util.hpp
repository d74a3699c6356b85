#ifndef PFCY_TEST_UTIL_HPP
#define PFCY_TEST_UTIL_HPP

#include <pfcy/rational.hpp>
#include <pfcy/series.hpp>

#include <cstdint>
#include <vector>

namespace pfcy::test {

// deterministic xorshift for property-style tests
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next()
    {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long small(long lo, long hi) { return lo + (long)(next() % (uint64_t)(hi - lo + 1)); }
};

inline Series random_series(Rng &rng, int order, long lo = -5, long hi = 5)
{
    Series s(order);
    for (int i = 0; i <= order; ++i)
        s.mut(i) = Rat(rng.small(lo, hi));
    return s;
}

inline Series from_longs(const std::vector<long> &v, int order)
{
    Series s(order);
    for (size_t i = 0; i < v.size() && (int)i <= order; ++i)
        s.mut((int)i) = Rat(v[i]);
    return s;
}

} // namespace pfcy::test

#endif
