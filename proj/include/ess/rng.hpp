#ifndef ESS_RNG_HPP
#define ESS_RNG_HPP

#include <cstdint>

namespace ess {

/// Fixed linear congruential generator so that seeded test data is
/// bit-reproducible everywhere:
///   state' = state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
/// draw(lo, hi) advances once and returns lo + (state' >> 33) % (hi - lo + 1).
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    long draw(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>((next() >> 33) % span);
    }

private:
    std::uint64_t state_;
};

} // namespace ess

#endif
