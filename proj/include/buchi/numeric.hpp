#ifndef BUCHI_NUMERIC_HPP
#define BUCHI_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace buchi {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 64-bit modular arithmetic. p may be up to 2^63; products go through
// unsigned 128-bit intermediates.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t powmod(std::uint64_t base, const mpz_class& exp, std::uint64_t p);

// Inverse of a modulo p (p prime, a != 0 mod p).
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

mpz_class pow_mpz(const mpz_class& base, unsigned long exp);

// Exact integer r-th root: returns root if base is a perfect r-th power.
bool perfect_root(const mpz_class& base, unsigned long r, mpz_class& root);

// Deterministic splitmix64 stream; the one RNG used everywhere so that
// seeded runs are bit-reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0; rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

// Mix two seeds into one (for deriving per-call seeds).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    Rng r(a ^ (b * 0xff51afd7ed558ccdULL + 0x2545f4914f6cdd1dULL));
    return r.next();
}

} // namespace buchi

#endif
