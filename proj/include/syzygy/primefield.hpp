#ifndef SYZYGY_PRIMEFIELD_HPP
#define SYZYGY_PRIMEFIELD_HPP

#include <cstdint>
#include <stdexcept>

namespace syzygy {

// Arithmetic in F_p for a word-sized prime p.  We require p < 2^31 so that
// products of reduced residues fit in uint64_t without overflow.
class PrimeField {
public:
    static constexpr std::uint64_t kDefaultPrime = 32003;

    explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
        if (p < 2 || p >= (std::uint64_t{1} << 31))
            throw std::invalid_argument("PrimeField: modulus out of range");
        if (!is_prime(p))
            throw std::invalid_argument("PrimeField: modulus is not prime");
    }

    std::uint64_t modulus() const { return p_; }

    std::uint64_t reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r);
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        a %= p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p_ - 2);
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

// Deterministic 64-bit stream (splitmix64).  Same seed, same stream, on every
// platform; used for all "generic coefficient" draws.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform field element.  Modulo bias is < 2^-33 for p < 2^31; irrelevant
    // for genericity sampling.
    std::uint64_t field_element(const PrimeField& F) { return next() % F.modulus(); }

    std::uint64_t nonzero_field_element(const PrimeField& F) {
        std::uint64_t v;
        do { v = field_element(F); } while (v == 0);
        return v;
    }

private:
    std::uint64_t state_;
};

// Primes used for cross-prime table agreement checks (all > 10000).
inline const std::uint64_t kCrosscheckPrimes[] = {32003, 46349, 65027, 93911, 104729};

} // namespace syzygy

#endif
