#ifndef MCKAY_NUMTHEORY_HPP
#define MCKAY_NUMTHEORY_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

// Small exact number-theory helpers shared by all modules. Everything here
// operates on word-sized integers; the scales in this project are tiny.

namespace mckay::nt {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t modpow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    unsigned __int128 acc = 1, b = base % mod;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

// Distinct prime divisors, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// base^exp, throwing once the value would exceed `cap`.
inline std::uint64_t ipow_checked(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t acc = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && acc > cap / base)
            throw std::overflow_error("ipow_checked: bound exceeded");
        acc *= base;
        if (acc > cap) throw std::overflow_error("ipow_checked: bound exceeded");
    }
    return acc;
}

inline std::int64_t ipow(std::int64_t base, std::uint64_t exp) {
    return static_cast<std::int64_t>(
        ipow_checked(static_cast<std::uint64_t>(base), exp, std::uint64_t(1) << 62));
}

// gcd(z, p^e - 1) without materializing p^e; gcd(z, 0) = z, so e = 0 gives z.
inline std::int64_t gcd_pow_minus_one(std::int64_t p, std::uint64_t e, std::int64_t z) {
    if (z <= 1) return z;
    auto zz = static_cast<std::uint64_t>(z);
    std::uint64_t t = (modpow(static_cast<std::uint64_t>(p), e, zz) + zz - 1) % zz;
    return static_cast<std::int64_t>(std::gcd(zz, t));
}

// Decompose q as p^f with p prime, f >= 1.
inline std::optional<std::pair<std::int64_t, int>> as_prime_power(std::int64_t q) {
    if (q < 2) return std::nullopt;
    for (std::int64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            int f = 0;
            std::int64_t m = q;
            while (m % d == 0) { m /= d; ++f; }
            if (m != 1) return std::nullopt;
            return std::make_pair(d, f);
        }
    }
    return std::make_pair(q, 1); // q itself prime
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > (__int128(1) << 62) || r < -(__int128(1) << 62))
        throw std::overflow_error("checked_mul: bound exceeded");
    return static_cast<std::int64_t>(r);
}

} // namespace mckay::nt

#endif
