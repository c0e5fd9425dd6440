#include "ramify/fp.hpp"

namespace ramify {

namespace {

std::uint64_t pow_mod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = (__uint128_t)r * b % m;
        b = (__uint128_t)b * b % m;
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; bases {2,3,5,7} decide primality below
// 3,215,031,751 which covers the whole 32-bit input range we accept.
bool miller_rabin(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint32_t a : {2u, 3u, 5u, 7u}) {
        std::uint64_t x = pow_mod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = (__uint128_t)x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace

Prime::Prime(std::uint32_t p) : p_(p) {
    if (p < 3 || p >= 0x80000000u)
        throw std::invalid_argument("modulus must be an odd prime below 2^31, got " + std::to_string(p));
    if (!is_prime(p))
        throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
}

bool Prime::is_prime(std::uint32_t n) noexcept { return miller_rabin(n); }

Fp inv(const Fp& a) {
    if (a.v == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(a.p));
    // extended Euclid on (v, p); p prime so gcd is 1
    std::int64_t t = 0, nt = 1;
    std::int64_t r = a.p, nr = a.v;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += a.p;
    return Fp::raw(static_cast<std::uint32_t>(t), a.p);
}

Fp pow(Fp base, std::uint64_t e) {
    Fp r = one_like(base);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::optional<Fp> sqrt_fp(const Fp& a) {
    const std::uint32_t p = a.p;
    if (a.v == 0) return Fp::raw(0, p);
    if (pow_mod64(a.v, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) {
        auto r = static_cast<std::uint32_t>(pow_mod64(a.v, (p + 1) / 4, p));
        return Fp::raw(r, p);
    }
    // Tonelli-Shanks: p - 1 = q 2^s with q odd, z a fixed non-residue
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    std::uint32_t z = 2;
    while (pow_mod64(z, (p - 1) / 2, p) == 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = pow_mod64(z, q, p);
    std::uint64_t t = pow_mod64(a.v, q, p);
    std::uint64_t r = pow_mod64(a.v, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t t2 = t;
        std::uint64_t i = 0;
        while (t2 != 1) { t2 = t2 * t2 % p; ++i; }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return Fp::raw(static_cast<std::uint32_t>(r), p);
}

std::string to_string(const Fp& a) { return std::to_string(a.v); }

} // namespace ramify
