#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ramify {

// Odd primes below 2^31 so that products of canonical representatives fit
// in unsigned 64-bit arithmetic without intermediate reduction.
class Prime {
public:
    explicit Prime(std::uint32_t p);

    [[nodiscard]] std::uint32_t value() const noexcept { return p_; }

    static bool is_prime(std::uint32_t n) noexcept;

    friend bool operator==(const Prime& a, const Prime& b) noexcept { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) noexcept { return a.p_ != b.p_; }

private:
    std::uint32_t p_;
};

// Default prime set for randomized trials. All three are prime, odd and
// below 2^31; the last is the largest such prime minus a small gap.
inline constexpr std::uint32_t kDefaultPrimes[3] = {32003u, 1000003u, 2147483629u};

// Element of F_p in canonical representative form, value in [0, p).
// Carries its modulus; mixing moduli is a structural error, not UB.
struct Fp {
    std::uint32_t v = 0;
    std::uint32_t p = 0;

    Fp() = default;
    Fp(std::uint64_t value, const Prime& prime) : v(static_cast<std::uint32_t>(value % prime.value())), p(prime.value()) {}

    // Trusts v < p; internal fast path for arithmetic that already reduced.
    static Fp raw(std::uint32_t v, std::uint32_t p) noexcept {
        Fp r;
        r.v = v;
        r.p = p;
        return r;
    }

    [[nodiscard]] bool is_zero() const noexcept { return v == 0; }

    friend bool operator==(const Fp& a, const Fp& b) noexcept { return a.v == b.v && a.p == b.p; }
    friend bool operator!=(const Fp& a, const Fp& b) noexcept { return !(a == b); }
};

namespace detail {
[[noreturn]] inline void throw_prime_mismatch() {
    throw std::invalid_argument("field elements belong to different prime fields");
}
inline void check_same(const Fp& a, const Fp& b) {
    if (a.p != b.p) throw_prime_mismatch();
}
} // namespace detail

inline Fp operator+(const Fp& a, const Fp& b) {
    detail::check_same(a, b);
    std::uint32_t s = a.v + b.v; // p < 2^31 so no overflow
    if (s >= a.p) s -= a.p;
    return Fp::raw(s, a.p);
}

inline Fp operator-(const Fp& a, const Fp& b) {
    detail::check_same(a, b);
    std::uint32_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
    return Fp::raw(s, a.p);
}

inline Fp operator-(const Fp& a) {
    return Fp::raw(a.v == 0 ? 0 : a.p - a.v, a.p);
}

inline Fp operator*(const Fp& a, const Fp& b) {
    detail::check_same(a, b);
    std::uint64_t w = static_cast<std::uint64_t>(a.v) * b.v;
    return Fp::raw(static_cast<std::uint32_t>(w % a.p), a.p);
}

inline Fp& operator+=(Fp& a, const Fp& b) { a = a + b; return a; }
inline Fp& operator-=(Fp& a, const Fp& b) { a = a - b; return a; }
inline Fp& operator*=(Fp& a, const Fp& b) { a = a * b; return a; }

// Inverse by extended Euclid. Zero has no inverse.
Fp inv(const Fp& a);
inline Fp operator/(const Fp& a, const Fp& b) { return a * inv(b); }

Fp pow(Fp base, std::uint64_t e);

// Square root by Tonelli-Shanks (shortcut exponent for p = 3 mod 4);
// nullopt for non-residues. sqrt of 0 is 0.
std::optional<Fp> sqrt_fp(const Fp& a);

inline Fp zero_like(const Fp& a) { return Fp::raw(0, a.p); }
inline Fp one_like(const Fp& a) { return Fp::raw(a.p > 1 ? 1u : 0u, a.p); }

// n reduced into the field; convenience for small literal scalars.
inline Fp fp_of(std::int64_t n, const Prime& prime) {
    std::int64_t m = n % static_cast<std::int64_t>(prime.value());
    if (m < 0) m += prime.value();
    return Fp::raw(static_cast<std::uint32_t>(m), prime.value());
}

inline Fp mul_small(const Fp& a, std::uint64_t n) {
    std::uint64_t w = (n % a.p) * a.v;
    return Fp::raw(static_cast<std::uint32_t>(w % a.p), a.p);
}

// Embed a field scalar into the ring a model element belongs to. Each
// coefficient ring provides an overload; generic chart evaluation uses it
// to lift fixed F_p data (basis changes, targets) into the working ring.
inline Fp lift_like(const Fp& model, const Fp& c) {
    detail::check_same(model, c);
    return c;
}

std::string to_string(const Fp& a);

} // namespace ramify
