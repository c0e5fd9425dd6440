#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>

namespace ramify {

inline constexpr int kMaxVars = 32;

enum class MonomialOrder : std::uint8_t {
    degrevlex, // graded, ties broken by smallest exponent in the last differing variable
    lex,
};

// Exponent vector with cached total degree. Fixed-width POD so comparisons
// and copies in the Buchberger inner loop stay allocation-free. Exponents
// are uint8; fiber ideals never get near 255 and overflow throws.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint16_t deg = 0;
    std::uint8_t n = 0; // number of ring variables

    static Monomial one(int nvars) {
        if (nvars < 1 || nvars > kMaxVars)
            throw std::invalid_argument("variable count out of range [1,32]");
        Monomial m;
        m.n = static_cast<std::uint8_t>(nvars);
        return m;
    }

    static Monomial var(int nvars, int i, int exp = 1) {
        Monomial m = one(nvars);
        if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
        if (exp < 0 || exp > 255) throw std::invalid_argument("exponent out of range");
        m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(exp);
        m.deg = static_cast<std::uint16_t>(exp);
        return m;
    }

    [[nodiscard]] bool is_one() const noexcept { return deg == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.deg == b.deg && a.n == b.n && std::memcmp(a.e.data(), b.e.data(), a.n) == 0;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) noexcept { return !(a == b); }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (int i = 0; i < a.n; ++i) {
        unsigned s = unsigned(a.e[i]) + b.e[i];
        if (s > 255) throw std::overflow_error("monomial exponent overflow");
        m.e[i] = static_cast<std::uint8_t>(s);
    }
    m.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    return m;
}

inline bool divides(const Monomial& a, const Monomial& b) noexcept {
    if (a.deg > b.deg) return false;
    for (int i = 0; i < a.n; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

// b / a, precondition: divides(a, b)
inline Monomial quotient(const Monomial& b, const Monomial& a) noexcept {
    Monomial m = b;
    for (int i = 0; i < b.n; ++i) m.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
    m.deg = static_cast<std::uint16_t>(b.deg - a.deg);
    return m;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial m = a;
    unsigned d = 0;
    for (int i = 0; i < a.n; ++i) {
        m.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        d += m.e[i];
    }
    m.deg = static_cast<std::uint16_t>(d);
    return m;
}

inline bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (int i = 0; i < a.n; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

// negative if a < b, 0 if equal, positive if a > b
inline int cmp(const Monomial& a, const Monomial& b, MonomialOrder ord) noexcept {
    if (ord == MonomialOrder::degrevlex) {
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        for (int i = a.n; i-- > 0;) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        return 0;
    }
    for (int i = 0; i < a.n; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
}

} // namespace ramify
