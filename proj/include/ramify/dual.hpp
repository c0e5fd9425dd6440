#pragma once

#include "ramify/fp.hpp"

namespace ramify {

// F_p[eps]/(eps^2). Multiplying through one of these propagates exactly the
// first-order term, which is how directional derivatives of the ramification
// coefficients are taken without symbolic differentiation.
struct Dual {
    Fp a; // value part
    Fp b; // eps part

    [[nodiscard]] bool is_zero() const noexcept { return a.is_zero() && b.is_zero(); }

    friend bool operator==(const Dual& x, const Dual& y) noexcept { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Dual& x, const Dual& y) noexcept { return !(x == y); }
};

inline Dual dual_of(const Fp& value) { return Dual{.a = value, .b = zero_like(value)}; }
inline Dual dual_of(const Fp& value, const Fp& eps) { return Dual{.a = value, .b = eps}; }

inline Dual operator+(const Dual& x, const Dual& y) { return Dual{.a = x.a + y.a, .b = x.b + y.b}; }
inline Dual operator-(const Dual& x, const Dual& y) { return Dual{.a = x.a - y.a, .b = x.b - y.b}; }
inline Dual operator-(const Dual& x) { return Dual{.a = -x.a, .b = -x.b}; }

inline Dual operator*(const Dual& x, const Dual& y) {
    return Dual{.a = x.a * y.a, .b = x.a * y.b + x.b * y.a};
}

inline Dual zero_like(const Dual& x) { return Dual{.a = zero_like(x.a), .b = zero_like(x.a)}; }
inline Dual one_like(const Dual& x) { return Dual{.a = one_like(x.a), .b = zero_like(x.a)}; }
inline Dual mul_small(const Dual& x, std::uint64_t n) {
    return Dual{.a = mul_small(x.a, n), .b = mul_small(x.b, n)};
}

inline Dual lift_like(const Dual& model, const Fp& c) {
    detail::check_same(model.a, c);
    return dual_of(c);
}

} // namespace ramify
