#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ramify {

// Dense univariate polynomial over a commutative coefficient ring R.
// Coefficients ascending by exponent, trailing zeros trimmed, so equal
// polynomials have equal representations. R must provide .is_zero(),
// ring operators and the free functions zero_like / mul_small.
template <class R>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(R v) {
        std::vector<R> c;
        if (!v.is_zero()) c.push_back(std::move(v));
        return UniPoly(std::move(c));
    }

    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<R>& coeffs() const noexcept { return c_; }

    [[nodiscard]] const R& coeff_ref(std::size_t k) const {
        if (k >= c_.size()) throw std::out_of_range("coefficient index past degree");
        return c_[k];
    }

    [[nodiscard]] R coeff_or(std::size_t k, const R& zero) const {
        return k < c_.size() ? c_[k] : zero;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        const UniPoly& lo = a.c_.size() <= b.c_.size() ? a : b;
        const UniPoly& hi = a.c_.size() <= b.c_.size() ? b : a;
        std::vector<R> out = hi.c_;
        for (std::size_t i = 0; i < lo.c_.size(); ++i) out[i] = out[i] + lo.c_[i];
        return UniPoly(std::move(out));
    }

    friend UniPoly operator-(const UniPoly& a) {
        std::vector<R> out = a.c_;
        for (auto& x : out) x = -x;
        return UniPoly(std::move(out));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<R> out(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        return UniPoly(std::move(out));
    }

    friend UniPoly operator*(const R& s, const UniPoly& a) {
        std::vector<R> out = a.c_;
        for (auto& x : out) x = s * x;
        return UniPoly(std::move(out));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Formal derivative; in characteristic p the usual power rule applies,
    // so for example d/dt t^p = 0.
    [[nodiscard]] UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<R> out;
        out.reserve(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(mul_small(c_[k], k));
        return UniPoly(std::move(out));
    }

    [[nodiscard]] R eval(const R& x) const {
        if (c_.empty()) return zero_like(x);
        R acc = c_.back();
        for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    // f(t + s) by Horner in the shifted variable.
    [[nodiscard]] UniPoly shift(const R& s) const {
        if (c_.empty()) return UniPoly();
        UniPoly lin(std::vector<R>{s, one_like_of(s)});
        UniPoly acc = UniPoly::constant(c_.back());
        for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * lin + UniPoly::constant(c_[k]);
        return acc;
    }

private:
    static R one_like_of(const R& s) { return one_like(s); }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<R> c_;
};

template <class R>
UniPoly<R> zero_like(const UniPoly<R>&) {
    return UniPoly<R>();
}

} // namespace ramify
