#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclift/errors.hpp"

namespace cyclift {

// Dense univariate polynomials over an arbitrary coefficient field E.
// E must provide value semantics, +, -, *, unary -, ==, is_zero(), inv(),
// and mul_int(k).  Coefficient c[i] multiplies T^i; the vector carries no
// trailing zeros, so the zero polynomial is the empty vector.
template <class E>
class Upoly {
public:
    Upoly() = default;
    explicit Upoly(std::vector<E> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Upoly constant(const E& e) {
        if (e.is_zero()) return Upoly();
        return Upoly(std::vector<E>{e});
    }

    // c * T^k
    static Upoly monomial(const E& c, std::size_t k) {
        if (c.is_zero()) return Upoly();
        std::vector<E> v(k + 1, c - c);
        v[k] = c;
        return Upoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<E>& coeffs() const { return c_; }
    const E& lead() const {
        require(!c_.empty(), errc::zero_polynomial, "leading coefficient of zero polynomial");
        return c_.back();
    }
    const E& operator[](std::size_t i) const { return c_[i]; }

    E coeff_or(std::size_t i, const E& zero) const { return i < c_.size() ? c_[i] : zero; }

    bool operator==(const Upoly& o) const { return c_ == o.c_; }
    bool operator!=(const Upoly& o) const { return !(*this == o); }

    Upoly operator-() const {
        std::vector<E> v;
        v.reserve(c_.size());
        for (const E& e : c_) v.push_back(-e);
        return Upoly(std::move(v));
    }

    Upoly operator+(const Upoly& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        std::vector<E> v;
        const std::size_t n = std::max(c_.size(), o.c_.size());
        v.reserve(n);
        const E zero = c_[0] - c_[0];
        for (std::size_t i = 0; i < n; ++i)
            v.push_back(coeff_or(i, zero) + o.coeff_or(i, zero));
        return Upoly(std::move(v));
    }

    Upoly operator-(const Upoly& o) const { return *this + (-o); }

    Upoly operator*(const Upoly& o) const {
        if (is_zero() || o.is_zero()) return Upoly();
        const E zero = c_[0] - c_[0];
        std::vector<E> v(c_.size() + o.c_.size() - 1, zero);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] = v[i + j] + c_[i] * o.c_[j];
        }
        return Upoly(std::move(v));
    }

    Upoly scaled(const E& s) const {
        std::vector<E> v;
        v.reserve(c_.size());
        for (const E& e : c_) v.push_back(e * s);
        return Upoly(std::move(v));
    }

    // T^k * f
    Upoly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<E> v(c_.size() + k, c_[0] - c_[0]);
        for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
        return Upoly(std::move(v));
    }

    Upoly monic() const {
        if (is_zero()) return *this;
        return scaled(lead().inv());
    }

    Upoly derivative() const {
        if (c_.size() <= 1) return Upoly();
        std::vector<E> v;
        v.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            v.push_back(c_[i].mul_int(static_cast<long long>(i)));
        return Upoly(std::move(v));
    }

    template <class E2, class Embed>
    E2 eval(const E2& x, Embed&& embed) const {
        E2 acc = x - x;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + embed(c_[i]);
        return acc;
    }

    E eval(const E& x) const {
        return eval<E>(x, [](const E& e) { return e; });
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<E> c_;
};

// Quotient and remainder; the divisor's leading coefficient must be a unit.
template <class E>
std::pair<Upoly<E>, Upoly<E>> divmod(const Upoly<E>& a, const Upoly<E>& b) {
    require(!b.is_zero(), errc::division_by_zero, "polynomial division by zero");
    if (a.deg() < b.deg()) return {Upoly<E>(), a};
    const E lb_inv = b.lead().inv();
    const E zero = b.lead() - b.lead();
    std::vector<E> rem(a.coeffs());
    std::vector<E> quo(static_cast<std::size_t>(a.deg() - b.deg()) + 1, zero);
    for (int i = a.deg(); i >= b.deg(); --i) {
        const std::size_t ui = static_cast<std::size_t>(i);
        if (rem[ui].is_zero()) continue;
        const E q = rem[ui] * lb_inv;
        quo[static_cast<std::size_t>(i - b.deg())] = q;
        for (int j = 0; j <= b.deg(); ++j)
            rem[static_cast<std::size_t>(i - b.deg() + j)] =
                rem[static_cast<std::size_t>(i - b.deg() + j)] - q * b[static_cast<std::size_t>(j)];
    }
    return {Upoly<E>(std::move(quo)), Upoly<E>(std::move(rem))};
}

template <class E>
Upoly<E> pmod(const Upoly<E>& a, const Upoly<E>& b) {
    return divmod(a, b).second;
}

template <class E>
Upoly<E> gcd_monic(Upoly<E> a, Upoly<E> b) {
    while (!b.is_zero()) {
        Upoly<E> r = pmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

// g = gcd(a, m) together with u such that u*a = g (mod m); used for inverses
// in extension fields.
template <class E>
std::pair<Upoly<E>, Upoly<E>> half_xgcd(Upoly<E> a, Upoly<E> m) {
    Upoly<E> u0 = Upoly<E>::constant(m.is_zero() ? a.lead().inv() * a.lead() : m.lead().inv() * m.lead());
    Upoly<E> u1; // 0
    while (!m.is_zero()) {
        auto [q, r] = divmod(a, m);
        Upoly<E> u2 = u0 - q * u1;
        a = std::move(m);
        m = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (a.is_zero()) return {a, u0};
    const E s = a.lead().inv();
    return {a.scaled(s), u0.scaled(s)};
}

template <class E>
Upoly<E> pow_mod(const Upoly<E>& base, std::uint64_t e, const Upoly<E>& mod) {
    Upoly<E> result = Upoly<E>::constant(mod.lead().inv() * mod.lead());
    Upoly<E> b = pmod(base, mod);
    while (e > 0) {
        if (e & 1) result = pmod(result * b, mod);
        b = pmod(b * b, mod);
        e >>= 1;
    }
    return result;
}

// Classical resultant over a field, by the Euclidean remainder sequence:
//   res(a, b) = (-1)^(da*db) * lc(b)^(da-dr) * res(b, a mod b).
template <class E>
E resultant(Upoly<E> a, Upoly<E> b, const E& one) {
    const E zero = one - one;
    if (a.is_zero() || b.is_zero()) return zero;
    E acc = one;
    bool negate = false;
    while (b.deg() > 0) {
        Upoly<E> r = pmod(a, b);
        if (r.is_zero()) return zero;
        E lb = b.lead();
        int k = a.deg() - r.deg();
        for (int i = 0; i < k; ++i) acc = acc * lb;
        if ((a.deg() & 1) && (b.deg() & 1)) negate = !negate;
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant
    E lb = b.lead();
    for (int i = 0; i < a.deg(); ++i) acc = acc * lb;
    return negate ? -acc : acc;
}

// Lagrange interpolation through (xs[i], ys[i]) with pairwise-distinct xs.
template <class E>
Upoly<E> interpolate(const std::vector<E>& xs, const std::vector<E>& ys, const E& one) {
    require(xs.size() == ys.size(), errc::degree_mismatch, "interpolation data mismatch");
    Upoly<E> acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Upoly<E> num = Upoly<E>::constant(one);
        E den = one;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            num = num * Upoly<E>(std::vector<E>{-xs[j], one});
            den = den * (xs[i] - xs[j]);
        }
        acc = acc + num.scaled(ys[i] * den.inv());
    }
    return acc;
}

} // namespace cyclift
