#pragma once

#include <cstdint>
#include <string>

#include "cyclift/fq.hpp"

namespace cyclift {

// Length-two Witt vectors over F_q, i.e. the Galois ring GR(p^2, n) in Witt
// coordinates (a0, a1).  The laws are
//   (a0,a1) + (b0,b1) = (a0+b0, a1+b1 - sum_{0<i<p} (C(p,i)/p) a0^i b0^(p-i))
//   (a0,a1) * (b0,b1) = (a0*b0, a0^p*b1 + b0^p*a1)
// with the carry coefficients C(p,i)/p = (-1)^(i-1)/i taken mod p.  The
// reduction (a0,a1) |-> a0 is a ring homomorphism with kernel p*W2 = {(0,a)}.
class WittElem {
public:
    WittElem() = default;
    WittElem(FqElem a0, FqElem a1) : a0_(std::move(a0)), a1_(std::move(a1)) {
        require(a0_.same_field(a1_), errc::field_mismatch, "Witt coordinates from different fields");
    }

    const FqElem& a0() const { return a0_; }
    const FqElem& a1() const { return a1_; }
    const Field& field() const { return a0_.field(); }

    bool is_zero() const { return a0_.is_zero() && a1_.is_zero(); }
    bool is_unit() const { return !a0_.is_zero(); }

    bool operator==(const WittElem& o) const { return a0_ == o.a0_ && a1_ == o.a1_; }
    bool operator!=(const WittElem& o) const { return !(*this == o); }

    WittElem operator+(const WittElem& o) const {
        return WittElem(a0_ + o.a0_, a1_ + o.a1_ + carry(a0_, o.a0_));
    }

    WittElem operator-() const {
        const std::uint32_t p = field()->p();
        if (p != 2) return WittElem(-a0_, -a1_);
        // char 2: -(a0,a1) = (a0, a1 + a0^2)
        return WittElem(a0_, a1_ + a0_ * a0_);
    }

    WittElem operator-(const WittElem& o) const { return *this + (-o); }

    WittElem operator*(const WittElem& o) const {
        const std::uint32_t p = field()->p();
        return WittElem(a0_ * o.a0_, a0_.pow(p) * o.a1_ + o.a0_.pow(p) * a1_);
    }

    // (a0,a1)^(-1) = (a0^(-1), -a1 * a0^(-2p)); defined for units only.
    WittElem inv() const {
        require(is_unit(), errc::non_unit, "Witt element with residue 0 has no inverse");
        const std::uint32_t p = field()->p();
        FqElem b0 = a0_.inv();
        FqElem b1 = -(a1_ * b0.pow(2 * static_cast<std::uint64_t>(p)));
        return WittElem(std::move(b0), std::move(b1));
    }

    WittElem pow(std::uint64_t e) const {
        WittElem r(a0_.field()->one(), a0_.field()->zero());
        WittElem b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    WittElem mul_int(long long k) const {
        const Field& f = field();
        const long long p2 = static_cast<long long>(f->p()) * f->p();
        long long m = k % p2;
        if (m < 0) m += p2;
        // double-and-add; m < p^2 <= 2^40
        WittElem acc(f->zero(), f->zero());
        WittElem b = *this;
        while (m > 0) {
            if (m & 1) acc = acc + b;
            b = b + b;
            m >>= 1;
        }
        return acc;
    }

    std::string to_string() const { return "(" + a0_.to_string() + "; " + a1_.to_string() + ")"; }

private:
    // (a^p + b^p - (a+b)^p)/p as an F_q value
    static FqElem carry(const FqElem& a, const FqElem& b) {
        const Field& f = a.field();
        const std::uint32_t p = f->p();
        if (a.is_zero() || b.is_zero()) return f->zero();
        const auto& cs = f->witt_carry_coeffs();
        FqElem acc = f->zero();
        FqElem apow = f->one();
        std::vector<FqElem> bpow(p, f->one());
        for (std::uint32_t i = 1; i < p; ++i) bpow[i] = bpow[i - 1] * b;
        for (std::uint32_t i = 1; i < p; ++i) {
            apow = apow * a;
            acc = acc + (apow * bpow[p - i]).mul_int(cs[i - 1]);
        }
        return -acc;
    }

    FqElem a0_, a1_;
};

// the reduction map r: W2(F_q) -> F_q
inline FqElem w_reduce(const WittElem& x) { return x.a0(); }

// multiplicative (Teichmueller) section of the reduction
inline WittElem teichmuller(const FqElem& a) { return WittElem(a, a.field()->zero()); }

// p * x for any lift x of a: equals (0, a^p), independent of the lift.  The
// Frobenius twist here is the semilinearity of the module isomorphism
// F_q -> p*W2(F_q) and is deliberately explicit.
inline WittElem times_p(const FqElem& a) {
    return WittElem(a.field()->zero(), a.frobenius());
}

inline WittElem w_zero(const Field& f) { return WittElem(f->zero(), f->zero()); }
inline WittElem w_one(const Field& f) { return WittElem(f->one(), f->zero()); }

inline WittElem w_from_int(const Field& f, long long k) { return w_one(f).mul_int(k); }

// mu-th root of a principal unit (1, w): v = (1, w/mu), needs gcd(mu,p) = 1.
inline WittElem principal_unit_root(const WittElem& u, std::uint64_t mu) {
    const Field& f = u.field();
    require(u.a0() == f->one(), errc::not_principal_unit,
            "principal-unit root needs residue 1, got " + u.a0().to_string());
    require(mu % f->p() != 0, errc::mu_divisible_by_p,
            "mu = " + std::to_string(mu) + " is divisible by p");
    FqElem mu_inv = f->from_int(static_cast<long long>(mu % f->p())).inv();
    return WittElem(f->one(), mu_inv * u.a1());
}

// The ring isomorphism W2(F_p) -> Z/p^2, (a0,a1) |-> a0^p + p*a1 (integer
// representatives).  Only defined over prime fields; serves as the
// brute-force oracle for the Witt coordinate formulas.
inline std::uint64_t iso_zp2(const WittElem& x) {
    const Field& f = x.field();
    require(f->degree() == 1, errc::not_prime_field, "iso_zp2 needs n = 1");
    const std::uint64_t p = f->p();
    const std::uint64_t p2 = p * p;
    std::uint64_t a0 = x.a0().coeffs()[0];
    std::uint64_t a1 = x.a1().coeffs()[0];
    // a0^p mod p^2; p^2 <= 2^40 so use 128-bit intermediates
    unsigned __int128 acc = 1, b = a0;
    for (std::uint64_t e = p; e > 0; e >>= 1) {
        if (e & 1) acc = (acc * b) % p2;
        b = (b * b) % p2;
    }
    return (static_cast<std::uint64_t>(acc) + p * a1) % p2;
}

} // namespace cyclift
