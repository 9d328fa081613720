#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cyclift/errors.hpp"
#include "cyclift/upoly.hpp"

namespace cyclift {

class FieldParams;
using Field = std::shared_ptr<const FieldParams>;
class FqElem;

Field make_field(std::uint32_t p, std::uint32_t n,
                 std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

// F_q = F_p[x]/(modulus), q = p^n <= 2^20.  Elements are coefficient vectors
// in the polynomial basis 1, g, ..., g^{n-1} where g is the class of x.
// Immutable after construction; all per-field caches are built under a
// once_flag, so shared use across threads needs no synchronization.
class FieldParams : public std::enable_shared_from_this<FieldParams> {
public:
    static constexpr std::uint64_t max_q = 1u << 20;

    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return n_; }
    std::uint64_t q() const { return q_; }
    // monic, length degree()+1, constant term first
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same(const FieldParams& o) const {
        return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_;
    }

    // "p^n:c0,c1,...,cn"
    std::string serialize() const {
        std::string s = std::to_string(p_) + "^" + std::to_string(n_) + ":";
        for (std::size_t i = 0; i < modulus_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(modulus_[i]);
        }
        return s;
    }

    FqElem zero() const;
    FqElem one() const;
    FqElem from_int(long long k) const;
    FqElem from_coeffs(std::vector<std::uint32_t> coeffs) const;
    FqElem gen() const; // class of x; equals the residue of the modulus root

    // Elements in canonical (coordinate-lexicographic, constant first) order:
    // index 0 is 0, index 1 is 1, ..., the constant coordinate is the most
    // significant digit.
    FqElem element_at(std::uint64_t index) const;

    // smallest generator of F_q^*, found by exhaustive order testing
    FqElem multiplicative_generator() const;

    // c_i = (-1)^(i-1) * i^(-1) mod p for i = 1..p-1; these are the reduced
    // binomial coefficients C(p,i)/p entering the Witt addition carry.
    const std::vector<std::uint32_t>& witt_carry_coeffs() const;

private:
    friend Field make_field(std::uint32_t, std::uint32_t,
                            std::optional<std::vector<std::uint32_t>>);
    friend class FqElem;

    FieldParams(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus)
        : p_(p), n_(n), modulus_(std::move(modulus)) {
        q_ = 1;
        for (std::uint32_t i = 0; i < n_; ++i) q_ *= p_;
    }

    // arithmetic on raw coefficient vectors (length n_, entries mod p)
    std::uint32_t padd(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
    std::uint32_t psub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
    std::uint32_t pmul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }

    std::vector<std::uint32_t> vadd(const std::vector<std::uint32_t>& a,
                                    const std::vector<std::uint32_t>& b) const {
        std::vector<std::uint32_t> r(n_);
        for (std::uint32_t i = 0; i < n_; ++i) r[i] = padd(a[i], b[i]);
        return r;
    }
    std::vector<std::uint32_t> vsub(const std::vector<std::uint32_t>& a,
                                    const std::vector<std::uint32_t>& b) const {
        std::vector<std::uint32_t> r(n_);
        for (std::uint32_t i = 0; i < n_; ++i) r[i] = psub(a[i], b[i]);
        return r;
    }
    std::vector<std::uint32_t> vmul(const std::vector<std::uint32_t>& a,
                                    const std::vector<std::uint32_t>& b) const {
        // schoolbook product followed by reduction modulo the monic modulus
        std::vector<std::uint32_t> prod(2 * n_ - 1, 0);
        for (std::uint32_t i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            for (std::uint32_t j = 0; j < n_; ++j)
                prod[i + j] = padd(prod[i + j], pmul(a[i], b[j]));
        }
        for (std::uint32_t d = 2 * n_ - 2; d >= n_ && d < 2 * n_; --d) {
            const std::uint32_t c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (std::uint32_t j = 0; j < n_; ++j)
                prod[d - n_ + j] = psub(prod[d - n_ + j], pmul(c, modulus_[j]));
        }
        prod.resize(n_);
        return prod;
    }

    std::uint32_t p_;
    std::uint32_t n_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;

    mutable std::once_flag gen_once_;
    mutable std::vector<std::uint32_t> generator_;
    mutable std::once_flag carry_once_;
    mutable std::vector<std::uint32_t> carries_;
};

class FqElem {
public:
    FqElem() = default;
    FqElem(Field f, std::vector<std::uint32_t> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {}

    const Field& field() const { return f_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    bool is_zero() const {
        for (std::uint32_t v : c_) if (v != 0) return false;
        return true;
    }

    bool same_field(const FqElem& o) const {
        return f_ == o.f_ || (f_ && o.f_ && f_->same(*o.f_));
    }

    FqElem operator+(const FqElem& o) const {
        check(o);
        return FqElem(f_, f_->vadd(c_, o.c_));
    }
    FqElem operator-(const FqElem& o) const {
        check(o);
        return FqElem(f_, f_->vsub(c_, o.c_));
    }
    FqElem operator*(const FqElem& o) const {
        check(o);
        return FqElem(f_, f_->vmul(c_, o.c_));
    }
    FqElem operator-() const {
        std::vector<std::uint32_t> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_->psub(0, c_[i]);
        return FqElem(f_, std::move(r));
    }

    FqElem inv() const {
        require(!is_zero(), errc::division_by_zero, "inverse of zero in " + f_->serialize());
        return pow(f_->q() - 2);
    }

    FqElem operator/(const FqElem& o) const {
        check(o);
        require(!o.is_zero(), errc::division_by_zero, "division by zero in " + f_->serialize());
        return *this * o.inv();
    }

    FqElem pow(std::uint64_t e) const {
        FqElem r = f_->one();
        FqElem b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // k * this, for integer k (used by formal derivatives)
    FqElem mul_int(long long k) const {
        const std::uint32_t p = f_->p();
        long long m = k % static_cast<long long>(p);
        if (m < 0) m += p;
        return *this * f_->from_int(m);
    }

    FqElem frobenius() const { return pow(f_->p()); }

    // inverse of Frobenius: a^(p^(n-1))
    FqElem frobenius_inv() const {
        FqElem r = *this;
        for (std::uint32_t i = 1; i < f_->degree(); ++i) r = r.frobenius();
        return r;
    }

    std::uint64_t index() const {
        std::uint64_t idx = 0;
        for (std::uint32_t v : c_) idx = idx * f_->p() + v;
        return idx;
    }

    bool operator==(const FqElem& o) const { return same_field(o) && c_ == o.c_; }
    bool operator!=(const FqElem& o) const { return !(*this == o); }
    // canonical coordinate ordering: lexicographic, constant coefficient first
    bool operator<(const FqElem& o) const { return c_ < o.c_; }

    std::string to_string() const {
        if (f_->degree() == 1) return std::to_string(c_[0]);
        std::string s;
        for (std::uint32_t i = f_->degree(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) {
                s += std::to_string(c_[i]);
            } else {
                if (c_[i] != 1) s += std::to_string(c_[i]) + "*";
                s += (i == 1) ? "g" : "g^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    void check(const FqElem& o) const {
        require(same_field(o), errc::field_mismatch,
                "operands from " + f_->serialize() + " and " + o.f_->serialize());
    }

    Field f_;
    std::vector<std::uint32_t> c_;
};

inline FqElem FieldParams::zero() const {
    return FqElem(shared_from_this(), std::vector<std::uint32_t>(n_, 0));
}

inline FqElem FieldParams::one() const { return from_int(1); }

inline FqElem FieldParams::from_int(long long k) const {
    long long m = k % static_cast<long long>(p_);
    if (m < 0) m += p_;
    std::vector<std::uint32_t> c(n_, 0);
    c[0] = static_cast<std::uint32_t>(m);
    return FqElem(shared_from_this(), std::move(c));
}

inline FqElem FieldParams::from_coeffs(std::vector<std::uint32_t> coeffs) const {
    require(coeffs.size() == n_, errc::index_out_of_range, "coefficient vector length");
    for (std::uint32_t& v : coeffs) v %= p_;
    return FqElem(shared_from_this(), std::move(coeffs));
}

inline FqElem FieldParams::gen() const {
    std::vector<std::uint32_t> c(n_, 0);
    if (n_ == 1) {
        // modulus x + c0 has root -c0
        c[0] = psub(0, modulus_[0]);
    } else {
        c[1] = 1;
    }
    return FqElem(shared_from_this(), std::move(c));
}

inline FqElem FieldParams::element_at(std::uint64_t index) const {
    require(index < q_, errc::index_out_of_range, "element index exceeds q");
    std::vector<std::uint32_t> c(n_, 0);
    for (std::uint32_t i = n_; i-- > 0;) {
        c[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return FqElem(shared_from_this(), std::move(c));
}

namespace detail {

inline bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            fs.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) fs.push_back(m);
    return fs;
}

// Rabin irreducibility test for a monic polynomial over F_q.
inline bool is_irreducible(const Upoly<FqElem>& f, const Field& base) {
    const int m = f.deg();
    if (m <= 0) return false;
    if (m == 1) return true;
    const Upoly<FqElem> x(std::vector<FqElem>{base->zero(), base->one()});
    // x^(q^k) mod f for k = 1..m via iterated q-power maps
    std::vector<Upoly<FqElem>> qpow(static_cast<std::size_t>(m) + 1);
    qpow[0] = pmod(x, f);
    for (int k = 1; k <= m; ++k) qpow[static_cast<std::size_t>(k)] = pow_mod(qpow[static_cast<std::size_t>(k - 1)], base->q(), f);
    if (qpow[static_cast<std::size_t>(m)] != pmod(x, f)) return false;
    for (std::uint64_t ell : prime_factors(static_cast<std::uint64_t>(m))) {
        const std::size_t k = static_cast<std::size_t>(m) / ell;
        Upoly<FqElem> g = gcd_monic(qpow[k] - x, f);
        if (g.deg() != 0) return false;
    }
    return true;
}

} // namespace detail

inline Field make_field(std::uint32_t p, std::uint32_t n,
                        std::optional<std::vector<std::uint32_t>> modulus) {
    require(detail::is_prime_u32(p), errc::non_prime_p, std::to_string(p) + " is not prime");
    require(n >= 1, errc::index_out_of_range, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        q *= p;
        require(q <= FieldParams::max_q, errc::size_overflow,
                "q = " + std::to_string(p) + "^" + std::to_string(n) + " exceeds 2^20");
    }

    auto build = [&](std::vector<std::uint32_t> mod) {
        return Field(new FieldParams(p, n, std::move(mod)));
    };

    if (modulus) {
        std::vector<std::uint32_t> mod = *modulus;
        require(mod.size() == n + 1, errc::reducible_modulus, "modulus must have degree n");
        for (std::uint32_t& v : mod) v %= p;
        require(mod.back() == 1, errc::reducible_modulus, "modulus must be monic");
        if (n > 1) {
            Field fp = make_field(p, 1);
            std::vector<FqElem> cs;
            cs.reserve(mod.size());
            for (std::uint32_t v : mod) cs.push_back(fp->from_int(v));
            require(detail::is_irreducible(Upoly<FqElem>(std::move(cs)), fp),
                    errc::reducible_modulus, "modulus is reducible over F_" + std::to_string(p));
        }
        return build(std::move(mod));
    }

    if (n == 1) return build({0, 1}); // modulus x
    // lexicographically smallest monic irreducible, constant term first
    Field fp = make_field(p, 1);
    std::vector<std::uint32_t> lower(n, 0);
    for (;;) {
        std::vector<FqElem> cs;
        cs.reserve(n + 1);
        for (std::uint32_t v : lower) cs.push_back(fp->from_int(v));
        cs.push_back(fp->one());
        if (detail::is_irreducible(Upoly<FqElem>(std::move(cs)), fp)) {
            std::vector<std::uint32_t> mod = lower;
            mod.push_back(1);
            return build(std::move(mod));
        }
        // next tuple in constant-first lexicographic order
        std::uint32_t i = n;
        while (i-- > 0) {
            if (++lower[i] < p) break;
            lower[i] = 0;
        }
        require(!(i == static_cast<std::uint32_t>(-1) && lower == std::vector<std::uint32_t>(n, 0)),
                errc::reducible_modulus, "no irreducible modulus found"); // unreachable
    }
}

inline FqElem FieldParams::multiplicative_generator() const {
    std::call_once(gen_once_, [this] {
        const auto factors = detail::prime_factors(q_ - 1);
        for (std::uint64_t idx = 1; idx < q_; ++idx) {
            FqElem cand = element_at(idx);
            bool ok = true;
            for (std::uint64_t ell : factors) {
                if (cand.pow((q_ - 1) / ell) == one()) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                generator_ = cand.coeffs();
                return;
            }
        }
        generator_ = one().coeffs(); // q = 2: the unit group is trivial
    });
    return FqElem(shared_from_this(), generator_);
}

inline const std::vector<std::uint32_t>& FieldParams::witt_carry_coeffs() const {
    std::call_once(carry_once_, [this] {
        carries_.assign(p_ - 1, 0);
        // i^(-1) mod p via Fermat, sign (-1)^(i-1)
        for (std::uint32_t i = 1; i < p_; ++i) {
            std::uint64_t inv = 1, b = i, e = p_ - 2;
            while (e > 0) {
                if (e & 1) inv = (inv * b) % p_;
                b = (b * b) % p_;
                e >>= 1;
            }
            std::uint32_t v = static_cast<std::uint32_t>(inv);
            if (i % 2 == 0) v = psub(0, v);
            carries_[i - 1] = v;
        }
    });
    return carries_;
}

// zeta of exact multiplicative order N; requires N | q-1.
inline FqElem primitive_root_of_unity(const Field& f, std::uint64_t N) {
    require(N >= 1, errc::zero_input, "order must be positive");
    require((f->q() - 1) % N == 0, errc::order_not_dividing,
            std::to_string(N) + " does not divide q-1 = " + std::to_string(f->q() - 1));
    if (N == 1) return f->one();
    return f->multiplicative_generator().pow((f->q() - 1) / N);
}

// All solutions of x^mu = 1 in F_q, in canonical order.  There are
// gcd(mu, q-1) of them; no divisibility assumption on mu.
inline std::vector<FqElem> roots_of_unity(const Field& f, std::uint64_t mu) {
    const std::uint64_t g = std::gcd(mu, f->q() - 1);
    FqElem zeta = primitive_root_of_unity(f, g);
    std::vector<FqElem> out;
    out.reserve(g);
    FqElem cur = f->one();
    for (std::uint64_t k = 0; k < g; ++k) {
        out.push_back(cur);
        cur = cur * zeta;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Smallest d with d^mu = c, if one exists in F_q^*.  Existence is decided by
// the cyclic-group criterion c^((q-1)/g) = 1 with g = gcd(mu, q-1); the root
// itself is found by exhaustive ascending search (q <= 2^20).
inline std::optional<FqElem> mu_power_test_unit(const FqElem& c, std::uint64_t mu) {
    require(!c.is_zero(), errc::zero_input, "mu-th root test needs a unit");
    const Field& f = c.field();
    const std::uint64_t g = std::gcd(mu, f->q() - 1);
    if (c.pow((f->q() - 1) / g) != f->one()) return std::nullopt;
    for (std::uint64_t idx = 1; idx < f->q(); ++idx) {
        FqElem d = f->element_at(idx);
        if (d.pow(mu) == c) return d;
    }
    return std::nullopt; // unreachable when the criterion holds
}

} // namespace cyclift
