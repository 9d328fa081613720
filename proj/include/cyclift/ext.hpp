#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclift/fq.hpp"
#include "cyclift/upoly.hpp"

namespace cyclift {

class ExtFieldParams;
using ExtField = std::shared_ptr<const ExtFieldParams>;
class ExtElem;

ExtField make_extension(Field base, std::uint32_t m,
                        std::optional<std::vector<FqElem>> modulus = std::nullopt);

// F_{q^m} as a tower step over F_q: elements are length-m vectors of F_q
// coefficients modulo a monic irreducible of degree m.  Constants of F_q
// embed as degree-zero vectors, which is all the point-probing code needs.
class ExtFieldParams : public std::enable_shared_from_this<ExtFieldParams> {
public:
    const Field& base() const { return base_; }
    std::uint32_t degree() const { return m_; }
    const std::vector<FqElem>& modulus() const { return modulus_; }

    // q^m; callers guard against overflow via points_budget-style checks
    std::uint64_t size() const {
        std::uint64_t s = 1;
        for (std::uint32_t i = 0; i < m_; ++i) s *= base_->q();
        return s;
    }

    ExtElem zero() const;
    ExtElem one() const;
    ExtElem embed(const FqElem& a) const;
    ExtElem gen() const;
    ExtElem element_at(std::uint64_t index) const;

    std::string serialize() const {
        return base_->serialize() + "[t]/deg" + std::to_string(m_);
    }

private:
    friend ExtField make_extension(Field, std::uint32_t, std::optional<std::vector<FqElem>>);

    ExtFieldParams(Field base, std::uint32_t m, std::vector<FqElem> modulus)
        : base_(std::move(base)), m_(m), modulus_(std::move(modulus)) {}

    Field base_;
    std::uint32_t m_;
    std::vector<FqElem> modulus_; // length m+1, monic, constant first
};

class ExtElem {
public:
    ExtElem() = default;
    ExtElem(ExtField k, std::vector<FqElem> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) {}

    const ExtField& field() const { return k_; }
    const std::vector<FqElem>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const FqElem& e : c_) if (!e.is_zero()) return false;
        return true;
    }

    bool operator==(const ExtElem& o) const { return c_ == o.c_; }
    bool operator!=(const ExtElem& o) const { return !(*this == o); }
    bool operator<(const ExtElem& o) const { return c_ < o.c_; }

    ExtElem operator+(const ExtElem& o) const {
        std::vector<FqElem> r(c_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + o.c_[i];
        return ExtElem(k_, std::move(r));
    }
    ExtElem operator-(const ExtElem& o) const {
        std::vector<FqElem> r(c_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - o.c_[i];
        return ExtElem(k_, std::move(r));
    }
    ExtElem operator-() const {
        std::vector<FqElem> r;
        r.reserve(c_.size());
        for (const FqElem& e : c_) r.push_back(-e);
        return ExtElem(k_, std::move(r));
    }

    ExtElem operator*(const ExtElem& o) const {
        const std::uint32_t m = k_->degree();
        const Field& base = k_->base();
        std::vector<FqElem> prod(2 * m - 1, base->zero());
        for (std::uint32_t i = 0; i < m; ++i) {
            if (c_[i].is_zero()) continue;
            for (std::uint32_t j = 0; j < m; ++j)
                prod[i + j] = prod[i + j] + c_[i] * o.c_[j];
        }
        const auto& mod = k_->modulus();
        for (std::uint32_t d = 2 * m - 2; d >= m && d < 2 * m; --d) {
            if (prod[d].is_zero()) continue;
            FqElem c = prod[d];
            prod[d] = base->zero();
            for (std::uint32_t j = 0; j < m; ++j)
                prod[d - m + j] = prod[d - m + j] - c * mod[j];
        }
        prod.resize(m);
        return ExtElem(k_, std::move(prod));
    }

    ExtElem inv() const {
        require(!is_zero(), errc::division_by_zero, "inverse of zero in extension field");
        std::vector<FqElem> mod(k_->modulus());
        auto [g, u] = half_xgcd(Upoly<FqElem>(std::vector<FqElem>(c_)), Upoly<FqElem>(std::move(mod)));
        require(g.deg() == 0, errc::non_unit, "element not invertible (modulus not irreducible?)");
        std::vector<FqElem> r(k_->degree(), k_->base()->zero());
        for (int i = 0; i <= u.deg(); ++i) r[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)];
        return ExtElem(k_, std::move(r));
    }

    ExtElem pow(std::uint64_t e) const {
        ExtElem r = k_->one();
        ExtElem b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    ExtElem mul_int(long long k) const {
        FqElem s = k_->base()->from_int(k);
        std::vector<FqElem> r;
        r.reserve(c_.size());
        for (const FqElem& e : c_) r.push_back(e * s);
        return ExtElem(k_, std::move(r));
    }

    std::string to_string() const {
        if (k_->degree() == 1) return c_[0].to_string();
        std::string s;
        const bool base_prime = k_->base()->degree() == 1;
        for (std::uint32_t i = k_->degree(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            std::string coeff = c_[i].to_string();
            if (!base_prime && coeff.find(' ') != std::string::npos) coeff = "(" + coeff + ")";
            if (i == 0) {
                s += coeff;
            } else {
                if (coeff != "1") s += coeff + "*";
                s += (i == 1) ? "t" : "t^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    ExtField k_;
    std::vector<FqElem> c_;
};

inline ExtElem ExtFieldParams::zero() const {
    return ExtElem(shared_from_this(), std::vector<FqElem>(m_, base_->zero()));
}

inline ExtElem ExtFieldParams::one() const { return embed(base_->one()); }

inline ExtElem ExtFieldParams::embed(const FqElem& a) const {
    std::vector<FqElem> c(m_, base_->zero());
    c[0] = a;
    return ExtElem(shared_from_this(), std::move(c));
}

inline ExtElem ExtFieldParams::gen() const {
    std::vector<FqElem> c(m_, base_->zero());
    if (m_ == 1) {
        c[0] = -modulus_[0];
    } else {
        c[1] = base_->one();
    }
    return ExtElem(shared_from_this(), std::move(c));
}

inline ExtElem ExtFieldParams::element_at(std::uint64_t index) const {
    std::vector<FqElem> c(m_, base_->zero());
    for (std::uint32_t i = m_; i-- > 0;) {
        c[i] = base_->element_at(index % base_->q());
        index /= base_->q();
    }
    return ExtElem(shared_from_this(), std::move(c));
}

inline ExtField make_extension(Field base, std::uint32_t m,
                               std::optional<std::vector<FqElem>> modulus) {
    require(m >= 1, errc::index_out_of_range, "extension degree must be >= 1");
    auto build = [&](std::vector<FqElem> mod) {
        return ExtField(new ExtFieldParams(std::move(base), m, std::move(mod)));
    };
    if (modulus) {
        std::vector<FqElem> mod = *modulus;
        require(mod.size() == m + 1 && mod.back() == base->one(),
                errc::reducible_modulus, "extension modulus must be monic of degree m");
        require(m == 1 || detail::is_irreducible(Upoly<FqElem>(std::vector<FqElem>(mod)), base),
                errc::reducible_modulus, "extension modulus is reducible");
        return build(std::move(mod));
    }
    if (m == 1) {
        std::vector<FqElem> mod{base->zero(), base->one()}; // t
        return build(std::move(mod));
    }
    // first irreducible in constant-first lexicographic order over F_q
    std::vector<std::uint64_t> idx(m, 0);
    for (;;) {
        std::vector<FqElem> cand;
        cand.reserve(m + 1);
        for (std::uint64_t v : idx) cand.push_back(base->element_at(v));
        cand.push_back(base->one());
        if (detail::is_irreducible(Upoly<FqElem>(std::vector<FqElem>(cand)), base))
            return build(std::move(cand));
        std::uint32_t i = m;
        bool wrapped = true;
        while (i-- > 0) {
            if (++idx[i] < base->q()) {
                wrapped = false;
                break;
            }
            idx[i] = 0;
        }
        require(!wrapped, errc::reducible_modulus, "no irreducible extension modulus found");
    }
}

} // namespace cyclift
