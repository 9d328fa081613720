#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "cyclift/fq.hpp"
#include "cyclift/upoly.hpp"

namespace cyclift {

// Deterministic PRNG for equal-degree splitting.  Always passed explicitly;
// the factor list is sorted afterwards, so results do not depend on the seed.
class FactorRng {
public:
    explicit FactorRng(std::uint64_t seed = 0) : eng_(seed) {}

    std::uint64_t next(std::uint64_t bound) { return eng_() % bound; }

    FqElem elem(const Field& f) { return f->element_at(next(f->q())); }

    Upoly<FqElem> poly_below(const Field& f, int deg_bound) {
        std::vector<FqElem> c;
        c.reserve(static_cast<std::size_t>(deg_bound));
        for (int i = 0; i < deg_bound; ++i) c.push_back(elem(f));
        return Upoly<FqElem>(std::move(c));
    }

private:
    std::mt19937_64 eng_;
};

using FactorList = std::vector<std::pair<Upoly<FqElem>, std::uint32_t>>;

namespace detail {

// p-th root of f when f = g(x^p): take p-th roots of the surviving
// coefficients (inverse Frobenius) and divide exponents by p.
inline Upoly<FqElem> pth_root(const Upoly<FqElem>& f, const Field& field) {
    const std::uint32_t p = field->p();
    std::vector<FqElem> c;
    c.reserve(static_cast<std::size_t>(f.deg() / static_cast<int>(p)) + 1);
    for (int i = 0; i <= f.deg(); i += static_cast<int>(p))
        c.push_back(f[static_cast<std::size_t>(i)].frobenius_inv());
    return Upoly<FqElem>(std::move(c));
}

inline void squarefree_decompose(const Upoly<FqElem>& f, const Field& field,
                                 std::uint32_t outer_mult, FactorList& out) {
    // classical characteristic-p squarefree decomposition
    Upoly<FqElem> fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_decompose(pth_root(f, field), field, outer_mult * field->p(), out);
        return;
    }
    Upoly<FqElem> c = gcd_monic(f, fp);
    Upoly<FqElem> w = divmod(f, c).first;
    std::uint32_t i = 1;
    while (w.deg() > 0) {
        Upoly<FqElem> y = gcd_monic(w, c);
        Upoly<FqElem> part = divmod(w, y).first;
        if (part.deg() > 0) out.emplace_back(part.monic(), outer_mult * i);
        w = std::move(y);
        c = divmod(c, w).first;
        ++i;
    }
    if (c.deg() > 0) squarefree_decompose(pth_root(c, field), field, outer_mult * field->p(), out);
}

// distinct-degree stage: split a squarefree monic f into products of
// irreducibles of equal degree
inline std::vector<std::pair<Upoly<FqElem>, int>> distinct_degree(const Upoly<FqElem>& f,
                                                                  const Field& field) {
    std::vector<std::pair<Upoly<FqElem>, int>> parts;
    Upoly<FqElem> rest = f;
    const Upoly<FqElem> x(std::vector<FqElem>{field->zero(), field->one()});
    Upoly<FqElem> h = pmod(x, rest);
    int d = 0;
    while (rest.deg() > 0) {
        ++d;
        if (2 * d > rest.deg()) {
            parts.emplace_back(rest, rest.deg());
            break;
        }
        h = pow_mod(h, field->q(), rest);
        Upoly<FqElem> g = gcd_monic(h - x, rest);
        if (g.deg() > 0) {
            parts.emplace_back(g, d);
            rest = divmod(rest, g).first;
            h = pmod(h, rest);
        }
    }
    return parts;
}

// Cantor-Zassenhaus equal-degree splitting of a product of irreducibles of
// degree d.  Odd q uses the norm-then-(q-1)/2 power; q = 2^n uses the
// F_2-trace.  Exponents never exceed q, so everything stays in 64 bits.
inline void equal_degree(const Upoly<FqElem>& f, int d, const Field& field, FactorRng& rng,
                         std::vector<Upoly<FqElem>>& out) {
    if (f.deg() == d) {
        out.push_back(f.monic());
        return;
    }
    const Upoly<FqElem> one = Upoly<FqElem>::constant(field->one());
    for (;;) {
        Upoly<FqElem> r = rng.poly_below(field, f.deg());
        if (r.deg() < 1) continue;
        Upoly<FqElem> g = gcd_monic(r, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree(g, d, field, rng, out);
            equal_degree(divmod(f, g).first, d, field, rng, out);
            return;
        }
        Upoly<FqElem> w;
        if (field->p() == 2) {
            // trace over F_2 of F_{q^d}, q = 2^n
            const std::uint32_t bits = field->degree() * static_cast<std::uint32_t>(d);
            Upoly<FqElem> t = pmod(r, f);
            Upoly<FqElem> acc = t;
            for (std::uint32_t i = 1; i < bits; ++i) {
                t = pmod(t * t, f);
                acc = acc + t;
            }
            w = std::move(acc);
        } else {
            // norm to F_q, then the (q-1)/2 power
            Upoly<FqElem> t = pmod(r, f);
            Upoly<FqElem> norm = t;
            for (int i = 1; i < d; ++i) {
                t = pow_mod(t, field->q(), f);
                norm = pmod(norm * t, f);
            }
            w = pow_mod(norm, (field->q() - 1) / 2, f) - one;
        }
        Upoly<FqElem> h = gcd_monic(w, f);
        if (h.deg() > 0 && h.deg() < f.deg()) {
            equal_degree(h, d, field, rng, out);
            equal_degree(divmod(f, h).first, d, field, rng, out);
            return;
        }
    }
}

} // namespace detail

// Complete factorization over F_q: monic irreducible factors with
// multiplicities, sorted by (degree, coefficient order), plus the leading
// coefficient.  The product of the factors times the leading coefficient
// reconstructs the input exactly.
inline std::pair<FactorList, FqElem> univariate_factor(const Upoly<FqElem>& f, FactorRng& rng) {
    require(!f.is_zero(), errc::zero_polynomial, "cannot factor the zero polynomial");
    const Field field = f.lead().field();
    FqElem lc = f.lead();
    FactorList out;
    if (f.deg() == 0) return {out, lc};

    FactorList squarefree_parts;
    detail::squarefree_decompose(f.monic(), field, 1, squarefree_parts);

    for (const auto& [part, mult] : squarefree_parts) {
        for (const auto& [block, d] : detail::distinct_degree(part, field)) {
            std::vector<Upoly<FqElem>> irreducibles;
            detail::equal_degree(block, d, field, rng, irreducibles);
            for (auto& g : irreducibles) out.emplace_back(std::move(g), mult);
        }
    }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        for (int i = a.first.deg(); i >= 0; --i) {
            const auto& ca = a.first[static_cast<std::size_t>(i)];
            const auto& cb = b.first[static_cast<std::size_t>(i)];
            if (ca != cb) return ca < cb;
        }
        return a.second < b.second;
    });
    return {out, lc};
}

} // namespace cyclift
