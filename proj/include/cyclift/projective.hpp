#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "cyclift/ext.hpp"
#include "cyclift/form.hpp"
#include "cyclift/upoly.hpp"

namespace cyclift {

// Point of P^n over F_{q^m}, stored with the first nonzero coordinate
// normalized to 1; equality is coordinatewise on the normal form.
struct ProjPoint {
    std::vector<ExtElem> coords;
    std::uint32_t ext_degree = 1;

    static ProjPoint normalized(std::vector<ExtElem> raw, std::uint32_t m) {
        std::size_t pivot = raw.size();
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (!raw[i].is_zero()) {
                pivot = i;
                break;
            }
        }
        require(pivot < raw.size(), errc::zero_input, "projective point needs a nonzero coordinate");
        ExtElem s = raw[pivot].inv();
        for (ExtElem& c : raw) c = c * s;
        return ProjPoint{std::move(raw), m};
    }

    bool operator==(const ProjPoint& o) const { return coords == o.coords; }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ":";
            s += coords[i].to_string();
        }
        return s + "]";
    }
};

// --- restriction targets -----------------------------------------------------

struct Hyperplane {
    Form<FqElem> ell; // nonzero linear form in the ambient variables
};

struct RationalCurve {
    std::vector<Form<FqElem>> components; // n+1 binary forms in (u,v), common degree
};

using RestrictionTarget = std::variant<Hyperplane, RationalCurve>;

inline std::uint32_t target_parameter_degree(const RestrictionTarget& t) {
    if (std::holds_alternative<Hyperplane>(t)) return 1;
    return std::get<RationalCurve>(t).components[0].degree();
}

inline void validate_target(const RestrictionTarget& t, std::uint32_t ambient_vars) {
    if (const auto* h = std::get_if<Hyperplane>(&t)) {
        require(!h->ell.is_zero() && h->ell.degree() == 1 && h->ell.num_vars() == ambient_vars,
                errc::malformed_target, "hyperplane needs a nonzero linear form in the ambient variables");
        return;
    }
    const auto& curve = std::get<RationalCurve>(t);
    require(curve.components.size() == ambient_vars, errc::malformed_target,
            "rational curve needs one binary form per ambient coordinate");
    const std::uint32_t e = curve.components[0].degree();
    require(e >= 1, errc::malformed_target, "curve parametrization must have positive degree");
    bool top_coeff = false;
    Upoly<FqElem> g;
    for (const auto& comp : curve.components) {
        require(comp.num_vars() == 2 && comp.degree() == e, errc::malformed_target,
                "curve components must be binary forms of a common degree");
        if (comp.is_zero()) continue;
        Upoly<FqElem> d = binary_dehomogenize(comp);
        if (d.deg() == static_cast<int>(e)) top_coeff = true;
        g = g.is_zero() ? d.monic() : gcd_monic(g, d);
    }
    // base-point-free: no common root at [1:0] and no common dehomogenized root
    require(!g.is_zero() && g.deg() == 0 && top_coeff, errc::malformed_target,
            "curve parametrization has a base point");
}

// pivot variable used when solving a hyperplane for substitution: the first
// variable with a nonzero coefficient
inline std::uint32_t hyperplane_pivot(const Form<FqElem>& ell) {
    std::uint32_t best = ell.num_vars();
    for (const auto& [e, c] : ell.terms())
        for (std::uint32_t i = 0; i < best; ++i)
            if (e[i] == 1) best = i;
    require(best < ell.num_vars(), errc::malformed_target, "zero hyperplane form");
    return best;
}

// Restriction of a section to a target: substitute the hyperplane solution
// (dropping the pivot variable) or the curve parametrization.  A zero result
// signals that the target lies inside the zero divisor of s.
inline Form<FqElem> restrict_form(const Form<FqElem>& s, const RestrictionTarget& t) {
    validate_target(t, s.num_vars());
    if (const auto* h = std::get_if<Hyperplane>(&t)) {
        const std::uint32_t nv = s.num_vars();
        const std::uint32_t pivot = hyperplane_pivot(h->ell);
        FqElem cpiv = h->ell.terms().begin()->second; // rewritten below
        std::vector<FqElem> coeff(nv, cpiv - cpiv);
        for (const auto& [e, c] : h->ell.terms())
            for (std::uint32_t i = 0; i < nv; ++i)
                if (e[i] == 1) coeff[i] = c;
        const FqElem scale = -coeff[pivot].inv();
        std::vector<Form<FqElem>> images;
        images.reserve(nv);
        for (std::uint32_t i = 0; i < nv; ++i) {
            if (i == pivot) {
                Form<FqElem> repl(nv - 1, 1);
                for (std::uint32_t k = 0; k < nv; ++k) {
                    if (k == pivot || coeff[k].is_zero()) continue;
                    Exp e(nv - 1, 0);
                    e[k < pivot ? k : k - 1] = 1;
                    repl.add_term(std::move(e), coeff[k] * scale);
                }
                images.push_back(std::move(repl));
            } else {
                Exp e(nv - 1, 0);
                e[i < pivot ? i : i - 1] = 1;
                images.push_back(Form<FqElem>::monomial(nv - 1, std::move(e),
                                                        coeff[pivot] * coeff[pivot].inv()));
            }
        }
        return s.compose(images);
    }
    return s.compose(std::get<RationalCurve>(t).components);
}

// Variable names of the restricted coordinate ring, for printing.
inline std::vector<std::string> restricted_names(const RestrictionTarget& t,
                                                 const std::vector<std::string>& ambient) {
    if (const auto* h = std::get_if<Hyperplane>(&t)) {
        std::vector<std::string> out;
        const std::uint32_t pivot = hyperplane_pivot(h->ell);
        for (std::uint32_t i = 0; i < ambient.size(); ++i)
            if (i != pivot) out.push_back(ambient[i]);
        return out;
    }
    return {"u", "v"};
}

// --- point enumeration -------------------------------------------------------

// Visit every point of P^(nv-1)(F_{q^m}) in lexicographic order of the
// normalized representative; stop early when the visitor returns false.
inline void enumerate_proj_points(const ExtField& K, std::uint32_t nv,
                                  const std::function<bool(const std::vector<ExtElem>&)>& visit) {
    const std::uint64_t size = K->size();
    std::vector<ExtElem> pt(nv, K->zero());
    for (std::uint32_t lead = 0; lead < nv; ++lead) {
        for (std::uint32_t i = 0; i < nv; ++i) pt[i] = K->zero();
        pt[lead] = K->one();
        const std::uint32_t tail = nv - lead - 1;
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < tail; ++i) count *= size;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t rest = idx;
            for (std::uint32_t i = nv; i-- > lead + 1;) {
                pt[i] = K->element_at(rest % size);
                rest /= size;
            }
            if (!visit(pt)) return;
        }
    }
}

// --- cohomology of O(d) on P^n ----------------------------------------------

namespace detail {

inline long long binom(long long top, long long k) {
    if (k < 0 || top < k) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (top - k + i) / i;
    return r;
}

} // namespace detail

// h^i(P^n, O(d)): C(n+d,n) at i = 0 for d >= 0, C(-d-1,n) at i = n for
// d <= -n-1, zero elsewhere.
inline long long cohomology_dim(std::uint32_t n, long long d, std::uint32_t i) {
    require(i <= n, errc::index_out_of_range,
            "cohomology index " + std::to_string(i) + " outside 0.." + std::to_string(n));
    long long h = 0;
    if (i == 0 && d >= 0) h += detail::binom(static_cast<long long>(n) + d, n);
    if (i == n && -d - 1 >= static_cast<long long>(n)) h += detail::binom(-d - 1, n);
    return h;
}

struct VanishingReport {
    std::uint32_t n = 0, i = 0;
    long long d_lo = 0, d_hi = 0;
    bool all_zero = true;
    std::vector<std::pair<long long, long long>> nonzero; // (d, h^i)
};

// Check h^i(P^n, O(d)) = 0 across a degree window; meaningful for the middle
// range 1 <= i <= n-1, where it always holds.
inline VanishingReport hi_vanishing_check(std::uint32_t n, std::uint32_t i, long long d_lo,
                                          long long d_hi) {
    require(i >= 1 && i + 1 <= n, errc::index_out_of_range,
            "need 1 <= i <= n-1, got i = " + std::to_string(i) + ", n = " + std::to_string(n));
    VanishingReport rep{n, i, d_lo, d_hi, true, {}};
    for (long long d = d_lo; d <= d_hi; ++d) {
        long long h = cohomology_dim(n, d, i);
        if (h != 0) {
            rep.all_zero = false;
            rep.nonzero.emplace_back(d, h);
        }
    }
    return rep;
}

} // namespace cyclift
