#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclift/form.hpp"
#include "cyclift/fq.hpp"
#include "cyclift/witt.hpp"

namespace cyclift {

namespace detail {

inline std::vector<std::uint32_t> divisors_descending(std::uint32_t n) {
    std::vector<std::uint32_t> ds;
    for (std::uint32_t d = n; d >= 1; --d)
        if (n % d == 0) ds.push_back(d);
    return ds;
}

} // namespace detail

// Exact mu-th root of a form over F_q, when one exists.  Graded Newton
// recursion on the lexicographic leading term: the root's leading term is
// the mu-th root of f's leading term, and each further term is forced by
//   next = LT(f - g^mu) / (mu * LT(g)^(mu-1)),
// which is well defined because mu is invertible.  Among the mu-th roots of
// the leading coefficient the canonically smallest is chosen, so the result
// is deterministic; any other root differs by a root of unity.
inline std::optional<Form<FqElem>> mu_th_root_form(const Form<FqElem>& f, std::uint32_t mu) {
    require(mu >= 1, errc::zero_input, "mu must be positive");
    if (f.is_zero()) return Form<FqElem>(f.num_vars(), f.degree() / std::max(mu, 1u));
    const Field& field = f.lead().second.field();
    require(mu % field->p() != 0, errc::mu_divisible_by_p,
            "mu = " + std::to_string(mu) + " is divisible by p = " + std::to_string(field->p()));
    if (mu == 1) return f;
    if (f.degree() % mu != 0) return std::nullopt;

    const auto& [lexp, lcoeff] = f.lead();
    Exp root_exp(f.num_vars());
    for (std::uint32_t i = 0; i < f.num_vars(); ++i) {
        if (lexp[i] % mu != 0) return std::nullopt;
        root_exp[i] = lexp[i] / mu;
    }
    auto root_coeff = mu_power_test_unit(lcoeff, mu);
    if (!root_coeff) return std::nullopt;

    const FqElem mu_inv = field->from_int(static_cast<long long>(mu % field->p())).inv();
    Form<FqElem> g = Form<FqElem>::monomial(f.num_vars(), root_exp, *root_coeff);
    const FqElem lead_scale = (mu == 2 ? *root_coeff : root_coeff->pow(mu - 1)).inv() * mu_inv;
    Exp lead_exp_m1(f.num_vars());
    for (std::uint32_t i = 0; i < f.num_vars(); ++i) lead_exp_m1[i] = root_exp[i] * (mu - 1);

    Exp last_added = root_exp;
    const std::size_t max_terms = 4096;
    for (std::size_t steps = 0; steps < max_terms; ++steps) {
        Form<FqElem> rem = f - g.pow(mu);
        if (rem.is_zero()) return g;
        const auto& [rexp, rcoeff] = rem.lead();
        Exp next(f.num_vars());
        for (std::uint32_t i = 0; i < f.num_vars(); ++i) {
            if (rexp[i] < lead_exp_m1[i]) return std::nullopt;
            next[i] = rexp[i] - lead_exp_m1[i];
        }
        if (!(next < last_added)) return std::nullopt; // no strictly smaller term can fix the residual
        g.add_term(next, rcoeff * lead_scale);
        last_added = std::move(next);
    }
    return std::nullopt; // term budget exhausted; cannot be a mu-th power at desk scale
}

struct MaxDivisibility {
    std::uint32_t mu_max = 1;
    Form<FqElem> witness; // witness^mu_max = f
};

// Largest divisor mu of N with f a mu-th power; mu = 1 always succeeds with
// f itself as the witness.  N must be prime to p.
inline MaxDivisibility max_divisibility(const Form<FqElem>& f, std::uint32_t N) {
    require(!f.is_zero(), errc::zero_input, "section must be nonzero");
    const Field& field = f.lead().second.field();
    require(N >= 1 && N % field->p() != 0, errc::n_divisible_by_p,
            "N = " + std::to_string(N) + " must be positive and prime to p");
    for (std::uint32_t mu : detail::divisors_descending(N)) {
        if (f.degree() % mu != 0) continue;
        if (auto g = mu_th_root_form(f, mu)) return {mu, std::move(*g)};
    }
    return {1, f}; // unreachable: mu = 1 is always a divisor
}

// --- Witt-coordinate forms ---------------------------------------------------

// tau(base) + p*(correction), assembled coefficientwise: the Witt coordinate
// pair at each exponent is (base_coeff, correction_coeff^p).
inline Form<WittElem> w2_form(const Form<FqElem>& base, const Form<FqElem>& correction) {
    Form<WittElem> out(base.num_vars(), base.degree());
    const Field field = base.is_zero()
                            ? (correction.is_zero() ? Field() : correction.lead().second.field())
                            : base.lead().second.field();
    if (!field) return out;
    for (const auto& [e, c] : base.terms()) out.add_term(e, teichmuller(c));
    for (const auto& [e, c] : correction.terms()) out.add_term(e, times_p(c));
    return out;
}

inline Form<FqElem> w2_residue(const Form<WittElem>& s) {
    return s.map_coeffs([](const WittElem& x) { return x.a0(); });
}

inline Form<FqElem> w2_correction(const Form<WittElem>& s) {
    return s.map_coeffs([](const WittElem& x) { return x.a1().frobenius_inv(); });
}

// Exact mu-th root of a Witt-coordinate form, deciding Witt-level
// divisibility constructively:
//   1. reduce to F_q and take the mu-th root t there (absent => absent);
//   2. split s = tau(t)^mu + p*e with e over F_q;
//   3. for each mu-th root of unity zeta, a lift of zeta*t solves the
//      problem iff (zeta t)^(mu-1) divides e, with correction e/(mu t'^(mu-1));
//   4. every returned witness is re-verified by exact multiplication.
inline std::optional<Form<WittElem>> witt_mu_th_root(const Form<WittElem>& s, std::uint32_t mu) {
    require(mu >= 1, errc::zero_input, "mu must be positive");
    if (s.is_zero()) return s;
    const Field field = s.lead().second.field();
    require(mu % field->p() != 0, errc::mu_divisible_by_p,
            "mu = " + std::to_string(mu) + " is divisible by p");
    if (mu == 1) return s;

    Form<FqElem> base = w2_residue(s);
    auto t0 = mu_th_root_form(base, mu);
    if (!t0) return std::nullopt;

    Form<WittElem> tau_pow = w2_form(*t0, Form<FqElem>(t0->num_vars(), t0->degree())).pow(mu);
    Form<WittElem> diff = s - tau_pow;
    Form<FqElem> e = w2_correction(diff); // diff lies in p*W2 because the residues agree
    const FqElem mu_scalar = field->from_int(static_cast<long long>(mu % field->p()));

    for (const FqElem& zeta : roots_of_unity(field, mu)) {
        Form<FqElem> t = t0->scaled(zeta);
        Form<FqElem> t_pow = mu == 2 ? t : t.pow(mu - 1);
        auto quot = exact_divide(e, t_pow);
        if (!quot) continue;
        Form<WittElem> candidate = w2_form(t, quot->scaled(mu_scalar.inv()));
        if (candidate.pow(mu) == s) return candidate;
    }
    return std::nullopt;
}

} // namespace cyclift
