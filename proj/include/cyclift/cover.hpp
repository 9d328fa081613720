#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cyclift/factor.hpp"
#include "cyclift/form.hpp"
#include "cyclift/projective.hpp"
#include "cyclift/roots.hpp"
#include "cyclift/singular.hpp"

namespace cyclift {

// Input data of the degree-N cyclic cover of P^n branched along the zero
// divisor of s, with L = O(a) and deg s = a*N.  The factored divisor is
// optional; binary sections (n = 1) get factored on demand, everything else
// needs the factorization supplied when component data is required.
struct CoverSpec {
    Field field;
    std::uint32_t ambient_n = 2; // P^n
    std::uint32_t N = 2;
    std::uint32_t a = 1;
    Form<FqElem> s;
    std::optional<FactoredDivisor> divisor;

    std::uint32_t num_vars() const { return ambient_n + 1; }

    void basic_checks() const {
        require(N >= 1 && N % field->p() != 0, errc::n_divisible_by_p,
                "gcd(N, p) != 1: N = " + std::to_string(N) + ", p = " + std::to_string(field->p()));
        require(!s.is_zero(), errc::zero_input, "section must be nonzero");
        require(s.num_vars() == num_vars(), errc::degree_mismatch,
                "section must live in " + std::to_string(num_vars()) + " variables");
        require(s.degree() == a * N, errc::degree_mismatch,
                "deg s = " + std::to_string(s.degree()) + " but a*N = " + std::to_string(a * N));
    }

    // divisor if supplied, else computed for binary sections
    std::optional<FactoredDivisor> effective_divisor() const {
        if (divisor) return divisor;
        if (num_vars() == 2) {
            FactorRng rng(0);
            auto [factors, lc] = univariate_factor(binary_dehomogenize(s), rng);
            FactoredDivisor d;
            std::uint32_t used = 0;
            for (auto& [g, mult] : factors) {
                d.components.emplace_back(
                    binary_homogenize(g.scaled(lc), static_cast<std::uint32_t>(g.deg())), mult);
                // keep the scalar on the first component only
                lc = field->one();
                used += static_cast<std::uint32_t>(g.deg()) * mult;
            }
            if (used < s.degree()) {
                // leftover power of the second variable v
                Form<FqElem> v = Form<FqElem>::monomial(2, Exp{0, 1}, field->one());
                d.components.emplace_back(v.scaled(lc), s.degree() - used);
                lc = field->one();
            }
            if (lc != field->one() && !d.components.empty())
                d.components[0].first = d.components[0].first.scaled(lc);
            return d;
        }
        return std::nullopt;
    }
};

struct CheckEntry {
    std::string name;
    bool pass = false;
    std::string certificate; // "exact" or "bounded"
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckEntry> checks;
    std::optional<SingularProbe> probe;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return c.name + ": " + c.detail;
        return "";
    }
};

// Hypothesis checklist: gcd(N,p) = 1, degree consistency, divisor/section
// consistency, h^1(P^n, O(aN)) = 0, rational roots of unity (N | q-1), and
// the bounded smoothness probe on D_red.
inline ValidationReport validate(const CoverSpec& spec, std::uint32_t m_max) {
    ValidationReport rep;
    auto push = [&](std::string name, bool pass, std::string cert, std::string detail) {
        rep.checks.push_back({std::move(name), pass, std::move(cert), std::move(detail)});
    };

    const bool gcd_ok = spec.N >= 1 && spec.N % spec.field->p() != 0;
    push("gcd_N_p", gcd_ok, "exact",
         "N = " + std::to_string(spec.N) + ", p = " + std::to_string(spec.field->p()));

    const bool deg_ok = !spec.s.is_zero() && spec.s.num_vars() == spec.num_vars() &&
                        spec.s.degree() == spec.a * spec.N;
    push("section_degree", deg_ok, "exact",
         "deg s = " + std::to_string(spec.s.degree()) + ", a*N = " + std::to_string(spec.a * spec.N));

    auto divisor = spec.effective_divisor();
    if (spec.divisor) {
        bool consistent = false;
        std::string why;
        try {
            spec.divisor->validate();
            consistent = forms_associate(spec.divisor->full_form(), spec.s);
            why = consistent ? "product of components recovers s up to a scalar"
                             : "product of components differs from s";
        } catch (const error& e) {
            why = e.what();
        }
        push("divisor_consistent", consistent, "exact", why);
    }

    const long long h1 = spec.ambient_n >= 1
                             ? cohomology_dim(spec.ambient_n, static_cast<long long>(spec.a) * spec.N, 1)
                             : 0;
    push("h1_vanishing", h1 == 0, "exact",
         "h^1(P^" + std::to_string(spec.ambient_n) + ", O(" + std::to_string(spec.a * spec.N) +
             ")) = " + std::to_string(h1));

    const bool unity_ok = (spec.field->q() - 1) % spec.N == 0;
    push("roots_of_unity_rational", unity_ok, "exact",
         "N = " + std::to_string(spec.N) + ", q-1 = " + std::to_string(spec.field->q() - 1));

    if (deg_ok && divisor) {
        SingularProbe probe = singular_probe(*divisor, m_max);
        const bool exact_ok = probe.exact == SingularProbe::ExactStatus::confirmed_smooth;
        push("branch_smooth", probe.smooth_so_far(), exact_ok ? "exact" : "bounded",
             probe.kind_name() + (probe.point ? " " + probe.point->to_string() : "") +
                 (exact_ok ? "; exact elimination concurs" : "; searched m <= " +
                                                                 std::to_string(probe.m_searched)));
        rep.probe = std::move(probe);
    } else if (deg_ok) {
        SingularProbe probe =
            singular_probe(FactoredDivisor{{{spec.s, 1}}}, m_max);
        const bool exact_ok = probe.exact == SingularProbe::ExactStatus::confirmed_smooth;
        push("branch_smooth", probe.smooth_so_far(), exact_ok ? "exact" : "bounded",
             std::string("no factored divisor supplied; probed s as if reduced; ") +
                 probe.kind_name() + (exact_ok ? "; exact elimination concurs" : ""));
        rep.probe = std::move(probe);
    }

    return rep;
}

// Number of irreducible components of the cover: the maximal divisibility of
// the section.  Needs N | q-1 so that all roots of unity are rational and
// the count over F_q is the geometric one.
inline std::uint32_t component_count(const CoverSpec& spec) {
    spec.basic_checks();
    require((spec.field->q() - 1) % spec.N == 0, errc::prerequisite_failed,
            "component counting needs N | q-1 (roots of unity must be rational)");
    return max_divisibility(spec.s, spec.N).mu_max;
}

// Factorization of the cover through an unramified stage: s = t^mu with
// mu maximal, D = mu * D1, and the mu branch labels are the roots of unity.
struct CoverFactorization {
    std::uint32_t mu_max = 1;
    Form<FqElem> witness;
    std::vector<FqElem> branch_labels;
    std::optional<FactoredDivisor> d1;
    std::uint32_t unramified_degree = 1;
    std::uint32_t root_stage_degree = 1;
};

inline CoverFactorization factor_cover(const CoverSpec& spec) {
    spec.basic_checks();
    require((spec.field->q() - 1) % spec.N == 0, errc::prerequisite_failed,
            "cover factorization needs N | q-1");
    CoverFactorization out;
    auto md = max_divisibility(spec.s, spec.N);
    out.mu_max = md.mu_max;
    out.witness = md.witness;
    out.branch_labels = roots_of_unity(spec.field, md.mu_max);
    out.unramified_degree = md.mu_max;
    out.root_stage_degree = spec.N / md.mu_max;
    if (auto d = spec.effective_divisor()) {
        FactoredDivisor d1;
        bool exact = true;
        for (const auto& [f, m] : d->components) {
            if (m % md.mu_max != 0) {
                exact = false;
                break;
            }
            d1.components.emplace_back(f, m / md.mu_max);
        }
        if (exact) out.d1 = std::move(d1);
    }
    return out;
}

// Restriction of the cover to a curve target E ~ P^1: the section restricts
// to a binary form whose divisor is computed exactly; the two summand degree
// lists compare Spec B (the cover of E by the N-th root of s|_E) with the
// fiber algebra A|_E.
struct RestrictionReport {
    RestrictionTarget target;
    std::vector<std::string> names; // variable names on E
    Form<FqElem> restriction;
    std::uint32_t mu_max = 1;
    Form<FqElem> witness;
    std::uint32_t spec_b_components = 1;
    std::vector<std::pair<Form<FqElem>, std::uint32_t>> divisor_on_e; // irreducible, multiplicity
    std::vector<long long> b_degrees;
    std::vector<long long> a_e_degrees; // empty when the ambient divisor is unknown
    std::string a_e_note;
};

inline RestrictionReport restrict_cover(const CoverSpec& spec, const RestrictionTarget& target,
                                        const std::vector<std::string>& ambient_names) {
    spec.basic_checks();
    require((spec.field->q() - 1) % spec.N == 0, errc::prerequisite_failed,
            "restriction analysis needs N | q-1");
    Form<FqElem> r = restrict_form(spec.s, target);
    require(!r.is_zero(), errc::contained_in_branch_divisor,
            "target lies inside the branch divisor; restriction vanishes");
    require(r.num_vars() == 2, errc::prerequisite_failed,
            "summand degree lists need a target isomorphic to P^1 (a line in P^2 or a rational curve)");

    RestrictionReport rep;
    rep.target = target;
    rep.names = restricted_names(target, ambient_names);
    rep.restriction = r;

    auto md = max_divisibility(r, spec.N);
    rep.mu_max = md.mu_max;
    rep.witness = md.witness;
    rep.spec_b_components = md.mu_max;

    // divisor of s|_E on P^1, exactly
    FactorRng rng(0);
    auto [factors, lc] = univariate_factor(binary_dehomogenize(r), rng);
    std::uint32_t used = 0;
    for (const auto& [g, mult] : factors) {
        rep.divisor_on_e.emplace_back(binary_homogenize(g, static_cast<std::uint32_t>(g.deg())), mult);
        used += static_cast<std::uint32_t>(g.deg()) * mult;
    }
    if (used < r.degree())
        rep.divisor_on_e.emplace_back(Form<FqElem>::monomial(2, Exp{0, 1}, spec.field->one()),
                                      r.degree() - used);

    const std::uint32_t e = target_parameter_degree(target);
    for (std::uint32_t i = 0; i < spec.N; ++i) {
        long long deg = -static_cast<long long>(i) * spec.a * e;
        for (const auto& [g, mult] : rep.divisor_on_e)
            deg += static_cast<long long>(i * mult / spec.N) * g.degree();
        rep.b_degrees.push_back(deg);
    }

    if (auto d = spec.effective_divisor()) {
        for (std::uint32_t i = 0; i < spec.N; ++i) {
            long long deg = -static_cast<long long>(i) * spec.a * e;
            for (const auto& [comp, mult] : d->components)
                deg += static_cast<long long>(i * mult / spec.N) *
                       static_cast<long long>(comp.degree()) * e;
            rep.a_e_degrees.push_back(deg);
        }
    } else {
        rep.a_e_note = "ambient factored divisor not supplied; A|_E summand degrees unavailable";
    }
    return rep;
}

// Degree of K + ((N-1)/N) D on P^n with D of degree a*N: (N-1)*a - (n+1).
// Ample (hence the cover of general type) exactly when positive.  Stated for
// a smooth reduced branch divisor.
struct CanonicalReport {
    long long deg_pullback = 0;
    bool ample = false;
    bool general_type = false;
    bool reduced_verified = false;
};

inline CanonicalReport canonical_report(const CoverSpec& spec) {
    spec.basic_checks();
    CanonicalReport rep;
    if (auto d = spec.effective_divisor()) {
        require(d->reduced(), errc::non_reduced_branch,
                "canonical degree formula needs a reduced branch divisor");
        rep.reduced_verified = true;
    }
    rep.deg_pullback = static_cast<long long>(spec.N - 1) * spec.a -
                       (static_cast<long long>(spec.ambient_n) + 1);
    rep.ample = rep.deg_pullback > 0;
    rep.general_type = rep.ample;
    return rep;
}

} // namespace cyclift
