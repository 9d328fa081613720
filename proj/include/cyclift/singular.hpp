#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclift/ext.hpp"
#include "cyclift/factor.hpp"
#include "cyclift/form.hpp"
#include "cyclift/projective.hpp"

namespace cyclift {

// Verdict of the singular-locus probe.  Enumeration up to the extension
// bound is a semi-decision: "no singular point found" certifies only the
// searched range.  For plane curves of degree <= 6 an exact elimination pass
// can upgrade the verdict; a singularity it detects beyond the search bound
// is reported without explicit coordinates.
struct SingularProbe {
    enum class Kind { no_singular_point_found, singular_at, singular_over_extension };
    enum class ExactStatus { not_run, confirmed_smooth, confirmed_singular, inconclusive };

    Kind kind = Kind::no_singular_point_found;
    std::uint32_t m_searched = 0;
    std::optional<ProjPoint> point;
    std::string note;
    ExactStatus exact = ExactStatus::not_run;
    std::string exact_note;

    bool smooth_so_far() const { return kind == Kind::no_singular_point_found; }

    std::string kind_name() const {
        switch (kind) {
        case Kind::no_singular_point_found: return "no_singular_point_found";
        case Kind::singular_at: return "singular_at";
        case Kind::singular_over_extension: return "singular_over_extension";
        }
        return "?";
    }

    std::string exact_name() const {
        switch (exact) {
        case ExactStatus::not_run: return "not_run";
        case ExactStatus::confirmed_smooth: return "confirmed_smooth";
        case ExactStatus::confirmed_singular: return "confirmed_singular";
        case ExactStatus::inconclusive: return "inconclusive";
        }
        return "?";
    }
};

namespace detail {

inline std::optional<FqElem> ext_constant(const ExtElem& e) {
    for (std::size_t i = 1; i < e.coeffs().size(); ++i)
        if (!e.coeffs()[i].is_zero()) return std::nullopt;
    return e.coeffs()[0];
}

// Exact emptiness test for the common zero locus of a family of ternary
// forms, one of which does not vanish at [0:0:1] after a coordinate change.
// Strategy: eliminate z against the anchor form by specializing and
// interpolating the z-resultants, collect candidate [x:y] classes from the
// gcd of those resultants, and verify each class by a univariate gcd over
// the exact residue field.
class PlaneSystemProbe {
public:
    PlaneSystemProbe(std::vector<Form<FqElem>> system, Field field)
        : system_(std::move(system)), field_(std::move(field)) {}

    // returns {has_common_zero, note}; nullopt when inconclusive
    std::optional<std::pair<bool, std::string>> run() {
        for (const auto& f : system_)
            if (!f.is_zero() && f.degree() == 0) return {{false, "a unit constant lies in the system"}};

        // anchor point off the first form
        const Form<FqElem>& anchor = system_[0];
        std::optional<std::vector<FqElem>> off;
        ExtField triv = make_extension(field_, 1);
        enumerate_proj_points(triv, 3, [&](const std::vector<ExtElem>& pt) {
            std::vector<FqElem> p;
            for (const auto& c : pt) p.push_back(*ext_constant(c));
            if (!anchor.evaluate(p).is_zero()) {
                off = std::move(p);
                return false;
            }
            return true;
        });
        if (!off) return std::nullopt; // the anchor vanishes on every rational point

        transform_to_anchor(*off);

        const Form<FqElem>& F = system_[0];
        const std::uint32_t df = F.degree();
        std::vector<Upoly<FqElem>> resultants;
        for (std::size_t i = 1; i < system_.size(); ++i) {
            auto r = resultant_with_anchor(system_[i]);
            if (!r) return std::nullopt; // shared factor with the anchor: give up exactness
            resultants.push_back(std::move(*r));
        }

        Upoly<FqElem> G;
        for (const auto& r : resultants) G = G.is_zero() ? r.monic() : gcd_monic(G, r);
        if (resultants.empty()) G = Upoly<FqElem>(); // system == {anchor}: every direction matters

        // candidate [x:y] classes: always the two frame points, plus the
        // roots of G by irreducible factor
        if (auto note = check_candidate_rational(field_->one(), field_->zero()))
            return {{true, *note}};
        if (auto note = check_candidate_rational(field_->zero(), field_->one()))
            return {{true, *note}};
        if (!G.is_zero() && G.deg() > 0) {
            FactorRng rng(0);
            auto [factors, lc] = univariate_factor(G, rng);
            for (const auto& [m, mult] : factors) {
                if (m.deg() == 1) {
                    // rational root T = -c0
                    FqElem root = -m[0];
                    if (auto note = check_candidate_rational(root, field_->one()))
                        return {{true, *note}};
                } else {
                    std::vector<FqElem> mod(m.coeffs());
                    ExtField K = make_extension(field_, static_cast<std::uint32_t>(m.deg()),
                                                std::move(mod));
                    if (check_candidate(K, K->gen(), K->one()))
                        return {{true, "common zero with x/y of minimal degree " +
                                           std::to_string(m.deg())}};
                }
            }
        } else if (G.is_zero() && resultants.empty() && df > 0) {
            // a single curve always has points over the closure
            return {{true, "system is a single positive-degree form"}};
        }
        return {{false, "eliminant gcd has no surviving root class"}};
    }

private:
    void transform_to_anchor(const std::vector<FqElem>& p) {
        // invertible matrix with third column p; the other two columns are
        // the standard vectors away from p's pivot
        std::size_t pivot = 0;
        while (p[pivot].is_zero()) ++pivot;
        std::vector<std::uint32_t> others;
        for (std::uint32_t i = 0; i < 3; ++i)
            if (i != pivot) others.push_back(i);
        std::vector<Form<FqElem>> images;
        for (std::uint32_t row = 0; row < 3; ++row) {
            Form<FqElem> img(3, 1);
            for (std::uint32_t col = 0; col < 2; ++col) {
                if (others[col] == row) {
                    Exp e(3, 0);
                    e[col] = 1;
                    img.add_term(std::move(e), field_->one());
                }
            }
            if (!p[row].is_zero()) {
                Exp e(3, 0);
                e[2] = 1;
                img.add_term(std::move(e), p[row]);
            }
            images.push_back(std::move(img));
        }
        for (auto& f : system_) f = f.compose(images);
    }

    // Res_z(anchor, B) as a univariate polynomial in T = x/y, via
    // specialize-and-interpolate.  The anchor's z-leading coefficient is a
    // nonzero constant, so specialization commutes with the resultant up to
    // the classical degree-drop factor on B.
    std::optional<Upoly<FqElem>> resultant_with_anchor(const Form<FqElem>& B) {
        const Form<FqElem>& F = system_[0];
        const std::uint32_t df = F.degree();
        std::uint32_t eb = 0;
        for (const auto& [e, c] : B.terms()) eb = std::max(eb, e[2]);
        const std::uint32_t samples = df * B.degree() + 1;
        std::uint32_t m = 1;
        std::uint64_t size = field_->q();
        while (size < samples) {
            size *= field_->q();
            ++m;
        }
        ExtField K = make_extension(field_, m);
        auto embed = [&](const FqElem& c) { return K->embed(c); };
        const ExtElem one = K->one();

        std::vector<ExtElem> xs, ys;
        for (std::uint32_t tix = 0; tix < samples; ++tix) {
            ExtElem x0 = K->element_at(tix);
            std::vector<ExtElem> at{x0, one, one};
            Upoly<ExtElem> Fz = F.partial_eval(2, at, embed);
            Upoly<ExtElem> Bz = B.partial_eval(2, at, embed);
            ExtElem v = K->zero();
            if (!Bz.is_zero()) {
                ExtElem lcF = Fz.lead(); // constant across samples, nonzero
                v = resultant(Fz, Bz, one);
                for (std::uint32_t k = static_cast<std::uint32_t>(Bz.deg()); k < eb; ++k)
                    v = v * lcF;
            }
            xs.push_back(std::move(x0));
            ys.push_back(std::move(v));
        }
        Upoly<ExtElem> R = interpolate(xs, ys, one);
        if (R.is_zero()) return std::nullopt;
        std::vector<FqElem> coeffs;
        for (int i = 0; i <= R.deg(); ++i) {
            auto c = ext_constant(R[static_cast<std::size_t>(i)]);
            if (!c) return std::nullopt; // defensive: must be rational
            coeffs.push_back(*c);
        }
        return Upoly<FqElem>(std::move(coeffs));
    }

    std::optional<std::string> check_candidate_rational(const FqElem& x0, const FqElem& y0) {
        ExtField triv = make_extension(field_, 1);
        if (check_candidate(triv, triv->embed(x0), triv->embed(y0)))
            return "common zero above [" + x0.to_string() + ":" + y0.to_string() + ":*]";
        return std::nullopt;
    }

    bool check_candidate(const ExtField& K, const ExtElem& x0, const ExtElem& y0) {
        auto embed = [&](const FqElem& c) { return K->embed(c); };
        Upoly<ExtElem> g;
        for (const auto& f : system_) {
            if (f.is_zero()) continue;
            std::vector<ExtElem> at{x0, y0, K->one()};
            Upoly<ExtElem> fz = f.partial_eval(2, at, embed);
            g = g.is_zero() ? (fz.is_zero() ? g : fz.monic()) : gcd_monic(g, fz);
            if (!g.is_zero() && g.deg() == 0) return false;
        }
        // zero gcd: every form vanishes on the whole line; positive degree:
        // a common root exists over a further extension
        return true;
    }

    std::vector<Form<FqElem>> system_;
    Field field_;
};

} // namespace detail

// Exact smoothness decision for a squarefree plane curve (3 variables); the
// system is the curve together with its partials.
inline std::pair<SingularProbe::ExactStatus, std::string> exact_plane_smoothness(
    const Form<FqElem>& f_red) {
    using ES = SingularProbe::ExactStatus;
    if (f_red.num_vars() != 3 || f_red.degree() > 6 || f_red.degree() == 0 || f_red.is_zero())
        return {ES::not_run, ""};
    const Field field = f_red.lead().second.field();
    std::vector<Form<FqElem>> system{f_red};
    for (auto& d : f_red.partials())
        if (!d.is_zero()) system.push_back(std::move(d));
    if (system.size() == 1)
        return {ES::inconclusive, "all partials vanish identically"};
    detail::PlaneSystemProbe probe(std::move(system), field);
    auto verdict = probe.run();
    if (!verdict) return {ES::inconclusive, "degenerate elimination"};
    if (verdict->first) return {ES::confirmed_singular, verdict->second};
    return {ES::confirmed_smooth, verdict->second};
}

// Bounded search for singular points of D_red: enumerate P^n(F_{q^m}) for
// m <= m_max and flag any point where the reduced form and all its partials
// vanish, or which lies on two distinct components.  Exact confirmation is
// attached for plane curves of degree <= 6.
inline SingularProbe singular_probe(const FactoredDivisor& D, std::uint32_t m_max,
                                    std::uint64_t point_budget = (1ull << 24)) {
    require(m_max >= 1, errc::index_out_of_range, "extension bound must be >= 1");
    D.validate();
    const Form<FqElem> f_red = D.reduced_form();
    const Field field = f_red.lead().second.field();
    const std::uint32_t nv = f_red.num_vars();
    std::vector<Form<FqElem>> parts = f_red.partials();

    SingularProbe out;
    std::uint64_t spent = 0;
    for (std::uint32_t m = 1; m <= m_max; ++m) {
        unsigned __int128 sz = 1;
        for (std::uint32_t i = 0; i < m; ++i) sz *= field->q();
        unsigned __int128 count = 0, pw = 1;
        for (std::uint32_t i = 0; i < nv; ++i) {
            count += pw;
            pw *= sz;
        }
        if (count > static_cast<unsigned __int128>(point_budget - spent)) {
            out.note = "point budget reached before m = " + std::to_string(m);
            break;
        }
        spent += static_cast<std::uint64_t>(count);

        ExtField K = make_extension(field, m);
        auto embed = [&](const FqElem& c) { return K->embed(c); };
        bool found = false;
        enumerate_proj_points(K, nv, [&](const std::vector<ExtElem>& pt) {
            if (!f_red.evaluate<ExtElem>(pt, embed).is_zero()) return true;
            bool all_partials_zero = true;
            for (const auto& d : parts) {
                if (d.is_zero()) continue;
                if (!d.evaluate<ExtElem>(pt, embed).is_zero()) {
                    all_partials_zero = false;
                    break;
                }
            }
            std::uint32_t on_components = 0;
            if (!all_partials_zero && D.components.size() > 1) {
                for (const auto& [comp, mult] : D.components)
                    if (comp.evaluate<ExtElem>(pt, embed).is_zero()) ++on_components;
            }
            if (all_partials_zero || on_components >= 2) {
                out.kind = SingularProbe::Kind::singular_at;
                out.point = ProjPoint{pt, m};
                found = true;
                return false;
            }
            return true;
        });
        out.m_searched = m;
        if (found) break;
    }

    auto [status, note] = exact_plane_smoothness(f_red);
    out.exact = status;
    out.exact_note = note;
    if (status == SingularProbe::ExactStatus::confirmed_singular &&
        out.kind == SingularProbe::Kind::no_singular_point_found) {
        out.kind = SingularProbe::Kind::singular_over_extension;
        out.note = note;
    }
    return out;
}

} // namespace cyclift
