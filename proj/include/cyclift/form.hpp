#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "cyclift/errors.hpp"
#include "cyclift/fq.hpp"
#include "cyclift/upoly.hpp"

namespace cyclift {

using Exp = std::vector<std::uint32_t>;

inline std::uint32_t exp_total(const Exp& e) {
    std::uint32_t s = 0;
    for (std::uint32_t v : e) s += v;
    return s;
}

// Sparse homogeneous form in num_vars variables of fixed degree, over any
// coefficient ring E with value semantics.  Terms map exponent vectors to
// nonzero coefficients; the map's lexicographic key order makes rbegin() the
// leading term.  The zero form keeps its declared degree.
template <class E>
class Form {
public:
    Form() : num_vars_(0), degree_(0) {}
    Form(std::uint32_t num_vars, std::uint32_t degree) : num_vars_(num_vars), degree_(degree) {}

    static Form monomial(std::uint32_t num_vars, Exp e, E coeff) {
        Form f(num_vars, exp_total(e));
        require(e.size() == num_vars, errc::index_out_of_range, "exponent vector length");
        if (!coeff.is_zero()) f.terms_.emplace(std::move(e), std::move(coeff));
        return f;
    }

    std::uint32_t num_vars() const { return num_vars_; }
    std::uint32_t degree() const { return degree_; }
    const std::map<Exp, E>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // lexicographically greatest term
    const std::pair<const Exp, E>& lead() const {
        require(!terms_.empty(), errc::zero_polynomial, "leading term of the zero form");
        return *terms_.rbegin();
    }

    void add_term(Exp e, const E& coeff) {
        require(e.size() == num_vars_, errc::index_out_of_range, "exponent vector length");
        require(exp_total(e) == degree_, errc::not_homogeneous,
                "term degree " + std::to_string(exp_total(e)) + " in a form of degree " +
                    std::to_string(degree_));
        if (coeff.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool operator==(const Form& o) const {
        return num_vars_ == o.num_vars_ && degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const Form& o) const { return !(*this == o); }

    Form operator+(const Form& o) const {
        check_add(o);
        Form r(*this);
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    Form operator-() const {
        Form r(num_vars_, degree_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Form operator-(const Form& o) const { return *this + (-o); }

    Form operator*(const Form& o) const {
        require(num_vars_ == o.num_vars_, errc::degree_mismatch, "variable count mismatch");
        Form r(num_vars_, degree_ + o.degree_);
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : o.terms_) {
                Exp e(num_vars_);
                for (std::uint32_t i = 0; i < num_vars_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(std::move(e), c1 * c2);
            }
        }
        return r;
    }

    Form scaled(const E& s) const {
        Form r(num_vars_, degree_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) {
            E v = c * s;
            if (!v.is_zero()) r.terms_.emplace(e, std::move(v));
        }
        return r;
    }

    Form mul_int(long long k) const {
        Form r(num_vars_, degree_);
        for (const auto& [e, c] : terms_) {
            E v = c.mul_int(k);
            if (!v.is_zero()) r.terms_.emplace(e, std::move(v));
        }
        return r;
    }

    Form pow(std::uint32_t e) const {
        require(e >= 1, errc::index_out_of_range, "form power needs a positive exponent");
        Form r;
        bool have = false;
        Form b = *this;
        std::uint32_t k = e;
        while (k > 0) {
            if (k & 1) {
                r = have ? r * b : b;
                have = true;
            }
            if (k >>= 1) b = b * b;
        }
        if (r.is_zero()) return Form(num_vars_, degree_ * e);
        return r;
    }

    // formal partial derivative; homogeneous of degree-1 (zero form if it collapses)
    Form partial(std::uint32_t var) const {
        require(var < num_vars_, errc::index_out_of_range, "derivative variable");
        Form r(num_vars_, degree_ == 0 ? 0 : degree_ - 1);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            E v = c.mul_int(e[var]);
            if (v.is_zero()) continue;
            Exp d(e);
            d[var] -= 1;
            r.add_term(std::move(d), v);
        }
        return r;
    }

    std::vector<Form> partials() const {
        std::vector<Form> out;
        out.reserve(num_vars_);
        for (std::uint32_t i = 0; i < num_vars_; ++i) out.push_back(partial(i));
        return out;
    }

    template <class F>
    auto map_coeffs(F&& fn) const -> Form<decltype(fn(std::declval<E>()))> {
        using E2 = decltype(fn(std::declval<E>()));
        Form<E2> r(num_vars_, degree_);
        for (const auto& [e, c] : terms_) {
            E2 v = fn(c);
            if (!v.is_zero()) r.add_term(e, v);
        }
        return r;
    }

    // substitute variable i by images[i]; the images must be homogeneous of a
    // common degree in a common variable set
    Form compose(const std::vector<Form>& images) const {
        require(images.size() == num_vars_, errc::malformed_target, "one image per variable");
        const std::uint32_t target_vars = images.empty() ? 0 : images[0].num_vars();
        const std::uint32_t e = images.empty() ? 1 : images[0].degree();
        for (const Form& g : images)
            require(g.num_vars() == target_vars && g.degree() == e, errc::malformed_target,
                    "images must share variable count and degree");
        Form r(target_vars, degree_ * e);
        for (const auto& [exps, c] : terms_) {
            Form termval(target_vars, 0);
            bool first = true;
            for (std::uint32_t i = 0; i < num_vars_; ++i) {
                if (exps[i] == 0) continue;
                Form p = images[i].pow(exps[i]);
                termval = first ? std::move(p) : termval * p;
                first = false;
            }
            if (first) termval = Form::monomial(target_vars, Exp(target_vars, 0), c);
            else termval = termval.scaled(c);
            // termval may be the zero form; adding handles that
            require(termval.degree() == r.degree() || termval.is_zero(), errc::not_homogeneous,
                    "composition degree drift");
            for (const auto& [e2, c2] : termval.terms()) r.add_term(e2, c2);
        }
        return r;
    }

    template <class E2, class Embed>
    E2 evaluate(const std::vector<E2>& point, Embed&& embed) const {
        require(point.size() == num_vars_ && !point.empty(), errc::index_out_of_range,
                "point dimension");
        E2 acc = point[0] - point[0];
        for (const auto& [e, c] : terms_) {
            E2 t = embed(c);
            for (std::uint32_t i = 0; i < num_vars_; ++i)
                if (e[i] > 0) t = t * point[i].pow(e[i]);
            acc = acc + t;
        }
        return acc;
    }

    E evaluate(const std::vector<E>& point) const {
        return evaluate<E>(point, [](const E& c) { return c; });
    }

    // view the form as a univariate polynomial in variable `var`, all other
    // variables evaluated at the given coordinates
    template <class E2, class Embed>
    Upoly<E2> partial_eval(std::uint32_t var, const std::vector<E2>& point, Embed&& embed) const {
        require(var < num_vars_ && point.size() == num_vars_, errc::index_out_of_range,
                "partial evaluation arguments");
        E2 zero = point[0] - point[0];
        std::vector<E2> c(degree_ + 1, zero);
        for (const auto& [e, coeff] : terms_) {
            E2 t = embed(coeff);
            for (std::uint32_t i = 0; i < num_vars_; ++i)
                if (i != var && e[i] > 0) t = t * point[i].pow(e[i]);
            c[e[var]] = c[e[var]] + t;
        }
        return Upoly<E2>(std::move(c));
    }

private:
    void check_add(const Form& o) const {
        if (is_zero() || o.is_zero()) {
            require(num_vars_ == o.num_vars_, errc::degree_mismatch, "variable count mismatch");
            return;
        }
        require(num_vars_ == o.num_vars_ && degree_ == o.degree_, errc::degree_mismatch,
                "adding forms of degree " + std::to_string(degree_) + " and " +
                    std::to_string(o.degree_));
    }

    std::uint32_t num_vars_;
    std::uint32_t degree_;
    std::map<Exp, E> terms_;
};

// Exact division f / g when g divides f, by greedy leading-term elimination
// (valid for any monomial order compatible with multiplication).
template <class E>
std::optional<Form<E>> exact_divide(const Form<E>& f, const Form<E>& g) {
    require(!g.is_zero(), errc::division_by_zero, "form division by zero");
    if (f.is_zero()) return Form<E>(f.num_vars(), f.degree() >= g.degree() ? f.degree() - g.degree() : 0);
    if (f.degree() < g.degree() || f.num_vars() != g.num_vars()) return std::nullopt;
    const std::uint32_t nv = f.num_vars();
    Form<E> quot(nv, f.degree() - g.degree());
    Form<E> rem = f;
    const auto& glead = g.lead();
    const E glc_inv = glead.second.inv();
    while (!rem.is_zero()) {
        const auto& rlead = rem.lead();
        Exp qe(nv);
        for (std::uint32_t i = 0; i < nv; ++i) {
            if (rlead.first[i] < glead.first[i]) return std::nullopt;
            qe[i] = rlead.first[i] - glead.first[i];
        }
        Form<E> qt = Form<E>::monomial(nv, std::move(qe), rlead.second * glc_inv);
        quot = quot + qt;
        rem = rem - qt * g;
    }
    return quot;
}

// f is a scalar multiple of g (associates); both nonzero.
template <class E>
bool forms_associate(const Form<E>& f, const Form<E>& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    if (f.num_vars() != g.num_vars() || f.degree() != g.degree()) return false;
    return f.scaled(g.lead().second) == g.scaled(f.lead().second);
}

// --- binary forms <-> univariate polynomials -------------------------------

// f(u,v) = sum c_a u^a v^(d-a)  |->  P(T) = sum c_a T^a
template <class E>
Upoly<E> binary_dehomogenize(const Form<E>& f) {
    require(f.num_vars() == 2, errc::index_out_of_range, "binary form expected");
    if (f.is_zero()) return Upoly<E>();
    std::vector<E> c(f.degree() + 1, f.terms().begin()->second - f.terms().begin()->second);
    for (const auto& [e, coeff] : f.terms()) c[e[0]] = coeff;
    return Upoly<E>(std::move(c));
}

template <class E>
Form<E> binary_homogenize(const Upoly<E>& p, std::uint32_t degree) {
    Form<E> f(2, degree);
    for (int i = 0; i <= p.deg(); ++i) {
        if (p[static_cast<std::size_t>(i)].is_zero()) continue;
        require(static_cast<std::uint32_t>(i) <= degree, errc::degree_mismatch,
                "polynomial degree exceeds form degree");
        f.add_term(Exp{static_cast<std::uint32_t>(i), degree - static_cast<std::uint32_t>(i)},
                   p[static_cast<std::size_t>(i)]);
    }
    return f;
}

// --- divisors ---------------------------------------------------------------

// Effective divisor presented as irreducible components with multiplicities.
struct FactoredDivisor {
    std::vector<std::pair<Form<FqElem>, std::uint32_t>> components;

    void validate() const {
        for (std::size_t i = 0; i < components.size(); ++i) {
            require(components[i].second >= 1, errc::zero_input, "divisor multiplicity must be >= 1");
            require(!components[i].first.is_zero(), errc::zero_polynomial, "zero divisor component");
            for (std::size_t j = i + 1; j < components.size(); ++j)
                require(!forms_associate(components[i].first, components[j].first),
                        errc::malformed_target, "divisor components must be pairwise non-associate");
        }
    }

    // product of the distinct components, each once
    Form<FqElem> reduced_form() const {
        require(!components.empty(), errc::zero_input, "empty divisor");
        Form<FqElem> r = components[0].first;
        for (std::size_t i = 1; i < components.size(); ++i) r = r * components[i].first;
        return r;
    }

    Form<FqElem> full_form() const {
        require(!components.empty(), errc::zero_input, "empty divisor");
        Form<FqElem> r = components[0].first.pow(components[0].second);
        for (std::size_t i = 1; i < components.size(); ++i)
            r = r * components[i].first.pow(components[i].second);
        return r;
    }

    bool reduced() const {
        for (const auto& [f, m] : components)
            if (m > 1) return false;
        return true;
    }

    FactoredDivisor scaled(std::uint32_t k) const {
        FactoredDivisor d(*this);
        for (auto& [f, m] : d.components) m *= k;
        return d;
    }
};

// Q-divisor: components with exact rational coefficients.
using Rational = boost::rational<long long>;

inline long long rational_floor(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && (r.numerator() < 0) != (r.denominator() < 0)) --q;
    return q;
}

struct QDivisor {
    std::vector<std::pair<Form<FqElem>, Rational>> components;

    enum class Round { floor, ceil, frac };

    QDivisor rounded(Round mode) const {
        QDivisor out;
        for (const auto& [f, b] : components) {
            Rational v;
            switch (mode) {
            case Round::floor: v = Rational(rational_floor(b)); break;
            case Round::ceil: v = Rational(-rational_floor(-b)); break;
            case Round::frac: v = b - Rational(rational_floor(b)); break;
            }
            if (v != Rational(0)) out.components.emplace_back(f, v);
        }
        return out;
    }
};

} // namespace cyclift
