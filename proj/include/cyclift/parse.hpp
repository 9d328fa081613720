#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclift/form.hpp"
#include "cyclift/fq.hpp"

namespace cyclift {

// Polynomial text grammar shared by the CLI and the report printers:
//   integer coefficients, variables from a declared name list (x,y,z,w or
//   x0..x9 by default), 'g' for the coefficient-field generator, '*', '^',
//   parentheses, and unary minus.  A Witt-coordinate form is written
//   F + p*(G), with the p*(...) summands only allowed at the top level;
//   tau(F) is accepted as an explicit spelling of a Teichmueller summand.

inline std::vector<std::string> default_var_names(std::uint32_t num_vars) {
    if (num_vars <= 4) {
        static const std::vector<std::string> xyzw{"x", "y", "z", "w"};
        return std::vector<std::string>(xyzw.begin(), xyzw.begin() + num_vars);
    }
    std::vector<std::string> names;
    names.reserve(num_vars);
    for (std::uint32_t i = 0; i < num_vars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

namespace detail {

// mixed-degree polynomial accumulator used only while parsing
struct PolyBag {
    std::uint32_t num_vars = 0;
    std::map<Exp, FqElem> terms;

    void add(const Exp& e, const FqElem& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    PolyBag operator+(const PolyBag& o) const {
        PolyBag r(*this);
        for (const auto& [e, c] : o.terms) r.add(e, c);
        return r;
    }

    PolyBag negated() const {
        PolyBag r;
        r.num_vars = num_vars;
        for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
        return r;
    }

    PolyBag operator*(const PolyBag& o) const {
        PolyBag r;
        r.num_vars = num_vars;
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms) {
                Exp e(num_vars);
                for (std::uint32_t i = 0; i < num_vars; ++i) e[i] = e1[i] + e2[i];
                r.add(e, c1 * c2);
            }
        return r;
    }

};

struct Token {
    enum class Kind { integer, ident, op, end };
    Kind kind;
    std::uint64_t value = 0;  // integer
    std::string text;         // ident or op
    std::size_t offset = 0;
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            std::uint64_t v = 0;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                v = v * 10 + static_cast<std::uint64_t>(src[i] - '0');
                if (v > (1ull << 40))
                    throw parse_error(errc::syntax_error, "integer literal too large", start);
                ++i;
            }
            out.push_back({Token::Kind::integer, v, "", start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            std::string name;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])))) {
                name += src[i];
                ++i;
            }
            out.push_back({Token::Kind::ident, 0, name, start});
            continue;
        }
        if (c == '+' || c == '-' || c == '*' || c == '^' || c == '(' || c == ')') {
            out.push_back({Token::Kind::op, 0, std::string(1, c), i});
            ++i;
            continue;
        }
        throw parse_error(errc::syntax_error, std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Token::Kind::end, 0, "", src.size()});
    return out;
}

class FormParser {
public:
    FormParser(const std::string& text, Field field, std::vector<std::string> names)
        : field_(std::move(field)), names_(std::move(names)), tokens_(tokenize(text)) {}

    // returns (base, correction); correction stays empty unless allow_w2
    std::pair<PolyBag, PolyBag> parse(bool allow_w2) {
        PolyBag base = empty_bag();
        PolyBag corr = empty_bag();
        bool negative = accept_op("-");
        for (;;) {
            if (allow_w2 && peek_is_p_summand()) {
                PolyBag g = parse_p_summand();
                corr = corr + (negative ? g.negated() : g);
            } else {
                PolyBag t = parse_term(allow_w2);
                base = base + (negative ? t.negated() : t);
            }
            if (accept_op("+")) {
                negative = false;
            } else if (accept_op("-")) {
                negative = true;
            } else {
                break;
            }
        }
        expect_end();
        return {std::move(base), std::move(corr)};
    }

private:
    PolyBag empty_bag() const {
        PolyBag b;
        b.num_vars = static_cast<std::uint32_t>(names_.size());
        return b;
    }

    PolyBag bag_const(const FqElem& c) const {
        PolyBag b = empty_bag();
        b.add(Exp(b.num_vars, 0), c);
        return b;
    }

    PolyBag bag_pow(const PolyBag& b, std::uint64_t k) const {
        PolyBag acc = bag_const(field_->one());
        for (std::uint64_t i = 0; i < k; ++i) acc = acc * b;
        return acc;
    }

    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }

    bool accept_op(const std::string& s) {
        if (peek().kind == Token::Kind::op && peek().text == s) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_op(const std::string& s) {
        if (!accept_op(s))
            throw parse_error(errc::syntax_error, "expected '" + s + "'", peek().offset);
    }

    void expect_end() {
        if (peek().kind != Token::Kind::end)
            throw parse_error(errc::syntax_error, "trailing input", peek().offset);
    }

    bool peek_is_p_summand() const {
        return peek().kind == Token::Kind::ident && peek().text == "p" &&
               peek(1).kind == Token::Kind::op && peek(1).text == "*" &&
               peek(2).kind == Token::Kind::op && peek(2).text == "(";
    }

    PolyBag parse_p_summand() {
        ++pos_; // p
        expect_op("*");
        expect_op("(");
        PolyBag inner = parse_expr();
        expect_op(")");
        return inner;
    }

    // additive expression, no p*(...) summands
    PolyBag parse_expr() {
        bool negative = accept_op("-");
        PolyBag acc = empty_bag();
        for (;;) {
            PolyBag t = parse_term(false);
            acc = acc + (negative ? t.negated() : t);
            if (accept_op("+")) {
                negative = false;
            } else if (accept_op("-")) {
                negative = true;
            } else {
                break;
            }
        }
        return acc;
    }

    PolyBag parse_term(bool allow_w2) {
        PolyBag acc = parse_factor(allow_w2);
        while (accept_op("*")) acc = acc * parse_factor(allow_w2);
        return acc;
    }

    PolyBag parse_factor(bool allow_w2) {
        PolyBag base = parse_atom(allow_w2);
        if (accept_op("^")) {
            const Token& t = peek();
            if (t.kind != Token::Kind::integer)
                throw parse_error(errc::syntax_error, "expected integer exponent", t.offset);
            if (t.value > 4096)
                throw parse_error(errc::syntax_error, "exponent too large", t.offset);
            ++pos_;
            base = bag_pow(base, t.value);
        }
        return base;
    }

    PolyBag parse_atom(bool allow_w2) {
        const Token& t = peek();
        if (t.kind == Token::Kind::integer) {
            ++pos_;
            return bag_const(field_->from_int(static_cast<long long>(t.value)));
        }
        if (t.kind == Token::Kind::op && t.text == "(") {
            ++pos_;
            PolyBag inner = parse_expr();
            expect_op(")");
            return inner;
        }
        if (t.kind == Token::Kind::ident) {
            if (t.text == "g") {
                ++pos_;
                return bag_const(field_->gen());
            }
            if (t.text == "tau" && peek(1).kind == Token::Kind::op && peek(1).text == "(") {
                if (!allow_w2)
                    throw parse_error(errc::syntax_error, "tau(...) is only valid in a Witt form",
                                      t.offset);
                ++pos_;
                expect_op("(");
                PolyBag inner = parse_expr();
                expect_op(")");
                return inner;
            }
            if (t.text == "p")
                throw parse_error(errc::syntax_error,
                                  "p*(...) must appear as a top-level summand", t.offset);
            for (std::size_t v = 0; v < names_.size(); ++v) {
                if (names_[v] == t.text) {
                    ++pos_;
                    Exp e(names_.size(), 0);
                    e[v] = 1;
                    PolyBag b = empty_bag();
                    b.add(e, field_->one());
                    return b;
                }
            }
            throw parse_error(errc::unknown_variable, "unknown variable '" + t.text + "'", t.offset);
        }
        throw parse_error(errc::syntax_error, "expected a coefficient, variable or '('", t.offset);
    }

    Field field_;
    std::vector<std::string> names_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

inline Form<FqElem> bag_to_form(const PolyBag& bag, std::optional<std::uint32_t> declared_degree,
                                const std::string& what) {
    std::uint32_t deg = 0;
    bool first = true;
    for (const auto& [e, c] : bag.terms) {
        const std::uint32_t d = exp_total(e);
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            raise(errc::not_homogeneous, what + " mixes degrees " + std::to_string(deg) + " and " +
                                              std::to_string(d));
        }
    }
    if (first) deg = declared_degree.value_or(0); // zero polynomial
    if (declared_degree && !first && deg != *declared_degree)
        raise(errc::not_homogeneous, what + " has degree " + std::to_string(deg) +
                                         ", declared " + std::to_string(*declared_degree));
    Form<FqElem> f(bag.num_vars, declared_degree.value_or(deg));
    for (const auto& [e, c] : bag.terms) f.add_term(e, c);
    return f;
}

} // namespace detail

inline Form<FqElem> parse_form(const std::string& text, const Field& field,
                               const std::vector<std::string>& var_names,
                               std::optional<std::uint32_t> declared_degree = std::nullopt) {
    detail::FormParser p(text, field, var_names);
    auto [base, corr] = p.parse(false);
    return detail::bag_to_form(base, declared_degree, "polynomial");
}

// Witt form "F + p*(G)"; returns the residue part F and the correction G.
inline std::pair<Form<FqElem>, Form<FqElem>> parse_w2_form(
    const std::string& text, const Field& field, const std::vector<std::string>& var_names,
    std::optional<std::uint32_t> declared_degree = std::nullopt) {
    detail::FormParser p(text, field, var_names);
    auto [base, corr] = p.parse(true);
    Form<FqElem> b = detail::bag_to_form(base, declared_degree, "residue part");
    Form<FqElem> c = detail::bag_to_form(corr, b.is_zero() ? declared_degree
                                                           : std::optional<std::uint32_t>(b.degree()),
                                         "correction part");
    return {std::move(b), std::move(c)};
}

// --- printing ---------------------------------------------------------------

inline std::string coeff_to_string(const FqElem& c) {
    std::string s = c.to_string();
    if (s.find(' ') != std::string::npos) return "(" + s + ")";
    return s;
}

inline std::string form_to_string(const Form<FqElem>& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += " + ";
        std::string monom;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!monom.empty()) monom += "*";
            monom += names[i];
            if (e[i] > 1) monom += "^" + std::to_string(e[i]);
        }
        const std::string cs = coeff_to_string(c);
        if (monom.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += monom;
        } else {
            out += cs + "*" + monom;
        }
    }
    return out;
}

inline std::string w2_form_to_string(const Form<FqElem>& base, const Form<FqElem>& corr,
                                     const std::vector<std::string>& names) {
    std::string s = form_to_string(base, names);
    if (!corr.is_zero()) s += " + p*(" + form_to_string(corr, names) + ")";
    return s;
}

} // namespace cyclift
