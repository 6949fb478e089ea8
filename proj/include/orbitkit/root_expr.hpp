#pragma once

// Textual root expressions: Euclidean terms "e<k>" ("e1+e3", "2e1",
// "(e1-e2-e3+e4)/2") and fundamental terms "a<k>" ("3a1+2a2"). An expression
// must name exactly one catalogued positive root of the active system.

#include <string>
#include <string_view>
#include <vector>

#include "orbitkit/root_system.hpp"

namespace orbitkit {

namespace detail {

struct ExprTerm {
    int coef = 1;
    char basis = 'e';  // 'e' Euclidean, 'a' fundamental
    int index = 0;     // 1-based
};

struct ParsedExpr {
    std::vector<ExprTerm> terms;
    bool halved = false;
};

inline ParsedExpr parse_expr_text(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty root expression");

    ParsedExpr out;
    std::size_t pos = 0;
    bool parenthesized = false;
    if (s[pos] == '(') {
        parenthesized = true;
        ++pos;
    }
    int sign = 1;
    bool expect_term = true;
    while (pos < s.size()) {
        const char c = s[pos];
        if (c == ')') break;
        if (c == '+' || c == '-') {
            if (expect_term && c == '-') {
                sign = -sign;
                ++pos;
                continue;
            }
            if (expect_term) throw ParseError("misplaced sign in '" + std::string(text) + "'");
            sign = (c == '-') ? -1 : 1;
            expect_term = true;
            ++pos;
            continue;
        }
        int coef = 1;
        bool saw_digits = false;
        int value = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            value = value * 10 + (s[pos] - '0');
            saw_digits = true;
            ++pos;
        }
        if (saw_digits) coef = value;
        if (pos >= s.size() || (s[pos] != 'e' && s[pos] != 'a'))
            throw ParseError("expected 'e<k>' or 'a<k>' in '" + std::string(text) + "'");
        const char basis = s[pos++];
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("missing index after '" + std::string(1, basis) + "' in '" +
                             std::string(text) + "'");
        int index = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            index = index * 10 + (s[pos++] - '0');
        out.terms.push_back(ExprTerm{sign * coef, basis, index});
        sign = 1;
        expect_term = false;
    }
    if (parenthesized) {
        if (pos >= s.size() || s[pos] != ')')
            throw ParseError("unbalanced parenthesis in '" + std::string(text) + "'");
        ++pos;
        if (pos + 1 < s.size() && s[pos] == '/' && s[pos + 1] == '2') {
            out.halved = true;
            pos += 2;
        }
    }
    if (pos != s.size()) throw ParseError("trailing input in '" + std::string(text) + "'");
    if (out.terms.empty()) throw ParseError("no terms in '" + std::string(text) + "'");
    return out;
}

} // namespace detail

// Parses a root expression against a system; the result must be a catalogued
// positive root.
inline Root parse_root(const RootSystem& rs, std::string_view text) {
    const detail::ParsedExpr expr = detail::parse_expr_text(text);
    std::vector<int> d(static_cast<std::size_t>(rs.ambient_dim()), 0);
    for (const detail::ExprTerm& t : expr.terms) {
        if (t.basis == 'e') {
            if (t.index < 1 || t.index > rs.ambient_dim())
                throw ParseError("coordinate index out of range in '" + std::string(text) + "'");
            d[static_cast<std::size_t>(t.index - 1)] += 2 * t.coef;
        } else {
            if (t.index < 1 || t.index > rs.rank())
                throw ParseError("fundamental index out of range in '" + std::string(text) + "'");
            const std::vector<int> fd = rs.dcoords(rs.fundamental(t.index));
            for (std::size_t k = 0; k < d.size(); ++k) d[k] += t.coef * fd[k];
        }
    }
    if (expr.halved) {
        for (int& x : d) {
            if (x % 2 != 0) throw ParseError("'" + std::string(text) + "' does not lie in the lattice");
            x /= 2;
        }
    }
    auto r = rs.find_root(d);
    if (!r) throw ParseError("'" + std::string(text) + "' is not a root of " + rs.id().name());
    if (!r->positive())
        throw ParseError("'" + std::string(text) + "' names a negative root of " + rs.id().name());
    return *r;
}

// Comma-separated list of root expressions.
inline std::vector<Root> parse_root_list(const RootSystem& rs, std::string_view text) {
    std::vector<Root> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(') ++depth;
        if (i < text.size() && text[i] == ')') --depth;
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            const std::string_view piece = text.substr(start, i - start);
            if (!piece.empty()) out.push_back(parse_root(rs, piece));
            start = i + 1;
        }
    }
    if (out.empty()) throw ParseError("empty root list");
    return out;
}

// Canonical textual form; parse_root(format_root(r)) == r. G2 prints in
// fundamental coordinates (its hyperplane realization is unreadable in
// Euclidean terms); every other family prints Euclidean.
inline std::string format_root(const RootSystem& rs, Root r) {
    if (rs.id().family == Family::G) {
        const std::vector<int> f = rs.fcoords(r);
        std::string body;
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (f[k] == 0) continue;
            if (!body.empty() || f[k] < 0) body += (f[k] < 0 ? "-" : "+");
            if (std::abs(f[k]) != 1) body += std::to_string(std::abs(f[k]));
            body += "a" + std::to_string(k + 1);
        }
        if (!body.empty() && body.front() == '+') body.erase(body.begin());
        return body;
    }
    const std::vector<int> d = rs.dcoords(r);
    bool halved = false;
    for (int x : d)
        if (x % 2 != 0) {
            halved = true;
            break;
        }
    std::string body;
    for (std::size_t k = 0; k < d.size(); ++k) {
        const int c = halved ? d[k] : d[k] / 2;
        if (c == 0) continue;
        if (!body.empty() || c < 0) body += (c < 0 ? "-" : "+");
        if (std::abs(c) != 1) body += std::to_string(std::abs(c));
        body += "e" + std::to_string(k + 1);
    }
    if (!body.empty() && body.front() == '+') body.erase(body.begin());
    return halved ? "(" + body + ")/2" : body;
}

inline std::string format_root_list(const RootSystem& rs, const std::vector<Root>& roots) {
    std::string out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i) out += ",";
        out += format_root(rs, roots[i]);
    }
    return out;
}

} // namespace orbitkit
