#pragma once

#include "capelli/poly.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

namespace capelli {

inline std::string monomial_to_string(const AlgebraKind& kind, const Monomial& m) {
    std::string s;
    for (int v = 0; v < kind.num_vars(); ++v) {
        if (m[v] == 0) continue;
        if (!s.empty()) s += " * ";
        auto [a, b] = kind.pair_of(v);
        s += "z[" + std::to_string(a) + "," + std::to_string(b) + "]";
        if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
    return s.empty() ? "1" : s;
}

// Terms in lexicographic monomial order: `c * z[a,b]^e * ...`, joined by
// " + " / " - ". The zero polynomial prints as "0".
inline std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational mag = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        s += to_string(mag);
        if (!m.is_one()) s += " * " + monomial_to_string(f.kind(), m);
    }
    return s;
}

namespace detail {

class PolyParser {
public:
    PolyParser(const AlgebraKind& kind, std::string_view text) : kind_(kind), text_(text) {}

    Poly parse() {
        Poly result(kind_);
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            result += parse_term() * Rational(sign);
            first = false;
            skip_ws();
        }
        return result;
    }

private:
    Poly parse_term() {
        Poly term = Poly::one(kind_);
        bool need_factor = true;
        while (need_factor) {
            skip_ws();
            if (at_end()) fail("dangling '*'");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                term *= parse_number();
            } else if (peek() == 'z') {
                term = term * parse_variable_power();
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            skip_ws();
            need_factor = !at_end() && peek() == '*';
            if (need_factor) ++pos_;
        }
        return term;
    }

    Rational parse_number() {
        std::size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
        return parse_rational(text_.substr(start, pos_ - start));
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    void expect(char c) {
        skip_ws();
        if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Poly parse_variable_power() {
        ++pos_;  // 'z'
        expect('[');
        int a = parse_int();
        expect(',');
        int b = parse_int();
        expect(']');
        skip_ws();
        int e = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            e = parse_int();
        }
        if (!kind_.valid_pair(a, b))
            fail("invalid index pair z[" + std::to_string(a) + "," + std::to_string(b) + "] for " + kind_.name());
        return Poly::variable(kind_, a, b).pow(e);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

    const AlgebraKind& kind_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(const AlgebraKind& kind, std::string_view text) {
    return detail::PolyParser(kind, text).parse();
}

}  // namespace capelli
