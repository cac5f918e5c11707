#pragma once

#include "capelli/algebra_kind.hpp"
#include "capelli/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace capelli {

// Dense exponent vector over the kind's canonical variables (row-major).
// A zero entry means the variable is absent.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(int nvars) : exps(static_cast<std::size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    }
    int operator[](int v) const { return exps[static_cast<std::size_t>(v)]; }
    int& operator[](int v) { return exps[static_cast<std::size_t>(v)]; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
        return r;
    }
};

// Lexicographic order with the larger leading exponent first, so that
// z11*z22 precedes z12*z21 and the constant term comes last.
struct LexOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return std::lexicographical_compare(a.exps.begin(), a.exps.end(), b.exps.begin(), b.exps.end(),
                                            std::greater<int>());
    }
};

// Degree first (ascending), lexicographic within a degree.
struct GradedOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return LexOrder{}(a, b);
    }
};

class Poly {
public:
    using TermMap = std::map<Monomial, Rational, LexOrder>;

    explicit Poly(AlgebraKind kind) : kind_(std::move(kind)) {}

    static Poly constant(const AlgebraKind& kind, const Rational& c) {
        Poly p(kind);
        p.add_term(Monomial(kind.num_vars()), c);
        return p;
    }
    static Poly one(const AlgebraKind& kind) { return constant(kind, 1); }
    static Poly monomial(const AlgebraKind& kind, const Monomial& m, const Rational& c = 1) {
        Poly p(kind);
        p.add_term(m, c);
        return p;
    }
    // z_{ab} with aliasing applied (type III may carry a sign).
    static Poly variable(const AlgebraKind& kind, int a, int b) {
        VarRef v = kind.var(a, b);
        Monomial m(kind.num_vars());
        m[v.index] = 1;
        return monomial(kind, m, v.sign);
    }

    const AlgebraKind& kind() const { return kind_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        require_same_kind(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        require_same_kind(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.require_same_kind(b);
        Poly r(a.kind_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Poly pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative polynomial power");
        Poly result = one(kind_);
        Poly base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.kind_ == b.kind_ && a.terms_ == b.terms_; }

    void require_same_kind(const Poly& o) const {
        if (!(kind_ == o.kind_))
            throw std::invalid_argument("kind mismatch: " + kind_.name() + " vs " + o.kind_.name());
    }

private:
    AlgebraKind kind_;
    TermMap terms_;
};

// Factor picked up by one power of the kind-convention derivative of a
// canonical variable: 2 for the type II diagonal (d_ii = 2 d/dz_ii), else 1.
inline int derivative_weight(const AlgebraKind& kind, int var) {
    if (kind.type() != KindType::II) return 1;
    const auto& [a, b] = kind.pair_of(var);
    return a == b ? 2 : 1;
}

// Apply the product of plain partial derivatives prod_v (d/dz_v)^{dm_v} to a
// single monomial. Returns nullopt when the result vanishes.
inline std::optional<std::pair<Monomial, Integer>> apply_plain_derivatives(const Monomial& dm, const Monomial& m) {
    Monomial out(m);
    Integer factor = 1;
    for (std::size_t v = 0; v < m.exps.size(); ++v) {
        int d = dm.exps[v];
        if (d == 0) continue;
        if (d > m.exps[v]) return std::nullopt;
        factor *= factorial_ratio(m.exps[v], m.exps[v] - d);
        out.exps[v] -= d;
    }
    return std::make_pair(std::move(out), std::move(factor));
}

// z_{ab} * f with canonicalization.
inline Poly mul_z(const Poly& f, int a, int b) {
    const AlgebraKind& kind = f.kind();
    VarRef v = kind.var(a, b);
    Poly r(kind);
    for (const auto& [m, c] : f.terms()) {
        Monomial out(m);
        out[v.index] += 1;
        r.add_term(out, v.sign == 1 ? c : Rational(-c));
    }
    return r;
}

// Plain d/dz_v on a canonical variable slot.
inline Poly plain_partial(const Poly& f, int var) {
    Poly r(f.kind());
    for (const auto& [m, c] : f.terms()) {
        int e = m[var];
        if (e == 0) continue;
        Monomial out(m);
        out[var] -= 1;
        r.add_term(out, c * e);
    }
    return r;
}

// d_{ab} f with the kind's convention: type I plain; type II (1+delta_ab) d/dz_ab;
// type III d_{ab} = d/dz_ab for a<b and d_{ba} = -d_{ab}.
inline Poly apply_partial(const Poly& f, int a, int b) {
    const AlgebraKind& kind = f.kind();
    VarRef v = kind.var(a, b);
    Poly r = plain_partial(f, v.index);
    int scale = v.sign * derivative_weight(kind, v.index);
    if (scale != 1) r *= Rational(scale);
    return r;
}

// <f|g>: replace each z in f by the kind-convention derivative, apply to g and
// evaluate at z=0. Only the term of g with the same monomial survives the
// evaluation, so the operator is applied to that term alone.
inline Rational bargmann_inner(const Poly& f, const Poly& g) {
    f.require_same_kind(g);
    const AlgebraKind& kind = f.kind();
    Rational total = 0;
    const Poly& small = f.size() <= g.size() ? f : g;
    const Poly& large = f.size() <= g.size() ? g : f;
    for (const auto& [m, cs] : small.terms()) {
        auto it = large.terms().find(m);
        if (it == large.terms().end()) continue;
        auto applied = apply_plain_derivatives(m, m);
        Integer factor = applied->second;
        for (int v = 0; v < kind.num_vars(); ++v) {
            int w = derivative_weight(kind, v);
            if (w != 1 && m[v] > 0) {
                Integer wp;
                mpz_ui_pow_ui(wp.get_mpz_t(), static_cast<unsigned long>(w), static_cast<unsigned long>(m[v]));
                factor *= wp;
            }
        }
        // coefficients are real, so conjugation is the identity
        total += cs * it->second * Rational(factor);
    }
    return total;
}

// Weight under the diagonal u(N) operators E_ii. For type I, `row` is the
// U(p) weight and `col` the U(q) weight under R_{aa} = -sum_i z_ia d_ia.
struct Weight {
    std::vector<int> row;
    std::vector<int> col;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend Weight operator+(Weight a, const Weight& b) {
        for (std::size_t i = 0; i < a.row.size(); ++i) a.row[i] += b.row[i];
        for (std::size_t i = 0; i < a.col.size(); ++i) a.col[i] += b.col[i];
        return a;
    }
};

inline Weight monomial_weight(const AlgebraKind& kind, const Monomial& m) {
    Weight w;
    w.row.assign(static_cast<std::size_t>(kind.rows()), 0);
    if (kind.type() == KindType::I) w.col.assign(static_cast<std::size_t>(kind.cols()), 0);
    for (int v = 0; v < kind.num_vars(); ++v) {
        int e = m[v];
        if (e == 0) continue;
        auto [a, b] = kind.pair_of(v);
        w.row[static_cast<std::size_t>(a - 1)] += e;
        if (kind.type() == KindType::I)
            w.col[static_cast<std::size_t>(b - 1)] -= e;
        else
            w.row[static_cast<std::size_t>(b - 1)] += e;
    }
    return w;
}

// Definite weight of f, or nullopt when the monomials disagree.
inline std::optional<Weight> weight(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("weight of the zero polynomial is undefined");
    std::optional<Weight> w;
    for (const auto& [m, c] : f.terms()) {
        Weight mw = monomial_weight(f.kind(), m);
        if (!w)
            w = std::move(mw);
        else if (!(*w == mw))
            return std::nullopt;
    }
    return w;
}

// Every monomial of total degree <= dmax in graded order.
inline std::vector<Monomial> monomials_up_to(const AlgebraKind& kind, int dmax) {
    std::vector<Monomial> out;
    int n = kind.num_vars();
    Monomial cur(n);
    std::function<void(int, int)> rec = [&](int v, int remaining) {
        if (v == n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[v] = e;
            rec(v + 1, remaining - e);
        }
        cur[v] = 0;
    };
    rec(0, dmax);
    std::sort(out.begin(), out.end(), GradedOrder{});
    return out;
}

}  // namespace capelli
