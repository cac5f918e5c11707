#pragma once

#include "capelli/combinatorics.hpp"
#include "capelli/weyl_core.hpp"

#include <map>
#include <string>
#include <vector>

namespace capelli {

// Constant-coefficient differential operator, stored as a polynomial in the
// plain derivatives d/dz_v of the canonical variables. Kind conventions
// (type II diagonal factor 2, type III alias sign) are folded into the
// coefficients when the operator is built.
class DiffOp {
public:
    using TermMap = std::map<Monomial, Rational, LexOrder>;

    explicit DiffOp(AlgebraKind kind) : kind_(std::move(kind)) {}

    static DiffOp identity(const AlgebraKind& kind) {
        DiffOp d(kind);
        d.add_term(Monomial(kind.num_vars()), 1);
        return d;
    }
    // Kind-convention d_{ab}.
    static DiffOp partial(const AlgebraKind& kind, int a, int b) {
        VarRef v = kind.var(a, b);
        Monomial m(kind.num_vars());
        m[v.index] = 1;
        DiffOp d(kind);
        d.add_term(m, v.sign * derivative_weight(kind, v.index));
        return d;
    }

    const AlgebraKind& kind() const { return kind_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly apply(const Poly& f) const {
        if (!(f.kind() == kind_)) throw std::invalid_argument("kind mismatch applying DiffOp");
        Poly r(kind_);
        for (const auto& [dm, dc] : terms_)
            for (const auto& [m, c] : f.terms()) {
                auto res = apply_plain_derivatives(dm, m);
                if (res) r.add_term(res->first, dc * c * Rational(res->second));
            }
        return r;
    }

    friend DiffOp operator*(const DiffOp& a, const DiffOp& b) {
        DiffOp r(a.kind_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend DiffOp operator+(DiffOp a, const DiffOp& b) {
        for (const auto& [m, c] : b.terms_) a.add_term(m, c);
        return a;
    }
    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.kind_ == b.kind_ && a.terms_ == b.terms_; }

    DiffOp pow(int e) const {
        DiffOp r = identity(kind_);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

private:
    AlgebraKind kind_;
    TermMap terms_;
};

inline void require_det_size(const AlgebraKind& kind, int n) {
    if (n < 1) throw std::invalid_argument("determinant size must be at least 1");
    if (kind.type() == KindType::I && n > kind.rank())
        throw std::invalid_argument("n exceeds min(p,q) for " + kind.name());
    if (kind.type() != KindType::I && n > kind.size())
        throw std::invalid_argument("n exceeds N for " + kind.name());
    if (n > 6) throw std::invalid_argument("determinant expansion supports n <= 6");
}

// x_n = det(z_ij), i,j = 1..n. Type III odd n gives the zero polynomial.
inline Poly det_z(const AlgebraKind& kind, int n) {
    require_det_size(kind, n);
    Poly r(kind);
    for_each_permutation(n, [&](const std::vector<int>& perm, int sign) {
        Monomial m(kind.num_vars());
        int coeff = sign;
        for (int i = 1; i <= n; ++i) {
            int j = perm[static_cast<std::size_t>(i - 1)];
            if (!kind.valid_pair(i, j)) return;
            VarRef v = kind.var(i, j);
            m[v.index] += 1;
            coeff *= v.sign;
        }
        r.add_term(m, coeff);
    });
    return r;
}

// nabla_n = det(d_ij) with kind-convention derivatives.
inline DiffOp det_partial(const AlgebraKind& kind, int n) {
    require_det_size(kind, n);
    DiffOp r(kind);
    for_each_permutation(n, [&](const std::vector<int>& perm, int sign) {
        Monomial m(kind.num_vars());
        long coeff = sign;
        for (int i = 1; i <= n; ++i) {
            int j = perm[static_cast<std::size_t>(i - 1)];
            if (!kind.valid_pair(i, j)) return;
            VarRef v = kind.var(i, j);
            m[v.index] += 1;
            coeff *= v.sign * derivative_weight(kind, v.index);
        }
        r.add_term(m, Rational(coeff));
    });
    return r;
}

inline void require_pfaffian_size(const AlgebraKind& kind, int m) {
    if (kind.type() != KindType::III) throw std::invalid_argument("Pfaffians are defined for type III only");
    if (m < 0 || 2 * m > kind.size())
        throw std::invalid_argument("Pfaffian order m=" + std::to_string(m) + " needs 2m <= N=" +
                                    std::to_string(kind.size()));
}

// phi_m: Pfaffian of the leading 2m x 2m block of z, summed over signed
// perfect matchings (the 1/(2^m m!) permutation sum collapses onto these).
inline Poly pfaffian_z(const AlgebraKind& kind, int m) {
    require_pfaffian_size(kind, m);
    Poly r(kind);
    for (const auto& mt : perfect_matchings(m)) {
        Monomial mono(kind.num_vars());
        for (auto [a, b] : mt.pairs) mono[kind.var(a, b).index] += 1;
        r.add_term(mono, mt.sign);
    }
    return r;
}

// box_m: the same expansion in the derivatives d_ab = d/dz_ab.
inline DiffOp pfaffian_partial(const AlgebraKind& kind, int m) {
    require_pfaffian_size(kind, m);
    DiffOp r(kind);
    for (const auto& mt : perfect_matchings(m)) {
        Monomial mono(kind.num_vars());
        for (auto [a, b] : mt.pairs) mono[kind.var(a, b).index] += 1;
        r.add_term(mono, mt.sign);
    }
    return r;
}

// E_ij f = sum_{s=1}^{ncols} z_is d_js f. Terms with a type III diagonal
// index vanish identically and are skipped.
inline Poly apply_E(const Poly& f, int i, int j, int ncols) {
    const AlgebraKind& kind = f.kind();
    if (ncols < 1 || ncols > kind.cols())
        throw std::invalid_argument("E column count " + std::to_string(ncols) + " out of range for " + kind.name());
    if (i < 1 || j < 1 || i > kind.rows() || j > kind.rows())
        throw std::invalid_argument("E row index out of range for " + kind.name());
    if (kind.type() != KindType::I && (i > ncols || j > ncols))
        throw std::invalid_argument("E row index exceeds the column count");
    Poly r(kind);
    for (int s = 1; s <= ncols; ++s) {
        if (!kind.valid_pair(i, s) || !kind.valid_pair(j, s)) continue;
        r += mul_z(apply_partial(f, j, s), i, s);
    }
    return r;
}

enum class CapelliSide { XD, DX };
enum class DetOrdering { Column, Row };

inline std::string to_string(CapelliSide s) { return s == CapelliSide::XD ? "XD" : "DX"; }

// Which product (x_n nabla_n or nabla_n x_n) and the diagonal shifts of the
// matching determinant det[E_ij + shift(i) delta_ij].
struct CapelliVariant {
    CapelliSide side = CapelliSide::XD;
    std::vector<int> shifts;  // shifts[i-1] for row i
    DetOrdering ordering = DetOrdering::Column;

    static CapelliVariant standard(const AlgebraKind& kind, int n, CapelliSide side) {
        CapelliVariant v;
        v.side = side;
        int base = 0;
        switch (kind.type()) {
            case KindType::I: base = side == CapelliSide::XD ? n : n + 1; break;
            case KindType::II: base = side == CapelliSide::XD ? n : n + 2; break;
            case KindType::III: base = side == CapelliSide::XD ? n - 1 : n + 1; break;
        }
        for (int i = 1; i <= n; ++i) v.shifts.push_back(base - i);
        return v;
    }

    std::string name() const { return to_string(side); }
};

// det[E^(n)_ij + shift(i) delta_ij] applied to f. Column ordering expands as
// sum_sigma sgn(sigma) M_{sigma(1),1} ... M_{sigma(n),n}; the column-n factor
// acts first. Row ordering uses M_{1,sigma(1)} ... M_{n,sigma(n)}.
inline Poly capelli_rhs_apply(const AlgebraKind& kind, int n, const CapelliVariant& variant, const Poly& f) {
    require_det_size(kind, n);
    if (static_cast<int>(variant.shifts.size()) != n)
        throw std::invalid_argument("Capelli variant has " + std::to_string(variant.shifts.size()) +
                                    " shifts, expected " + std::to_string(n));
    auto entry = [&](int i, int j, const Poly& g) {
        Poly r = apply_E(g, i, j, n);
        if (i == j) r += g * Rational(variant.shifts[static_cast<std::size_t>(i - 1)]);
        return r;
    };
    Poly total(kind);
    for_each_permutation(n, [&](const std::vector<int>& perm, int sign) {
        Poly g = f;
        for (int pos = n; pos >= 1 && !g.is_zero(); --pos) {
            int other = perm[static_cast<std::size_t>(pos - 1)];
            g = variant.ordering == DetOrdering::Column ? entry(other, pos, g) : entry(pos, other, g);
        }
        if (sign < 0) g *= Rational(-1);
        total += g;
    });
    return total;
}

// LHS of the Capelli identity: x_n (nabla_n f) or nabla_n (x_n f).
inline Poly capelli_lhs_apply(const Poly& xn, const DiffOp& nabla, CapelliSide side, const Poly& f) {
    return side == CapelliSide::XD ? xn * nabla.apply(f) : nabla.apply(xn * f);
}

inline Report verify_capelli(const AlgebraKind& kind, int n, const CapelliVariant& variant, int dmax, int jobs = 1) {
    Report report;
    report.identity = "capelli";
    report.kind = kind.name();
    report.n = n;
    report.variant = variant.name();
    report.dmax = dmax;
    Poly xn = det_z(kind, n);
    DiffOp nabla = det_partial(kind, n);
    auto basis = monomials_up_to(kind, dmax);
    auto results = sharded_map<std::optional<Failure>>(basis.size(), jobs, [&](std::size_t i) -> std::optional<Failure> {
        Poly f = Poly::monomial(kind, basis[i]);
        Poly lhs = capelli_lhs_apply(xn, nabla, variant.side, f);
        Poly rhs = capelli_rhs_apply(kind, n, variant, f);
        if (lhs == rhs) return std::nullopt;
        return Failure{to_string(f), to_string(lhs), to_string(rhs)};
    });
    report.checked_count = static_cast<long>(basis.size());
    for (auto& r : results)
        if (r) report.failures.push_back(std::move(*r));
    return report;
}

}  // namespace capelli
