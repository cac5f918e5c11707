#pragma once

#include "capelli/generators.hpp"
#include "capelli/weyl_core.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

// Linear combination of generators (unit scale) plus a multiple of the identity.
struct LieCombination {
    std::vector<std::pair<Rational, GeneratorSpec>> terms;
    Rational scalar = 0;

    void add(const Rational& c, const GeneratorSpec& g) {
        if (c != 0) terms.emplace_back(c, g);
    }
};

// Bracket of two generators in the uncontracted algebra, expressed in the
// generator labels: gl(p+q) for type I, sp(N,C) for type II, so(2N,C) for
// type III. Raising labels Z stand for A, lowering labels D for B, and
// E/L/R for the u(N) (u(p)+u(q)) subalgebra. Only [h,h] and [h,p] are needed.
using BracketTable = std::function<LieCombination(const AlgebraKind&, const GeneratorSpec&, const GeneratorSpec&)>;

namespace detail {

inline int delta(int a, int b) { return a == b ? 1 : 0; }

inline bool is_h(Family f) { return f == Family::E || f == Family::L || f == Family::R; }
inline bool is_p(Family f) { return f == Family::Z || f == Family::D; }

// Adds c * label unless the label is identically zero (type III diagonal).
inline void add_label(const AlgebraKind& kind, LieCombination& out, int c, const GeneratorSpec& g) {
    if (c == 0) return;
    if ((g.family == Family::Z || g.family == Family::D) && !kind.valid_pair(g.i, g.j)) return;
    out.add(c, g);
}

inline LieCombination bracket_h_first(const AlgebraKind& kind, const GeneratorSpec& x, const GeneratorSpec& y) {
    LieCombination out;
    const int i = x.i, j = x.j, k = y.i, l = y.j;
    auto same_family_gl = [&](auto make) {
        add_label(kind, out, delta(j, k), make(i, l));
        add_label(kind, out, -delta(i, l), make(k, j));
    };
    if (kind.type() == KindType::I) {
        if (x.family == Family::L && y.family == Family::L) same_family_gl([](int a, int b) { return GeneratorSpec::l(a, b); });
        if (x.family == Family::R && y.family == Family::R) same_family_gl([](int a, int b) { return GeneratorSpec::r(a, b); });
        // [L,R] = 0
        if (x.family == Family::L && y.family == Family::Z) add_label(kind, out, delta(j, k), GeneratorSpec::z(i, l));
        if (x.family == Family::L && y.family == Family::D) add_label(kind, out, -delta(i, k), GeneratorSpec::d(j, l));
        // x = R_{ab}: [R_ab, Z_{i c}] = -d_ac Z_ib, [R_ab, D_{i c}] = d_bc D_ia
        if (x.family == Family::R && y.family == Family::Z) add_label(kind, out, -delta(i, l), GeneratorSpec::z(k, j));
        if (x.family == Family::R && y.family == Family::D) add_label(kind, out, delta(j, l), GeneratorSpec::d(k, i));
        return out;
    }
    const int sym = kind.type() == KindType::II ? 1 : -1;
    const int n = kind.size();
    if (y.family == Family::E) {
        add_label(kind, out, delta(j, k), GeneratorSpec::e(i, l, n));
        add_label(kind, out, -delta(i, l), GeneratorSpec::e(k, j, n));
    } else if (y.family == Family::Z) {
        add_label(kind, out, delta(j, k), GeneratorSpec::z(i, l));
        add_label(kind, out, sym * delta(j, l), GeneratorSpec::z(i, k));
    } else if (y.family == Family::D) {
        add_label(kind, out, -delta(i, k), GeneratorSpec::d(j, l));
        add_label(kind, out, -sym * delta(i, l), GeneratorSpec::d(j, k));
    }
    return out;
}

inline LieCombination negate(LieCombination c) {
    for (auto& [coef, g] : c.terms) coef = -coef;
    c.scalar = -c.scalar;
    return c;
}

}  // namespace detail

inline LieCombination standard_bracket(const AlgebraKind& kind, const GeneratorSpec& x, const GeneratorSpec& y) {
    using detail::is_h;
    if (is_h(x.family)) return detail::bracket_h_first(kind, x, y);
    if (is_h(y.family)) return detail::negate(detail::bracket_h_first(kind, y, x));
    throw std::invalid_argument("bracket table covers [h,h] and [h,p] only");
}

// The h and p generators of the contracted algebra (Z, D with unit scale).
inline std::vector<GeneratorSpec> h_generators(const AlgebraKind& kind) {
    std::vector<GeneratorSpec> out;
    if (kind.type() == KindType::I) {
        for (int i = 1; i <= kind.rows(); ++i)
            for (int j = 1; j <= kind.rows(); ++j) out.push_back(GeneratorSpec::l(i, j));
        for (int a = 1; a <= kind.cols(); ++a)
            for (int b = 1; b <= kind.cols(); ++b) out.push_back(GeneratorSpec::r(a, b));
    } else {
        int n = kind.size();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) out.push_back(GeneratorSpec::e(i, j, n));
    }
    return out;
}

inline std::vector<GeneratorSpec> p_generators(const AlgebraKind& kind) {
    std::vector<GeneratorSpec> out;
    for (int v = 0; v < kind.num_vars(); ++v) {
        auto [a, b] = kind.pair_of(v);
        out.push_back(GeneratorSpec::z(a, b));
    }
    for (int v = 0; v < kind.num_vars(); ++v) {
        auto [a, b] = kind.pair_of(v);
        out.push_back(GeneratorSpec::d(a, b));
    }
    return out;
}

inline GeneratorSpec with_scale(GeneratorSpec g, const Rational& k) {
    if (g.family == Family::Z || g.family == Family::D) g.scale = k;
    return g;
}

inline Poly apply_combination(const LieCombination& c, const Rational& k, const Poly& f) {
    Poly r = f * c.scalar;
    for (const auto& [coef, g] : c.terms) r += apply_generator(with_scale(g, k), f) * coef;
    return r;
}

inline Poly commutator(const GeneratorSpec& x, const GeneratorSpec& y, const Poly& f) {
    return apply_generator(x, apply_generator(y, f)) - apply_generator(y, apply_generator(x, f));
}

// Checks the contraction conditions as operator identities on every monomial
// of degree <= dmax, with contraction constant k on Z and D:
//   (i)   [h,h] closes with the uncontracted structure constants
//   (ii)  [h,p] reproduces the uncontracted adjoint action
//   (iii) [p,p] is a scalar: [D_ab, Z_cd] = k^2 * delta-pattern, [Z,Z] = [D,D] = 0
inline Report verify_contraction(const AlgebraKind& kind, int dmax, const Rational& k = 1, int jobs = 1,
                                 const BracketTable& table = standard_bracket) {
    Report report;
    report.identity = "contraction";
    report.kind = kind.name();
    report.dmax = dmax;
    auto h = h_generators(kind);
    auto p = p_generators(kind);

    struct Check {
        GeneratorSpec x, y;
        LieCombination expected;
        std::string label;
    };
    std::vector<Check> checks;
    for (const auto& x : h)
        for (const auto& y : h) checks.push_back({x, y, table(kind, x, y), "(i)"});
    for (const auto& x : h)
        for (const auto& y : p) {
            checks.push_back({x, with_scale(y, k), table(kind, x, y), "(ii)"});
            checks.push_back({with_scale(y, k), x, table(kind, y, x), "(ii)"});
        }
    for (const auto& x : p)
        for (const auto& y : p) {
            LieCombination c;
            if (x.family == Family::D && y.family == Family::Z)
                c.scalar = k * k * heisenberg_delta(kind, x.i, x.j, y.i, y.j);
            else if (x.family == Family::Z && y.family == Family::D)
                c.scalar = -k * k * heisenberg_delta(kind, y.i, y.j, x.i, x.j);
            checks.push_back({with_scale(x, k), with_scale(y, k), c, "(iii)"});
        }

    auto basis = monomials_up_to(kind, dmax);
    auto per_monomial = sharded_map<Report>(basis.size(), jobs, [&](std::size_t idx) {
        Report r;
        Poly f = Poly::monomial(kind, basis[idx]);
        for (const auto& c : checks) {
            Poly lhs = commutator(c.x, c.y, f);
            Poly rhs = apply_combination(c.expected, k, f);
            ++r.checked_count;
            if (!(lhs == rhs))
                r.failures.push_back({c.label + " [" + c.x.name() + ", " + c.y.name() + "] on " + to_string(f),
                                      to_string(lhs), to_string(rhs)});
        }
        return r;
    });
    for (const auto& r : per_monomial) report.merge(r);
    return report;
}

// Matrix of one generator on the graded monomial basis of degree <= d.
// Entry (r,c) is the coefficient of basis[r] in g * basis[c]. Terms that
// leave the truncated space (degree d+1) are counted in the overflow sector.
struct SparseRepMatrix {
    std::string name;
    int basis_degree = 0;
    std::vector<Monomial> basis;
    std::map<std::pair<int, int>, Rational> entries;
    long overflow_count = 0;

    Rational at(int r, int c) const {
        auto it = entries.find({r, c});
        return it == entries.end() ? Rational(0) : it->second;
    }
    int dim() const { return static_cast<int>(basis.size()); }
};

inline std::vector<SparseRepMatrix> build_rep_matrices(const AlgebraKind& kind, const std::vector<GeneratorSpec>& generators,
                                                       int d) {
    if (d < 0) throw std::invalid_argument("basis degree must be non-negative");
    auto basis = monomials_up_to(kind, d);
    std::map<Monomial, int, LexOrder> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    std::vector<SparseRepMatrix> out;
    for (const auto& g : generators) {
        validate(kind, g);
        SparseRepMatrix mat{g.name(), d, basis, {}, 0};
        for (std::size_t c = 0; c < basis.size(); ++c) {
            Poly image = apply_generator(g, Poly::monomial(kind, basis[c]));
            for (const auto& [m, coef] : image.terms()) {
                auto it = index.find(m);
                if (it == index.end())
                    ++mat.overflow_count;
                else
                    mat.entries.emplace(std::make_pair(it->second, static_cast<int>(c)), coef);
            }
        }
        out.push_back(std::move(mat));
    }
    return out;
}

// One JSON record per matrix: {name, basis_degree, triplets, overflow_count}.
inline nlohmann::json to_json(const SparseRepMatrix& m) {
    nlohmann::json triplets = nlohmann::json::array();
    for (const auto& [rc, v] : m.entries) triplets.push_back({rc.first, rc.second, to_string(v)});
    return {{"name", m.name}, {"basis_degree", m.basis_degree}, {"triplets", triplets}, {"overflow_count", m.overflow_count}};
}

// Generators exported by default: the u(N) (or u(p)+u(q)) sector, then Z and D.
inline std::vector<GeneratorSpec> default_export_generators(const AlgebraKind& kind, const Rational& k = 1) {
    auto out = h_generators(kind);
    for (auto g : p_generators(kind)) out.push_back(with_scale(g, k));
    out.push_back(GeneratorSpec::identity());
    return out;
}

}  // namespace capelli
