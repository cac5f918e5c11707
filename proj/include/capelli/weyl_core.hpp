#pragma once

#include "capelli/algebra_kind.hpp"
#include "capelli/poly.hpp"
#include "capelli/poly_io.hpp"
#include "capelli/rational.hpp"
#include "capelli/report.hpp"

#include <vector>

namespace capelli {

// Right-hand side of [d_ab, z_cd] for the kind:
//   I: d_ac d_bd,  II: d_ac d_bd + d_bc d_ad,  III: d_ac d_bd - d_bc d_ad
inline int heisenberg_delta(const AlgebraKind& kind, int a, int b, int c, int d) {
    int direct = (a == c && b == d) ? 1 : 0;
    int crossed = (b == c && a == d) ? 1 : 0;
    switch (kind.type()) {
        case KindType::I: return direct;
        case KindType::II: return direct + crossed;
        case KindType::III: return direct - crossed;
    }
    return 0;
}

// All ordered index pairs accepted by the kind, aliases included.
inline std::vector<std::pair<int, int>> index_pairs(const AlgebraKind& kind) {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= kind.rows(); ++a)
        for (int b = 1; b <= kind.cols(); ++b)
            if (kind.valid_pair(a, b)) out.emplace_back(a, b);
    return out;
}

// Checks [d_ab, z_cd] f = delta-pattern * f on every monomial f of degree <= dmax.
inline Report check_heisenberg(const AlgebraKind& kind, int dmax, int jobs = 1) {
    Report report;
    report.identity = "heisenberg";
    report.kind = kind.name();
    report.dmax = dmax;
    auto basis = monomials_up_to(kind, dmax);
    auto pairs = index_pairs(kind);
    auto per_monomial = sharded_map<Report>(basis.size(), jobs, [&](std::size_t i) {
        Report r;
        Poly f = Poly::monomial(kind, basis[i]);
        for (auto [a, b] : pairs)
            for (auto [c, d] : pairs) {
                Poly lhs = apply_partial(mul_z(f, c, d), a, b) - mul_z(apply_partial(f, a, b), c, d);
                Poly rhs = f * Rational(heisenberg_delta(kind, a, b, c, d));
                ++r.checked_count;
                if (!(lhs == rhs)) {
                    std::string op = "[d(" + std::to_string(a) + "," + std::to_string(b) + "), z(" +
                                     std::to_string(c) + "," + std::to_string(d) + ")] on ";
                    r.failures.push_back({op + to_string(f), to_string(lhs), to_string(rhs)});
                }
            }
        return r;
    });
    for (const auto& r : per_monomial) report.merge(r);
    return report;
}

}  // namespace capelli
