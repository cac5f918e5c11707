#pragma once

#include "capelli/extremal_states.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace capelli::testing {

// All admissible weights of the given length with nu_1 <= max_first.
inline std::vector<WeightVector> admissible_weights(KindType type, int length, int max_first) {
    std::vector<WeightVector> out;
    WeightVector cur(static_cast<std::size_t>(length));
    std::function<void(int, int)> rec = [&](int pos, int bound) {
        if (pos == length) {
            if (admissibility_error(type, cur).empty()) out.push_back(cur);
            return;
        }
        for (int v = bound; v >= 0; --v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, max_first);
    return out;
}

struct GridPoint {
    AlgebraKind kind;
    WeightVector nu;
};

// Oracle grid for the closed-form norms and matrix elements:
// I(N,N) N<=3 nu_1<=4; II(N) N<=3 even nu_1<=6; III(N) N in {4,5} nu_1<=4.
inline std::vector<GridPoint> norm_grid() {
    std::vector<GridPoint> out;
    for (int n = 1; n <= 3; ++n)
        for (const auto& nu : admissible_weights(KindType::I, n, 4)) out.push_back({AlgebraKind::type_i(n, n), nu});
    for (int n = 1; n <= 3; ++n)
        for (const auto& nu : admissible_weights(KindType::II, n, 6)) out.push_back({AlgebraKind::type_ii(n), nu});
    for (int n = 4; n <= 5; ++n)
        for (const auto& nu : admissible_weights(KindType::III, n, 4)) out.push_back({AlgebraKind::type_iii(n), nu});
    return out;
}

// <psi_nu'| z_op psi_nu> / ||psi_nu'||^2 * sqrt(||psi_nu'||^2 / ||psi_nu||^2), exact.
inline RadicalValue matel_by_inner_products(const AlgebraKind& kind, const WeightVector& nu, int k) {
    WeightVector shifted = shifted_weight(kind.type(), nu, k);
    Poly ket = extremal_poly(ExtremalLabel::make(kind, nu));
    Poly bra = extremal_poly(ExtremalLabel::make(kind, shifted));
    auto [a, b] = matel_operator_index(kind.type(), k);
    Rational inner = bargmann_inner(bra, mul_z(ket, a, b));
    Rational nb = bargmann_inner(bra, bra);
    return RadicalValue(inner / nb, nb / bargmann_inner(ket, ket));
}

}  // namespace capelli::testing
