#pragma once

#include "capelli/capelli_ops.hpp"

#include <string>

namespace capelli {

enum class Family { E, L, R, Z, D, Identity };

// One operator of a contracted algebra acting on the Bargmann space.
//   E_ij = sum_{s<=ncols} z_is d_js
//   L_ij = sum_alpha z_{i alpha} d_{j alpha}          (type I, u(p))
//   R_ab = -sum_i z_{ib} d_{ia}                       (type I, u(q))
//   Z_ab = scale * z_ab,  D_ab = scale * d_ab,  Identity = scale * 1
// `scale` multiplies every family; it carries the contraction constant k
// (and its conjugate, equal for rational k) on Z and D.
struct GeneratorSpec {
    Family family = Family::Identity;
    int i = 0;
    int j = 0;
    int ncols = 0;
    Rational scale = 1;

    static GeneratorSpec e(int i, int j, int ncols) { return {Family::E, i, j, ncols, 1}; }
    static GeneratorSpec l(int i, int j) { return {Family::L, i, j, 0, 1}; }
    static GeneratorSpec r(int a, int b) { return {Family::R, a, b, 0, 1}; }
    static GeneratorSpec z(int a, int b, const Rational& k = 1) { return {Family::Z, a, b, 0, k}; }
    static GeneratorSpec d(int a, int b, const Rational& k = 1) { return {Family::D, a, b, 0, k}; }
    static GeneratorSpec identity(const Rational& s = 1) { return {Family::Identity, 0, 0, 0, s}; }

    std::string name() const {
        auto idx = [&] { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
        std::string base;
        switch (family) {
            case Family::E: base = "E" + idx(); break;
            case Family::L: base = "L" + idx(); break;
            case Family::R: base = "R" + idx(); break;
            case Family::Z: base = "Z" + idx(); break;
            case Family::D: base = "D" + idx(); break;
            case Family::Identity: base = "I"; break;
        }
        if (scale != 1) base += "*" + to_string(scale);
        return base;
    }

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

inline void validate(const AlgebraKind& kind, const GeneratorSpec& g) {
    auto in = [](int v, int hi) { return v >= 1 && v <= hi; };
    bool ok = true;
    switch (g.family) {
        case Family::E:
            ok = g.ncols >= 1 && g.ncols <= kind.cols() && in(g.i, kind.rows()) && in(g.j, kind.rows()) &&
                 (kind.type() == KindType::I || (g.i <= g.ncols && g.j <= g.ncols));
            break;
        case Family::L: ok = kind.type() == KindType::I && in(g.i, kind.rows()) && in(g.j, kind.rows()); break;
        case Family::R: ok = kind.type() == KindType::I && in(g.i, kind.cols()) && in(g.j, kind.cols()); break;
        case Family::Z:
        case Family::D: ok = kind.valid_pair(g.i, g.j); break;
        case Family::Identity: break;
    }
    if (!ok) throw std::invalid_argument("generator " + g.name() + " is not valid for " + kind.name());
}

inline Poly apply_generator(const GeneratorSpec& g, const Poly& f) {
    const AlgebraKind& kind = f.kind();
    validate(kind, g);
    Poly r(kind);
    switch (g.family) {
        case Family::E: r = apply_E(f, g.i, g.j, g.ncols); break;
        case Family::L: r = apply_E(f, g.i, g.j, kind.cols()); break;
        case Family::R:
            for (int s = 1; s <= kind.rows(); ++s) r -= mul_z(apply_partial(f, s, g.i), s, g.j);
            break;
        case Family::Z: r = mul_z(f, g.i, g.j); break;
        case Family::D: r = apply_partial(f, g.i, g.j); break;
        case Family::Identity: r = f; break;
    }
    if (g.scale != 1) r *= g.scale;
    return r;
}

}  // namespace capelli
