#pragma once

#include "capelli/capelli_ops.hpp"
#include "capelli/generators.hpp"
#include "capelli/radical.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace capelli {

// Dominant integer weight nu_1 >= nu_2 >= ... >= nu_N >= 0.
using WeightVector = std::vector<int>;

inline std::string to_string(const WeightVector& nu) {
    std::string s = "(";
    for (std::size_t i = 0; i < nu.size(); ++i) s += (i ? "," : "") + std::to_string(nu[i]);
    return s + ")";
}

// nu_i with the convention nu_i = 0 past the last component (1-based).
inline int component(const WeightVector& nu, int i) {
    return i >= 1 && i <= static_cast<int>(nu.size()) ? nu[static_cast<std::size_t>(i - 1)] : 0;
}

// Length of the weight vectors labelling extremal states of the kind.
inline int label_length(const AlgebraKind& kind) { return kind.type() == KindType::I ? kind.rank() : kind.size(); }

// Empty string when admissible, else the violated invariant.
inline std::string admissibility_error(KindType type, const WeightVector& nu) {
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (nu[i] < 0) return "weight components must be non-negative";
        if (i > 0 && nu[i] > nu[i - 1]) return "weight must be non-increasing";
    }
    if (type == KindType::II) {
        for (int v : nu)
            if (v % 2 != 0) return "type II weights must have every component even";
    }
    if (type == KindType::III) {
        for (std::size_t i = 0; i + 1 < nu.size(); i += 2)
            if (nu[i] != nu[i + 1]) return "type III weights must satisfy nu_{2i-1} = nu_{2i}";
        if (nu.size() % 2 == 1 && nu.back() != 0) return "type III weights with odd N must have nu_N = 0";
    }
    return {};
}

// Validates nu against the kind and pads it with zeros to the label length.
inline WeightVector admissible_weight(const AlgebraKind& kind, WeightVector nu) {
    int len = label_length(kind);
    if (static_cast<int>(nu.size()) > len)
        throw std::invalid_argument("weight has " + std::to_string(nu.size()) + " components but " + kind.name() +
                                    " allows at most " + std::to_string(len));
    nu.resize(static_cast<std::size_t>(len), 0);
    if (auto err = admissibility_error(kind.type(), nu); !err.empty()) throw std::invalid_argument(err);
    return nu;
}

// An admissible weight together with the exponents of its generating
// polynomial: type I pi_j = nu_j - nu_{j+1}; type II p_j = (nu_j - nu_{j+1})/2;
// type III p_i = nu_{2i} - nu_{2i+2} for the Pfaffians phi_1..phi_m.
struct ExtremalLabel {
    AlgebraKind kind;
    WeightVector nu;
    std::vector<int> exponents;

    static ExtremalLabel make(const AlgebraKind& kind, const WeightVector& weight) {
        ExtremalLabel label{kind, admissible_weight(kind, weight), {}};
        const auto& nu = label.nu;
        int len = static_cast<int>(nu.size());
        switch (kind.type()) {
            case KindType::I:
                for (int j = 1; j <= len; ++j) label.exponents.push_back(component(nu, j) - component(nu, j + 1));
                break;
            case KindType::II:
                for (int j = 1; j <= len; ++j)
                    label.exponents.push_back((component(nu, j) - component(nu, j + 1)) / 2);
                break;
            case KindType::III:
                for (int i = 1; 2 * i <= len; ++i)
                    label.exponents.push_back(component(nu, 2 * i) - component(nu, 2 * i + 2));
                break;
        }
        return label;
    }

    // Inverse of the exponent map.
    WeightVector reconstruct() const {
        WeightVector out(nu.size(), 0);
        int len = static_cast<int>(nu.size());
        for (int i = 1; i <= len; ++i) {
            int total = 0;
            if (kind.type() == KindType::III) {
                int block = (i + 1) / 2;
                for (int j = block; j <= static_cast<int>(exponents.size()); ++j) total += exponents[static_cast<std::size_t>(j - 1)];
            } else {
                int mult = kind.type() == KindType::II ? 2 : 1;
                for (int j = i; j <= len; ++j) total += mult * exponents[static_cast<std::size_t>(j - 1)];
            }
            out[static_cast<std::size_t>(i - 1)] = total;
        }
        return out;
    }
};

// psi_nu = x_1^{e_1} ... x_N^{e_N} (types I, II) or Phi_nu = phi_1^{p_1} ... phi_m^{p_m}.
inline Poly extremal_poly(const ExtremalLabel& label) {
    Poly r = Poly::one(label.kind);
    for (std::size_t j = 0; j < label.exponents.size(); ++j) {
        int e = label.exponents[j];
        if (e == 0) continue;
        int order = static_cast<int>(j) + 1;
        Poly base = label.kind.type() == KindType::III ? pfaffian_z(label.kind, order) : det_z(label.kind, order);
        r = r * base.pow(e);
    }
    return r;
}

// Raising conditions: E^(N)_ij f = 0 for i<j (types II, III); for type I
// L_ij f = 0 for i<j and R_ab f = 0 for b<a (U(q) lowest weight).
inline bool is_extremal(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_extremal needs a nonzero polynomial");
    if (!weight(f)) throw std::invalid_argument("is_extremal needs a polynomial of definite weight");
    const AlgebraKind& kind = f.kind();
    if (kind.type() == KindType::I) {
        for (int i = 1; i <= kind.rows(); ++i)
            for (int j = i + 1; j <= kind.rows(); ++j)
                if (!apply_generator(GeneratorSpec::l(i, j), f).is_zero()) return false;
        for (int b = 1; b <= kind.cols(); ++b)
            for (int a = b + 1; a <= kind.cols(); ++a)
                if (!apply_generator(GeneratorSpec::r(a, b), f).is_zero()) return false;
        return true;
    }
    int n = kind.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!apply_E(f, i, j, n).is_zero()) return false;
    return true;
}

// Integer offsets inside the closed-form norm products. All zero gives the
// published formulas; the mutation tests perturb them one at a time.
struct NormOffsets {
    int factorial = 0;  // inside (nu_i + N - i)! / !! / (nu_2i + 2m - 2i)!
    int gap = 0;        // in (nu_i - nu_j + j - i)
    int gap_minus = 0;  // in (nu_i - nu_j + j - i - 1) (types II, III)
};

// Closed-form squared norm for a weight of the given type, where the number
// of factors is set by nu's length (N for I/II; m = floor(len/2) for III).
inline Rational closed_form_norm(KindType type, const WeightVector& nu, const NormOffsets& off = {}) {
    auto divide = [](Rational& r, const Rational& d) {
        if (d == 0) throw std::domain_error("closed-form norm has a vanishing factor");
        r /= d;
    };
    int len = static_cast<int>(nu.size());
    Rational r = 1;
    switch (type) {
        case KindType::I:
            for (int i = 1; i <= len; ++i) {
                r *= Rational(factorial(component(nu, i) + len - i + off.factorial));
                for (int j = i + 1; j <= len; ++j) divide(r, Rational(component(nu, i) - component(nu, j) + j - i + off.gap));
            }
            break;
        case KindType::II:
            for (int i = 1; i <= len; ++i) {
                r *= Rational(double_factorial(component(nu, i) + len - i + off.factorial));
                for (int j = i + 1; j <= len; ++j) {
                    int d = component(nu, i) - component(nu, j) + j - i;
                    r *= Rational(double_factorial(d - 1 + off.gap_minus));
                    divide(r, Rational(double_factorial(d + off.gap)));
                }
            }
            break;
        case KindType::III: {
            int m = len / 2;
            for (int i = 1; i <= m; ++i) {
                r *= Rational(factorial(component(nu, 2 * i) + 2 * m - 2 * i + off.factorial));
                for (int j = i + 1; j <= m; ++j) {
                    int d = component(nu, 2 * i) - component(nu, 2 * j) + 2 * j - 2 * i;
                    divide(r, Rational(d + off.gap));
                    divide(r, Rational(d - 1 + off.gap_minus));
                }
            }
            break;
        }
    }
    return r;
}

inline Rational norm_closed_form(const ExtremalLabel& label) { return closed_form_norm(label.kind.type(), label.nu); }

// Scalar by which nabla_n^p x_n^p (types I, II) or box_m^p phi_m^p (type III,
// n = m) acts on the extremal state of weight nu. Requires nu to vanish past
// component n (2m for type III), so that E^(n)_ii has eigenvalue nu_i.
inline Rational ladder_eigenvalue(const AlgebraKind& kind, int n, int p, const WeightVector& nu) {
    if (p < 0) throw std::invalid_argument("ladder power must be non-negative");
    WeightVector w = admissible_weight(kind, nu);
    int span = kind.type() == KindType::III ? 2 * n : n;
    if (n < 1 || span > static_cast<int>(w.size()))
        throw std::invalid_argument("ladder size n=" + std::to_string(n) + " out of range for " + kind.name());
    for (int i = span + 1; i <= static_cast<int>(w.size()); ++i)
        if (component(w, i) != 0)
            throw std::invalid_argument("weight has nonzero components beyond the ladder size");
    Rational r = 1;
    switch (kind.type()) {
        case KindType::I:
            for (int i = 1; i <= n; ++i) {
                int base = component(w, i) + n - i;
                r *= Rational(factorial_ratio(base + p, base));
            }
            break;
        case KindType::II:
            for (int i = 1; i <= n; ++i) {
                int base = component(w, i) + n - i;
                r *= Rational(double_factorial(base + 2 * p));
                r /= Rational(double_factorial(base));
            }
            break;
        case KindType::III:
            for (int i = 1; i <= n; ++i) {
                int base = component(w, 2 * i) + 2 * n - 2 * i;
                r *= Rational(factorial_ratio(base + p, base));
            }
            break;
    }
    return r;
}

// X_nu = (nu_1 + 2m - 1)(nu_3 + 2m - 3) ... (nu_{2m-1} + 1), the eigenvalue of
// box_m phi_m on the type III highest-weight state Phi_nu.
inline Rational X_eigenvalue(const WeightVector& nu, int m) {
    if (auto err = admissibility_error(KindType::III, nu); !err.empty()) throw std::invalid_argument(err);
    if (m < 1) throw std::invalid_argument("X_eigenvalue needs m >= 1");
    for (int i = 2 * m + 1; i <= static_cast<int>(nu.size()); ++i)
        if (component(nu, i) != 0) throw std::invalid_argument("weight has nonzero blocks beyond 2m");
    Rational r = 1;
    for (int i = 1; i <= m; ++i) r *= component(nu, 2 * i - 1) + 2 * m + 1 - 2 * i;
    return r;
}

// Row index of the operator in the extremal matrix element, and the weight it
// adds: type I z_kk adds Delta_k; type II z_kk adds 2 Delta_k; type III
// z_{2k-1,2k} adds Delta_{2k-1} + Delta_{2k}.
inline std::pair<int, int> matel_operator_index(KindType type, int k) {
    if (type == KindType::III) return {2 * k - 1, 2 * k};
    return {k, k};
}

inline WeightVector shifted_weight(KindType type, WeightVector nu, int k) {
    switch (type) {
        case KindType::I: nu[static_cast<std::size_t>(k - 1)] += 1; break;
        case KindType::II: nu[static_cast<std::size_t>(k - 1)] += 2; break;
        case KindType::III:
            nu[static_cast<std::size_t>(2 * k - 2)] += 1;
            nu[static_cast<std::size_t>(2 * k - 1)] += 1;
            break;
    }
    return nu;
}

// Number of admissible k values for the kind (N, or m = floor(N/2)).
inline int matel_k_range(const AlgebraKind& kind) {
    return kind.type() == KindType::III ? kind.size() / 2 : label_length(kind);
}

// <nu'| z_op |nu> between normalized extremal states, from the closed-form
// norms: gap * N_k(mu)/N_k(mu') * sqrt(N(nu')/N(nu)) with mu the first k
// (2k for type III) components of nu shifted down by the next component.
// Returns exact zero when nu' is not admissible.
inline RadicalValue matel_extremal(const AlgebraKind& kind, const WeightVector& weight, int k) {
    WeightVector nu = admissible_weight(kind, weight);
    KindType type = kind.type();
    if (k < 1 || k > matel_k_range(kind))
        throw std::invalid_argument("k=" + std::to_string(k) + " out of range for " + kind.name());
    WeightVector shifted = shifted_weight(type, nu, k);
    if (!admissibility_error(type, shifted).empty()) return RadicalValue();

    int span = type == KindType::III ? 2 * k : k;
    int next = component(nu, span + (type == KindType::III ? 2 : 1));
    Rational gap;
    switch (type) {
        case KindType::I: gap = component(nu, k) - next + 1; break;
        case KindType::II: gap = component(nu, k) - next + 2; break;
        case KindType::III: gap = component(nu, 2 * k) - next + 1; break;
    }
    WeightVector mu(static_cast<std::size_t>(span));
    for (int i = 1; i <= span; ++i) mu[static_cast<std::size_t>(i - 1)] = component(nu, i) - next;
    WeightVector mu_shifted = shifted_weight(type, mu, k);

    Rational ratio = closed_form_norm(type, mu) / closed_form_norm(type, mu_shifted);
    Rational norm_ratio = closed_form_norm(type, shifted) / closed_form_norm(type, nu);
    return RadicalValue(gap * ratio, norm_ratio);
}

// Ground truth: <bra | op ket> evaluated with the Bargmann inner product.
inline Rational matel_bruteforce(const Poly& bra, const GeneratorSpec& op, const Poly& ket) {
    bra.require_same_kind(ket);
    return bargmann_inner(bra, apply_generator(op, ket));
}

}  // namespace capelli
