#pragma once

#include "capelli/contracted_reps.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace capelli {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct RpaTolerances {
    double hermiticity = 1e-12;
    double zero_frequency = 1e-10;
    double imaginary = 1e-9;
    double boundary_weight = 1e-8;
};

// How the symmetric pairing matrix B is formed from W.
//   Sum:     B = W + W^T   (H contains sum W z z, no 1/2)
//   Average: B = (W + W^T)/2  (H contains 1/2 sum W z z)
enum class PairingConvention { Sum, Average };

// H = E0 + sum V_ij z_i d_j + sum W_ij z_i z_j + sum W*_ij d_i d_j on M modes,
// with z -> b^dagger, d -> b. W is symmetrized at construction.
class QuadraticBosonHamiltonian {
public:
    QuadraticBosonHamiltonian(double e0, CMatrix v, CMatrix w, PairingConvention conv = PairingConvention::Sum,
                              const RpaTolerances& tol = {})
        : e0_(e0), v_(std::move(v)), w_(std::move(w)), conv_(conv) {
        if (v_.rows() != v_.cols()) throw std::invalid_argument("V must be square");
        if (w_.rows() != w_.cols()) throw std::invalid_argument("W must be square");
        if (v_.rows() != w_.rows()) throw std::invalid_argument("dimension mismatch between V and W");
        if (v_.rows() == 0) throw std::invalid_argument("Hamiltonian needs at least one mode");
        if ((v_ - v_.adjoint()).cwiseAbs().maxCoeff() > tol.hermiticity) throw std::invalid_argument("V is not Hermitian");
        w_ = (0.5 * (w_ + w_.transpose())).eval();
    }

    int modes() const { return static_cast<int>(v_.rows()); }
    double e0() const { return e0_; }
    const CMatrix& V() const { return v_; }
    const CMatrix& W() const { return w_; }
    PairingConvention convention() const { return conv_; }

    CMatrix A() const { return v_; }
    CMatrix B() const { return conv_ == PairingConvention::Sum ? CMatrix(2.0 * w_) : w_; }

    QuadraticBosonHamiltonian scaled(double s) const {
        return QuadraticBosonHamiltonian(s * e0_, s * v_, s * w_, conv_);
    }

private:
    double e0_;
    CMatrix v_;
    CMatrix w_;
    PairingConvention conv_;
};

// [[A, B], [-B*, -A*]]
inline CMatrix build_rpa_matrix(const QuadraticBosonHamiltonian& h) {
    const int m = h.modes();
    CMatrix a = h.A(), b = h.B();
    CMatrix out(2 * m, 2 * m);
    out.topLeftCorner(m, m) = a;
    out.topRightCorner(m, m) = b;
    out.bottomLeftCorner(m, m) = -b.conjugate();
    out.bottomRightCorner(m, m) = -a.conjugate();
    return out;
}

// Dynamical matrix [[A, B], [B*, A*]]; the RPA matrix is eta times it.
inline CMatrix dynamical_matrix(const QuadraticBosonHamiltonian& h) {
    const int m = h.modes();
    CMatrix a = h.A(), b = h.B();
    CMatrix out(2 * m, 2 * m);
    out << a, b, b.conjugate(), a.conjugate();
    return out;
}

struct RpaSolution {
    std::vector<double> frequencies;  // ascending; empty when unstable
    CMatrix X, Y;
    bool stable = false;
    bool zero_mode = false;
    std::optional<double> delta_E;
    std::vector<Complex> spectrum;  // eigenvalues of the RPA matrix, sorted by (re, im)
    std::string diagnostic;
};

// Stable means [[A,B],[B*,A*]] is positive definite: then the RPA spectrum is
// real, nonzero, paired as +-omega, and every positive mode has positive norm.
inline RpaSolution solve_rpa(const QuadraticBosonHamiltonian& h, const RpaTolerances& tol = {}) {
    const int m = h.modes();
    RpaSolution sol;

    Eigen::ComplexEigenSolver<CMatrix> ces(build_rpa_matrix(h));
    if (ces.info() != Eigen::Success) throw std::runtime_error("RPA eigen-solver failed to converge");
    for (int i = 0; i < 2 * m; ++i) sol.spectrum.push_back(ces.eigenvalues()(i));
    std::sort(sol.spectrum.begin(), sol.spectrum.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });

    const double scale = std::max(1.0, dynamical_matrix(h).cwiseAbs().maxCoeff());
    for (const auto& ev : sol.spectrum)
        if (std::abs(ev) < tol.zero_frequency * scale) sol.zero_mode = true;

    CMatrix dyn = dynamical_matrix(h);
    Eigen::SelfAdjointEigenSolver<CMatrix> pd(dyn, Eigen::EigenvaluesOnly);
    if (pd.info() != Eigen::Success) throw std::runtime_error("Hermitian eigen-solver failed on the dynamical matrix");
    if (sol.zero_mode || pd.eigenvalues().minCoeff() <= tol.zero_frequency * scale) {
        bool complex_mode = std::any_of(sol.spectrum.begin(), sol.spectrum.end(),
                                        [&](Complex ev) { return std::abs(ev.imag()) > tol.imaginary * scale; });
        sol.diagnostic = sol.zero_mode ? "zero-frequency mode"
                         : complex_mode ? "complex RPA frequency"
                                        : "dynamical matrix not positive definite";
        return sol;
    }

    // Colpa: dyn = K^dagger K, diagonalize K eta K^dagger, T = K^{-1} U E^{1/2}.
    Eigen::LLT<CMatrix> llt(dyn);
    if (llt.info() != Eigen::Success) throw std::runtime_error("Cholesky factorization failed on a positive matrix");
    CMatrix k = llt.matrixU();
    Eigen::VectorXd eta(2 * m);
    eta << Eigen::VectorXd::Ones(m), -Eigen::VectorXd::Ones(m);
    CMatrix kek = k * eta.asDiagonal() * k.adjoint();
    kek = (0.5 * (kek + kek.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(kek);
    if (es.info() != Eigen::Success) throw std::runtime_error("Hermitian eigen-solver failed in the Colpa step");

    // Eigen sorts ascending: the last m eigenvalues are the positive frequencies.
    CMatrix u(2 * m, 2 * m);
    Eigen::VectorXd e(2 * m);
    for (int i = 0; i < m; ++i) {
        u.col(i) = es.eigenvectors().col(m + i);
        e(i) = es.eigenvalues()(m + i);
        u.col(m + i) = es.eigenvectors().col(m - 1 - i);
        e(m + i) = -es.eigenvalues()(m - 1 - i);
    }
    CMatrix t = k.triangularView<Eigen::Upper>().solve(u * e.cwiseSqrt().asDiagonal());
    sol.X = t.topLeftCorner(m, m);
    sol.Y = t.bottomLeftCorner(m, m);
    for (int i = 0; i < m; ++i) sol.frequencies.push_back(e(i));
    sol.stable = true;
    double sum = 0;
    for (double w : sol.frequencies) sum += w;
    sol.delta_E = 0.5 * (sum - h.A().trace().real());
    return sol;
}

// Lowest eigenvalues of H on the truncated Fock space (<= nmax quanta per mode).
struct FockSpectrum {
    std::vector<double> energies;  // ascending
    int nmax = 0;
    double boundary_weight = 0;  // max weight on occupation nmax over the lowest M+1 states
    bool cutoff_ok = true;

    std::vector<double> gaps() const {
        std::vector<double> out;
        for (std::size_t i = 1; i < energies.size(); ++i) out.push_back(energies[i] - energies[0]);
        return out;
    }
};

// Default per-mode cutoff keeping the truncated space around 10^3 states.
inline int default_fock_cutoff(int modes) {
    switch (modes) {
        case 1: return 40;
        case 2: return 20;
        case 3: return 10;
        default: return 4;
    }
}

namespace detail {

// Single-mode b^dagger and b in the orthonormal basis z^n / sqrt(n!), taken
// from the representation matrices of Z and D on I(1,1) scaled by the
// Bargmann norms: entry (r,c) -> entry * ||z^r|| / ||z^c||.
struct SingleMode {
    std::vector<std::vector<std::pair<int, double>>> raise, lower;  // per column: (row, value)
};

inline SingleMode single_mode_operators(int nmax) {
    AlgebraKind kind = AlgebraKind::type_i(1, 1);
    auto mats = build_rep_matrices(kind, {GeneratorSpec::z(1, 1), GeneratorSpec::d(1, 1)}, nmax);
    const auto& basis = mats[0].basis;
    std::vector<double> norm(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Poly b = Poly::monomial(kind, basis[i]);
        norm[i] = std::sqrt(bargmann_inner(b, b).get_d());
    }
    SingleMode sm;
    sm.raise.resize(basis.size());
    sm.lower.resize(basis.size());
    for (int which = 0; which < 2; ++which)
        for (const auto& [rc, v] : mats[static_cast<std::size_t>(which)].entries) {
            auto [r, c] = rc;
            double val = v.get_d() * norm[static_cast<std::size_t>(r)] / norm[static_cast<std::size_t>(c)];
            (which == 0 ? sm.raise : sm.lower)[static_cast<std::size_t>(c)].emplace_back(r, val);
        }
    return sm;
}

}  // namespace detail

inline FockSpectrum fock_oracle(const QuadraticBosonHamiltonian& h, int nmax, const RpaTolerances& tol = {}) {
    const int m = h.modes();
    if (nmax < 1) throw std::invalid_argument("Fock cutoff must be at least 1");
    const long side = nmax + 1;
    long dim = 1;
    for (int i = 0; i < m; ++i) {
        dim *= side;
        if (dim > 20000) throw std::invalid_argument("truncated Fock space too large");
    }
    // Monomial basis of I(1,1) up to degree nmax is 1, z, ..., z^nmax: index = occupation.
    auto sm = detail::single_mode_operators(nmax);
    std::vector<long> stride(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) stride[static_cast<std::size_t>(i)] = i == 0 ? 1 : stride[static_cast<std::size_t>(i - 1)] * side;
    auto occ = [&](long s, int mode) { return static_cast<int>((s / stride[static_cast<std::size_t>(mode)]) % side); };

    using Amp = std::vector<std::pair<long, Complex>>;
    auto apply = [&](const Amp& in, int mode, bool raise) {
        Amp out;
        for (auto [s, a] : in) {
            int n = occ(s, mode);
            for (auto [r, v] : (raise ? sm.raise : sm.lower)[static_cast<std::size_t>(n)])
                out.emplace_back(s + (r - n) * stride[static_cast<std::size_t>(mode)], a * v);
        }
        return out;
    };

    auto boundary = [&](long s) {
        for (int i = 0; i < m; ++i)
            if (occ(s, i) == nmax) return true;
        return false;
    };

    // H conserves the parity of the total quantum number: diagonalize each sector.
    CMatrix a = h.A(), b = h.B();
    std::vector<std::pair<double, double>> levels;  // (energy, boundary weight)
    for (int parity = 0; parity < 2; ++parity) {
        std::vector<long> states;
        std::vector<long> local(static_cast<std::size_t>(dim), -1);
        for (long s = 0; s < dim; ++s) {
            int total = 0;
            for (int i = 0; i < m; ++i) total += occ(s, i);
            if (total % 2 == parity) {
                local[static_cast<std::size_t>(s)] = static_cast<long>(states.size());
                states.push_back(s);
            }
        }
        const auto n = static_cast<Eigen::Index>(states.size());
        if (n == 0) continue;
        CMatrix hm = CMatrix::Zero(n, n);
        for (Eigen::Index c = 0; c < n; ++c) {
            long s = states[static_cast<std::size_t>(c)];
            hm(c, c) += h.e0();
            Amp start{{s, 1.0}};
            auto add = [&](const Amp& amps, Complex coef) {
                for (auto [t, v] : amps) hm(local[static_cast<std::size_t>(t)], c) += coef * v;
            };
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    add(apply(apply(start, j, false), i, true), a(i, j));
                    add(apply(apply(start, j, true), i, true), 0.5 * b(i, j));
                    add(apply(apply(start, j, false), i, false), 0.5 * std::conj(b(i, j)));
                }
        }
        hm = (0.5 * (hm + hm.adjoint())).eval();
        Eigen::SelfAdjointEigenSolver<CMatrix> es(hm);
        if (es.info() != Eigen::Success) throw std::runtime_error("Fock-space eigen-solver failed");
        for (Eigen::Index k = 0; k < n; ++k) {
            double w = 0;
            for (Eigen::Index r = 0; r < n; ++r)
                if (boundary(states[static_cast<std::size_t>(r)])) w += std::norm(es.eigenvectors()(r, k));
            levels.emplace_back(es.eigenvalues()(k), w);
        }
    }
    std::sort(levels.begin(), levels.end());

    FockSpectrum out;
    out.nmax = nmax;
    for (const auto& [e, w] : levels) out.energies.push_back(e);
    const std::size_t watched = std::min<std::size_t>(levels.size(), static_cast<std::size_t>(m + 1));
    for (std::size_t k = 0; k < watched; ++k) out.boundary_weight = std::max(out.boundary_weight, levels[k].second);
    out.cutoff_ok = out.boundary_weight <= tol.boundary_weight;
    return out;
}

// Pairs each RPA frequency with the nearest Fock gap.
struct FockComparison {
    std::vector<double> matched_gaps;
    double max_deviation = 0;
};

inline FockComparison compare_with_fock(const RpaSolution& sol, const FockSpectrum& fock) {
    FockComparison cmp;
    auto gaps = fock.gaps();
    for (double w : sol.frequencies) {
        double best = gaps.empty() ? std::nan("") : gaps.front();
        for (double g : gaps)
            if (std::abs(g - w) < std::abs(best - w)) best = g;
        cmp.matched_gaps.push_back(best);
        cmp.max_deviation = std::max(cmp.max_deviation, std::abs(best - w));
    }
    return cmp;
}

// JSON: numbers or [re, im] pairs.
namespace detail {

inline Complex complex_from_json(const nlohmann::json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
    throw std::invalid_argument("matrix entry must be a number or [re, im]");
}

inline CMatrix matrix_from_json(const nlohmann::json& j, const std::string& name) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument(name + " must be a non-empty array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    CMatrix out(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw std::invalid_argument(name + " rows differ in length");
        for (Eigen::Index c = 0; c < cols; ++c) out(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    return out;
}

inline nlohmann::json matrix_to_json(const CMatrix& m, bool real) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (real)
                row.push_back(m(r, c).real());
            else
                row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        out.push_back(row);
    }
    return out;
}

}  // namespace detail

inline QuadraticBosonHamiltonian hamiltonian_from_json(const nlohmann::json& j,
                                                       PairingConvention conv = PairingConvention::Sum) {
    if (!j.is_object()) throw std::invalid_argument("Hamiltonian JSON must be an object");
    double e0 = j.value("E0", 0.0);
    if (!j.contains("V")) throw std::invalid_argument("Hamiltonian JSON needs V");
    CMatrix v = detail::matrix_from_json(j["V"], "V");
    CMatrix w = j.contains("W") ? detail::matrix_from_json(j["W"], "W") : CMatrix::Zero(v.rows(), v.cols());
    return QuadraticBosonHamiltonian(e0, v, w, conv);
}

inline nlohmann::json to_json(const RpaSolution& sol) {
    bool real = sol.X.size() == 0 || (sol.X.imag().cwiseAbs().maxCoeff() < 1e-14 && sol.Y.imag().cwiseAbs().maxCoeff() < 1e-14);
    nlohmann::json out;
    out["numeric"] = "floating point";
    out["frequencies"] = sol.frequencies;
    out["stable"] = sol.stable;
    out["zero_mode"] = sol.zero_mode;
    out["delta_E"] = sol.delta_E ? nlohmann::json(*sol.delta_E) : nlohmann::json(nullptr);
    out["X"] = detail::matrix_to_json(sol.X, real);
    out["Y"] = detail::matrix_to_json(sol.Y, real);
    nlohmann::json levels = nlohmann::json::array();
    for (auto ev : sol.spectrum) levels.push_back({ev.real(), ev.imag()});
    out["spectrum"] = levels;
    if (!sol.diagnostic.empty()) out["diagnostic"] = sol.diagnostic;
    return out;
}

}  // namespace capelli
