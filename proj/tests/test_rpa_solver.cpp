#include "capelli/rpa_solver.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace capelli;

namespace {

CMatrix scalar(double v) {
    CMatrix m(1, 1);
    m << v;
    return m;
}

QuadraticBosonHamiltonian one_mode(double a, double b, double e0 = 0) {
    // B = W + W^T = 2W under the default convention.
    return QuadraticBosonHamiltonian(e0, scalar(a), scalar(b / 2));
}

// Small random complex Hamiltonian with a positive dynamical matrix.
QuadraticBosonHamiltonian random_stable(std::mt19937& rng, int m) {
    std::uniform_real_distribution<double> u(-0.05, 0.05);
    CMatrix v = CMatrix::Zero(m, m), w(m, m);
    for (int i = 0; i < m; ++i) {
        v(i, i) = 1.0 + 0.4 * i + u(rng);
        for (int j = 0; j < i; ++j) {
            Complex c(u(rng), u(rng));
            v(i, j) = c;
            v(j, i) = std::conj(c);
        }
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) w(i, j) = Complex(u(rng), u(rng));
    return QuadraticBosonHamiltonian(0.25, v, w);
}

}  // namespace

TEST(RpaMatrix, UncoupledOscillator) {
    CMatrix m = build_rpa_matrix(QuadraticBosonHamiltonian(0, scalar(3), scalar(0)));
    CMatrix expected(2, 2);
    expected << 3, 0, 0, -3;
    EXPECT_EQ(m, expected);
}

TEST(RpaMatrix, PairingTermFromHalfW) {
    CMatrix m = build_rpa_matrix(QuadraticBosonHamiltonian(0, scalar(2), scalar(0.75)));
    CMatrix expected(2, 2);
    expected << 2, 1.5, -1.5, -2;
    EXPECT_EQ(m, expected);
}

TEST(RpaMatrix, PairingBlockIsSymmetric) {
    CMatrix w = CMatrix::Random(3, 3);
    QuadraticBosonHamiltonian h(0, CMatrix::Identity(3, 3), w);
    CMatrix b = build_rpa_matrix(h).topRightCorner(3, 3);
    EXPECT_LT((b - b.transpose()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((b - (w + w.transpose())).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(RpaMatrix, AverageConventionHalvesPairing) {
    QuadraticBosonHamiltonian h(0, scalar(2), scalar(1), PairingConvention::Average);
    EXPECT_EQ(build_rpa_matrix(h)(0, 1), Complex(1, 0));
}

TEST(Hamiltonian, ValidatesInput) {
    CMatrix v(2, 2);
    v << 1, Complex(0, 1), Complex(0, 1), 1;
    EXPECT_THROW(QuadraticBosonHamiltonian(0, v, CMatrix::Zero(2, 2)), std::invalid_argument);
    EXPECT_THROW(QuadraticBosonHamiltonian(0, CMatrix::Identity(2, 2), CMatrix::Zero(3, 3)), std::invalid_argument);
    EXPECT_THROW(QuadraticBosonHamiltonian(0, CMatrix::Zero(2, 3), CMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST(Rpa, NoCorrelationWithoutPairing) {
    RpaSolution s = solve_rpa(one_mode(2, 0));
    ASSERT_TRUE(s.stable);
    EXPECT_NEAR(s.frequencies[0], 2, 1e-12);
    EXPECT_NEAR(std::abs(s.X(0, 0)), 1, 1e-12);
    EXPECT_NEAR(std::abs(s.Y(0, 0)), 0, 1e-12);
    EXPECT_NEAR(*s.delta_E, 0, 1e-12);
}

TEST(Rpa, OneModeBogoliubovFrequency) {
    RpaSolution s = solve_rpa(one_mode(2, 1));
    ASSERT_TRUE(s.stable);
    EXPECT_NEAR(s.frequencies[0], std::sqrt(3.0), 1e-10);
    EXPECT_NEAR(*s.delta_E, 0.5 * (std::sqrt(3.0) - 2), 1e-12);
    EXPECT_NEAR(std::norm(s.X(0, 0)) - std::norm(s.Y(0, 0)), 1, 1e-12);
}

TEST(Rpa, UnstableCaseIsData) {
    RpaSolution s = solve_rpa(one_mode(1, 2));
    EXPECT_FALSE(s.stable);
    EXPECT_TRUE(s.frequencies.empty());
    EXPECT_FALSE(s.delta_E.has_value());
    EXPECT_EQ(s.diagnostic, "complex RPA frequency");
    bool imaginary = false;
    for (auto ev : s.spectrum) imaginary = imaginary || std::abs(ev.imag()) > 1e-6;
    EXPECT_TRUE(imaginary);
}

TEST(Rpa, ZeroModeIsFlagged) {
    RpaSolution s = solve_rpa(one_mode(1, 1));
    EXPECT_FALSE(s.stable);
    EXPECT_TRUE(s.zero_mode);
}

TEST(Rpa, NoPairingGivesEigenvaluesOfV) {
    CMatrix v(3, 3);
    v << 2, Complex(0.1, 0.2), 0.3, Complex(0.1, -0.2), 1.5, 0, 0.3, 0, 1;
    RpaSolution s = solve_rpa(QuadraticBosonHamiltonian(0, v, CMatrix::Zero(3, 3)));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(v);
    ASSERT_TRUE(s.stable);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(s.frequencies[static_cast<std::size_t>(i)], es.eigenvalues()(i), 1e-10);
}

TEST(Rpa, RandomInvariants) {
    std::mt19937 rng(99);
    for (int t = 0; t < 30; ++t) {
        int m = 1 + t % 4;
        auto h = random_stable(rng, m);
        RpaSolution s = solve_rpa(h);
        ASSERT_TRUE(s.stable);
        CMatrix norm = s.X.adjoint() * s.X - s.Y.adjoint() * s.Y;
        EXPECT_LT((norm - CMatrix::Identity(m, m)).cwiseAbs().maxCoeff(), 1e-10);
        for (int i = 0; i < 2 * m; ++i) {
            EXPECT_LT(std::abs(s.spectrum[static_cast<std::size_t>(i)] + s.spectrum[static_cast<std::size_t>(2 * m - 1 - i)]), 1e-10);
            EXPECT_LT(std::abs(s.spectrum[static_cast<std::size_t>(i)].imag()), 1e-10);
        }
        for (int i = 0; i < m; ++i)
            EXPECT_NEAR(s.frequencies[static_cast<std::size_t>(i)], s.spectrum[static_cast<std::size_t>(m + i)].real(), 1e-10);
        RpaSolution scaled = solve_rpa(h.scaled(2.5));
        for (int i = 0; i < m; ++i)
            EXPECT_NEAR(scaled.frequencies[static_cast<std::size_t>(i)], 2.5 * s.frequencies[static_cast<std::size_t>(i)], 1e-10);
    }
}

// Each column of (X; Y) is a right eigenvector of the RPA matrix with eigenvalue omega.
TEST(Rpa, AmplitudesAreEigenvectors) {
    std::mt19937 rng(5);
    auto h = random_stable(rng, 3);
    RpaSolution s = solve_rpa(h);
    CMatrix rpa = build_rpa_matrix(h);
    for (int i = 0; i < 3; ++i) {
        CVector v(6);
        v << s.X.col(i), s.Y.col(i);
        EXPECT_LT((rpa * v - s.frequencies[static_cast<std::size_t>(i)] * v).norm(), 1e-10);
    }
}

TEST(Fock, UncoupledLadder) {
    FockSpectrum f = fock_oracle(one_mode(2, 0, 0.5), 5);
    ASSERT_EQ(f.energies.size(), 6u);
    for (int n = 0; n <= 5; ++n) EXPECT_NEAR(f.energies[static_cast<std::size_t>(n)], 0.5 + 2 * n, 1e-12);
}

TEST(Fock, OneModeConvergesToBogoliubov) {
    auto h = one_mode(2, 1, 0.5);
    FockSpectrum f = fock_oracle(h, 40);
    EXPECT_TRUE(f.cutoff_ok);
    EXPECT_NEAR(f.energies[1] - f.energies[0], std::sqrt(3.0), 1e-8);
    EXPECT_NEAR(f.energies[0], 0.5 + 0.5 * (std::sqrt(3.0) - 2), 1e-10);
}

TEST(Fock, SmallCutoffIsFlagged) {
    FockSpectrum f = fock_oracle(one_mode(2, 1.8), 3);
    EXPECT_FALSE(f.cutoff_ok);
    EXPECT_GT(f.boundary_weight, 1e-8);
}

TEST(Fock, RandomGapsMatchRpa) {
    std::mt19937 rng(17);
    for (int m = 1; m <= 2; ++m)
        for (int t = 0; t < 3; ++t) {
            auto h = random_stable(rng, m);
            RpaSolution s = solve_rpa(h);
            FockSpectrum f = fock_oracle(h, default_fock_cutoff(m));
            EXPECT_TRUE(f.cutoff_ok);
            EXPECT_LT(compare_with_fock(s, f).max_deviation, 1e-6);
            EXPECT_NEAR(f.energies[0], h.e0() + *s.delta_E, 1e-8);
        }
}

TEST(Fock, RejectsBadCutoffs) {
    EXPECT_THROW(fock_oracle(one_mode(1, 0), 0), std::invalid_argument);
    QuadraticBosonHamiltonian big(0, CMatrix::Identity(4, 4), CMatrix::Zero(4, 4));
    EXPECT_THROW(fock_oracle(big, 20), std::invalid_argument);
}

TEST(RpaJson, ParsesRealAndComplexEntries) {
    auto j = nlohmann::json::parse(R"({"E0": 1.5, "V": [[2, [0.1, 0.2]], [[0.1, -0.2], 3]], "W": [[0.1, 0], [0, 0.2]]})");
    auto h = hamiltonian_from_json(j);
    EXPECT_EQ(h.modes(), 2);
    EXPECT_EQ(h.V()(0, 1), Complex(0.1, 0.2));
    EXPECT_DOUBLE_EQ(h.e0(), 1.5);
    EXPECT_THROW(hamiltonian_from_json(nlohmann::json::parse(R"({"W": [[1]]})")), std::invalid_argument);
    EXPECT_THROW(hamiltonian_from_json(nlohmann::json::parse(R"({"V": [[1, 2]]})")), std::invalid_argument);
    EXPECT_THROW(hamiltonian_from_json(nlohmann::json::parse(R"({"V": [["a"]]})")), std::invalid_argument);
}

TEST(RpaJson, SolutionFields) {
    auto out = to_json(solve_rpa(one_mode(2, 1)));
    EXPECT_EQ(out["numeric"], "floating point");
    EXPECT_TRUE(out["stable"].get<bool>());
    EXPECT_NEAR(out["frequencies"][0].get<double>(), std::sqrt(3.0), 1e-10);
    EXPECT_TRUE(out["X"][0][0].is_number());
    auto bad = to_json(solve_rpa(one_mode(1, 2)));
    EXPECT_FALSE(bad["stable"].get<bool>());
    EXPECT_TRUE(bad["delta_E"].is_null());
}
