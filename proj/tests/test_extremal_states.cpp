#include "capelli/extremal_states.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace capelli;
using capelli::testing::admissible_weights;

TEST(Extremal, TypeIExamplePolynomialAndNorm) {
    auto kind = AlgebraKind::type_i(2, 2);
    auto label = ExtremalLabel::make(kind, {2, 1});
    EXPECT_EQ(label.exponents, (std::vector<int>{1, 1}));
    Poly psi = extremal_poly(label);
    EXPECT_EQ(to_string(psi), "1 * z[1,1]^2 * z[2,2] - 1 * z[1,1] * z[1,2] * z[2,1]");
    EXPECT_EQ(norm_closed_form(label), 3);
    EXPECT_EQ(bargmann_inner(psi, psi), 3);
}

TEST(Extremal, TypeIIIExampleIsPfaffian) {
    auto kind = AlgebraKind::type_iii(4);
    auto label = ExtremalLabel::make(kind, {1, 1, 1, 1});
    EXPECT_EQ(extremal_poly(label), pfaffian_z(kind, 2));
    EXPECT_EQ(label.exponents, (std::vector<int>{0, 1}));
}

TEST(Extremal, ZeroWeightIsConstant) {
    for (const auto& kind : {AlgebraKind::type_i(2, 3), AlgebraKind::type_ii(2), AlgebraKind::type_iii(5)}) {
        auto label = ExtremalLabel::make(kind, {});
        EXPECT_EQ(extremal_poly(label), Poly::one(kind));
        EXPECT_EQ(norm_closed_form(label), 1);
    }
}

TEST(Extremal, AdmissibilityErrorsNameTheInvariant) {
    auto expect_error = [](const AlgebraKind& kind, WeightVector nu, const std::string& fragment) {
        try {
            ExtremalLabel::make(kind, nu);
            FAIL() << "accepted " << to_string(nu);
        } catch (const std::invalid_argument& e) {
            EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
        }
    };
    expect_error(AlgebraKind::type_i(2, 2), {1, 2}, "non-increasing");
    expect_error(AlgebraKind::type_i(2, 2), {1, -1}, "non-negative");
    expect_error(AlgebraKind::type_i(2, 3), {1, 1, 1}, "at most 2");
    expect_error(AlgebraKind::type_ii(2), {3, 1}, "even");
    expect_error(AlgebraKind::type_iii(4), {2, 1, 1, 1}, "nu_{2i-1} = nu_{2i}");
    expect_error(AlgebraKind::type_iii(3), {1, 1, 1}, "odd N");
}

TEST(Extremal, ExponentMapRoundTrips) {
    for (const auto& p : capelli::testing::norm_grid()) {
        auto label = ExtremalLabel::make(p.kind, p.nu);
        EXPECT_EQ(label.reconstruct(), label.nu) << p.kind.name() << " " << to_string(p.nu);
    }
}

TEST(Extremal, PolynomialsAreExtremalWithWeightNu) {
    std::vector<std::pair<AlgebraKind, int>> cases{
        {AlgebraKind::type_i(2, 2), 3}, {AlgebraKind::type_i(2, 3), 3}, {AlgebraKind::type_i(3, 2), 3},
        {AlgebraKind::type_ii(2), 4},   {AlgebraKind::type_iii(4), 3},  {AlgebraKind::type_iii(5), 2}};
    for (const auto& [kind, max_first] : cases)
        for (const auto& nu : admissible_weights(kind.type(), label_length(kind), max_first)) {
            Poly psi = extremal_poly(ExtremalLabel::make(kind, nu));
            EXPECT_TRUE(is_extremal(psi)) << kind.name() << " " << to_string(nu);
            Weight w = *weight(psi);
            WeightVector row(nu);
            row.resize(static_cast<std::size_t>(kind.rows()), 0);
            EXPECT_EQ(w.row, row);
            if (kind.type() == KindType::I) {
                std::vector<int> col(static_cast<std::size_t>(kind.cols()), 0);
                for (std::size_t i = 0; i < nu.size(); ++i) col[i] = -nu[i];
                EXPECT_EQ(w.col, col);
            }
        }
}

TEST(Extremal, DeterminantsAreExtremal) {
    for (int n = 1; n <= 3; ++n) EXPECT_TRUE(is_extremal(det_z(AlgebraKind::type_i(3, 3), n)));
    for (int n = 1; n <= 3; ++n) EXPECT_TRUE(is_extremal(det_z(AlgebraKind::type_ii(3), n)));
    for (int m = 1; m <= 2; ++m) EXPECT_TRUE(is_extremal(pfaffian_z(AlgebraKind::type_iii(4), m)));
}

TEST(Extremal, NonExtremalStatesAreRejected) {
    auto kind = AlgebraKind::type_i(2, 2);
    EXPECT_FALSE(is_extremal(parse_poly(kind, "z[2,1]")));
    EXPECT_FALSE(is_extremal(parse_poly(kind, "z[1,2]")));
    EXPECT_FALSE(is_extremal(parse_poly(AlgebraKind::type_ii(2), "z[2,2]")));
    EXPECT_THROW(is_extremal(Poly(kind)), std::invalid_argument);
    EXPECT_THROW(is_extremal(parse_poly(kind, "z[1,1] + z[1,2]")), std::invalid_argument);
}

// R_ab = -sum_i z_ib d_ia
TEST(Generators, RightActionFollowsDefinition) {
    auto kind = AlgebraKind::type_i(1, 2);
    Poly z11 = parse_poly(kind, "z[1,1]");
    EXPECT_EQ(apply_generator(GeneratorSpec::r(1, 2), z11), parse_poly(kind, "-1 * z[1,2]"));
    EXPECT_TRUE(apply_generator(GeneratorSpec::r(2, 1), z11).is_zero());
    EXPECT_EQ(apply_generator(GeneratorSpec::r(1, 1), z11), -z11);
    EXPECT_THROW(apply_generator(GeneratorSpec::l(1, 2), z11), std::invalid_argument);
}

TEST(Norms, SmallGridMatchesOracle) {
    for (const auto& kind : {AlgebraKind::type_i(2, 2), AlgebraKind::type_ii(2), AlgebraKind::type_iii(4)})
        for (const auto& nu : admissible_weights(kind.type(), label_length(kind), 4)) {
            auto label = ExtremalLabel::make(kind, nu);
            Poly psi = extremal_poly(label);
            EXPECT_EQ(norm_closed_form(label), bargmann_inner(psi, psi)) << kind.name() << " " << to_string(nu);
        }
}

TEST(Norms, KnownValues) {
    EXPECT_EQ(closed_form_norm(KindType::I, {1}), 1);
    EXPECT_EQ(closed_form_norm(KindType::I, {1, 1}), 2);
    EXPECT_EQ(closed_form_norm(KindType::II, {2}), 2);
    EXPECT_EQ(closed_form_norm(KindType::II, {4}), 8);
    EXPECT_EQ(closed_form_norm(KindType::III, {1, 1}), 1);
    EXPECT_EQ(closed_form_norm(KindType::III, {1, 1, 1, 1}), 3);
}

TEST(Norms, OffsetMutationsAreDetected) {
    struct Case {
        KindType type;
        AlgebraKind kind;
    };
    std::vector<Case> cases{{KindType::I, AlgebraKind::type_i(2, 2)},
                            {KindType::II, AlgebraKind::type_ii(2)},
                            {KindType::III, AlgebraKind::type_iii(4)}};
    for (const auto& c : cases) {
        std::vector<NormOffsets> mutations;
        for (int d : {-1, 1}) {
            mutations.push_back({d, 0, 0});
            mutations.push_back({0, d, 0});
            if (c.type != KindType::I) mutations.push_back({0, 0, d});
        }
        for (const auto& off : mutations) {
            bool detected = false;
            for (const auto& nu : admissible_weights(c.type, label_length(c.kind), 4)) {
                Poly psi = extremal_poly(ExtremalLabel::make(c.kind, nu));
                try {
                    detected = detected || closed_form_norm(c.type, nu, off) != bargmann_inner(psi, psi);
                } catch (const std::domain_error&) {
                    detected = true;
                }
            }
            EXPECT_TRUE(detected) << c.kind.name() << " offsets " << off.factorial << off.gap << off.gap_minus;
        }
    }
}

TEST(MatrixElements, TypeIIExample) {
    auto kind = AlgebraKind::type_ii(1);
    RadicalValue v = matel_extremal(kind, {2}, 1);
    EXPECT_EQ(v, RadicalValue(2));
    EXPECT_EQ(v.square(), 4);
    EXPECT_EQ(capelli::testing::matel_by_inner_products(kind, {2}, 1), v);
}

TEST(MatrixElements, SmallGridMatchesOracleIncludingEdges) {
    for (const auto& kind : {AlgebraKind::type_i(2, 2), AlgebraKind::type_ii(2), AlgebraKind::type_iii(4)})
        for (const auto& nu : admissible_weights(kind.type(), label_length(kind), 3))
            for (int k = 1; k <= matel_k_range(kind); ++k) {
                WeightVector shifted = shifted_weight(kind.type(), nu, k);
                RadicalValue closed = matel_extremal(kind, nu, k);
                if (!admissibility_error(kind.type(), shifted).empty()) {
                    EXPECT_TRUE(closed.is_zero());
                    continue;
                }
                EXPECT_EQ(closed, capelli::testing::matel_by_inner_products(kind, nu, k))
                    << kind.name() << " " << to_string(nu) << " k=" << k;
            }
}

TEST(MatrixElements, RangeChecks) {
    EXPECT_THROW(matel_extremal(AlgebraKind::type_i(2, 2), {1, 0}, 3), std::invalid_argument);
    EXPECT_THROW(matel_extremal(AlgebraKind::type_iii(5), {1, 1}, 3), std::invalid_argument);
    EXPECT_TRUE(matel_extremal(AlgebraKind::type_i(2, 2), {1, 1}, 2).is_zero());
}

TEST(Radical, NormalizesToSquarefreeRadicand) {
    RadicalValue v(3, 12);
    EXPECT_EQ(v.coeff(), 6);
    EXPECT_EQ(v.radicand(), 3);
    RadicalValue w(1, make_rational(1, 2));
    EXPECT_EQ(w.coeff(), make_rational(1, 2));
    EXPECT_EQ(w.radicand(), 2);
    EXPECT_EQ(RadicalValue(5, 0), RadicalValue());
    EXPECT_EQ(RadicalValue::sqrt(2) * RadicalValue::sqrt(8), RadicalValue(4));
    EXPECT_NEAR(RadicalValue(1, 3).to_double(), std::sqrt(3.0), 1e-15);
    EXPECT_THROW(RadicalValue(1, -2), std::domain_error);
}

TEST(Ladder, NablaPowerXPowerIsDiagonal) {
    struct Case {
        AlgebraKind kind;
        int n;
        int max_first;
    };
    std::vector<Case> cases{{AlgebraKind::type_i(2, 2), 1, 3}, {AlgebraKind::type_i(2, 2), 2, 2},
                            {AlgebraKind::type_i(3, 3), 2, 2}, {AlgebraKind::type_ii(2), 1, 4},
                            {AlgebraKind::type_ii(2), 2, 2}};
    for (const auto& c : cases)
        for (const auto& nu : admissible_weights(c.kind.type(), c.n, c.max_first)) {
            Poly psi = extremal_poly(ExtremalLabel::make(c.kind, nu));
            Poly x = det_z(c.kind, c.n);
            DiffOp d = det_partial(c.kind, c.n);
            for (int p = 1; p <= 2; ++p) {
                Poly lhs = d.pow(p).apply(x.pow(p) * psi);
                EXPECT_EQ(lhs, psi * ladder_eigenvalue(c.kind, c.n, p, nu))
                    << c.kind.name() << " n=" << c.n << " p=" << p << " " << to_string(nu);
            }
        }
}

TEST(Ladder, TypeIIIBoxPowerPhiPower) {
    auto kind = AlgebraKind::type_iii(4);
    for (int m = 1; m <= 2; ++m)
        for (const auto& nu : admissible_weights(KindType::III, 2 * m, 2)) {
            Poly phi = extremal_poly(ExtremalLabel::make(kind, nu));
            for (int p = 1; p <= 2; ++p) {
                Poly lhs = pfaffian_partial(kind, m).pow(p).apply(pfaffian_z(kind, m).pow(p) * phi);
                EXPECT_EQ(lhs, phi * ladder_eigenvalue(kind, m, p, nu)) << "m=" << m << " " << to_string(nu);
            }
        }
}

TEST(Ladder, RejectsWeightsBeyondTheLadder) {
    EXPECT_THROW(ladder_eigenvalue(AlgebraKind::type_i(2, 2), 1, 1, {1, 1}), std::invalid_argument);
    EXPECT_THROW(ladder_eigenvalue(AlgebraKind::type_i(2, 2), 1, -1, {1}), std::invalid_argument);
}

TEST(XEigenvalue, ProductIdentityAndBoxPhi) {
    auto kind = AlgebraKind::type_iii(4);
    for (int m = 1; m <= 2; ++m)
        for (const auto& nu : admissible_weights(KindType::III, 2 * m, 4)) {
            WeightVector up(nu);
            for (int& v : up) v += 1;
            Rational prod = 1;
            for (int i = 1; i <= 2 * m; ++i) prod *= component(nu, i) + 2 * m + 1 - i;
            EXPECT_EQ(X_eigenvalue(up, m) * X_eigenvalue(nu, m), prod);
            Poly phi = extremal_poly(ExtremalLabel::make(kind, nu));
            EXPECT_EQ(pfaffian_partial(kind, m).apply(pfaffian_z(kind, m) * phi), phi * X_eigenvalue(nu, m));
        }
    EXPECT_EQ(X_eigenvalue({0, 0}, 1), 1);
    EXPECT_EQ(X_eigenvalue({0, 0, 0, 0}, 2), 3);
}
