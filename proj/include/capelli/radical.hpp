#pragma once

#include "capelli/rational.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace capelli {

// coeff * sqrt(radicand) with the radicand reduced to a squarefree positive
// integer (squarefree numerator, denominator 1). Zero is coeff 0, radicand 1.
// The reduced form is unique, so == is exact value equality.
class RadicalValue {
public:
    RadicalValue() = default;
    explicit RadicalValue(const Rational& c) : coeff_(c) {}
    RadicalValue(const Rational& c, const Rational& radicand) : coeff_(c), radicand_(radicand) { normalize(); }

    static RadicalValue sqrt(const Rational& r) { return RadicalValue(1, r); }

    const Rational& coeff() const { return coeff_; }
    const Rational& radicand() const { return radicand_; }
    bool is_zero() const { return coeff_ == 0; }

    Rational square() const { return coeff_ * coeff_ * radicand_; }
    double to_double() const { return coeff_.get_d() * std::sqrt(radicand_.get_d()); }

    friend RadicalValue operator*(const RadicalValue& a, const RadicalValue& b) {
        return RadicalValue(a.coeff_ * b.coeff_, a.radicand_ * b.radicand_);
    }
    friend RadicalValue operator*(const Rational& s, const RadicalValue& a) {
        return RadicalValue(s * a.coeff_, a.radicand_);
    }
    friend bool operator==(const RadicalValue& a, const RadicalValue& b) {
        return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
    }

private:
    void normalize() {
        if (radicand_ < 0) throw std::domain_error("negative radicand");
        if (radicand_ == 0 || coeff_ == 0) {
            coeff_ = 0;
            radicand_ = 1;
            return;
        }
        // sqrt(a/b) = sqrt(a*b)/b
        Integer num = radicand_.get_num() * radicand_.get_den();
        coeff_ /= Rational(radicand_.get_den());
        Integer square_part = 1, free_part = 1;
        split_square(num, square_part, free_part);
        coeff_ *= Rational(square_part);
        coeff_.canonicalize();
        radicand_ = Rational(free_part);
    }

    // n = square_part^2 * free_part with free_part squarefree.
    static void split_square(Integer n, Integer& square_part, Integer& free_part) {
        square_part = 1;
        free_part = 1;
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            mpz_sqrt(square_part.get_mpz_t(), n.get_mpz_t());
            return;
        }
        for (Integer d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            for (int k = 0; k < e / 2; ++k) square_part *= d;
            if (e % 2) free_part *= d;
            if (n > 1 && mpz_perfect_square_p(n.get_mpz_t())) {
                Integer r;
                mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
                square_part *= r;
                n = 1;
            }
        }
        free_part *= n;
    }

    Rational coeff_ = 0;
    Rational radicand_ = 1;
};

inline nlohmann::json to_json(const RadicalValue& v) {
    return {{"coeff", to_string(v.coeff())}, {"radicand", to_string(v.radicand())}};
}

}  // namespace capelli
