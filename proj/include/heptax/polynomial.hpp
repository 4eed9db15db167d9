#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "heptax/rational.hpp"

namespace heptax {

/// Dense univariate polynomial in t with exact rational coefficients,
/// stored lowest order first with no trailing zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational constant);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial one() { return Polynomial(Rational(1)); }
    /// The monomial t.
    static Polynomial t();

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Order of the lowest nonzero term; -1 for the zero polynomial.
    int trailing_order() const;

    const Rational& coeff(std::size_t k) const;
    const Rational& leading() const { return coeffs_.back(); }
    Rational at_zero() const { return coeff(0); }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const Rational& s) const;
    /// Quotient and remainder of exact polynomial division; b must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    /// Monic greatest common divisor; zero only if both inputs are zero.
    static Polynomial gcd(Polynomial a, Polynomial b);
    /// Divides by t^k; every term must have order >= k.
    Polynomial shifted_down(int k) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace heptax
