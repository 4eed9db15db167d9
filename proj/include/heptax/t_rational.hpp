#pragma once

#include <iosfwd>
#include <string>

#include "heptax/polynomial.hpp"

namespace heptax {

/// Degree ceiling for symbolic values. A zero-pivot substitution only raises
/// degrees by a bounded amount, so hitting the ceiling means runaway input.
int symbolic_degree_cap();
void set_symbolic_degree_cap(int cap);

/// Rational function in the breakdown indeterminate t. Canonical form:
/// gcd(num, den) = 1 and the denominator's lowest-order nonzero coefficient
/// is 1, so equality is coefficient-wise. A single global t is shared by all
/// pivot substitutions; final results are read off as the limit t -> 0.
class TRational {
public:
    TRational() : num_(), den_(Polynomial::one()) {}
    explicit TRational(Rational constant)
        : num_(std::move(constant)), den_(Polynomial::one()) {}
    TRational(Polynomial num, Polynomial den);

    /// The indeterminate substituted for vanishing pivots.
    static TRational t();

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    /// The limit t -> 0. Throws PoleAtZero when no finite limit exists,
    /// which signals a genuinely singular system.
    Rational at_zero() const;

    /// Exact value of a constant; callers must check is_constant() first.
    Rational constant_value() const;

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    TRational operator-() const;
    friend TRational operator+(const TRational& a, const TRational& b);
    friend TRational operator-(const TRational& a, const TRational& b);
    friend TRational operator*(const TRational& a, const TRational& b);
    friend TRational operator/(const TRational& a, const TRational& b);
    TRational& operator+=(const TRational& o) { return *this = *this + o; }
    TRational& operator-=(const TRational& o) { return *this = *this - o; }
    TRational& operator*=(const TRational& o) { return *this = *this * o; }
    TRational& operator/=(const TRational& o) { return *this = *this / o; }

    friend bool operator==(const TRational& a, const TRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const TRational& a, const TRational& b) { return !(a == b); }

    std::string to_string() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const TRational& v);

}  // namespace heptax
