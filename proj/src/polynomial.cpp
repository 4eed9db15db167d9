#include "heptax/polynomial.hpp"

#include <algorithm>
#include <ostream>

namespace heptax {

namespace {
const Rational kZero{};
}

Polynomial::Polynomial(Rational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::t() {
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int Polynomial::trailing_order() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

const Rational& Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k)
        r.coeffs_[k] = a.coeff(k) + b.coeff(k);
    r.trim();
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k)
        r.coeffs_[k] = a.coeff(k) - b.coeff(k);
    r.trim();
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

Polynomial Polynomial::scaled(const Rational& s) const {
    if (s.is_zero()) return Polynomial();
    Polynomial r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(c * s);
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Polynomial rem = a;
    Polynomial quot;
    const int db = b.degree();
    if (rem.degree() >= db)
        quot.coeffs_.assign(static_cast<std::size_t>(rem.degree() - db) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        const int shift = rem.degree() - db;
        Rational factor = rem.leading() / b.leading();
        quot.coeffs_[static_cast<std::size_t>(shift)] = factor;
        // rem -= factor * t^shift * b
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
            rem.coeffs_[static_cast<std::size_t>(shift) + k] -= factor * b.coeffs_[k];
        rem.trim();
    }
    quot.trim();
    return {std::move(quot), std::move(rem)};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.leading());  // monic
}

Polynomial Polynomial::shifted_down(int k) const {
    if (k == 0) return *this;
    Polynomial r;
    if (static_cast<int>(coeffs_.size()) <= k) return r;
    r.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
    return r;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += c.is_negative() ? " - " : " + ";
        else if (c.is_negative()) out += "-";
        const std::string mag = c.abs().to_string();
        if (k == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            out += k == 1 ? "t" : "t^" + std::to_string(k);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
}

}  // namespace heptax
