#include "heptax/t_rational.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <utility>

namespace heptax {

namespace {
std::atomic<int> g_degree_cap{64};
}

int symbolic_degree_cap() { return g_degree_cap.load(std::memory_order_relaxed); }

void set_symbolic_degree_cap(int cap) {
    if (cap < 1) cap = 1;
    g_degree_cap.store(cap, std::memory_order_relaxed);
}

TRational::TRational(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

TRational TRational::t() {
    return TRational(Polynomial::t(), Polynomial::one());
}

void TRational::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::one();
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::divmod(num_, g).first;
        den_ = Polynomial::divmod(den_, g).first;
    }
    // Scale so the denominator's lowest-order nonzero coefficient is 1.
    const Rational lead = den_.coeff(static_cast<std::size_t>(den_.trailing_order()));
    if (lead != Rational(1)) {
        const Rational inv = Rational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    const int cap = symbolic_degree_cap();
    const int deg = std::max(num_.degree(), den_.degree());
    if (deg > cap) throw DegreeOverflow(deg, cap);
}

Rational TRational::at_zero() const {
    if (den_.trailing_order() > 0) {
        // Reduced form: the numerator cannot also vanish at 0.
        throw PoleAtZero("no finite limit at t = 0: (" + to_string() + ")");
    }
    return num_.at_zero();  // denominator is 1 + O(t) after normalization
}

Rational TRational::constant_value() const {
    return num_.at_zero();
}

TRational TRational::operator-() const {
    TRational r = *this;
    r.num_ = -r.num_;
    return r;
}

TRational operator+(const TRational& a, const TRational& b) {
    return TRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

TRational operator-(const TRational& a, const TRational& b) {
    return TRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

TRational operator*(const TRational& a, const TRational& b) {
    return TRational(a.num_ * b.num_, a.den_ * b.den_);
}

TRational operator/(const TRational& a, const TRational& b) {
    if (b.is_zero()) throw DivisionByZero();
    return TRational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string TRational::to_string() const {
    if (den_ == Polynomial::one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const TRational& v) {
    return os << v.to_string();
}

}  // namespace heptax
