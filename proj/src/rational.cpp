#include "heptax/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace heptax {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

Rational Rational::from_string(std::string_view text) {
    auto malformed = [&] {
        return ParseError("malformed rational \"" + std::string(text) + "\"");
    };
    if (text.empty()) throw malformed();

    std::size_t pos = 0;
    if (text[0] == '-') pos = 1;
    std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin) throw malformed();
    std::string num(text.substr(0, pos));

    std::string den = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') throw malformed();
        ++pos;
        std::size_t den_begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_begin || pos != text.size()) throw malformed();
        den = std::string(text.substr(den_begin));
    }

    mpz_class p(num), q(den);
    if (q == 0) throw ParseError("rational \"" + std::string(text) + "\" has zero denominator");
    mpq_class v(p, q);
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw ParseError("non-finite value cannot become a rational");
    return Rational(mpq_class(value));
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace heptax
