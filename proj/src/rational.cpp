#include "fordcf/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace fordcf {

Rational make_rational(Integer num, Integer den) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Integer g = gcd(num, den);
    if (g != 1) {
        num /= g;
        den /= g;
    }
    return Rational(std::move(num), std::move(den), Rational::Reduced{});
}

Rational Rational::operator-() const {
    return Rational(Integer(-num_), den_, Reduced{});
}

Rational Rational::reciprocal() const {
    if (num_ == 0) {
        throw std::domain_error("zero denominator");
    }
    return make_rational(den_, num_);
}

Rational operator+(const Rational& x, const Rational& y) {
    if (x.den_ == y.den_) {
        return make_rational(Integer(x.num_ + y.num_), x.den_);
    }
    return make_rational(Integer(x.num_ * y.den_ + y.num_ * x.den_), Integer(x.den_ * y.den_));
}

Rational operator-(const Rational& x, const Rational& y) {
    if (x.den_ == y.den_) {
        return make_rational(Integer(x.num_ - y.num_), x.den_);
    }
    return make_rational(Integer(x.num_ * y.den_ - y.num_ * x.den_), Integer(x.den_ * y.den_));
}

Rational operator*(const Rational& x, const Rational& y) {
    return make_rational(Integer(x.num_ * y.num_), Integer(x.den_ * y.den_));
}

Rational operator/(const Rational& x, const Rational& y) {
    return make_rational(Integer(x.num_ * y.den_), Integer(x.den_ * y.num_));
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    if (x.den_ == y.den_) {
        return compare(x.num_, y.num_);
    }
    return compare(Integer(x.num_ * y.den_), Integer(y.num_ * x.den_));
}

std::strong_ordering compare(const Integer& x, const Integer& y) {
    int c = cmp(x, y);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& x) {
    return x.sign() < 0 ? -x : x;
}

Integer floor(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q;
}

Integer ceil(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q;
}

Integer gcd(const Integer& x, const Integer& y) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
}

bool coprime(const Integer& x, const Integer& y) {
    return gcd(x, y) == 1;
}

Integer isqrt(const Integer& n) {
    if (n < 0) {
        throw std::domain_error("square root of a negative integer");
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::string to_string(const Integer& x) {
    return x.get_str();
}

std::string to_string(const Rational& x) {
    if (x.is_integer()) {
        return x.num().get_str();
    }
    return x.num().get_str() + "/" + x.den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) {
        throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    }
    Integer value(std::string(digits), 10);
    return text.front() == '-' ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    return make_rational(parse_integer(text.substr(0, slash)), Integer(std::string(den), 10));
}

std::string to_fixed(const Rational& x, int places) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    Integer scaled_num = abs(x).num() * scale;
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), x.den().get_mpz_t());
    if (2 * r >= x.den()) {
        q += 1;
    }
    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) <= places) {
        digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');
    }
    std::string out = (x.sign() < 0 && q != 0) ? "-" : "";
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - static_cast<std::size_t>(places));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << to_string(x);
}

}  // namespace fordcf
