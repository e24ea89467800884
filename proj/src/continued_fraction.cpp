#include "fordcf/continued_fraction.hpp"

#include <sstream>
#include <stdexcept>

namespace fordcf {

ContinuedFraction ContinuedFraction::finite(Integer b0, std::vector<Integer> partials) {
    for (const Integer& b : partials) {
        if (b < 1) {
            throw std::domain_error("partial quotients must be positive");
        }
    }
    // [..., b_{N-1}, 1] and [..., b_{N-1} + 1] have the same value.
    if (!partials.empty() && partials.back() == 1) {
        partials.pop_back();
        if (partials.empty()) {
            b0 += 1;
        } else {
            partials.back() += 1;
        }
    }
    return ContinuedFraction(std::move(b0), std::move(partials), nullptr);
}

ContinuedFraction ContinuedFraction::infinite(std::shared_ptr<const CFStream> stream) {
    if (!stream) {
        throw std::invalid_argument("null stream");
    }
    Integer b0 = stream->b0();
    return ContinuedFraction(std::move(b0), {}, std::move(stream));
}

std::optional<Integer> ContinuedFraction::coefficient(std::size_t index) const {
    if (index == 0) {
        return b0_;
    }
    if (stream_) {
        return stream_->partial(index);
    }
    if (index > partials_.size()) {
        return std::nullopt;
    }
    return partials_[index - 1];
}

std::string ContinuedFraction::to_string(std::size_t terms) const {
    std::ostringstream out;
    out << '[' << b0_.get_str();
    if (is_finite()) {
        for (std::size_t i = 0; i < partials_.size(); ++i) {
            out << (i == 0 ? ';' : ',') << partials_[i].get_str();
        }
    } else {
        for (std::size_t i = 1; i <= terms; ++i) {
            out << (i == 1 ? ';' : ',') << stream_->partial(i).get_str();
        }
        out << (terms == 0 ? ";..." : ",...");
    }
    out << ']';
    return out.str();
}

ContinuedFraction cf_of_rational(const Rational& x) {
    Integer num = x.num();
    Integer den = x.den();
    Integer b0 = floor(x);
    num -= b0 * den;
    std::vector<Integer> partials;
    // Remaining fraction num/den lies in [0, 1); invert and repeat.
    while (num != 0) {
        Integer q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
        partials.push_back(std::move(q));
        den = std::move(num);
        num = std::move(r);
    }
    return ContinuedFraction::finite(std::move(b0), std::move(partials));
}

ContinuedFraction cf_of_real(const RealNumber& alpha) {
    if (alpha.is_rational()) {
        return cf_of_rational(alpha.rational());
    }
    return ContinuedFraction::infinite(alpha.stream_ptr());
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count) {
    if (count == 0) {
        throw std::invalid_argument("convergent count must be positive");
    }
    if (cf.is_finite() && count > cf.last_index() + 1) {
        throw std::out_of_range("expansion exhausted");
    }
    std::vector<Convergent> out;
    out.reserve(count);
    Integer a_prev = 1, b_prev = 0;
    Integer a = cf.b0(), b = 1;
    out.push_back({0, a, b});
    for (std::size_t n = 1; n < count; ++n) {
        Integer bn = *cf.coefficient(n);
        Integer a_next = bn * a + a_prev;
        Integer b_next = bn * b + b_prev;
        a_prev = std::move(a);
        b_prev = std::move(b);
        a = std::move(a_next);
        b = std::move(b_next);
        out.push_back({n, a, b});
    }
    return out;
}

Rational value(const ContinuedFraction& cf) {
    if (!cf.is_finite()) {
        throw std::domain_error("no finite value");
    }
    return convergents(cf, cf.last_index() + 1).back().value();
}

bool convergent_ordering_check(const std::vector<Convergent>& convs, const RealNumber& alpha) {
    std::optional<Rational> last_even, last_odd;
    for (std::size_t i = 0; i < convs.size(); ++i) {
        if (convs[i].index != i) {
            return false;
        }
        Rational c = convs[i].value();
        bool is_final = i + 1 == convs.size();
        auto side = compare_real(alpha, c);
        if (side == 0) {
            if (!(is_final && alpha.is_rational())) {
                return false;
            }
        } else if (i % 2 == 0 ? side < 0 : side > 0) {
            // Even convergents sit left of alpha, odd ones right.
            return false;
        }
        if (i % 2 == 0) {
            if (last_even && !(*last_even < c)) return false;
            if (last_odd && !(c < *last_odd)) return false;
            last_even = c;
        } else {
            if (last_odd && !(c < *last_odd)) return false;
            if (last_even && !(*last_even < c)) return false;
            last_odd = c;
        }
    }
    return true;
}

}  // namespace fordcf
