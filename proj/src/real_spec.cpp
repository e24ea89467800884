#include "fordcf/real_spec.hpp"

#include "fordcf/continued_fraction.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fordcf {

namespace {

[[noreturn]] void bad_spec(std::string_view text, const std::string& why) {
    throw std::invalid_argument("malformed real-spec '" + std::string(text) + "' (" + why +
                                "); expected " + std::string(kRealSpecGrammar));
}

std::vector<Integer> parse_list(std::string_view list, std::string_view whole) {
    std::vector<Integer> out;
    if (list.empty()) {
        return out;
    }
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = list.find(',', start);
        std::string_view item = list.substr(start, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - start);
        try {
            out.push_back(parse_integer(item));
        } catch (const std::invalid_argument&) {
            bad_spec(whole, "bad coefficient '" + std::string(item) + "'");
        }
        if (out.back() < 1) {
            bad_spec(whole, "partial quotients must be positive");
        }
        if (comma == std::string_view::npos) {
            return out;
        }
        start = comma + 1;
    }
}

RealNumber parse_cf(std::string_view body, std::string_view whole) {
    std::size_t semi = body.find(';');
    Integer b0;
    try {
        b0 = parse_integer(body.substr(0, semi));
    } catch (const std::invalid_argument&) {
        bad_spec(whole, "bad b0");
    }
    if (semi == std::string_view::npos) {
        return Rational(b0);
    }
    std::string_view rest = body.substr(semi + 1);
    std::size_t open = rest.find('(');
    if (open == std::string_view::npos) {
        std::vector<Integer> partials = parse_list(rest, whole);
        if (partials.empty()) {
            bad_spec(whole, "empty coefficient list");
        }
        return value(ContinuedFraction::finite(std::move(b0), std::move(partials)));
    }
    if (rest.back() != ')' || (open > 0 && rest[open - 1] != ',')) {
        bad_spec(whole, "periodic block must be the final ,(...) item");
    }
    std::string_view prefix_text = open == 0 ? std::string_view{} : rest.substr(0, open - 1);
    std::string_view block_text = rest.substr(open + 1, rest.size() - open - 2);
    std::vector<Integer> block = parse_list(block_text, whole);
    if (block.empty()) {
        bad_spec(whole, "empty periodic block");
    }
    return periodic_real(std::move(b0), parse_list(prefix_text, whole), std::move(block),
                         "cf:" + std::string(body));
}

}  // namespace

RealNumber parse_real_spec(std::string_view text) {
    if (text == "golden") {
        return golden_ratio();
    }
    if (text.starts_with("sqrt:")) {
        Integer n;
        try {
            n = parse_integer(text.substr(5));
        } catch (const std::invalid_argument&) {
            bad_spec(text, "bad radicand");
        }
        try {
            return sqrt_real(n);
        } catch (const std::domain_error& e) {
            bad_spec(text, e.what());
        }
    }
    if (text.starts_with("cf:")) {
        return parse_cf(text.substr(3), text);
    }
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument&) {
        bad_spec(text, "unrecognised form");
    } catch (const std::domain_error& e) {
        bad_spec(text, e.what());
    }
}

std::pair<Rational, Rational> parse_window(std::string_view text) {
    std::size_t dots = text.find("..");
    if (dots == std::string_view::npos) {
        throw std::invalid_argument("malformed window '" + std::string(text) +
                                    "'; expected LO..HI");
    }
    try {
        return {parse_rational(text.substr(0, dots)), parse_rational(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed window '" + std::string(text) +
                                    "'; expected LO..HI");
    }
}

}  // namespace fordcf
