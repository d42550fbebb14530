#include "routelab/weight.hpp"

#include <cctype>

#include "routelab/error.hpp"

namespace routelab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void bad_weight(std::string_view text) {
    throw Error(ErrorKind::ParseError, "malformed weight '" + std::string(text) + "'");
}

}  // namespace

Weight parse_weight(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Weight result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_weight(text);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
        result = Weight(mpz_class(std::string(num), 10), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac))) {
            bad_weight(text);
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        std::string digits = std::string(whole) + std::string(frac);
        result = Weight(mpz_class(digits, 10), scale);
    } else {
        if (!all_digits(body)) bad_weight(text);
        result = Weight(mpz_class(std::string(body), 10));
    }
    result.canonicalize();
    if (negative) result = -result;
    return result;
}

std::string format_weight(const Weight& w) {
    if (w.get_den() == 1) return w.get_num().get_str();
    return w.get_num().get_str() + "/" + w.get_den().get_str();
}

}  // namespace routelab
