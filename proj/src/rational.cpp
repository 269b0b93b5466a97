#include "ppflow/rational.hpp"

#include "ppflow/errors.hpp"

#include <cctype>
#include <ostream>

namespace ppflow {

TimeValue TimeValue::ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw ParseError("rational with zero denominator");
    }
    return TimeValue(BigRational(num, den)); // cpp_rational normalizes
}

namespace {

bool parse_big_int(std::string_view s, BigInt& out) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '-') {
        if (s.size() == 1) return false;
        i = 1;
    }
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    }
    out = BigInt(std::string(s));
    return true;
}

} // namespace

TimeValue TimeValue::parse(std::string_view text) {
    // trim surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty numeric literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num, den;
        if (!parse_big_int(text.substr(0, slash), num) ||
            !parse_big_int(text.substr(slash + 1), den) || den < 0) {
            throw ParseError("malformed fraction '" + std::string(text) + "'");
        }
        return ratio(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (negative) whole.remove_prefix(1);
        if (whole.empty() && frac.empty()) throw ParseError("malformed decimal '" + std::string(text) + "'");
        BigInt whole_v = 0, frac_v = 0;
        if (!whole.empty() && !parse_big_int(whole, whole_v)) {
            throw ParseError("malformed decimal '" + std::string(text) + "'");
        }
        if (!frac.empty() && (!parse_big_int(frac, frac_v) || frac_v < 0)) {
            throw ParseError("malformed decimal '" + std::string(text) + "'");
        }
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt num = whole_v * scale + frac_v;
        if (negative) num = -num;
        return ratio(num, scale);
    }
    BigInt v;
    if (!parse_big_int(text, v)) {
        throw ParseError("malformed number '" + std::string(text) + "'");
    }
    return TimeValue(v);
}

BigInt TimeValue::floor_int() const {
    BigInt num = numerator(), den = denominator();
    if (num >= 0) return num / den;
    return -((-num + den - 1) / den);
}

BigInt TimeValue::ceil_int() const {
    BigInt num = numerator(), den = denominator();
    if (num >= 0) return (num + den - 1) / den;
    return -((-num) / den);
}

TimeValue& TimeValue::operator/=(const TimeValue& o) {
    if (o.is_zero()) throw ParseError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string TimeValue::str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const TimeValue& v) {
    return os << v.str();
}

} // namespace ppflow
