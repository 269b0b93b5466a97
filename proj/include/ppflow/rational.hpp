#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ppflow {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational quantity of time or buffer units.
///
/// Always kept in lowest terms with a positive denominator. All arithmetic
/// and comparisons are exact; nothing ever rounds. Auxiliary jobs produce
/// genuinely non-integral durations, so a float type is not an option here.
class TimeValue {
public:
    TimeValue() = default;
    TimeValue(int v) : q_(v) {}
    TimeValue(long v) : q_(v) {}
    TimeValue(long long v) : q_(v) {}
    TimeValue(unsigned v) : q_(v) {}
    TimeValue(unsigned long v) : q_(v) {}
    TimeValue(unsigned long long v) : q_(v) {}
    TimeValue(const BigInt& v) : q_(v) {}
    TimeValue(double) = delete; // never construct from inexact values

    /// num/den reduced to lowest terms; throws ParseError when den == 0.
    static TimeValue ratio(const BigInt& num, const BigInt& den);

    /// Accepts "42", "-7", "3/4", "-3/4" and decimal strings like "2.50".
    static TimeValue parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(q_); }
    BigInt denominator() const { return boost::multiprecision::denominator(q_); }

    bool is_integer() const { return denominator() == 1; }
    bool is_zero() const { return q_.is_zero(); }
    bool is_negative() const { return q_ < 0; }

    BigInt floor_int() const;
    BigInt ceil_int() const;

    /// Inexact; for plotting and progress output only.
    double to_double() const { return q_.convert_to<double>(); }

    /// "42" for integers, "p/q" otherwise.
    std::string str() const;

    TimeValue operator-() const { return TimeValue(-q_); }
    TimeValue& operator+=(const TimeValue& o) { q_ += o.q_; return *this; }
    TimeValue& operator-=(const TimeValue& o) { q_ -= o.q_; return *this; }
    TimeValue& operator*=(const TimeValue& o) { q_ *= o.q_; return *this; }
    TimeValue& operator/=(const TimeValue& o);

    friend TimeValue operator+(TimeValue a, const TimeValue& b) { a += b; return a; }
    friend TimeValue operator-(TimeValue a, const TimeValue& b) { a -= b; return a; }
    friend TimeValue operator*(TimeValue a, const TimeValue& b) { a *= b; return a; }
    friend TimeValue operator/(TimeValue a, const TimeValue& b) { a /= b; return a; }

    friend bool operator==(const TimeValue& a, const TimeValue& b) { return a.q_ == b.q_; }
    friend bool operator!=(const TimeValue& a, const TimeValue& b) { return a.q_ != b.q_; }
    friend bool operator<(const TimeValue& a, const TimeValue& b) { return a.q_ < b.q_; }
    friend bool operator<=(const TimeValue& a, const TimeValue& b) { return a.q_ <= b.q_; }
    friend bool operator>(const TimeValue& a, const TimeValue& b) { return a.q_ > b.q_; }
    friend bool operator>=(const TimeValue& a, const TimeValue& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const TimeValue& v);

private:
    using BigRational = boost::multiprecision::cpp_rational;
    explicit TimeValue(BigRational q) : q_(std::move(q)) {}
    BigRational q_;
};

inline const TimeValue& min(const TimeValue& a, const TimeValue& b) { return b < a ? b : a; }
inline const TimeValue& max(const TimeValue& a, const TimeValue& b) { return a < b ? b : a; }

} // namespace ppflow
