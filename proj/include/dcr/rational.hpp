#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace dcr {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_fraction(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

// An exact probability: a rational in [0,1], kept in lowest terms.
class ExactProbability {
public:
    ExactProbability() = default;

    explicit ExactProbability(Rational value) : value_(std::move(value)) {
        value_.canonicalize();
        check_range();
    }

    ExactProbability(const BigInt& numerator, const BigInt& denominator) {
        if (denominator == 0)
            throw std::invalid_argument("probability denominator must be nonzero");
        value_ = Rational(numerator, denominator);
        value_.canonicalize();
        check_range();
    }

    ExactProbability(long numerator, long denominator)
        : ExactProbability(BigInt(numerator), BigInt(denominator)) {}

    static ExactProbability zero() { return ExactProbability(); }
    static ExactProbability one() { return ExactProbability(1, 1); }
    static ExactProbability half() { return ExactProbability(1, 2); }

    const Rational& value() const { return value_; }
    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }

    ExactProbability complement() const { return ExactProbability(Rational(1 - value_)); }

    double to_double() const { return value_.get_d(); }
    std::string to_fraction() const { return dcr::to_fraction(value_); }

    friend ExactProbability operator*(const ExactProbability& a, const ExactProbability& b) {
        return ExactProbability(Rational(a.value_ * b.value_));
    }

    friend bool operator==(const ExactProbability& a, const ExactProbability& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const ExactProbability& a, const ExactProbability& b) {
        return a.value_ != b.value_;
    }
    friend bool operator<(const ExactProbability& a, const ExactProbability& b) {
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExactProbability& a, const ExactProbability& b) {
        return a.value_ <= b.value_;
    }
    friend bool operator>(const ExactProbability& a, const ExactProbability& b) {
        return a.value_ > b.value_;
    }
    friend bool operator>=(const ExactProbability& a, const ExactProbability& b) {
        return a.value_ >= b.value_;
    }

    friend std::ostream& operator<<(std::ostream& out, const ExactProbability& p) {
        return out << p.to_fraction();
    }

private:
    void check_range() const {
        if (sgn(value_) < 0 || value_ > 1)
            throw std::invalid_argument("probability " + dcr::to_fraction(value_) +
                                        " outside [0,1]");
    }

    Rational value_{0};
};

}  // namespace dcr
