#pragma once

#include "suq2/poly.hpp"

#include <string>
#include <variant>

namespace suq2 {

enum class Mode { Exact, Numeric };

// Coefficient of algebra elements: exact rational function of q or a double.
// Arithmetic between scalars of different modes throws.
class Scalar {
public:
    Scalar() : v_(RationalFunctionQ()) {}
    Scalar(int c) : v_(RationalFunctionQ(c)) {}  // NOLINT
    Scalar(const Rational& c) : v_(RationalFunctionQ(c)) {}  // NOLINT
    Scalar(const RationalFunctionQ& c) : v_(c) {}  // NOLINT
    Scalar(double c) : v_(c) {}  // NOLINT

    Mode mode() const { return v_.index() == 0 ? Mode::Exact : Mode::Numeric; }
    bool is_zero() const;
    const RationalFunctionQ& exact() const;
    double numeric() const;

    double eval(double q) const;
    Rational eval(const Rational& q) const;  // exact mode only

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string str() const;

private:
    void check_mode(const Scalar& o) const;
    std::variant<RationalFunctionQ, double> v_;
};

}  // namespace suq2
