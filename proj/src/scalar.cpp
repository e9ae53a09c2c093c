#include "suq2/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace suq2 {

void Scalar::check_mode(const Scalar& o) const {
    if (mode() != o.mode()) throw std::logic_error("mixing exact and numeric scalars");
}

bool Scalar::is_zero() const {
    return mode() == Mode::Exact ? std::get<0>(v_).is_zero() : std::get<1>(v_) == 0.0;
}

const RationalFunctionQ& Scalar::exact() const {
    if (mode() != Mode::Exact) throw std::logic_error("scalar is numeric");
    return std::get<0>(v_);
}

double Scalar::numeric() const {
    if (mode() != Mode::Numeric) throw std::logic_error("scalar is exact");
    return std::get<1>(v_);
}

double Scalar::eval(double q) const {
    return mode() == Mode::Exact ? std::get<0>(v_).eval(q) : std::get<1>(v_);
}

Rational Scalar::eval(const Rational& q) const { return exact().eval(q); }

Scalar Scalar::operator-() const {
    if (mode() == Mode::Exact) return Scalar(-std::get<0>(v_));
    return Scalar(-std::get<1>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_mode(o);
    if (mode() == Mode::Exact) std::get<0>(v_) += std::get<0>(o.v_);
    else std::get<1>(v_) += std::get<1>(o.v_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    check_mode(o);
    if (mode() == Mode::Exact) std::get<0>(v_) *= std::get<0>(o.v_);
    else std::get<1>(v_) *= std::get<1>(o.v_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_mode(o);
    if (o.is_zero()) throw std::domain_error("scalar division by zero");
    if (mode() == Mode::Exact) std::get<0>(v_) /= std::get<0>(o.v_);
    else std::get<1>(v_) /= std::get<1>(o.v_);
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode()) return false;
    if (a.mode() == Mode::Exact) return std::get<0>(a.v_) == std::get<0>(b.v_);
    return std::get<1>(a.v_) == std::get<1>(b.v_);
}

std::string Scalar::str() const {
    if (mode() == Mode::Exact) return std::get<0>(v_).str();
    std::ostringstream os;
    os.precision(17);
    os << std::get<1>(v_);
    return os.str();
}

}  // namespace suq2
