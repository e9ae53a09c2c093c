#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace suq2 {

using Rational = mpq_class;

// Dense polynomial in q with rational coefficients, lowest degree first.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(int degree, const Rational& c = 1);
    static Poly one_minus_q_pow(int n);  // 1 - q^n

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& lead() const { return c_.back(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Euclidean division; throws on division by zero.
    static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
    static Poly gcd(Poly a, Poly b);  // monic
    Poly monic() const;
    // Substitute q -> q^k.
    Poly compose_power(int k) const;
    Poly derivative() const;

    Rational eval(const Rational& q) const;
    double eval(double q) const;
    long double eval(long double q) const;

    std::string str(const std::string& var = "q") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Cyclotomic-type factor psi_d: 1 - q for d = 1, Phi_d(q) for d >= 2.
// 1 - q^n = prod_{d | n} psi_d, every factor positive on [0,1).
const Poly& psi(int d);

// Reduced quotient of polynomials, monic denominator.
class RationalFunctionQ {
public:
    RationalFunctionQ() : num_(), den_(Rational(1)) {}
    RationalFunctionQ(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
    RationalFunctionQ(int c) : RationalFunctionQ(Rational(c)) {}          // NOLINT
    explicit RationalFunctionQ(const Poly& p) : num_(p), den_(Rational(1)) {}
    RationalFunctionQ(const Poly& num, const Poly& den);

    static RationalFunctionQ q_power(int n);  // q^n, n may be negative

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunctionQ operator-() const;
    RationalFunctionQ& operator+=(const RationalFunctionQ& o);
    RationalFunctionQ& operator-=(const RationalFunctionQ& o);
    RationalFunctionQ& operator*=(const RationalFunctionQ& o);
    RationalFunctionQ& operator/=(const RationalFunctionQ& o);
    friend RationalFunctionQ operator+(RationalFunctionQ a, const RationalFunctionQ& b) { return a += b; }
    friend RationalFunctionQ operator-(RationalFunctionQ a, const RationalFunctionQ& b) { return a -= b; }
    friend RationalFunctionQ operator*(RationalFunctionQ a, const RationalFunctionQ& b) { return a *= b; }
    friend RationalFunctionQ operator/(RationalFunctionQ a, const RationalFunctionQ& b) { return a /= b; }
    friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunctionQ compose_power(int k) const;  // q -> q^k
    Rational eval(const Rational& q) const;
    double eval(double q) const;

    std::string str(const std::string& var = "q") const;

private:
    void reduce();
    Poly num_, den_;
};

}  // namespace suq2
