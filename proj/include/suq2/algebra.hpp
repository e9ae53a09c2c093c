#pragma once

#include "suq2/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace suq2 {

enum class Letter : unsigned char { A, As, B, Bs };  // alpha, alpha*, beta, beta*

Letter adjoint(Letter l);
std::string letter_name(Letter l);  // "a", "a*", "b", "b*"

using Word = std::vector<Letter>;

// (alpha-degree, beta-degree) with adjoints counted negatively.
std::pair<int, int> bidegree(const Word& w);
// beta-degree minus alpha-degree.
int del_degree(const Word& w);
Word adjoint(const Word& w);
Word concat(const Word& a, const Word& b);
std::string word_str(const Word& w);

class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(Mode mode) : mode_(mode) {}
    AlgebraElement(const Word& w, const Scalar& c);
    static AlgebraElement one(Mode mode = Mode::Exact);
    static AlgebraElement letter(Letter l, Mode mode = Mode::Exact);

    Mode mode() const { return mode_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Word& w, const Scalar& c);

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const Scalar& s);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(AlgebraElement a, const Scalar& s) { return a *= s; }
    friend AlgebraElement operator*(const Scalar& s, AlgebraElement a) { return a *= s; }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

    AlgebraElement adjoint() const;
    AlgebraElement power(int n) const;

    // Canonical text in the expression grammar.
    std::string str() const;

private:
    Mode mode_ = Mode::Exact;
    std::map<Word, Scalar> terms_;
};

// Laurent polynomial in the circle variable u.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Mode mode) : mode_(mode) {}
    static LaurentPoly monomial(int n, const Scalar& c);

    Mode mode() const { return mode_; }
    const std::map<int, Scalar>& coeffs() const { return c_; }
    Scalar coeff(int n) const;
    void add(int n, const Scalar& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

    // d/dtheta applied k times, divided by i^k: u^n -> n^k u^n.
    LaurentPoly derivative_over_i(int k = 1) const;

private:
    Mode mode_ = Mode::Exact;
    std::map<int, Scalar> c_;
};

LaurentPoly sigma(const AlgebraElement& x);
AlgebraElement del_component(const AlgebraElement& x, int d);

// Circle integrals on Laurent polynomials, with D = sum of derivative orders:
// circle_mean = (1/2pi) int prod f_j^{(d_j)} dtheta, real when D is even;
// circle_mean_over_i = (1/2pi i) int prod f_j^{(d_j)} dtheta, real when D is odd.
double circle_mean(const std::vector<LaurentPoly>& fs, const std::vector<int>& orders, double q = 0.0);
double circle_mean_over_i(const std::vector<LaurentPoly>& fs, const std::vector<int>& orders, double q = 0.0);

}  // namespace suq2
