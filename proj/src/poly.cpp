#include "suq2/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace suq2 {

Poly::Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int degree, const Rational& c) {
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::one_minus_q_pow(int n) { return Poly(Rational(1)) - monomial(n); }

const Rational& Poly::coeff(int i) const {
    static const Rational zero(0);
    return (i < 0 || i >= static_cast<int>(c_.size())) ? zero : c_[i];
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    rem = a;
    int db = b.degree();
    if (rem.degree() < db) {
        quot = Poly();
        return;
    }
    std::vector<Rational> q(rem.degree() - db + 1);
    Rational inv = 1 / b.lead();
    for (int k = rem.degree(); k >= db; --k) {
        if (k >= static_cast<int>(rem.c_.size())) continue;
        Rational f = rem.c_[k] * inv;
        if (f == 0) continue;
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) rem.c_[k - db + j] -= f * b.c_[j];
    }
    rem.trim();
    quot = Poly(std::move(q));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    r *= Rational(1) / lead();
    return r;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly qq, r;
        divmod(a, b, qq, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Poly Poly::compose_power(int k) const {
    if (is_zero()) return *this;
    std::vector<Rational> r(static_cast<size_t>(degree()) * k + 1);
    for (size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return Poly(std::move(r));
}

Poly Poly::derivative() const {
    std::vector<Rational> r;
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<long>(i));
    return Poly(std::move(r));
}

Rational Poly::eval(const Rational& q) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + *it;
    return r;
}

double Poly::eval(double q) const { return static_cast<double>(eval(static_cast<long double>(q))); }

long double Poly::eval(long double q) const {
    long double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + static_cast<long double>(it->get_d());
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational c = c_[i];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (i == 0) os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

const Poly& psi(int d) {
    static std::recursive_mutex mu;
    static std::map<int, Poly> cache;  // node-based, references stay valid
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    if (d < 1) throw std::invalid_argument("psi index must be positive");
    Poly p = Poly::one_minus_q_pow(d);
    for (int e = 1; e < d; ++e) {
        if (d % e) continue;
        Poly qq, r;
        Poly::divmod(p, psi(e), qq, r);
        if (!r.is_zero()) throw std::logic_error("cyclotomic division failed");
        p = qq;
    }
    return cache.emplace(d, p).first->second;
}

RationalFunctionQ::RationalFunctionQ(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    reduce();
}

RationalFunctionQ RationalFunctionQ::q_power(int n) {
    if (n >= 0) return RationalFunctionQ(Poly::monomial(n));
    return RationalFunctionQ(Poly(Rational(1)), Poly::monomial(-n));
}

void RationalFunctionQ::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    if (den_.degree() > 0) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            Poly qq, r;
            Poly::divmod(num_, g, qq, r);
            num_ = qq;
            Poly::divmod(den_, g, qq, r);
            den_ = qq;
        }
    }
    Rational l = den_.lead();
    if (l != 1) {
        num_ *= Rational(1) / l;
        den_ *= Rational(1) / l;
    }
}

RationalFunctionQ RationalFunctionQ::operator-() const {
    RationalFunctionQ r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunctionQ& RationalFunctionQ::operator+=(const RationalFunctionQ& o) {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    reduce();
    return *this;
}

RationalFunctionQ& RationalFunctionQ::operator-=(const RationalFunctionQ& o) { return *this += -o; }

RationalFunctionQ& RationalFunctionQ::operator*=(const RationalFunctionQ& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunctionQ& RationalFunctionQ::operator/=(const RationalFunctionQ& o) {
    if (o.is_zero()) throw std::domain_error("rational function division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    reduce();
    return *this;
}

RationalFunctionQ RationalFunctionQ::compose_power(int k) const {
    return RationalFunctionQ(num_.compose_power(k), den_.compose_power(k));
}

Rational RationalFunctionQ::eval(const Rational& q) const {
    Rational d = den_.eval(q);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_.eval(q) / d;
}

double RationalFunctionQ::eval(double q) const {
    long double d = den_.eval(static_cast<long double>(q));
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return static_cast<double>(num_.eval(static_cast<long double>(q)) / d);
}

std::string RationalFunctionQ::str(const std::string& var) const {
    if (den_.degree() == 0 && den_.lead() == 1) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace suq2
