#include "suq2/algebra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace suq2 {

Letter adjoint(Letter l) {
    switch (l) {
        case Letter::A: return Letter::As;
        case Letter::As: return Letter::A;
        case Letter::B: return Letter::Bs;
        case Letter::Bs: return Letter::B;
    }
    return l;
}

std::string letter_name(Letter l) {
    switch (l) {
        case Letter::A: return "a";
        case Letter::As: return "a*";
        case Letter::B: return "b";
        case Letter::Bs: return "b*";
    }
    return "?";
}

std::pair<int, int> bidegree(const Word& w) {
    int a = 0, b = 0;
    for (Letter l : w) {
        switch (l) {
            case Letter::A: ++a; break;
            case Letter::As: --a; break;
            case Letter::B: ++b; break;
            case Letter::Bs: --b; break;
        }
    }
    return {a, b};
}

int del_degree(const Word& w) {
    auto [a, b] = bidegree(w);
    return b - a;
}

Word adjoint(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (auto& l : r) l = adjoint(l);
    return r;
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (i) os << ' ';
        os << letter_name(w[i]);
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

AlgebraElement::AlgebraElement(const Word& w, const Scalar& c) : mode_(c.mode()) { add(w, c); }

AlgebraElement AlgebraElement::one(Mode mode) {
    return AlgebraElement(Word{}, mode == Mode::Exact ? Scalar(1) : Scalar(1.0));
}

AlgebraElement AlgebraElement::letter(Letter l, Mode mode) {
    return AlgebraElement(Word{l}, mode == Mode::Exact ? Scalar(1) : Scalar(1.0));
}

void AlgebraElement::add(const Word& w, const Scalar& c) {
    if (c.mode() != mode_) throw std::logic_error("mixing exact and numeric scalars");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(mode_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (terms_.empty()) mode_ = o.mode_;
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this += -o; }

AlgebraElement& AlgebraElement::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r(a.terms_.empty() ? b.mode_ : a.mode_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add(concat(wa, wb), ca * cb);
    return r;
}

AlgebraElement AlgebraElement::adjoint() const {
    // Scalars are real: exact rational functions have rational coefficients, q is real.
    AlgebraElement r(mode_);
    for (const auto& [w, c] : terms_) r.add(suq2::adjoint(w), c);
    return r;
}

AlgebraElement AlgebraElement::power(int n) const {
    if (n < 0) throw std::invalid_argument("negative power");
    AlgebraElement r = one(mode_);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string cs;
        bool neg = false;
        if (c.mode() == Mode::Exact) {
            const auto& rf = c.exact();
            if (rf.num().degree() == 0 && rf.den().degree() == 0) {
                Rational v = rf.num().lead();
                neg = v < 0;
                Rational a = abs(v);
                if (a != 1 || w.empty()) cs = a.get_str();
            } else {
                cs = "[" + rf.str() + "]";
            }
        } else {
            double v = c.numeric();
            neg = v < 0;
            std::ostringstream vs;
            vs.precision(17);
            vs << std::fabs(v);
            if (std::fabs(v) != 1.0 || w.empty()) cs = vs.str();
        }
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        if (!cs.empty()) os << cs << (w.empty() ? "" : " ");
        if (!w.empty()) os << word_str(w);
        first = false;
    }
    return os.str();
}

LaurentPoly LaurentPoly::monomial(int n, const Scalar& c) {
    LaurentPoly p(c.mode());
    p.add(n, c);
    return p;
}

Scalar LaurentPoly::coeff(int n) const {
    auto it = c_.find(n);
    if (it != c_.end()) return it->second;
    return mode_ == Mode::Exact ? Scalar(0) : Scalar(0.0);
}

void LaurentPoly::add(int n, const Scalar& c) {
    if (c.mode() != mode_) throw std::logic_error("mixing exact and numeric scalars");
    auto it = c_.find(n);
    if (it == c_.end()) {
        if (!c.is_zero()) c_.emplace(n, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (c_.empty()) mode_ = o.mode_;
    for (const auto& [n, c] : o.c_) add(n, c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.c_.empty() ? b.mode_ : a.mode_);
    for (const auto& [na, ca] : a.c_)
        for (const auto& [nb, cb] : b.c_) r.add(na + nb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::derivative_over_i(int k) const {
    LaurentPoly r(mode_);
    for (const auto& [n, c] : c_) {
        long p = 1;
        for (int i = 0; i < k; ++i) p *= n;
        Scalar f = mode_ == Mode::Exact ? Scalar(Rational(p)) : Scalar(static_cast<double>(p));
        r.add(n, c * f);
    }
    return r;
}

LaurentPoly sigma(const AlgebraElement& x) {
    LaurentPoly r(x.mode());
    for (const auto& [w, c] : x.terms()) {
        int deg = 0;
        bool zero = false;
        for (Letter l : w) {
            if (l == Letter::A) ++deg;
            else if (l == Letter::As) --deg;
            else {
                zero = true;
                break;
            }
        }
        if (!zero) r.add(deg, c);
    }
    return r;
}

AlgebraElement del_component(const AlgebraElement& x, int d) {
    AlgebraElement r(x.mode());
    for (const auto& [w, c] : x.terms())
        if (del_degree(w) == d) r.add(w, c);
    return r;
}

namespace {

// Fourier-0 coefficient of prod n^{d_j} f_j, i.e. of prod (f_j^{(d_j)} / i^{d_j}).
double zero_mode(const std::vector<LaurentPoly>& fs, const std::vector<int>& orders, double q, int& total) {
    if (fs.size() != orders.size()) throw std::invalid_argument("circle integral arity mismatch");
    total = 0;
    std::map<int, double> acc{{0, 1.0}};
    for (size_t j = 0; j < fs.size(); ++j) {
        total += orders[j];
        std::map<int, double> next;
        for (const auto& [n, c] : fs[j].coeffs()) {
            double w = c.eval(q) * std::pow(static_cast<double>(n), orders[j]);
            if (w == 0.0) continue;
            for (const auto& [m, a] : acc) next[m + n] += a * w;
        }
        acc = std::move(next);
    }
    auto it = acc.find(0);
    return it == acc.end() ? 0.0 : it->second;
}

double i_power_real(int k) {
    // i^k for even k
    return (((k % 4) + 4) % 4) == 0 ? 1.0 : -1.0;
}

}  // namespace

double circle_mean(const std::vector<LaurentPoly>& fs, const std::vector<int>& orders, double q) {
    int total = 0;
    double z = zero_mode(fs, orders, q, total);
    if (total % 2) throw std::invalid_argument("circle_mean: odd total derivative order gives an imaginary value");
    return i_power_real(total) * z;
}

double circle_mean_over_i(const std::vector<LaurentPoly>& fs, const std::vector<int>& orders, double q) {
    int total = 0;
    double z = zero_mode(fs, orders, q, total);
    if (total % 2 == 0) throw std::invalid_argument("circle_mean_over_i: even total derivative order gives an imaginary value");
    return i_power_real(total - 1) * z;
}

}  // namespace suq2
