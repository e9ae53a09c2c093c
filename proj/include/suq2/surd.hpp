#pragma once

#include "suq2/poly.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace suq2 {

// Values of the factors psi_d in a coefficient field K.
template <class K>
class PsiTable {
public:
    virtual ~PsiTable() = default;
    virtual K value(int d) const = 0;
    virtual K q_pow(int n) const = 0;
    virtual double to_double(const K& k) const = 0;
    virtual double q_double() const = 0;
};

// Formal q: K = RationalFunctionQ.
class FormalPsi final : public PsiTable<RationalFunctionQ> {
public:
    RationalFunctionQ value(int d) const override { return RationalFunctionQ(psi(d)); }
    RationalFunctionQ q_pow(int n) const override { return RationalFunctionQ::q_power(n); }
    double to_double(const RationalFunctionQ& k) const override { return k.eval(q_eval_); }
    double q_double() const override { return q_eval_; }
    void set_eval_point(double q) { q_eval_ = q; }

private:
    double q_eval_ = 0.5;
};

// Rational q: K = Rational.
class RationalPsi final : public PsiTable<Rational> {
public:
    explicit RationalPsi(Rational q) : q_(std::move(q)) {}
    Rational value(int d) const override {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(d);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(d, psi(d).eval(q_)).first->second;
    }
    Rational q_pow(int n) const override {
        if (n == 0) return 1;
        if (q_ == 0) {
            if (n < 0) throw std::domain_error("negative power of q = 0");
            return 0;
        }
        Rational r = 1;
        for (int i = 0; i < std::abs(n); ++i) r *= q_;
        return n > 0 ? r : Rational(1) / r;
    }
    double to_double(const Rational& k) const override { return k.get_d(); }
    double q_double() const override { return q_.get_d(); }
    const Rational& q() const { return q_; }

private:
    Rational q_;
    mutable std::mutex mu_;
    mutable std::map<int, Rational> cache_;
};

// Element of K[ sqrt(psi_d) : d >= 1 ]: sum over squarefree index sets S of
// K_S * sqrt(prod_{d in S} psi_d).
template <class K>
class Surd {
public:
    using Key = std::vector<int>;  // strictly increasing

    Surd() = default;
    explicit Surd(std::shared_ptr<const PsiTable<K>> t) : tab_(std::move(t)) {}
    Surd(std::shared_ptr<const PsiTable<K>> t, const K& c) : tab_(std::move(t)) {
        if (!is_zero_k(c)) terms_.emplace(Key{}, c);
    }

    // (1 - q^n)^{sign/2}, sign = +1 or -1.
    static Surd sqrt_one_minus_q_pow(std::shared_ptr<const PsiTable<K>> t, int n, int sign) {
        Key key;
        K prod = K(1);
        for (int d = 1; d <= n; ++d) {
            if (n % d == 0) {
                key.push_back(d);
                prod *= t->value(d);
            }
        }
        Surd s(t);
        if (sign > 0) s.terms_.emplace(std::move(key), K(1));
        else s.terms_.emplace(std::move(key), K(1) / prod);
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, K>& terms() const { return terms_; }
    const std::shared_ptr<const PsiTable<K>>& table() const { return tab_; }

    Surd& operator+=(const Surd& o) {
        if (!tab_) tab_ = o.tab_;
        for (const auto& [k, c] : o.terms_) {
            auto it = terms_.find(k);
            if (it == terms_.end()) terms_.emplace(k, c);
            else {
                it->second += c;
                if (is_zero_k(it->second)) terms_.erase(it);
            }
        }
        return *this;
    }
    Surd operator-() const {
        Surd r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    Surd& operator-=(const Surd& o) { return *this += -o; }

    friend Surd operator+(Surd a, const Surd& b) { return a += b; }
    friend Surd operator-(Surd a, const Surd& b) { return a -= b; }

    friend Surd operator*(const Surd& a, const Surd& b) {
        Surd r(a.tab_ ? a.tab_ : b.tab_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                Key key;
                K c = ca * cb;
                size_t i = 0, j = 0;
                while (i < ka.size() || j < kb.size()) {
                    if (j == kb.size() || (i < ka.size() && ka[i] < kb[j])) key.push_back(ka[i++]);
                    else if (i == ka.size() || kb[j] < ka[i]) key.push_back(kb[j++]);
                    else {
                        c *= r.tab_->value(ka[i]);
                        ++i;
                        ++j;
                    }
                }
                if (is_zero_k(c)) continue;
                auto it = r.terms_.find(key);
                if (it == r.terms_.end()) r.terms_.emplace(std::move(key), c);
                else {
                    it->second += c;
                    if (is_zero_k(it->second)) r.terms_.erase(it);
                }
            }
        }
        return r;
    }
    Surd& operator*=(const Surd& o) { return *this = *this * o; }

    Surd scaled(const K& s) const {
        Surd r(tab_);
        if (is_zero_k(s)) return r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
        return r;
    }

    double to_double() const {
        if (terms_.empty()) return 0.0;
        double total = 0.0;
        for (const auto& [k, c] : terms_) {
            long double rad = 1.0L;
            for (int d : k) rad *= static_cast<long double>(tab_->to_double(tab_->value(d)));
            total += static_cast<double>(static_cast<long double>(tab_->to_double(c)) * std::sqrt(rad));
        }
        return total;
    }

    // Rational part when no radicals remain.
    K rational_part() const {
        auto it = terms_.find(Key{});
        return it == terms_.end() ? K(0) : it->second;
    }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

private:
    static bool is_zero_k(const K& c) {
        if constexpr (std::is_same_v<K, Rational>) return c == 0;
        else return c.is_zero();
    }
    std::shared_ptr<const PsiTable<K>> tab_;
    std::map<Key, K> terms_;
};

}  // namespace suq2
