#pragma once

#include "suq2/operator.hpp"
#include "suq2/surd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace suq2 {

// Basis vector f^{(N)}_{x,y}, 0 <= x, y <= N; |D| eigenvalue N.
struct Basis {
    int N = 0, x = 0, y = 0;
    std::uint64_t key() const {
        return (static_cast<std::uint64_t>(N) << 42) | (static_cast<std::uint64_t>(x) << 21) | static_cast<std::uint64_t>(y);
    }
    bool in_lambda() const { return N >= 0 && x >= 0 && y >= 0 && x <= N && y <= N; }
    friend bool operator==(const Basis& a, const Basis& b) { return a.N == b.N && a.x == b.x && a.y == b.y; }
    friend bool operator<(const Basis& a, const Basis& b) { return a.key() < b.key(); }
};

enum class Restriction { Full, PSector, HPrime, H0 };

bool in_restriction(const Basis& b, Restriction r);
std::vector<Basis> level_basis(int N, Restriction r = Restriction::Full);

// Finitely supported vector; terms kept sorted by basis key after normalize().
template <class S>
using StateVector = std::vector<std::pair<Basis, S>>;

// Numeric coefficient field.
class NumericField {
public:
    using S = double;
    explicit NumericField(double q, double eps = 1.0, int max_level = 1200);

    double q() const { return q_; }
    double eps() const { return eps_; }
    S zero() const { return 0.0; }
    S from_int(long n) const { return static_cast<double>(n); }
    S from_scalar(const Scalar& s) const { return s.eval(q_); }
    S q_pow(int n) const;
    // (1 - q^n)^{sign/2}
    S sqrt_factor(int n, int sign) const;
    S abs_d_pow(int N, double z) const;
    S k_value(const Basis& b) const;  // q^{y - N/2}
    S k_inv_value(const Basis& b) const;
    S e_coeff(const Basis& b) const;  // e: (N,x,y) -> (N,x,y+1)
    static bool is_zero(const S& s) { return s == 0.0; }
    static double to_double(const S& s) { return s; }
    static S scale(const S& s, long n) { return s * static_cast<double>(n); }

private:
    double q_, eps_;
    std::vector<double> pw_, sq_, isq_;
};

// Exact field: sums of K-multiples of square roots of cyclotomic products.
template <class K>
class ExactField {
public:
    using S = Surd<K>;
    ExactField(std::shared_ptr<const PsiTable<K>> tab, Rational eps = 1) : tab_(std::move(tab)), eps_(std::move(eps)) {}

    const std::shared_ptr<const PsiTable<K>>& table() const { return tab_; }
    S zero() const { return S(tab_); }
    S from_int(long n) const { return S(tab_, K(Rational(n))); }
    S from_scalar(const Scalar& s) const {
        if (s.mode() != Mode::Exact) throw std::logic_error("numeric scalar in exact evaluation");
        if constexpr (std::is_same_v<K, Rational>) {
            auto* rp = dynamic_cast<const RationalPsi*>(tab_.get());
            if (!rp) throw std::logic_error("rational table required");
            return S(tab_, s.exact().eval(rp->q()));
        } else {
            return S(tab_, s.exact());
        }
    }
    S q_pow(int n) const { return S(tab_, tab_->q_pow(n)); }
    S sqrt_factor(int n, int sign) const { return S::sqrt_one_minus_q_pow(tab_, n, sign); }
    S abs_d_pow(int N, double z) const {
        if (z != std::floor(z)) throw std::logic_error("non-integer power of |D| in exact mode");
        int k = static_cast<int>(z);
        if (k == 0) return from_int(1);
        Rational base = N == 0 ? (k < 0 ? eps_ : Rational(0)) : Rational(N);
        Rational r = 1;
        for (int i = 0; i < std::abs(k); ++i) r *= base;
        if (k < 0) r = Rational(1) / r;
        return S(tab_, K(r));
    }
    S k_value(const Basis&) const { throw std::logic_error("k needs sqrt(q); numeric mode only"); }
    S k_inv_value(const Basis&) const { throw std::logic_error("k needs sqrt(q); numeric mode only"); }
    S e_coeff(const Basis&) const { throw std::logic_error("e needs sqrt(q); numeric mode only"); }
    static bool is_zero(const S& s) { return s.is_zero(); }
    static double to_double(const S& s) { return s.to_double(); }
    static S scale(const S& s, long n) { return s.scaled(K(Rational(n))); }

private:
    std::shared_ptr<const PsiTable<K>> tab_;
    Rational eps_;
};

using RationalField = ExactField<Rational>;
using FormalField = ExactField<RationalFunctionQ>;

RationalField rational_field(const Rational& q, const Rational& eps = 1);
FormalField formal_field(double eval_point = 0.5, const Rational& eps = 1);

// Lazy evaluation of operator expressions on basis vectors.
template <class Field>
class Engine {
public:
    using S = typename Field::S;
    using SV = StateVector<S>;

    explicit Engine(Field f, bool d_is_abs = false) : f_(std::move(f)), d_is_abs_(d_is_abs) {}
    const Field& field() const { return f_; }
    bool d_is_abs() const { return d_is_abs_; }

    SV unit(const Basis& b) const { return SV{{b, f_.from_int(1)}}; }

    SV apply_generator(Letter l, Part p, const Basis& v) const {
        SV out;
        if (p == Part::Full || p == Part::Plus) gen_piece(l, true, v, out);
        if (p == Part::Full || p == Part::Minus) gen_piece(l, false, v, out);
        return out;
    }

    SV apply(const OperatorExpr& op, const SV& s) const {
        const OpNode& n = op.node();
        switch (n.kind) {
            case OpKind::Identity: return s;
            case OpKind::Gen: {
                SV out;
                for (const auto& [b, c] : s) {
                    SV img = apply_generator(n.letter, n.part, b);
                    for (auto& [w, d] : img) out.emplace_back(w, d * c);
                }
                return normalize(std::move(out));
            }
            case OpKind::F:
            case OpKind::P:
            case OpKind::Dirac:
            case OpKind::AbsDPow:
            case OpKind::EqK:
            case OpKind::EqKInv: {
                SV out;
                for (const auto& [b, c] : s) {
                    S w = diag_value(n, b);
                    if (Field::is_zero(w)) continue;
                    out.emplace_back(b, w * c);
                }
                return out;
            }
            case OpKind::EqE:
            case OpKind::EqF: {
                SV out;
                for (const auto& [b, c] : s) {
                    bool up = n.kind == OpKind::EqE;
                    Basis t{b.N, b.x, b.y + (up ? 1 : -1)};
                    if (!t.in_lambda()) continue;
                    S w = f_.e_coeff(up ? b : t);
                    if (!Field::is_zero(w)) out.emplace_back(t, w * c);
                }
                return normalize(std::move(out));
            }
            case OpKind::Scale: {
                S k = f_.from_scalar(n.scale);
                SV inner = apply(n.kids[0], s);
                SV out;
                for (auto& [b, c] : inner) {
                    S v = c * k;
                    if (!Field::is_zero(v)) out.emplace_back(b, std::move(v));
                }
                return out;
            }
            case OpKind::Sum: {
                SV out;
                for (const auto& k : n.kids) {
                    SV part = apply(k, s);
                    out.insert(out.end(), part.begin(), part.end());
                }
                return normalize(std::move(out));
            }
            case OpKind::Prod: {
                SV cur = s;
                for (auto it = n.kids.rbegin(); it != n.kids.rend(); ++it) {
                    cur = apply(*it, cur);
                    if (cur.empty()) break;
                }
                return cur;
            }
            case OpKind::Delta:
            case OpKind::Nabla:
            case OpKind::DComm: {
                SV out;
                for (const auto& [b, c] : s) {
                    SV img = apply(n.kids[0], unit(b));
                    long gv = weight(n.kind, b);
                    for (auto& [w, d] : img) {
                        long dw = weight(n.kind, w) - gv;
                        if (dw == 0) continue;
                        out.emplace_back(w, Field::scale(d * c, dw));
                    }
                }
                return normalize(std::move(out));
            }
        }
        throw std::logic_error("unsupported operator node");
    }

    SV apply(const OperatorExpr& op, const Basis& b) const { return apply(op, unit(b)); }

    S matrix_element(const OperatorExpr& op, const Basis& v, const Basis& w) const {
        SV img = apply(op, v);
        for (auto& [b, c] : img)
            if (b == w) return c;
        return f_.zero();
    }

    // Diagonal entry <op v, v>.
    S diagonal(const OperatorExpr& op, const Basis& v) const { return matrix_element(op, v, v); }

    static SV normalize(SV v) {
        if (v.size() < 2) {
            if (v.size() == 1 && Field::is_zero(v[0].second)) v.clear();
            return v;
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first.key() < b.first.key(); });
        SV out;
        out.reserve(v.size());
        for (auto& t : v) {
            if (!out.empty() && out.back().first == t.first) out.back().second = out.back().second + t.second;
            else out.push_back(std::move(t));
        }
        SV res;
        res.reserve(out.size());
        for (auto& t : out)
            if (!Field::is_zero(t.second)) res.push_back(std::move(t));
        return res;
    }

    // Signed D eigenvalue: +N on x = N, -N elsewhere (|D| when d_is_abs).
    long dirac_value(const Basis& b) const { return (d_is_abs_ || b.x == b.N) ? b.N : -b.N; }

private:
    long weight(OpKind k, const Basis& b) const {
        if (k == OpKind::Delta) return b.N;
        if (k == OpKind::Nabla) return static_cast<long>(b.N) * b.N;
        return dirac_value(b);
    }

    S diag_value(const OpNode& n, const Basis& b) const {
        switch (n.kind) {
            case OpKind::F: return f_.from_int(b.x == b.N ? 1 : -1);
            case OpKind::P: return f_.from_int(b.x == b.N ? 1 : 0);
            case OpKind::Dirac: return f_.from_int(dirac_value(b));
            case OpKind::AbsDPow: return f_.abs_d_pow(b.N, n.z);
            case OpKind::EqK: return f_.k_value(b);
            case OpKind::EqKInv: return f_.k_inv_value(b);
            default: throw std::logic_error("not a diagonal node");
        }
    }

    // Coefficients of alpha_+, alpha_-, beta_+, beta_- at source v (target must be in Lambda).
    S coef_a_plus(const Basis& v) const {
        return f_.q_pow(v.x + v.y + 1) * f_.sqrt_factor(2 * (v.N - v.y) + 2, 1) * f_.sqrt_factor(2 * (v.N - v.x) + 2, 1) *
               f_.sqrt_factor(2 * v.N + 2, -1) * f_.sqrt_factor(2 * v.N + 4, -1);
    }
    S coef_a_minus(const Basis& v) const {
        return f_.sqrt_factor(2 * v.y, 1) * f_.sqrt_factor(2 * v.x, 1) * f_.sqrt_factor(2 * v.N, -1) *
               f_.sqrt_factor(2 * v.N + 2, -1);
    }
    S coef_b_plus(const Basis& v) const {
        return f_.from_int(-1) * f_.q_pow(v.y) * f_.sqrt_factor(2 * (v.N - v.y) + 2, 1) * f_.sqrt_factor(2 * v.x + 2, 1) *
               f_.sqrt_factor(2 * v.N + 2, -1) * f_.sqrt_factor(2 * v.N + 4, -1);
    }
    S coef_b_minus(const Basis& v) const {
        return f_.q_pow(v.x) * f_.sqrt_factor(2 * v.y, 1) * f_.sqrt_factor(2 * (v.N - v.x), 1) * f_.sqrt_factor(2 * v.N, -1) *
               f_.sqrt_factor(2 * v.N + 2, -1);
    }

    void push(SV& out, const Basis& t, S c) const {
        if (!Field::is_zero(c)) out.emplace_back(t, std::move(c));
    }

    void gen_piece(Letter l, bool raise, const Basis& v, SV& out) const {
        switch (l) {
            case Letter::A:
                if (raise) push(out, {v.N + 1, v.x, v.y}, coef_a_plus(v));
                else if (v.x >= 1 && v.y >= 1) push(out, {v.N - 1, v.x - 1, v.y - 1}, coef_a_minus(v));
                break;
            case Letter::B:
                if (raise) push(out, {v.N + 1, v.x + 1, v.y}, coef_b_plus(v));
                else if (v.y >= 1 && v.x <= v.N - 1) push(out, {v.N - 1, v.x, v.y - 1}, coef_b_minus(v));
                break;
            case Letter::As:
                // raising part is (alpha_-)^*, lowering part is (alpha_+)^*
                if (raise) {
                    Basis u{v.N + 1, v.x + 1, v.y + 1};
                    push(out, u, coef_a_minus(u));
                } else if (v.x <= v.N - 1 && v.y <= v.N - 1) {
                    Basis u{v.N - 1, v.x, v.y};
                    push(out, u, coef_a_plus(u));
                }
                break;
            case Letter::Bs:
                // raising part is (beta_-)^*, lowering part is (beta_+)^*
                if (raise) {
                    Basis u{v.N + 1, v.x, v.y + 1};
                    push(out, u, coef_b_minus(u));
                } else if (v.x >= 1 && v.y <= v.N - 1) {
                    Basis u{v.N - 1, v.x - 1, v.y};
                    push(out, u, coef_b_plus(u));
                }
                break;
        }
    }

    Field f_;
    bool d_is_abs_;
};

struct RelationReport {
    int n_max = 0;
    bool exact = false;
    // alpha*alpha + beta*beta = 1, alpha alpha* + q^2 beta beta* = 1, alpha beta = q beta alpha,
    // alpha beta* = q beta* alpha, beta beta* = beta* beta
    std::vector<double> max_residual;
    bool all_exact_zero = true;
};

std::vector<std::pair<std::string, OperatorExpr>> defining_relations();
RelationReport check_relations(double q, int n_max);
RelationReport check_relations_exact(const Rational& q, int n_max);
RelationReport check_relations_formal(int n_max);

// Torus action phase of V(u,v) on a basis vector: -u(x+y-N) + v(x-y).
double torus_phase(const Basis& b, double u, double v);

struct EquivarianceReport {
    double ke_qek = 0, kf_fk = 0, ef_commutator = 0, d_k = 0, d_e = 0, d_f = 0, f_is_e_adjoint = 0;
    double max() const;
};
EquivarianceReport check_equivariance(double q, int n_max);

// Action of k, e, f on an operator by twisted commutators.
enum class EqGen { K, E, F };
OperatorExpr hopf_action(EqGen h, const OperatorExpr& op, double q);

}  // namespace suq2
