#pragma once

#include "suq2/symbol.hpp"

#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace suq2 {

using Args = std::vector<AlgebraElement>;

// Multilinear functional on (arity + 1)-tuples.
template <class T>
struct Cochain {
    int arity = 0;
    std::function<T(const Args&)> f;
    std::string name;

    T operator()(const Args& a) const {
        if (static_cast<int>(a.size()) != arity + 1) throw std::invalid_argument(name + ": wrong number of arguments");
        return f(a);
    }
};

inline AlgebraElement unit_like(const Args& a) {
    return AlgebraElement::one(a.empty() ? Mode::Exact : a.front().mode());
}

// (b psi)(a0..a{n+1}) = sum_j (-1)^j psi(.., aj a{j+1}, ..) + (-1)^{n+1} psi(a{n+1} a0, a1, .., an)
template <class T>
Cochain<T> hochschild_b(const Cochain<T>& psi) {
    Cochain<T> out;
    out.arity = psi.arity + 1;
    out.name = "b(" + psi.name + ")";
    out.f = [psi](const Args& a) {
        const int n = psi.arity;
        T acc = T(0);
        for (int j = 0; j <= n; ++j) {
            Args x;
            for (int i = 0; i < j; ++i) x.push_back(a[i]);
            x.push_back(a[j] * a[j + 1]);
            for (int i = j + 2; i <= n + 1; ++i) x.push_back(a[i]);
            T v = psi(x);
            acc = (j % 2) ? T(acc - v) : T(acc + v);
        }
        Args x{a[n + 1] * a[0]};
        for (int i = 1; i <= n; ++i) x.push_back(a[i]);
        T v = psi(x);
        acc = ((n + 1) % 2) ? T(acc - v) : T(acc + v);
        return acc;
    };
    return out;
}

// B = A B0 with B0 phi(a0..a{m-1}) = phi(1, a0..) - (-1)^m phi(a0.., 1)
// and (A psi)(a0..a{m-1}) = sum_j (-1)^{(m-1) j} psi(aj, .., a{j-1}).
template <class T>
Cochain<T> connes_B(const Cochain<T>& phi) {
    if (phi.arity < 1) throw std::invalid_argument("B needs arity >= 1");
    Cochain<T> out;
    out.arity = phi.arity - 1;
    out.name = "B(" + phi.name + ")";
    out.f = [phi](const Args& a) {
        const int m = phi.arity;
        auto b0 = [&](const Args& s) {
            Args l{unit_like(s)}, r = s;
            l.insert(l.end(), s.begin(), s.end());
            r.push_back(unit_like(s));
            T v = phi(l), w = phi(r);
            return (m % 2) ? T(v + w) : T(v - w);
        };
        T acc = T(0);
        for (int j = 0; j < m; ++j) {
            Args s;
            for (int i = 0; i < m; ++i) s.push_back(a[(j + i) % m]);
            T v = b0(s);
            acc = (((m - 1) * j) % 2) ? T(acc - v) : T(acc + v);
        }
        return acc;
    };
    return out;
}

template <class T>
Cochain<T> operator+(const Cochain<T>& x, const Cochain<T>& y) {
    if (x.arity != y.arity) throw std::invalid_argument("cochain arity mismatch");
    return {x.arity, [x, y](const Args& a) { return T(x(a) + y(a)); }, x.name + " + " + y.name};
}

// Exact random cochain: multilinear extension of a seeded table on word tuples.
Cochain<Rational> random_cochain(int arity, std::uint64_t seed);
AlgebraElement random_element(std::mt19937_64& rng, int max_terms = 3, int max_len = 3);

struct BicomplexReport {
    int samples = 0;
    int nonzero_b2 = 0, nonzero_B2 = 0, nonzero_bB = 0;
    bool ok() const { return nonzero_b2 == 0 && nonzero_B2 == 0 && nonzero_bB == 0; }
};
BicomplexReport bicomplex_check(int samples, std::uint64_t seed);

// Residue-backed cochains; values are memoized per argument tuple.
Cochain<double> phi1(const ZetaContext& ctx);
Cochain<double> phi3(const ZetaContext& ctx);
Cochain<double> phi0_prop2(const ZetaContext& ctx);  // zeta-value of F a
Cochain<double> phi0_prop3(const ZetaContext& ctx);  // zeta-value of a
Cochain<double> phi2_prop2(const ZetaContext& ctx);  // (1/24) int a0 d(a1) d^2(a2) F |D|^-3
Cochain<double> phi2_prop3(const ZetaContext& ctx);  // same without F
enum class Psi1Variant { AsPrinted, SecondTermD2 };
Cochain<double> psi1(const ZetaContext& ctx, Psi1Variant v = Psi1Variant::SecondTermD2);
Cochain<double> psi0(const ZetaContext& ctx);  // 2 x zeta-value of a on the P-sector
// Trace(a0 [F, a1]) by direct level summation.
Cochain<double> chern1(const ZetaContext& ctx, double tol = 1e-13);

// tau(a) = tau0 of the del-degree-0 part on the minus disk.
double tau_state(const AlgebraElement& a, double q);
// chi(a0, a1) = tau(a0 del a1) + (1/2) [sigma(a0) sigma(a1)'']_0
Cochain<double> chi(double q);

// q = 0 closed form on canonical monomials a*^k b^n a^l (n < 0 means b*^|n|).
struct Monomial {
    int k = 0, n = 0, l = 0;
    AlgebraElement element(Mode m = Mode::Exact) const;
    std::string str() const;
};
std::optional<Monomial> as_monomial(const AlgebraElement& x);
double tau1_closed_q0(const AlgebraElement& mu_prime, const AlgebraElement& mu);

// Theorem checkers.
struct IdentityRow {
    std::string args;
    double lhs = 0.0, rhs = 0.0;
    double residual() const { return std::fabs(lhs - rhs); }
};

struct Theorem3Report {
    std::vector<IdentityRow> phi1_rows;  // phi1 vs tau1 + b phi0 + B phi2
    std::vector<IdentityRow> phi3_rows;  // phi3 vs b phi2
    std::vector<IdentityRow> psi_rows;   // psi(a^k, a*^k) vs 2k/3 + k^3/12
    double max_residual = 0.0;
    bool ok = false;
};
Theorem3Report theorem3_check(int k_max, int l_max, int n_max, double tol = 1e-9);

struct Theorem5Row {
    std::string args;
    double psi1 = 0.0, psi1_printed = 0.0, chi = 0.0, chern1 = 0.0, b_psi0 = 0.0;
};
struct Theorem5Report {
    double q = 0.0;
    std::vector<Theorem5Row> rows;
    double residual_literal = 0.0;      // max |psi1 - chi|
    double residual_factor2 = 0.0;      // max |psi1 - 2 chi|
    double printed_antisymmetry = 0.0;  // max |psi1_printed(a,b) + psi1_printed(b,a)|
    std::string winning_variant;
    bool literal_ok = false;
};
Theorem5Report theorem5_check(double q, double tol = 1e-8);

struct Corollary1Report {
    double q = 0.0;
    int frozen_sign = 0;          // sign s in chern1 = c chi + s b psi0, fixed on (a*, a)
    double chi_factor = 1.0;      // c
    double residual_literal = 0;  // best of chern1 = chi +/- b psi0
    double residual = 0.0;        // with the frozen (c, s)
    double g_term_residual = 0.0; // b psi0(a, a*) vs 2 (1 - q^2) q^-2 (q^2 R_1(q^2) - G(q^2))
    bool literal_ok = false;
    bool ok = false;
};
Corollary1Report corollary1_check(double q, double tol = 1e-8);

struct Theorem6Row {
    int r = 0;
    double q = 0.0;
    double half_psi0 = 0.0, predicted = 0.0;
};
struct Theorem6Report {
    std::vector<Theorem6Row> rows;
    double max_residual = 0.0;
    double diagonal_residual = 0.0;  // engine diagonal vs closed product on the P-sector
    double limit_value = 0.0, limit_predicted = 0.0;
    bool ok = false;
};
Theorem6Report theorem6_check(int r_max, const std::vector<double>& qs, double tol = 1e-8, int r_limit = 12,
                              double q_limit = 0.5);

struct IndexReport {
    double q = 0.0;
    std::vector<int> caps;
    std::vector<int> kernel, cokernel;
    int index = 0;
    bool stable = false;
    double smallest_singular = 0.0;
};
// Fredholm index of P U P on P x C^2 over nested level truncations.
IndexReport index_pairing(double q, const std::vector<int>& caps = {10, 14, 18}, bool identity = false);

}  // namespace suq2
