#pragma once

#include "suq2/poly.hpp"

#include <vector>

namespace suq2 {

struct QSeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
    long terms_used = 0;
};

// Gaussian binomial with parameter q^2, as a polynomial in q.
RationalFunctionQ qbinom(int r, int k);
// Same coefficient from the product formula prod (1-q^{2(r-i)})/(1-q^{2(i+1)}).
RationalFunctionQ qbinom_product(int r, int k);

// Partial-fraction coefficients of R(1/z) = sum lambda_l/(z - q^{4+2l}), closed form.
std::vector<RationalFunctionQ> lambda_coeffs(int r);
// The same coefficients as residues of R(1/z) built from the product formula.
std::vector<RationalFunctionQ> lambda_residues(int r);
// R(1/z) at a fixed rational q, from the product (first) and from the lambdas (second);
// both are rational functions of z.
std::pair<RationalFunctionQ, RationalFunctionQ> lambda_recombination(int r, const Rational& q);

RationalFunctionQ c0(int r);              // closed form
RationalFunctionQ c0_from_lambda(int r);  // -sum lambda_l (l+1) q^{-2l-4}
RationalFunctionQ c1(int r);              // closed form
RationalFunctionQ c1_from_partial_fractions(int r);  // sum of mu_l

// Pieces of the assembly in the variable t = q^2.
struct Theorem6Assembly {
    RationalFunctionQ q0;          // Q(0)
    std::vector<RationalFunctionQ> A, mu;
    RationalFunctionQ g_coeff;     // coefficient of G(t), equals -t^{-r}
    RationalFunctionQ g0_coeff;    // coefficient of G_0(t), must vanish
    RationalFunctionQ rational;    // the rational remainder
    RationalFunctionQ R;           // R_r(t) = t^{r-1} * rational
};
Theorem6Assembly theorem6_assembly(int r);

// R_r in its own variable, assembled from the proof ingredients.
RationalFunctionQ R(int r);
// Reference closed forms of R_1..R_4.
RationalFunctionQ R_printed(int r);

// Every irreducible factor of the denominator divides some q^m - 1, m <= m_max.
bool poles_only_at_roots_of_unity(const RationalFunctionQ& f, int m_max = 200);

QSeriesValue G(double qsq, double tol);

struct EtaIdentityReport {
    double log_derivative;  // t d/dt log eta at t = qsq, by central differences of log eta
    double G;
    double rhs_one_24th;    // 1/24 - G
    double rhs_one_12th;    // 1/12 - G
};
EtaIdentityReport eta_identity(double qsq, double tol);

}  // namespace suq2
