#include "suq2/qseries.hpp"

#include <cmath>
#include <stdexcept>

namespace suq2 {

namespace {

using RF = RationalFunctionQ;

RF tp(int n) { return RF::q_power(n); }

RF one_minus_tp(int n) { return RF(1) - tp(n); }

// Gaussian binomial in the variable t.
RF gauss_t(int r, int k) {
    if (k < 0 || k > r) throw std::out_of_range("binomial index out of range");
    std::vector<std::vector<Poly>> tab(r + 1);
    for (int n = 0; n <= r; ++n) {
        tab[n].resize(n + 1);
        tab[n][0] = tab[n][n] = Poly(Rational(1));
        for (int j = 1; j < n; ++j) tab[n][j] = tab[n - 1][j - 1] + Poly::monomial(j) * tab[n - 1][j];
    }
    return RF(tab[r][k]);
}

RF sign(int n) { return RF(n % 2 ? -1 : 1); }

// rho(m) = prod_{a=1}^{m} (q^{2a} - 1)
RF rho_fac(int m) {
    RF r(1);
    for (int a = 1; a <= m; ++a) r *= RF::q_power(2 * a) - RF(1);
    return r;
}

}  // namespace

RF qbinom(int r, int k) { return gauss_t(r, k).compose_power(2); }

RF qbinom_product(int r, int k) {
    if (k < 0 || k > r) throw std::out_of_range("binomial index out of range");
    RF v(1);
    for (int i = 0; i < k; ++i) v *= (RF(1) - RF::q_power(2 * (r - i))) / (RF(1) - RF::q_power(2 * (i + 1)));
    return v;
}

std::vector<RF> lambda_coeffs(int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    std::vector<RF> out;
    RF inv_rho = RF(1) / rho_fac(r - 1);
    for (int j = 0; j < r; ++j) {
        int e = 4 + j * j + j * (3 - 2 * r) - 3 * r + r * r;
        out.push_back(-sign(j) * RF::q_power(e) * qbinom(r - 1, j) * inv_rho);
    }
    return out;
}

std::vector<RF> lambda_residues(int r) {
    // R(1/z) = prod (-q^{2+2l}/z)/(1 - q^{4+2l}/z) = prod (-q^{2+2l})/(z - q^{4+2l})
    std::vector<RF> out;
    for (int l = 0; l < r; ++l) {
        RF v(1);
        for (int m = 0; m < r; ++m) {
            v *= -RF::q_power(2 + 2 * m);
            if (m != l) v /= RF::q_power(4 + 2 * l) - RF::q_power(4 + 2 * m);
        }
        out.push_back(v);
    }
    return out;
}

std::pair<RF, RF> lambda_recombination(int r, const Rational& q) {
    // Rational functions in z with q fixed.
    auto qp = [&](int n) {
        Rational v = 1;
        for (int i = 0; i < n; ++i) v *= q;
        return v;
    };
    Poly z = Poly::monomial(1);
    RF prod(1);
    for (int l = 0; l < r; ++l) prod *= RF(Poly(Rational(-qp(2 + 2 * l))), z - Poly(qp(4 + 2 * l)));
    RF sum(0);
    auto lam = lambda_coeffs(r);
    for (int l = 0; l < r; ++l) sum += RF(Poly(lam[l].eval(q)), z - Poly(qp(4 + 2 * l)));
    return {prod, sum};
}

RF c0(int r) {
    RF s(0);
    for (int j = 0; j < r; ++j) {
        int e = j * j + j - 2 * r * j - 3 * r + r * r;
        s += sign(j) * RF(j + 1) * RF::q_power(e) * qbinom(r - 1, j);
    }
    return s / rho_fac(r - 1);
}

RF c0_from_lambda(int r) {
    auto lam = lambda_coeffs(r);
    RF s(0);
    for (int l = 0; l < r; ++l) s -= lam[l] * RF(l + 1) * RF::q_power(-2 * l - 4);
    return s;
}

RF c1(int r) {
    RF s(0);
    for (int k = 0; k < r; ++k)
        s += sign(k) * qbinom(r, k) * RF::q_power(k * (k - 1)) / (RF(1) - RF::q_power(2 * (r - k)));
    return RF(1) / (RF(1) - RF::q_power(2 * r)) + sign(r) * RF::q_power(-r * (r + 1)) * s;
}

Theorem6Assembly theorem6_assembly(int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    Theorem6Assembly a;
    // R(x) = (-1)^r t^{r(r+1)/2} x^r / prod_l (1 - x t^{2+l})
    // Q(x) = NQ(x) / prod_l (1 - x t^{2+l})
    auto nq = [&](const RF& x) {
        RF s(0);
        RF xr(1);
        for (int i = 0; i < r; ++i) xr *= x;
        RF xk(1);
        for (int k = 0; k < r; ++k) {
            s += sign(k) * tp(k * (k + 1) / 2) * gauss_t(r, k) * (xk - xr * tp(r - k)) / one_minus_tp(r - k);
            xk *= x;
        }
        return s;
    };
    for (int l = 0; l < r; ++l) {
        RF x = tp(-2 - l);
        RF rest(1);
        for (int m = 0; m < r; ++m)
            if (m != l) rest *= RF(1) - tp(m - l);
        RF xr(1);
        for (int i = 0; i < r; ++i) xr *= x;
        a.A.push_back(sign(r) * tp(r * (r + 1) / 2) * xr / rest);
        a.mu.push_back(nq(x) / rest);
    }
    a.q0 = nq(RF(0));
    auto g = [](int m) { return tp(m) / one_minus_tp(m); };
    a.g_coeff = RF(0);
    a.g0_coeff = RF(0);
    a.rational = a.q0 / RF(2);
    for (int l = 0; l < r; ++l) {
        a.g_coeff += a.A[l];
        a.g0_coeff += a.mu[l] - a.A[l] * RF(l + 1);
        RF sm(0), s1(0);
        for (int m = 1; m <= l + 1; ++m) {
            sm += RF(m) * g(m);
            s1 += g(m);
        }
        a.rational -= a.A[l] * (sm - RF(l + 1) * s1);
        a.rational -= a.mu[l] * s1;
    }
    a.R = tp(r - 1) * a.rational;
    return a;
}

RF c1_from_partial_fractions(int r) {
    auto a = theorem6_assembly(r);
    RF s(0);
    for (const auto& m : a.mu) s += m;
    return s.compose_power(2);
}

RF R(int r) { return theorem6_assembly(r).R; }

RF R_printed(int r) {
    auto P = [](std::vector<long> c) {
        std::vector<Rational> v;
        for (long x : c) v.emplace_back(x);
        return Poly(std::move(v));
    };
    switch (r) {
        case 1: return RF(P({3}), P({2, -2}));
        case 2: return RF(P({2, 5, -3}), P({2}) * P({-1, 1}) * P({-1, 1}) * P({1, 1}));
        case 3: return RF(P({2, 8, 13, 11, -1, -3}), P({2}) * P({-1, 0, 1}) * P({-1, 0, 1}) * P({1, 1, 1}));
        case 4:
            return RF(P({2, 10, 24, 43, 50, 46, 24, 4, -4, -3}),
                      P({2}) * P({1, 0, 1}) * P({-1, -1, 0, 1, 1}) * P({-1, -1, 0, 1, 1}));
        default: throw std::out_of_range("reference fractions exist for r <= 4");
    }
}

bool poles_only_at_roots_of_unity(const RF& f, int m_max) {
    Poly d = f.den();
    for (int m = 1; m <= m_max && d.degree() > 0; ++m) {
        for (;;) {
            Poly qq, rr;
            Poly::divmod(d, psi(m), qq, rr);
            if (!rr.is_zero()) break;
            d = qq;
        }
    }
    return d.degree() == 0;
}

QSeriesValue G(double qsq, double tol) {
    if (!(qsq > 0.0 && qsq < 1.0)) throw std::domain_error("G requires 0 < qsq < 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    QSeriesValue out;
    long double t = qsq, s = 0.0L, tn = 1.0L;
    for (long n = 1;; ++n) {
        tn *= t;
        s += static_cast<long double>(n) * tn / (1.0L - tn);
        // tail sum_{m>n} m t^m / (1 - t^m) <= t^{n+1}((n+1) - n t) / ((1-t)^2 (1 - t^{n+1}))
        long double tn1 = tn * t;
        long double bound = tn1 * ((n + 1) - n * t) / ((1 - t) * (1 - t) * (1 - tn1));
        if (bound <= tol || n > 10000000) {
            out.value = static_cast<double>(s);
            out.tail_bound = static_cast<double>(bound);
            out.terms_used = n;
            return out;
        }
    }
}

EtaIdentityReport eta_identity(double qsq, double tol) {
    // log eta(t) = (1/24) log t + sum log(1 - t^n)
    auto log_eta = [tol](long double t) {
        long double s = std::log(t) / 24.0L, tn = 1.0L;
        for (int n = 1; n < 100000; ++n) {
            tn *= t;
            s += std::log1p(-tn);
            if (tn < tol * 1e-6) break;
        }
        return s;
    };
    EtaIdentityReport rep;
    long double t = qsq, h = 1e-4L * t;
    // fourth-order central difference in log t
    long double lt = std::log(t);
    auto f = [&](long double u) { return log_eta(std::exp(u)); };
    long double hh = h / t;
    rep.log_derivative = static_cast<double>((-f(lt + 2 * hh) + 8 * f(lt + hh) - 8 * f(lt - hh) + f(lt - 2 * hh)) / (12 * hh));
    rep.G = G(qsq, tol).value;
    rep.rhs_one_24th = 1.0 / 24.0 - rep.G;
    rep.rhs_one_12th = 1.0 / 12.0 - rep.G;
    return rep;
}

}  // namespace suq2
