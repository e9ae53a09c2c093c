#include "suq2/checks.hpp"

#include "suq2/parser.hpp"
#include "suq2/qseries.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>

namespace suq2 {

namespace {

AlgebraElement mono(int k, int n, int l) { return Monomial{k, n, l}.element(); }

AlgebraElement alpha_power(int d) { return d >= 0 ? mono(0, 0, d) : mono(-d, 0, 0); }

std::string args_str(const Args& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].str();
    return s + ")";
}

// All words of length <= 2, used as the general-q battery.
std::vector<AlgebraElement> short_words() {
    const Letter ls[] = {Letter::A, Letter::As, Letter::B, Letter::Bs};
    std::vector<AlgebraElement> out{AlgebraElement::one(Mode::Exact)};
    for (Letter x : ls) out.push_back(AlgebraElement(Word{x}, Scalar(1)));
    for (Letter x : ls)
        for (Letter y : ls) out.push_back(AlgebraElement(Word{x, y}, Scalar(1)));
    return out;
}

std::pair<int, int> bideg(const AlgebraElement& x) { return bidegree(x.terms().begin()->first); }

std::vector<Args> general_battery() {
    auto ws = short_words();
    std::vector<Args> out;
    for (const auto& a : ws)
        for (const auto& b : ws) {
            auto [p, r] = bideg(a);
            auto [s, t] = bideg(b);
            if (p + s == 0 && r + t == 0 && !b.terms().begin()->first.empty()) out.push_back({a, b});
        }
    return out;
}

}  // namespace

Theorem3Report theorem3_check(int k_max, int l_max, int n_max, double tol) {
    Theorem3Report rep;
    ZetaContext ctx;
    ctx.q = 0.0;
    auto f1 = phi1(ctx), f0 = phi0_prop2(ctx), f2 = phi2_prop2(ctx), f3 = phi3(ctx);
    auto bf0 = hochschild_b(f0), Bf2 = connes_B(f2), bf2 = hochschild_b(f2);
    Cochain<double> eps0{0,
                         [ctx](const Args& a) {
                             return residue(OperatorExpr::from_element(a[0]), 1, Restriction::PSector, ctx);
                         },
                         "eps0"};
    auto beps0 = hochschild_b(eps0);

    for (int k = 0; k <= k_max; ++k)
        for (int l = 0; l <= l_max; ++l)
            for (int n = -n_max; n <= n_max; ++n)
                for (int k2 = 0; k2 <= k_max; ++k2) {
                    int l2 = k2 + k - l;
                    if (l2 < 0 || l2 > l_max) continue;
                    Args a{mono(k2, -n, l2), mono(k, n, l)};
                    IdentityRow row{args_str(a), f1(a), tau1_closed_q0(a[0], a[1]) + bf0(a) + Bf2(a)};
                    rep.max_residual = std::max(rep.max_residual, row.residual());
                    rep.phi1_rows.push_back(row);
                }

    // alpha-monomial 4-tuples of total degree 0
    std::vector<int> degs{1, -1, 2, -2};
    for (int a0 : degs)
        for (int a1 : degs)
            for (int a2 : degs)
                for (int a3 : degs) {
                    if (a0 + a1 + a2 + a3 != 0) continue;
                    Args a{alpha_power(a0), alpha_power(a1), alpha_power(a2), alpha_power(a3)};
                    IdentityRow row{args_str(a), f3(a), bf2(a)};
                    rep.max_residual = std::max(rep.max_residual, row.residual());
                    rep.phi3_rows.push_back(row);
                }

    // psi = phi1 - tau1 - b(phi0 - (2/3) eps0), the constant-free normalization of phi0
    for (int k = 1; k <= std::max(1, k_max); ++k) {
        Args a{alpha_power(k), alpha_power(-k)};
        double psi = f1(a) - tau1_closed_q0(a[0], a[1]) - bf0(a) + 2.0 / 3.0 * beps0(a);
        IdentityRow row{args_str(a), psi, 2.0 * k / 3.0 + k * k * k / 12.0};
        rep.max_residual = std::max(rep.max_residual, row.residual());
        rep.psi_rows.push_back(row);
    }
    rep.ok = rep.max_residual < tol;
    return rep;
}

Theorem5Report theorem5_check(double q, double tol) {
    Theorem5Report rep;
    rep.q = q;
    ZetaContext ctx;
    ctx.q = q;
    auto p1 = psi1(ctx), pp = psi1(ctx, Psi1Variant::AsPrinted);
    auto x = chi(q);
    for (const auto& a : general_battery()) {
        Theorem5Row row;
        row.args = args_str(a);
        row.psi1 = p1(a);
        row.psi1_printed = pp(a);
        row.chi = x(a);
        rep.residual_literal = std::max(rep.residual_literal, std::fabs(row.psi1 - row.chi));
        rep.residual_factor2 = std::max(rep.residual_factor2, std::fabs(row.psi1 - 2.0 * row.chi));
        double anti = std::fabs(row.psi1_printed + pp({a[1], a[0]}));
        rep.printed_antisymmetry = std::max(rep.printed_antisymmetry, anti);
        rep.rows.push_back(row);
    }
    rep.winning_variant = rep.printed_antisymmetry > tol ? "second term with |D|^-2" : "undecided";
    rep.literal_ok = rep.residual_literal < tol;
    return rep;
}

Corollary1Report corollary1_check(double q, double tol) {
    Corollary1Report rep;
    rep.q = q;
    ZetaContext ctx;
    ctx.q = q;
    auto ch = chern1(ctx);
    auto x = chi(q);
    auto bp = hochschild_b(psi0(ctx));
    auto battery = general_battery();
    auto pick_sign = [&](double c) {
        Args a{parse_element("a*"), parse_element("a")};
        double plus = std::fabs(ch(a) - (c * x(a) + bp(a))), minus = std::fabs(ch(a) - (c * x(a) - bp(a)));
        return plus <= minus ? 1 : -1;
    };
    auto residual = [&](double c, int s) {
        double m = 0.0;
        for (const auto& a : battery) m = std::max(m, std::fabs(ch(a) - (c * x(a) + s * bp(a))));
        return m;
    };
    int s1 = pick_sign(1.0);
    rep.residual_literal = residual(1.0, s1);
    rep.literal_ok = rep.residual_literal < tol;
    rep.chi_factor = rep.literal_ok ? 1.0 : 2.0;
    rep.frozen_sign = rep.literal_ok ? s1 : pick_sign(2.0);
    rep.residual = rep.literal_ok ? rep.residual_literal : residual(2.0, rep.frozen_sign);

    double t = q * q;
    double predicted = 2.0 * (1.0 - t) / t * (t * R_printed(1).eval(t) - G(t, 1e-15).value);
    rep.g_term_residual = std::fabs(bp({parse_element("a"), parse_element("a*")}) - predicted);
    rep.ok = rep.residual < tol && rep.g_term_residual < tol;
    return rep;
}

Theorem6Report theorem6_check(int r_max, const std::vector<double>& qs, double tol, int r_limit, double q_limit) {
    Theorem6Report rep;
    auto bb = [](int r) { return parse_element("b* b").power(r); };
    for (double q : qs) {
        ZetaContext ctx;
        ctx.q = q;
        double t = q * q, g = G(t, 1e-15).value;
        for (int r = 1; r <= r_max; ++r) {
            Theorem6Row row;
            row.r = r;
            row.q = q;
            row.half_psi0 = zeta_value_at_zero(OperatorExpr::from_element(bb(r)), Restriction::PSector, ctx);
            RationalFunctionQ Rr = r <= 4 ? R_printed(r) : R(r);
            row.predicted = std::pow(q, -2.0 * r) * (t * Rr.eval(t) - g);
            rep.max_residual = std::max(rep.max_residual, std::fabs(row.half_psi0 - row.predicted));
            rep.rows.push_back(row);

            Engine<NumericField> eng(NumericField(q, 1.0, 40));
            OperatorExpr op = OperatorExpr::from_element(bb(r));
            for (int N = 0; N <= 12; ++N)
                for (int y = 0; y <= N; ++y) {
                    double closed = 1.0;
                    for (int l = 0; l < r; ++l)
                        closed *= (std::pow(q, 2.0 * y) - std::pow(q, 2.0 * N + 2 + 2 * l)) / (1 - std::pow(q, 2.0 * N + 4 + 2 * l));
                    rep.diagonal_residual = std::max(rep.diagonal_residual, std::fabs(eng.diagonal(op, {N, N, y}) - closed));
                }
        }
    }
    ZetaContext ctx;
    ctx.q = q_limit;
    rep.limit_value = 2.0 * zeta_value_at_zero(OperatorExpr::from_element(bb(r_limit)), Restriction::PSector, ctx);
    double t = q_limit * q_limit;
    rep.limit_predicted = 1.0 + 2.0 * t / (t - 1.0);
    rep.ok = rep.max_residual < tol && rep.diagonal_residual < 1e-12 && std::fabs(rep.limit_value - rep.limit_predicted) < 1e-4;
    return rep;
}

namespace {

using UMatrix = std::array<std::array<AlgebraElement, 2>, 2>;

// Matrix of P X P on P x C^2 from levels <= L to levels <= L + 1.
Eigen::MatrixXd compressed(const UMatrix& X, const Engine<NumericField>& eng, int L) {
    std::map<std::pair<int, int>, int> index;  // (N, y) -> position
    int pos = 0;
    for (int N = 0; N <= L + 1; ++N)
        for (int y = 0; y <= N; ++y) index[{N, y}] = pos++;
    int cols = 0;
    for (int N = 0; N <= L; ++N) cols += N + 1;
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(2 * pos, 2 * cols);
    for (int c = 0; c < 2; ++c)
        for (int r = 0; r < 2; ++r) {
            if (X[r][c].terms().empty()) continue;
            OperatorExpr op = OperatorExpr::from_element(X[r][c]);
            for (int N = 0; N <= L; ++N)
                for (int y = 0; y <= N; ++y) {
                    int col = 2 * index[{N, y}] + c;
                    for (const auto& [t, v] : eng.apply(op, Basis{N, N, y})) {
                        if (t.x != t.N) continue;
                        M(2 * index[{t.N, t.y}] + r, col) += v;
                    }
                }
        }
    return M;
}

int kernel_dim(const Eigen::MatrixXd& M, double& smallest) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(M);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < s.size(); ++i) {
        if (s(i) > 1e-8) {
            ++rank;
            smallest = std::min(smallest, s(i));
        }
    }
    return static_cast<int>(M.cols()) - rank;
}

}  // namespace

IndexReport index_pairing(double q, const std::vector<int>& caps, bool identity) {
    IndexReport rep;
    rep.q = q;
    rep.caps = caps;
    rep.smallest_singular = INFINITY;
    auto E = [](const char* s) { return parse_element(s); };
    AlgebraElement zero(Mode::Exact);
    UMatrix U, Ustar;
    if (identity) {
        U = {{{E("1"), zero}, {zero, E("1")}}};
    } else {
        U = {{{E("a"), AlgebraElement(Word{Letter::Bs}, Scalar(-1) * Scalar(RationalFunctionQ::q_power(1)))}, {E("b"), E("a*")}}};
    }
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) Ustar[r][c] = U[c][r].adjoint();
    Engine<NumericField> eng(NumericField(q, 1.0, caps.empty() ? 8 : caps.back() + 8));
    for (int L : caps) {
        int ker = kernel_dim(compressed(U, eng, L), rep.smallest_singular);
        int coker = kernel_dim(compressed(Ustar, eng, L), rep.smallest_singular);
        rep.kernel.push_back(ker);
        rep.cokernel.push_back(coker);
    }
    rep.stable = !caps.empty();
    for (size_t i = 1; i < caps.size(); ++i)
        rep.stable &= rep.kernel[i] == rep.kernel[0] && rep.cokernel[i] == rep.cokernel[0];
    rep.index = caps.empty() ? 0 : rep.kernel.back() - rep.cokernel.back();
    return rep;
}

VacuumReport vacuum_test(double q) {
    VacuumReport rep;
    Engine<NumericField> eng(NumericField(q, 1.0, 8));
    auto E = [](const char* s) { return OperatorExpr::from_element(parse_element(s)); };
    Basis vac{0, 0, 0};
    struct Item {
        const char* name;
        EqGen h;
        const char* x;
        double c;
        const char* y;
    };
    const double s = 1.0 / std::sqrt(q);
    const Item items[] = {
        {"k(a) = q^-1/2 a", EqGen::K, "a", s, "a"},   {"k(b) = q^-1/2 b", EqGen::K, "b", s, "b"},
        {"e(a) = q b*", EqGen::E, "a", q, "b*"},      {"e(b) = -a*", EqGen::E, "b", -1.0, "a*"},
        {"e(a*) = 0", EqGen::E, "a*", 0.0, "1"},      {"e(b*) = 0", EqGen::E, "b*", 0.0, "1"},
    };
    for (const auto& it : items) {
        auto lhs = eng.apply(hopf_action(it.h, E(it.x), q), vac);
        for (auto [t, v] : eng.apply(E(it.y), vac)) lhs.emplace_back(t, -it.c * v);
        lhs = Engine<NumericField>::normalize(std::move(lhs));
        double r = 0.0;
        for (const auto& [t, v] : lhs) r = std::max(r, std::fabs(v));
        rep.rows.push_back({it.name, r});
        rep.max_residual = std::max(rep.max_residual, r);
    }
    return rep;
}

}  // namespace suq2
