#include "suq2/zeta.hpp"

#include "suq2/parser.hpp"

#include <Eigen/Dense>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <thread>

namespace suq2 {

unsigned worker_count(unsigned requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("SUQ2_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

namespace {

long double trace_at(const Engine<NumericField>& eng, const OperatorExpr& op, int N, Restriction r) {
    long double acc = 0.0L;
    for (const auto& v : level_basis(N, r)) acc += eng.diagonal(op, v);
    return acc;
}

void fill_levels(const OperatorExpr& op, int from, int to, Restriction r, const ZetaContext& ctx, std::vector<double>& c) {
    if (to < from) return;
    Engine<NumericField> eng(NumericField(ctx.q, ctx.eps, to + 8), ctx.d_is_abs);
    c.resize(to + 1);
    unsigned w = std::min<unsigned>(worker_count(ctx.workers), static_cast<unsigned>(to - from + 1));
    if (w <= 1) {
        for (int N = from; N <= to; ++N) c[N] = static_cast<double>(trace_at(eng, op, N, r));
        return;
    }
    std::atomic<int> next{to};
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < w; ++i)
        pool.emplace_back([&] {
            for (int N = next--; N >= from; N = next--) c[N] = static_cast<double>(trace_at(eng, op, N, r));
        });
    for (auto& t : pool) t.join();
}

// Monomial coefficients of the interpolating polynomial through (N0+i, c[N0+i]), i = 0..d.
std::vector<long double> interpolate(const std::vector<double>& c, int N0, int d) {
    std::vector<long double> diff(d + 1);
    for (int i = 0; i <= d; ++i) diff[i] = c[N0 + i];
    std::vector<long double> newton(d + 1);
    for (int j = 0; j <= d; ++j) {
        newton[j] = diff[0];
        for (int i = 0; i + 1 <= d - j; ++i) diff[i] = diff[i + 1] - diff[i];
    }
    // sum_j newton[j] * binom(N - N0, j)
    std::vector<long double> out(d + 1, 0.0L);
    std::vector<long double> basis{1.0L};  // binom(N - N0, j) as polynomial in N
    long double fact = 1.0L;
    for (int j = 0; j <= d; ++j) {
        if (j > 0) {
            // multiply by (N - N0 - (j-1))
            std::vector<long double> nb(basis.size() + 1, 0.0L);
            long double shift = -static_cast<long double>(N0 + j - 1);
            for (size_t i = 0; i < basis.size(); ++i) {
                nb[i + 1] += basis[i];
                nb[i] += basis[i] * shift;
            }
            basis = std::move(nb);
            fact *= j;
        }
        for (size_t i = 0; i < basis.size(); ++i) out[i] += newton[j] * basis[i] / fact;
    }
    return out;
}

long double poly_eval(const std::vector<long double>& p, long double N) {
    long double r = 0.0L;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * N + *it;
    return r;
}

int conditioning_limit(int d) {
    if (d <= 1) return 1 << 20;
    return static_cast<int>(std::pow(1e6, 1.0 / d));
}

}  // namespace

std::vector<double> level_traces(const OperatorExpr& op, int n_max, Restriction r, const ZetaContext& ctx) {
    std::vector<double> c;
    fill_levels(op, 0, n_max, r, ctx, c);
    return c;
}

double level_trace(const OperatorExpr& op, int N, Restriction r, const ZetaContext& ctx) {
    Engine<NumericField> eng(NumericField(ctx.q, ctx.eps, N + 8), ctx.d_is_abs);
    return static_cast<double>(trace_at(eng, op, N, r));
}

FitResult fit_asymptotics(const std::vector<double>& c, double tol, int window, int max_degree) {
    FitResult fit;
    const int M = static_cast<int>(c.size()) - 1;
    bool all_zero = true;
    for (int N = 1; N <= M; ++N) all_zero &= c[N] == 0.0;
    if (all_zero) {
        fit.stabilized = true;
        fit.identically_zero = (M < 0 || c[0] == 0.0);
        fit.degree = 0;
        fit.lambda = {0.0};
        fit.window_start = 1;
        fit.read_end = M;
        return fit;
    }
    double best_achieved = INFINITY;
    for (int d = 0; d <= max_degree && d + 1 + window <= M; ++d) {
        // Delta^{d+1} c_N for N = 1..M-d-1 (level 0 carries the regularized kernel and is excluded)
        int len = M - d - 1;
        std::vector<long double> cur(c.begin() + 1, c.end());
        for (int k = 0; k <= d; ++k)
            for (size_t i = 0; i + 1 < cur.size() - k; ++i) cur[i] = cur[i + 1] - cur[i];
        // cur[i] = Delta^{d+1} c_{i+1}, valid for i < len
        std::vector<bool> ok(len);
        long double worst_tail = 0.0L;
        for (int i = 0; i < len; ++i) {
            long double mag = 0.0L;
            for (int j = 0; j <= d + 1; ++j) mag = std::max(mag, std::fabs(static_cast<long double>(c[i + 1 + j])));
            long double t = std::max(static_cast<long double>(tol), 16.0L * (1 << (d + 1)) * 1.2e-16L * mag);
            ok[i] = std::fabs(cur[i]) <= t;
        }
        int start = len;
        while (start > 0 && ok[start - 1]) --start;
        for (int i = std::max(0, len - window); i < len; ++i) worst_tail = std::max(worst_tail, std::fabs(cur[i]));
        best_achieved = std::min(best_achieved, static_cast<double>(worst_tail));
        if (len - start < window) continue;
        fit.stabilized = true;
        fit.degree = d;
        fit.window_start = start + 1;
        long double ach = 0.0L;
        for (int i = start; i < start + window; ++i) ach = std::max(ach, std::fabs(cur[i]));
        fit.achieved = static_cast<double>(ach);
        int wend = fit.window_start + window - 1 + d + 1;
        int E = std::max(wend, std::min(M, conditioning_limit(d)));
        E = std::min(E, M);
        fit.read_end = E;
        auto lam = interpolate(c, E - d, d);
        fit.lambda.assign(lam.begin(), lam.end());
        for (int s = 1; s < window && E - s - d >= fit.window_start; ++s) {
            auto alt = interpolate(c, E - s - d, d);
            for (int j = 0; j <= d; ++j)
                fit.stability = std::max(fit.stability, static_cast<double>(std::fabs(alt[j] - lam[j])));
        }
        long double rs = 0.0L, last = 0.0L, prev = 0.0L;
        for (int N = 1; N <= M; ++N) {
            long double r = c[N] - poly_eval(lam, N);
            rs += r;
            prev = last;
            last = r;
        }
        fit.remainder_sum = static_cast<double>(rs);
        long double al = std::fabs(last), ap = std::fabs(prev);
        if (al > 0 && ap > 0 && al < ap) {
            long double rho = al / ap;
            fit.tail_bound = static_cast<double>(al * rho / (1 - rho));
        } else {
            fit.tail_bound = static_cast<double>(al * M);
        }
        return fit;
    }
    fit.achieved = best_achieved;
    return fit;
}

LevelTraceSeries level_trace_series(const OperatorExpr& op, Restriction r, const ZetaContext& ctx) {
    LevelTraceSeries s;
    s.restriction = r;
    int n = std::min(ctx.n_start, ctx.n_cap);
    fill_levels(op, 0, n, r, ctx, s.c);
    int confirm = -1;  // degree awaiting confirmation on a longer range
    for (;;) {
        s.fit = fit_asymptotics(s.c, ctx.tol, ctx.window, ctx.max_degree);
        if (n >= ctx.n_cap) break;
        // a slowly decaying remainder can pass a high difference test; keep degrees >= 3 only if they persist
        if (s.fit.stabilized && (s.fit.degree < 3 || s.fit.degree == confirm)) break;
        confirm = s.fit.stabilized ? s.fit.degree : -1;
        int next = std::min(2 * n, ctx.n_cap);
        fill_levels(op, n + 1, next, r, ctx, s.c);
        n = next;
    }
    return s;
}

double residue_from_fit(const FitResult& fit, int pole) {
    if (!fit.stabilized) throw FitError("level traces did not stabilize", fit.achieved);
    if (pole < 1) throw std::invalid_argument("pole must be positive");
    return pole - 1 < static_cast<int>(fit.lambda.size()) ? fit.lambda[pole - 1] : 0.0;
}

double residue(const OperatorExpr& op, int pole, Restriction r, const ZetaContext& ctx) {
    return residue_from_fit(level_trace_series(op, r, ctx).fit, pole);
}

double riemann_zeta_negative(int m) {
    if (m < 0) throw std::invalid_argument("zeta(-m) needs m >= 0");
    static std::vector<Rational> B = [] {
        std::vector<Rational> b(64);
        b[0] = 1;
        for (int n = 1; n < 64; ++n) {
            Rational s = 0;
            mpz_class binom = 1;  // C(n+1, k)
            for (int k = 0; k < n; ++k) {
                s += Rational(binom) * b[k];
                binom = binom * (n + 1 - k) / (k + 1);
            }
            b[n] = -s / Rational(n + 1);
        }
        return b;
    }();
    if (m + 1 >= static_cast<int>(B.size())) throw std::out_of_range("zeta(-m) table exhausted");
    Rational v = B[m + 1] / Rational(m + 1);
    if (m % 2) v = -v;
    return v.get_d();
}

double zeta_value_from_series(const LevelTraceSeries& s) {
    if (!s.fit.stabilized) throw FitError("level traces did not stabilize", s.fit.achieved);
    long double v = s.c.empty() ? 0.0L : s.c[0];
    for (size_t j = 0; j < s.fit.lambda.size(); ++j) v += s.fit.lambda[j] * riemann_zeta_negative(static_cast<int>(j));
    v += s.fit.remainder_sum;
    return static_cast<double>(v);
}

double zeta_value_at_zero(const OperatorExpr& op, Restriction r, const ZetaContext& ctx) {
    return zeta_value_from_series(level_trace_series(op, r, ctx));
}

double HPrimeResidue::difference() const { return std::fabs(level_counting - heat_kernel); }

namespace {

// Truncated Laurent series in t.
struct Laurent {
    static constexpr int kMaxPos = 14;
    std::map<int, long double> c;

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [p, v] : o.c) c[p] += v;
        return *this;
    }
    Laurent scaled(long double s) const {
        Laurent r;
        for (const auto& [p, v] : c) r.c[p] = v * s;
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [pa, va] : a.c)
            for (const auto& [pb, vb] : b.c)
                if (pa + pb <= kMaxPos) r.c[pa + pb] += va * vb;
        return r;
    }
    long double at(int p) const {
        auto it = c.find(p);
        return it == c.end() ? 0.0L : it->second;
    }
};

long double factorial(int n) {
    long double f = 1.0L;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// sum_{k>=1} k^m e^{-tk} = m! t^{-m-1} + sum_i zeta(-m-i) (-t)^i / i!
Laurent kernel_sum(int m) {
    Laurent L;
    L.c[-m - 1] = factorial(m);
    for (int i = 0; i <= Laurent::kMaxPos; ++i)
        L.c[i] += riemann_zeta_negative(m + i) * ((i % 2) ? -1.0L : 1.0L) / factorial(i);
    return L;
}

// e^{-tn}
Laurent exp_series(int n) {
    Laurent L;
    long double term = 1.0L;
    for (int i = 0; i <= Laurent::kMaxPos; ++i) {
        L.c[i] = term;
        term *= -static_cast<long double>(n) / (i + 1);
    }
    return L;
}

using KPoly = std::vector<long double>;  // polynomial in k

KPoly kadd(KPoly a, const KPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0.0L);
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

KPoly kmul(const KPoly& a, const KPoly& b) {
    if (a.empty() || b.empty()) return {};
    KPoly r(a.size() + b.size() - 1, 0.0L);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

using ModelState = std::map<long, KPoly>;  // n -> coefficient polynomial in k

// The H' model l^2(Z) x l^2(N+) at q = 0: beta acts on n, D' = |n| + k.
ModelState model_apply(const OperatorExpr& op, const ModelState& s) {
    const OpNode& nd = op.node();
    ModelState out;
    auto acc = [&](long n, const KPoly& p) { out[n] = kadd(out[n], p); };
    switch (nd.kind) {
        case OpKind::Identity: return s;
        case OpKind::Gen: {
            if (nd.letter != Letter::B && nd.letter != Letter::Bs)
                throw std::invalid_argument("H' model supports beta and beta* only");
            for (const auto& [n, p] : s) {
                long m = nd.letter == Letter::B ? n + 1 : n - 1;
                long src = nd.letter == Letter::B ? n : m;  // beta: src -> src+1
                long double sg = src >= 0 ? -1.0L : 1.0L;
                bool raises = std::labs(m) > std::labs(n);
                if (nd.part == Part::Plus && !raises) continue;
                if (nd.part == Part::Minus && raises) continue;
                KPoly pp = p;
                for (auto& x : pp) x *= sg;
                acc(m, pp);
            }
            return out;
        }
        case OpKind::Dirac:
        case OpKind::AbsDPow: {
            int z = nd.kind == OpKind::Dirac ? 1 : static_cast<int>(nd.z);
            if (nd.kind == OpKind::AbsDPow && (nd.z != z || z < 0))
                throw std::invalid_argument("H' model supports nonnegative integer powers of |D|");
            for (const auto& [n, p] : s) {
                KPoly f{1.0L};
                for (int i = 0; i < z; ++i) f = kmul(f, KPoly{static_cast<long double>(std::labs(n)), 1.0L});
                acc(n, kmul(p, f));
            }
            return out;
        }
        case OpKind::Scale: {
            long double k = nd.scale.eval(0.0);
            for (const auto& [n, p] : model_apply(nd.kids[0], s)) {
                KPoly pp = p;
                for (auto& x : pp) x *= k;
                acc(n, pp);
            }
            return out;
        }
        case OpKind::Sum:
            for (const auto& kid : nd.kids)
                for (const auto& [n, p] : model_apply(kid, s)) acc(n, p);
            return out;
        case OpKind::Prod: {
            ModelState cur = s;
            for (auto it = nd.kids.rbegin(); it != nd.kids.rend(); ++it) cur = model_apply(*it, cur);
            return cur;
        }
        case OpKind::Delta:
        case OpKind::DComm:
        case OpKind::Nabla:
            for (const auto& [n, p] : s) {
                for (const auto& [m, img] : model_apply(nd.kids[0], ModelState{{n, KPoly{1.0L}}})) {
                    long double an = std::labs(n), am = std::labs(m);
                    KPoly w = nd.kind == OpKind::Nabla ? KPoly{am * am - an * an, 2.0L * (am - an)} : KPoly{am - an};
                    acc(m, kmul(kmul(img, w), p));
                }
            }
            return out;
        default: throw std::invalid_argument("operator node not supported in the H' model");
    }
}

KPoly model_diagonal(const OperatorExpr& op, long n) {
    auto img = model_apply(op, ModelState{{n, KPoly{1.0L}}});
    auto it = img.find(n);
    return it == img.end() ? KPoly{} : it->second;
}

// Least-squares polynomial fit of f on the points; returns coefficients and max residual.
std::vector<long double> poly_fit(const std::vector<long double>& xs, const std::vector<long double>& ys, int deg, double& resid) {
    Eigen::MatrixXd A(xs.size(), deg + 1);
    Eigen::VectorXd b(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        double p = 1.0;
        for (int j = 0; j <= deg; ++j) {
            A(i, j) = p;
            p *= static_cast<double>(xs[i]);
        }
        b(i) = static_cast<double>(ys[i]);
    }
    Eigen::VectorXd sol = A.colPivHouseholderQr().solve(b);
    resid = (A * sol - b).cwiseAbs().maxCoeff();
    std::vector<long double> out(deg + 1);
    for (int j = 0; j <= deg; ++j) out[j] = std::round(sol(j) * 1e9) / 1e9;  // integer-rational data at q = 0
    return out;
}

}  // namespace

HPrimeResidue hprime_residue(const OperatorExpr& op, int pole, double tol) {
    if (pole < 1 || pole > 6) throw std::invalid_argument("pole out of range");
    HPrimeResidue out;
    ZetaContext ctx;
    ctx.q = 0.0;
    ctx.tol = tol;
    ctx.d_is_abs = true;
    out.level_counting = residue(op, pole, Restriction::HPrime, ctx);

    // Closed-form theta expansion: sum_{n,k} d(n,k) e^{-t(|n|+k)}.
    const int n0 = 12, samples = 14, deg_max = 6;
    std::map<long, KPoly> diag;
    size_t kdeg = 0;
    for (long n = -(n0 + samples); n <= n0 + samples; ++n) {
        diag[n] = model_diagonal(op, n);
        kdeg = std::max(kdeg, diag[n].size());
    }
    auto dj = [&](long n, size_t j) { return j < diag[n].size() ? diag[n][j] : 0.0L; };
    Laurent theta;
    for (size_t j = 0; j < kdeg; ++j) {
        Laurent A;
        for (long n = -(n0 - 1); n <= n0 - 1; ++n) A += exp_series(static_cast<int>(std::labs(n))).scaled(dj(n, j));
        for (int side : {1, -1}) {
            std::vector<long double> xs, ys;
            for (long m = n0; m < n0 + samples; ++m) {
                xs.push_back(m);
                ys.push_back(dj(side * m, j));
            }
            double resid = 0.0;
            auto P = poly_fit(xs, ys, deg_max, resid);
            if (resid > 1e-7) throw std::runtime_error("H' diagonal is not eventually polynomial");
            for (int m = 0; m <= deg_max; ++m) {
                if (P[m] == 0.0L) continue;
                Laurent S = kernel_sum(m);
                for (int n = 1; n < n0; ++n) {
                    Laurent e = exp_series(n).scaled(-std::pow(static_cast<long double>(n), m));
                    S += e;
                }
                A += S.scaled(P[m]);
            }
        }
        theta += A * kernel_sum(static_cast<int>(j));
    }
    out.heat_kernel = static_cast<double>(theta.at(-pole) / factorial(pole - 1));
    return out;
}

std::vector<std::string> default_spectrum_battery() {
    std::vector<std::string> letters{"a", "a*", "b", "b*"};
    std::vector<std::string> out{"1", "F", "P"};
    std::vector<std::vector<std::string>> words{{}};
    for (int len = 1; len <= 3; ++len) {
        std::vector<std::vector<std::string>> next;
        for (const auto& w : words)
            for (const auto& l : letters) {
                auto x = w;
                x.push_back(l);
                next.push_back(x);
            }
        words = next;
        for (const auto& w : words) {
            std::string s;
            for (const auto& l : w) s += (s.empty() ? "" : " ") + l;
            out.push_back(s);
        }
    }
    // bidegree-(0,0) words also with F and P
    std::vector<std::string> extra;
    for (size_t i = 3; i < out.size(); ++i) {
        const auto& s = out[i];
        auto w = parse_element(s);
        if (w.terms().size() == 1 && bidegree(w.terms().begin()->first) == std::pair<int, int>{0, 0}) {
            extra.push_back(s + " F");
            extra.push_back("P " + s);
        }
    }
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

std::vector<SpectrumItem> dimension_spectrum_probe(const std::vector<std::string>& words, const ZetaContext& ctx) {
    std::vector<SpectrumItem> out;
    for (const auto& w : words) {
        SpectrumItem it;
        it.word = w;
        try {
            OperatorExpr op = parse_operator(w);
            // bidegree of the algebra letters (F, P are diagonal)
            Word letters;
            for (size_t i = 0; i < w.size(); ++i) {
                if (w[i] != 'a' && w[i] != 'b') continue;
                bool star = i + 1 < w.size() && w[i + 1] == '*';
                letters.push_back(w[i] == 'a' ? (star ? Letter::As : Letter::A) : (star ? Letter::Bs : Letter::B));
            }
            it.bidegree = bidegree(letters);
            it.zero_expected = it.bidegree != std::pair<int, int>{0, 0};
            auto series = level_trace_series(op, Restriction::Full, ctx);
            it.identically_zero = true;
            for (double v : series.c) it.identically_zero &= v == 0.0;
            it.stabilized = series.fit.stabilized;
            it.degree = series.fit.degree;
            it.achieved = series.fit.achieved;
            if (it.stabilized)
                for (int p = 1; p <= 3; ++p) it.residues.push_back(residue_from_fit(series.fit, p));
            if (it.zero_expected) it.ok = it.identically_zero;
            else it.ok = it.stabilized && it.degree <= 2;
            if (it.zero_expected && !it.identically_zero) it.error = "nonzero diagonal for bidegree != (0,0)";
        } catch (const std::exception& e) {
            it.error = e.what();
            it.ok = false;
        }
        out.push_back(it);
    }
    return out;
}

}  // namespace suq2
