#include "suq2/cyclic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace suq2 {

namespace {

Rational constant_of(const Scalar& c) {
    if (c.mode() != Mode::Exact) throw std::invalid_argument("exact scalar required");
    return c.exact().eval(Rational(0));
}

Rational table_value(std::uint64_t seed, const std::vector<Word>& ws) {
    std::string key;
    for (const auto& w : ws) key += word_str(w) + "|";
    std::mt19937_64 rng(seed ^ std::hash<std::string>{}(key));
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    return Rational(num(rng), den(rng));
}

// Multilinear expansion over the terms of each argument.
template <class T, class F>
T expand(const Args& a, size_t i, std::vector<Word>& ws, const T& coef, const F& leaf) {
    if (i == a.size()) return coef * leaf(ws);
    T acc = T(0);
    for (const auto& [w, c] : a[i].terms()) {
        ws.push_back(w);
        acc += expand<T>(a, i + 1, ws, T(coef * constant_of(c)), leaf);
        ws.pop_back();
    }
    return acc;
}

std::string args_key(const Args& a) {
    std::string s;
    for (const auto& x : a) s += x.str() + " ; ";
    return s;
}

// Memoizing wrapper; the evaluator sees operators built from the arguments.
Cochain<double> memo(int arity, std::string name, std::function<double(const Args&)> f) {
    auto cache = std::make_shared<std::map<std::string, double>>();
    auto mu = std::make_shared<std::mutex>();
    Cochain<double> c;
    c.arity = arity;
    c.name = name;
    c.f = [cache, mu, f](const Args& a) {
        std::string k = args_key(a);
        {
            std::lock_guard<std::mutex> lk(*mu);
            auto it = cache->find(k);
            if (it != cache->end()) return it->second;
        }
        double v = f(a);
        std::lock_guard<std::mutex> lk(*mu);
        cache->emplace(k, v);
        return v;
    };
    return c;
}

OperatorExpr op_of(const AlgebraElement& x) { return OperatorExpr::from_element(x); }

double res(const OperatorExpr& op, int pole, Restriction r, const ZetaContext& ctx) { return residue(op, pole, r, ctx); }

}  // namespace

Cochain<Rational> random_cochain(int arity, std::uint64_t seed) {
    Cochain<Rational> c;
    c.arity = arity;
    c.name = "rand" + std::to_string(arity);
    c.f = [seed](const Args& a) {
        std::vector<Word> ws;
        return expand<Rational>(a, 0, ws, Rational(1), [seed](const std::vector<Word>& w) { return table_value(seed, w); });
    };
    return c;
}

AlgebraElement random_element(std::mt19937_64& rng, int max_terms, int max_len) {
    std::uniform_int_distribution<int> nterms(1, max_terms), len(0, max_len), letter(0, 3), coef(-3, 3);
    AlgebraElement x(Mode::Exact);
    const Letter ls[] = {Letter::A, Letter::As, Letter::B, Letter::Bs};
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Word w;
        for (int i = len(rng); i > 0; --i) w.push_back(ls[letter(rng)]);
        int c = coef(rng);
        if (c == 0) c = 1;
        x.add(w, Scalar(Rational(c)));
    }
    return x;
}

BicomplexReport bicomplex_check(int samples, std::uint64_t seed) {
    BicomplexReport r;
    std::mt19937_64 rng(seed);
    auto draw = [&](int n) {
        Args a;
        for (int i = 0; i < n; ++i) a.push_back(random_element(rng, 2, 2));
        return a;
    };
    for (int i = 0; i < samples; ++i) {
        int n = i % 3;
        auto phi = random_cochain(n, seed + 7919 * i);
        if (hochschild_b(hochschild_b(phi))(draw(n + 3)) != 0) ++r.nonzero_b2;
        auto phi2 = random_cochain(n + 2, seed + 7919 * i + 1);
        if (connes_B(connes_B(phi2))(draw(n + 1)) != 0) ++r.nonzero_B2;
        auto phi1 = random_cochain(n + 1, seed + 7919 * i + 2);
        auto a = draw(n + 2);
        if (hochschild_b(connes_B(phi1))(a) + connes_B(hochschild_b(phi1))(a) != 0) ++r.nonzero_bB;
        ++r.samples;
    }
    return r;
}

Cochain<double> phi1(const ZetaContext& ctx) {
    return memo(1, "phi1", [ctx](const Args& a) {
        OperatorExpr a0 = op_of(a[0]), c = dcomm(op_of(a[1]));
        return res(a0 * c, 1, Restriction::Full, ctx) - 0.25 * res(a0 * nabla(c), 3, Restriction::Full, ctx) +
               0.125 * res(a0 * nabla(nabla(c)), 5, Restriction::Full, ctx);
    });
}

Cochain<double> phi3(const ZetaContext& ctx) {
    return memo(3, "phi3", [ctx](const Args& a) {
        OperatorExpr x = op_of(a[0]) * dcomm(op_of(a[1])) * dcomm(op_of(a[2])) * dcomm(op_of(a[3]));
        return res(x, 3, Restriction::Full, ctx) / 12.0;
    });
}

Cochain<double> phi0_prop2(const ZetaContext& ctx) {
    return memo(0, "phi0", [ctx](const Args& a) {
        return zeta_value_at_zero(OperatorExpr::F() * op_of(a[0]), Restriction::Full, ctx);
    });
}

Cochain<double> phi0_prop3(const ZetaContext& ctx) {
    return memo(0, "phi0'", [ctx](const Args& a) { return zeta_value_at_zero(op_of(a[0]), Restriction::Full, ctx); });
}

Cochain<double> phi2_prop2(const ZetaContext& ctx) {
    return memo(2, "phi2", [ctx](const Args& a) {
        OperatorExpr x = op_of(a[0]) * delta(op_of(a[1])) * delta(delta(op_of(a[2]))) * OperatorExpr::F();
        return res(x, 3, Restriction::Full, ctx) / 24.0;
    });
}

Cochain<double> phi2_prop3(const ZetaContext& ctx) {
    return memo(2, "phi2'", [ctx](const Args& a) {
        OperatorExpr x = op_of(a[0]) * delta(op_of(a[1])) * delta(delta(op_of(a[2])));
        return res(x, 3, Restriction::Full, ctx) / 24.0;
    });
}

Cochain<double> psi1(const ZetaContext& ctx, Psi1Variant v) {
    int second = v == Psi1Variant::AsPrinted ? 1 : 2;
    return memo(1, v == Psi1Variant::AsPrinted ? "psi1(|D|^-1)" : "psi1", [ctx, second](const Args& a) {
        OperatorExpr a0 = op_of(a[0]), d = delta(op_of(a[1]));
        return 2.0 * res(a0 * d, 1, Restriction::PSector, ctx) - res(a0 * delta(d), second, Restriction::PSector, ctx);
    });
}

Cochain<double> psi0(const ZetaContext& ctx) {
    return memo(0, "psi0", [ctx](const Args& a) {
        return 2.0 * zeta_value_at_zero(op_of(a[0]), Restriction::PSector, ctx);
    });
}

Cochain<double> chern1(const ZetaContext& ctx, double tol) {
    return memo(1, "chern1", [ctx, tol](const Args& a) {
        OperatorExpr a1 = op_of(a[1]);
        OperatorExpr x = op_of(a[0]) * (OperatorExpr::F() * a1 - a1 * OperatorExpr::F());
        std::vector<double> c;
        const int chunk = 20;
        for (int n = chunk;; n += chunk) {
            auto more = level_traces(x, n, Restriction::Full, ctx);
            c = std::move(more);
            double tail = 0.0;
            for (int N = n - 4; N <= n; ++N) tail = std::max(tail, std::fabs(c[N]));
            if (tail < tol) break;
            if (n >= std::min(ctx.n_cap, 160)) throw FitError("Trace(a0[F,a1]) level contributions do not decay", tail);
        }
        long double s = 0.0L;
        for (double v : c) s += v;
        return static_cast<double>(s);
    });
}

double tau_state(const AlgebraElement& a, double q) {
    long double acc = 0.0L;
    for (const auto& [w, c] : a.terms())
        if (del_degree(w) == 0) acc += c.eval(q) * tau0(w, Disk::Minus, q).value;
    return static_cast<double>(acc);
}

Cochain<double> chi(double q) {
    return memo(1, "chi", [q](const Args& a) {
        AlgebraElement d(a[1].mode());
        for (const auto& [w, c] : a[1].terms()) {
            int k = del_degree(w);
            if (k) d.add(w, c * (c.mode() == Mode::Exact ? Scalar(Rational(k)) : Scalar(static_cast<double>(k))));
        }
        double circle = 0.5 * circle_mean({sigma(a[0]), sigma(a[1])}, {0, 2}, q);
        return tau_state(a[0] * d, q) + circle;
    });
}

AlgebraElement Monomial::element(Mode m) const {
    Word w(k, Letter::As);
    for (int i = 0; i < std::abs(n); ++i) w.push_back(n > 0 ? Letter::B : Letter::Bs);
    for (int i = 0; i < l; ++i) w.push_back(Letter::A);
    return AlgebraElement(w, m == Mode::Exact ? Scalar(1) : Scalar(1.0));
}

std::string Monomial::str() const {
    std::ostringstream os;
    os << "a*^" << k << " b^" << n << " a^" << l;
    return os.str();
}

std::optional<Monomial> as_monomial(const AlgebraElement& x) {
    if (x.terms().size() != 1) return std::nullopt;
    const auto& [w, c] = *x.terms().begin();
    if (c.mode() == Mode::Exact ? constant_of(c) != 1 : c.numeric() != 1.0) return std::nullopt;
    Monomial m;
    size_t i = 0;
    while (i < w.size() && w[i] == Letter::As) ++m.k, ++i;
    if (i < w.size() && (w[i] == Letter::B || w[i] == Letter::Bs)) {
        Letter b = w[i];
        while (i < w.size() && w[i] == b) m.n += (b == Letter::B ? 1 : -1), ++i;
    }
    while (i < w.size() && w[i] == Letter::A) ++m.l, ++i;
    if (i != w.size()) return std::nullopt;
    return m;
}

double tau1_closed_q0(const AlgebraElement& mu_prime, const AlgebraElement& mu) {
    auto x = as_monomial(mu_prime), y = as_monomial(mu);
    if (!x || !y) throw std::invalid_argument("tau1 closed form needs canonical monomials a*^k f(b) a^l");
    if (y->l != x->k || y->k != x->l) return 0.0;
    if (x->n == 0 || y->n == 0 || x->n + y->n != 0) return 0.0;
    // (1/pi i) \int u^{n0} d(u^{n1}) = 2 n1 when n0 + n1 = 0
    return 2.0 * y->n;
}

}  // namespace suq2
