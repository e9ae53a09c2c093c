#include "suq2/symbol.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>

namespace suq2 {

std::string bword_str(const BWord& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        const auto& l = w[i];
        // adjoint letters: raising piece is the adjoint of the lowering piece
        switch (l.letter) {
            case Letter::A: os << (l.raise ? "a+" : "a-"); break;
            case Letter::B: os << (l.raise ? "b+" : "b-"); break;
            case Letter::As: os << (l.raise ? "(a-)*" : "(a+)*"); break;
            case Letter::Bs: os << (l.raise ? "(b-)*" : "(b+)*"); break;
        }
    }
    return os.str();
}

int geodesic_degree(const BWord& w) {
    int d = 0;
    for (const auto& l : w) d += l.raise ? 1 : -1;
    return d;
}

std::vector<BWord> decompose(const Word& w) {
    std::vector<BWord> out{{}};
    for (Letter l : w) {
        std::vector<BWord> next;
        next.reserve(out.size() * 2);
        for (const auto& b : out)
            for (bool r : {true, false}) {
                auto x = b;
                x.push_back({l, r});
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    return out;
}

OperatorExpr bword_operator(const BWord& w) {
    OperatorExpr op = OperatorExpr::identity();
    for (const auto& l : w) op = op * OperatorExpr::gen(l.letter, l.raise ? Part::Plus : Part::Minus);
    return op;
}

std::optional<std::pair<long, double>> disk_apply(const Word& w, Disk disk, long x, double q) {
    double c = 1.0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        switch (*it) {
            case Letter::A:
                if (x == 0) return std::nullopt;
                c *= std::sqrt(1.0 - std::pow(q, 2.0 * x));
                --x;
                break;
            case Letter::As:
                c *= std::sqrt(1.0 - std::pow(q, 2.0 * x + 2));
                ++x;
                break;
            case Letter::B:
            case Letter::Bs:
                c *= (disk == Disk::Plus ? 1.0 : -1.0) * (x == 0 ? 1.0 : std::pow(q, static_cast<double>(x)));
                break;
        }
        if (c == 0.0) return std::nullopt;
    }
    return std::make_pair(x, c);
}

SymbolElement SymbolElement::term(double q, const Word& plus, const Word& minus, int u, double c) {
    SymbolElement s(q);
    s.add({plus, minus, u}, c);
    return s;
}

void SymbolElement::add(const SymbolKey& k, double c) {
    if (c == 0.0) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == 0.0) t_.erase(it);
}

SymbolElement& SymbolElement::operator+=(const SymbolElement& o) {
    for (const auto& [k, c] : o.t_) add(k, c);
    return *this;
}

SymbolElement operator*(const SymbolElement& a, const SymbolElement& b) {
    SymbolElement r(a.q_);
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_) r.add({concat(ka.plus, kb.plus), concat(ka.minus, kb.minus), ka.u + kb.u}, ca * cb);
    return r;
}

SymbolElement SymbolElement::scaled(double c) const {
    SymbolElement r(q_);
    for (const auto& [k, v] : t_) r.add(k, v * c);
    return r;
}

SymbolElement SymbolElement::adjoint() const {
    SymbolElement r(q_);
    for (const auto& [k, v] : t_) r.add({suq2::adjoint(k.plus), suq2::adjoint(k.minus), -k.u}, v);
    return r;
}

std::string SymbolElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    os.precision(12);
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        os << std::fabs(c) << " (" << word_str(k.plus) << ") x (" << word_str(k.minus) << ")";
        if (k.u == 1) os << " u";
        else if (k.u != 0) os << " u^" << k.u;
        first = false;
    }
    return os.str();
}

namespace {

SymbolElement rho_letter(const BLetter& l, double q) {
    using L = Letter;
    switch (l.letter) {
        case L::A: return l.raise ? SymbolElement::term(q, {L::Bs}, {L::B}, 1, -q) : SymbolElement::term(q, {L::A}, {L::A}, -1, 1.0);
        case L::B: return l.raise ? SymbolElement::term(q, {L::As}, {L::B}, 1, 1.0) : SymbolElement::term(q, {L::B}, {L::A}, -1, 1.0);
        case L::As: return l.raise ? SymbolElement::term(q, {L::As}, {L::As}, 1, 1.0) : SymbolElement::term(q, {L::B}, {L::Bs}, -1, -q);
        case L::Bs: return l.raise ? SymbolElement::term(q, {L::Bs}, {L::As}, 1, 1.0) : SymbolElement::term(q, {L::A}, {L::Bs}, -1, 1.0);
    }
    return SymbolElement(q);
}

}  // namespace

SymbolElement rho(const BWord& w, double q) {
    SymbolElement s = SymbolElement::term(q, {}, {}, 0, 1.0);
    for (const auto& l : w) s = s * rho_letter(l, q);
    return s;
}

SymbolElement rho(const AlgebraElement& x, double q) {
    SymbolElement s(q);
    for (const auto& [w, c] : x.terms()) {
        double cv = c.eval(q);
        for (const auto& bw : decompose(w)) s += rho(bw, q).scaled(cv);
    }
    return s;
}

SymbolElement degree0(const SymbolElement& s) {
    SymbolElement r(s.q());
    for (const auto& [k, c] : s.terms())
        if (k.u == 0) r.add(k, c);
    return r;
}

StateVector<double> lambda_apply(const SymbolElement& s, const Basis& v) {
    StateVector<double> out;
    for (const auto& [k, c] : s.terms()) {
        auto px = disk_apply(k.plus, Disk::Plus, v.x, s.q());
        if (!px) continue;
        auto py = disk_apply(k.minus, Disk::Minus, v.y, s.q());
        if (!py) continue;
        Basis t{v.N + k.u, static_cast<int>(px->first), static_cast<int>(py->first)};
        if (!t.in_lambda()) continue;
        out.emplace_back(t, c * px->second * py->second);
    }
    return Engine<NumericField>::normalize(std::move(out));
}

double tau1(const Word& w) {
    int deg = 0;
    for (Letter l : w) {
        if (l == Letter::B || l == Letter::Bs) return 0.0;
        deg += l == Letter::A ? 1 : -1;
    }
    return deg == 0 ? 1.0 : 0.0;
}

Tau0 tau0(const Word& w, Disk disk, double q, double tol) {
    Tau0 r;
    auto diag = [&](long x) {
        auto img = disk_apply(w, disk, x, q);
        return img && img->first == x ? img->second : 0.0;
    };
    std::vector<double> c;
    long double acc = 0.0L;
    for (int n = 40;; n *= 2) {
        for (long x = static_cast<long>(c.size()); x <= n; ++x) {
            acc += diag(x);
            c.push_back(static_cast<double>(acc));
        }
        r.fit = fit_asymptotics(c, tol, 5, 1);
        if (r.fit.stabilized || n >= 5120) break;
    }
    if (!r.fit.stabilized) throw FitError("partial traces did not stabilize", r.fit.achieved);
    if (std::fabs(residue_from_fit(r.fit, 2) - tau1(w)) > 1e-8)
        throw FitError("partial-trace slope disagrees with tau1", r.fit.achieved);
    r.value = r.fit.lambda[0];
    return r;
}

double tau_pairing(const SymbolElement& s, int i, int j, double tol) {
    auto tau = [&](int k, const Word& w, Disk d) { return k == 1 ? tau1(w) : tau0(w, d, s.q(), tol).value; };
    long double acc = 0.0L;
    for (const auto& [k, c] : s.terms()) {
        if (k.u != 0) continue;
        double a = tau(i, k.plus, Disk::Plus);
        if (a == 0.0) continue;
        acc += c * a * tau(j, k.minus, Disk::Minus);
    }
    return static_cast<double>(acc);
}

SmoothingReport smoothing_check(const AlgebraElement& b, double q, int n_max) {
    SmoothingReport r;
    r.word = b.str();
    r.q = q;
    Engine<NumericField> eng(NumericField(q, 1.0, n_max + 8));
    OperatorExpr op = OperatorExpr::from_element(b);
    SymbolElement s = rho(b, q);
    for (int N = 0; N <= n_max; ++N) {
        double frob = 0.0, max_col = 0.0;
        std::unordered_map<std::uint64_t, double> rows;
        for (const auto& v : level_basis(N)) {
            auto diff = eng.apply(op, v);
            for (auto [t, c] : lambda_apply(s, v)) diff.emplace_back(t, -c);
            diff = Engine<NumericField>::normalize(std::move(diff));
            double col = 0.0;
            for (const auto& [t, c] : diff) {
                double a = std::fabs(c);
                col += a;
                frob += a * a;
                rows[t.key()] += a;
            }
            max_col = std::max(max_col, col);
        }
        double max_row = 0.0;
        for (const auto& [k, v] : rows) max_row = std::max(max_row, v);
        r.norms.push_back(std::min(std::sqrt(frob), std::sqrt(max_col * max_row)));
    }
    const double floor = 1e-14;
    std::vector<int> tail;
    for (int N = n_max; N >= 1 && tail.size() < 8; --N)
        if (r.norms[N] > floor) tail.push_back(N);
    r.tail_points = static_cast<int>(tail.size());
    if (tail.size() < 3) {
        // decayed into the noise floor
        double last = 0.0;
        for (int N = n_max - n_max / 4; N <= n_max; ++N) last = std::max(last, r.norms[N]);
        r.pass = last <= floor;
        r.slope = r.pass ? -INFINITY : 0.0;
        return r;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0, n = static_cast<double>(tail.size());
    for (int N : tail) {
        double x = std::log(static_cast<double>(N)), y = std::log(r.norms[N]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    r.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    r.pass = r.slope < -6.0;
    return r;
}

Theorem4Report theorem4_check(const AlgebraElement& b, const ZetaContext& ctx, double tol) {
    Theorem4Report rep;
    rep.word = b.str();
    rep.q = ctx.q;
    SymbolElement s0 = degree0(rho(b, ctx.q));
    OperatorExpr op = OperatorExpr::from_element(b);
    auto full = level_trace_series(op, Restriction::Full, ctx);
    auto psec = level_trace_series(op, Restriction::PSector, ctx);
    double t11 = tau_pairing(s0, 1, 1), t10 = tau_pairing(s0, 1, 0), t01 = tau_pairing(s0, 0, 1),
           t00 = tau_pairing(s0, 0, 0);
    auto row = [&](std::string name, double lhs, double rhs, bool info) {
        PairingRow p{std::move(name), lhs, rhs, info, std::fabs(lhs - rhs) <= tol};
        if (!info) rep.max_deviation = std::max(rep.max_deviation, std::fabs(lhs - rhs));
        rep.rows.push_back(p);
    };
    row("int b|D|^-3 = (t1 x t1)", residue_from_fit(full.fit, 3), t11, false);
    row("int b|D|^-2 = (t1 x t0 + t0 x t1)", residue_from_fit(full.fit, 2), t10 + t01, false);
    row("int b|D|^-1 = (t0 x t0)", residue_from_fit(full.fit, 1), t00, false);
    row("int bP|D|^-2 = (t1 x t1)", residue_from_fit(psec.fit, 2), t11, false);
    row("int bP|D|^-1 = (t1 x t0)", residue_from_fit(psec.fit, 1), t10, false);
    row("alternative: int bP|D|^-2 = (t1 x t0)", residue_from_fit(psec.fit, 2), t10, true);
    row("alternative: int bP|D|^-1 = (t0 x t0)", residue_from_fit(psec.fit, 1), t00, true);
    rep.ok = rep.max_deviation <= tol;
    return rep;
}

}  // namespace suq2
