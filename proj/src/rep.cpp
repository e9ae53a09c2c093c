#include "suq2/rep.hpp"

#include <limits>

namespace suq2 {

bool in_restriction(const Basis& b, Restriction r) {
    switch (r) {
        case Restriction::Full: return true;
        case Restriction::PSector: return b.x == b.N;
        case Restriction::H0: return (b.x == b.N && b.y == 0) || (b.x == 0 && b.y == b.N);
        case Restriction::HPrime:
            return (b.x == 0 || b.y == 0) && !in_restriction(b, Restriction::H0);
    }
    return false;
}

std::vector<Basis> level_basis(int N, Restriction r) {
    std::vector<Basis> out;
    for (int x = 0; x <= N; ++x)
        for (int y = 0; y <= N; ++y) {
            Basis b{N, x, y};
            if (in_restriction(b, r)) out.push_back(b);
        }
    return out;
}

NumericField::NumericField(double q, double eps, int max_level) : q_(q), eps_(eps) {
    if (!(q >= 0.0 && q < 1.0)) throw std::domain_error("q must lie in [0,1)");
    int n = 2 * max_level + 8;
    pw_.resize(n);
    sq_.resize(n);
    isq_.resize(n);
    long double p = 1.0L;
    for (int i = 0; i < n; ++i) {
        pw_[i] = static_cast<double>(p);
        long double one_minus = 1.0L - p;
        sq_[i] = static_cast<double>(std::sqrt(one_minus));
        isq_[i] = i == 0 ? std::numeric_limits<double>::infinity() : static_cast<double>(1.0L / std::sqrt(one_minus));
        p *= q;
    }
}

double NumericField::q_pow(int n) const {
    if (n >= 0) return n < static_cast<int>(pw_.size()) ? pw_[n] : std::pow(q_, n);
    if (q_ == 0.0) throw std::domain_error("negative power of q = 0");
    return std::pow(q_, n);
}

double NumericField::sqrt_factor(int n, int sign) const {
    if (n < static_cast<int>(sq_.size())) return sign > 0 ? sq_[n] : isq_[n];
    double v = std::sqrt(1.0 - std::pow(q_, n));
    return sign > 0 ? v : 1.0 / v;
}

double NumericField::abs_d_pow(int N, double z) const {
    if (z == 0.0) return 1.0;
    if (N == 0) return z < 0 ? std::pow(eps_, z) : 0.0;
    return std::pow(static_cast<double>(N), z);
}

double NumericField::k_value(const Basis& b) const {
    if (q_ == 0.0) throw std::domain_error("k is undefined at q = 0");
    return std::pow(q_, b.y - 0.5 * b.N);
}

double NumericField::k_inv_value(const Basis& b) const { return 1.0 / k_value(b); }

double NumericField::e_coeff(const Basis& b) const {
    if (q_ == 0.0) throw std::domain_error("e is undefined at q = 0");
    return std::pow(q_, 0.5 * (1 - b.N)) * sqrt_factor(2 * (b.y + 1), 1) * sqrt_factor(2 * (b.N - b.y), 1) / (1.0 - q_ * q_);
}

RationalField rational_field(const Rational& q, const Rational& eps) {
    if (q < 0 || q >= 1) throw std::domain_error("q must lie in [0,1)");
    return RationalField(std::make_shared<RationalPsi>(q), eps);
}

FormalField formal_field(double eval_point, const Rational& eps) {
    auto t = std::make_shared<FormalPsi>();
    t->set_eval_point(eval_point);
    return FormalField(t, eps);
}

std::vector<std::pair<std::string, OperatorExpr>> defining_relations() {
    using O = OperatorExpr;
    O a = O::gen(Letter::A), as = O::gen(Letter::As), b = O::gen(Letter::B), bs = O::gen(Letter::Bs);
    Scalar q = RationalFunctionQ::q_power(1), q2 = RationalFunctionQ::q_power(2);
    O one = O::identity();
    return {
        {"a* a + b* b = 1", as * a + bs * b - one},
        {"a a* + q^2 b b* = 1", a * as + q2 * (b * bs) - one},
        {"a b = q b a", a * b - q * (b * a)},
        {"a b* = q b* a", a * bs - q * (bs * a)},
        {"b b* = b* b", b * bs - bs * b},
    };
}

namespace {

template <class Field>
RelationReport relations_with(const Field& f, int n_max, bool exact) {
    Engine<Field> eng(f);
    auto rels = defining_relations();
    RelationReport rep;
    rep.n_max = n_max;
    rep.exact = exact;
    rep.max_residual.assign(rels.size(), 0.0);
    for (int N = 0; N <= n_max; ++N)
        for (const auto& v : level_basis(N))
            for (size_t i = 0; i < rels.size(); ++i) {
                auto img = eng.apply(rels[i].second, v);
                for (const auto& [w, c] : img) {
                    double r = std::fabs(Field::to_double(c));
                    rep.max_residual[i] = std::max(rep.max_residual[i], r);
                    if (!Field::is_zero(c)) rep.all_exact_zero = false;
                }
            }
    return rep;
}

}  // namespace

RelationReport check_relations(double q, int n_max) {
    auto rep = relations_with(NumericField(q, 1.0, n_max + 4), n_max, false);
    rep.all_exact_zero = false;
    return rep;
}

RelationReport check_relations_exact(const Rational& q, int n_max) {
    return relations_with(rational_field(q), n_max, true);
}

RelationReport check_relations_formal(int n_max) { return relations_with(formal_field(), n_max, true); }

double torus_phase(const Basis& b, double u, double v) { return -u * (b.x + b.y - b.N) + v * (b.x - b.y); }

double EquivarianceReport::max() const {
    return std::max({ke_qek, kf_fk, ef_commutator, d_k, d_e, d_f, f_is_e_adjoint});
}

EquivarianceReport check_equivariance(double q, int n_max) {
    using O = OperatorExpr;
    NumericField f(q, 1.0, n_max + 4);
    Engine<NumericField> eng(f);
    O k = O::eq_k(), ki = O::eq_k_inv(), e = O::eq_e(), fo = O::eq_f(), D = O::D();
    Scalar qs(q);
    O ke = k * e - qs * (e * k);
    O kf = k * fo - Scalar(1.0 / q) * (fo * k);
    O ef = e * fo - fo * e - Scalar(1.0 / (q - 1.0 / q)) * (k * k - ki * ki);
    O dk = D * k - k * D, de = D * e - e * D, df = D * fo - fo * D;
    EquivarianceReport rep;
    auto res = [&](const O& op, const Basis& v) {
        double m = 0;
        for (const auto& [w, c] : eng.apply(op, v)) m = std::max(m, std::fabs(c));
        return m;
    };
    for (int N = 0; N <= n_max; ++N) {
        auto basis = level_basis(N);
        for (const auto& v : basis) {
            // relative scale: k^{+-2} reaches q^{-N}
            double scale = std::max(1.0, std::pow(q, -static_cast<double>(N)));
            rep.ke_qek = std::max(rep.ke_qek, res(ke, v) / scale);
            rep.kf_fk = std::max(rep.kf_fk, res(kf, v) / scale);
            rep.ef_commutator = std::max(rep.ef_commutator, res(ef, v) / scale);
            rep.d_k = std::max(rep.d_k, res(dk, v) / scale);
            rep.d_e = std::max(rep.d_e, res(de, v) / scale);
            rep.d_f = std::max(rep.d_f, res(df, v) / scale);
            for (const auto& w : basis) {
                double a = eng.matrix_element(fo, v, w), b = eng.matrix_element(e, w, v);
                rep.f_is_e_adjoint = std::max(rep.f_is_e_adjoint, std::fabs(a - b) / scale);
            }
        }
    }
    return rep;
}

OperatorExpr hopf_action(EqGen h, const OperatorExpr& op, double q) {
    using O = OperatorExpr;
    switch (h) {
        case EqGen::K: return O::eq_k() * op * O::eq_k_inv();
        case EqGen::E: return O::eq_e() * op * O::eq_k_inv() - Scalar(q) * (O::eq_k_inv() * op * O::eq_e());
        case EqGen::F: return O::eq_f() * op * O::eq_k_inv() - Scalar(1.0 / q) * (O::eq_k_inv() * op * O::eq_f());
    }
    return op;
}

}  // namespace suq2
