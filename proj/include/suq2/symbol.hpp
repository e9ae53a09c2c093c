#pragma once

#include "suq2/zeta.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace suq2 {

// One letter of a +/- decomposed word. raise = level-raising piece (alpha_+, beta_+, (alpha_-)*, (beta_-)*).
struct BLetter {
    Letter letter;
    bool raise;
    auto operator<=>(const BLetter&) const = default;
};
using BWord = std::vector<BLetter>;

std::string bword_str(const BWord& w);
int geodesic_degree(const BWord& w);
std::vector<BWord> decompose(const Word& w);
OperatorExpr bword_operator(const BWord& w);

enum class Disk : unsigned char { Plus, Minus };

// pi_{+/-}(w) e_x = coef e_{x'}; nullopt when the image vanishes.
std::optional<std::pair<long, double>> disk_apply(const Word& w, Disk disk, long x, double q);

struct SymbolKey {
    Word plus, minus;
    int u = 0;
    auto operator<=>(const SymbolKey&) const = default;
};

// Sum of (pi_+ word) x (pi_- word) x u^d with real coefficients.
class SymbolElement {
public:
    explicit SymbolElement(double q = 0.0) : q_(q) {}
    static SymbolElement term(double q, const Word& plus, const Word& minus, int u, double c);

    double q() const { return q_; }
    const std::map<SymbolKey, double>& terms() const { return t_; }
    void add(const SymbolKey& k, double c);

    SymbolElement& operator+=(const SymbolElement& o);
    friend SymbolElement operator*(const SymbolElement& a, const SymbolElement& b);
    SymbolElement scaled(double c) const;
    SymbolElement adjoint() const;
    std::string str() const;

private:
    double q_;
    std::map<SymbolKey, double> t_;
};

SymbolElement rho(const BWord& w, double q);
SymbolElement rho(const AlgebraElement& x, double q);
SymbolElement degree0(const SymbolElement& s);

// lambda(s) = Q pi(s) Q applied to a basis vector of the cone.
StateVector<double> lambda_apply(const SymbolElement& s, const Basis& v);

// Fourier-0 coefficient of the circle symbol (sigma(alpha) = u, sigma(beta) = 0).
double tau1(const Word& w);
struct Tau0 {
    double value = 0.0;
    FitResult fit;
};
Tau0 tau0(const Word& w, Disk disk, double q, double tol = 1e-12);
// (tau_i x tau_j) of the degree-0 part, i, j in {0, 1}.
double tau_pairing(const SymbolElement& s, int i, int j, double tol = 1e-12);

struct SmoothingReport {
    std::string word;
    double q = 0.0;
    std::vector<double> norms;  // per source level N
    double slope = 0.0;         // log-log slope over the tail above the noise floor
    int tail_points = 0;
    bool pass = false;
};
// Per-level block norm of b - lambda(rho(b)), bounded by min(Frobenius, Schur test).
SmoothingReport smoothing_check(const AlgebraElement& b, double q, int n_max);

struct PairingRow {
    std::string name;
    double lhs = 0.0, rhs = 0.0;
    bool informational = false;
    bool ok = false;
};
struct Theorem4Report {
    std::string word;
    double q = 0.0;
    std::vector<PairingRow> rows;
    double max_deviation = 0.0;
    bool ok = false;
};
Theorem4Report theorem4_check(const AlgebraElement& b, const ZetaContext& ctx, double tol = 1e-8);

}  // namespace suq2
