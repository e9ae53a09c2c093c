#pragma once

#include "suq2/rep.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace suq2 {

struct ZetaContext {
    double q = 0.0;
    double eps = 1.0;
    double tol = 1e-10;
    int n_start = 40;
    int n_cap = 400;
    int window = 5;
    int max_degree = 8;
    bool d_is_abs = false;  // evaluate D as |D| (the H' model)
    unsigned workers = 0;   // 0: SUQ2_WORKERS or hardware concurrency
};

struct FitResult {
    bool stabilized = false;
    int degree = -1;               // polynomial degree of the level asymptotics
    std::vector<double> lambda;    // lambda[j] multiplies N^j
    int window_start = -1;         // first level of the stabilization window
    int read_end = -1;             // last level of the interpolation stencil
    double achieved = 0.0;         // max |Delta^{degree+1} c_N| over the window
    double stability = 0.0;        // spread of lambda across window positions
    double remainder_sum = 0.0;    // sum_{N>=1} (c_N - poly(N)) over computed levels
    double tail_bound = 0.0;
    bool identically_zero = false;
};

struct LevelTraceSeries {
    std::vector<double> c;
    Restriction restriction = Restriction::Full;
    FitResult fit;
};

class FitError : public std::runtime_error {
public:
    FitError(const std::string& msg, double achieved) : std::runtime_error(msg), achieved_(achieved) {}
    double achieved() const { return achieved_; }

private:
    double achieved_;
};

unsigned worker_count(unsigned requested = 0);

double level_trace(const OperatorExpr& op, int N, Restriction r, const ZetaContext& ctx);

template <class Field>
typename Field::S level_trace_exact(const Engine<Field>& eng, const OperatorExpr& op, int N, Restriction r) {
    auto acc = eng.field().zero();
    for (const auto& v : level_basis(N, r)) acc = acc + eng.diagonal(op, v);
    return acc;
}

// Levels 0..n_max, computed in parallel over N.
std::vector<double> level_traces(const OperatorExpr& op, int n_max, Restriction r, const ZetaContext& ctx);

FitResult fit_asymptotics(const std::vector<double>& c, double tol, int window = 5, int max_degree = 8);

// Adaptive: n_start levels, doubling up to n_cap until the fit stabilizes.
LevelTraceSeries level_trace_series(const OperatorExpr& op, Restriction r, const ZetaContext& ctx);

// int op |D|^{-pole}: coefficient of N^{pole-1} in the level asymptotics.
double residue(const OperatorExpr& op, int pole, Restriction r, const ZetaContext& ctx);
double residue_from_fit(const FitResult& fit, int pole);
// Value at s = 0 of Trace(op |D|^{-s}) with the kernel regularized by eps^{-s}.
double zeta_value_at_zero(const OperatorExpr& op, Restriction r, const ZetaContext& ctx);
double zeta_value_from_series(const LevelTraceSeries& s);

// zeta(-m) for m >= 0
double riemann_zeta_negative(int m);

struct HPrimeResidue {
    double level_counting = 0.0;
    double heat_kernel = 0.0;
    double difference() const;
};
// q = 0, H' sector, D evaluated as |D|; op built from beta, beta*, |D|, d(), D(), g().
HPrimeResidue hprime_residue(const OperatorExpr& op, int pole, double tol = 1e-10);

struct SpectrumItem {
    std::string word;
    std::pair<int, int> bidegree;
    bool zero_expected = false;
    bool identically_zero = false;
    bool stabilized = false;
    int degree = -1;
    double achieved = 0.0;
    std::vector<double> residues;  // poles 1, 2, 3
    bool ok = false;
    std::string error;
};
std::vector<SpectrumItem> dimension_spectrum_probe(const std::vector<std::string>& words, const ZetaContext& ctx);
std::vector<std::string> default_spectrum_battery();

}  // namespace suq2
