#pragma once

#include "suq2/algebra.hpp"

#include <memory>
#include <string>
#include <vector>

namespace suq2 {

// Homogeneous pieces of a generator: Full = plus + minus.
enum class Part : unsigned char { Full, Plus, Minus };

enum class OpKind : unsigned char {
    Identity,
    Gen,       // letter with part
    F,
    P,
    Dirac,     // D = F|D|
    AbsDPow,   // |D|^z
    Scale,
    Sum,
    Prod,      // children applied right to left
    Delta,     // [|D|, X]
    Nabla,     // [D^2, X]
    DComm,     // [D, X]
    EqK,       // k
    EqKInv,    // k^{-1}
    EqE,       // e
    EqF,       // f
};

struct OpNode;

class OperatorExpr {
public:
    OperatorExpr();  // identity
    explicit OperatorExpr(std::shared_ptr<const OpNode> n) : n_(std::move(n)) {}

    static OperatorExpr identity();
    static OperatorExpr gen(Letter l, Part p = Part::Full);
    static OperatorExpr F();
    static OperatorExpr P();
    static OperatorExpr D();
    static OperatorExpr abs_d_pow(double z);
    static OperatorExpr eq_k();
    static OperatorExpr eq_k_inv();
    static OperatorExpr eq_e();
    static OperatorExpr eq_f();
    static OperatorExpr from_word(const Word& w);
    static OperatorExpr from_element(const AlgebraElement& x);

    const OpNode& node() const { return *n_; }
    OpKind kind() const;

    friend OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b);
    friend OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b);
    friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
    friend OperatorExpr operator*(const Scalar& s, const OperatorExpr& a);

    std::string str() const;

private:
    std::shared_ptr<const OpNode> n_;
};

struct OpNode {
    OpKind kind = OpKind::Identity;
    Letter letter = Letter::A;
    Part part = Part::Full;
    double z = 0.0;
    Scalar scale;
    std::vector<OperatorExpr> kids;
};

OperatorExpr delta(const OperatorExpr& x);
OperatorExpr nabla(const OperatorExpr& x);
OperatorExpr dcomm(const OperatorExpr& x);
OperatorExpr adjoint(const OperatorExpr& x);

}  // namespace suq2
