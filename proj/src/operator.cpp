#include "suq2/operator.hpp"

#include <sstream>

namespace suq2 {

namespace {

OperatorExpr make(OpNode n) { return OperatorExpr(std::make_shared<const OpNode>(std::move(n))); }

OperatorExpr wrap(OpKind k, const OperatorExpr& x) {
    OpNode n;
    n.kind = k;
    n.kids = {x};
    return make(std::move(n));
}

Part flip(Part p) {
    return p == Part::Plus ? Part::Minus : (p == Part::Minus ? Part::Plus : Part::Full);
}

}  // namespace

OperatorExpr::OperatorExpr() : OperatorExpr(identity()) {}

OperatorExpr OperatorExpr::identity() {
    static const auto id = std::make_shared<const OpNode>();
    return OperatorExpr(id);
}

OperatorExpr OperatorExpr::gen(Letter l, Part p) {
    OpNode n;
    n.kind = OpKind::Gen;
    n.letter = l;
    n.part = p;
    return make(std::move(n));
}

OperatorExpr OperatorExpr::F() { OpNode n; n.kind = OpKind::F; return make(std::move(n)); }
OperatorExpr OperatorExpr::P() { OpNode n; n.kind = OpKind::P; return make(std::move(n)); }
OperatorExpr OperatorExpr::D() { OpNode n; n.kind = OpKind::Dirac; return make(std::move(n)); }
OperatorExpr OperatorExpr::eq_k() { OpNode n; n.kind = OpKind::EqK; return make(std::move(n)); }
OperatorExpr OperatorExpr::eq_k_inv() { OpNode n; n.kind = OpKind::EqKInv; return make(std::move(n)); }
OperatorExpr OperatorExpr::eq_e() { OpNode n; n.kind = OpKind::EqE; return make(std::move(n)); }
OperatorExpr OperatorExpr::eq_f() { OpNode n; n.kind = OpKind::EqF; return make(std::move(n)); }

OperatorExpr OperatorExpr::abs_d_pow(double z) {
    OpNode n;
    n.kind = OpKind::AbsDPow;
    n.z = z;
    return make(std::move(n));
}

OperatorExpr OperatorExpr::from_word(const Word& w) {
    if (w.empty()) return identity();
    if (w.size() == 1) return gen(w[0]);
    OpNode n;
    n.kind = OpKind::Prod;
    for (Letter l : w) n.kids.push_back(gen(l));
    return make(std::move(n));
}

OperatorExpr OperatorExpr::from_element(const AlgebraElement& x) {
    OpNode n;
    n.kind = OpKind::Sum;
    for (const auto& [w, c] : x.terms()) n.kids.push_back(c * from_word(w));
    if (n.kids.size() == 1) return n.kids[0];
    return make(std::move(n));  // empty sum is the zero operator
}

OpKind OperatorExpr::kind() const { return n_->kind; }

OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) {
    OpNode n;
    n.kind = OpKind::Sum;
    for (const auto* x : {&a, &b}) {
        if (x->kind() == OpKind::Sum) n.kids.insert(n.kids.end(), x->node().kids.begin(), x->node().kids.end());
        else n.kids.push_back(*x);
    }
    return make(std::move(n));
}

OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b) { return a + Scalar(-1) * b; }

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
    if (a.kind() == OpKind::Identity) return b;
    if (b.kind() == OpKind::Identity) return a;
    OpNode n;
    n.kind = OpKind::Prod;
    for (const auto* x : {&a, &b}) {
        if (x->kind() == OpKind::Prod) n.kids.insert(n.kids.end(), x->node().kids.begin(), x->node().kids.end());
        else n.kids.push_back(*x);
    }
    return make(std::move(n));
}

OperatorExpr operator*(const Scalar& s, const OperatorExpr& a) {
    OpNode n;
    n.kind = OpKind::Scale;
    if (a.kind() == OpKind::Scale && a.node().scale.mode() == s.mode()) {
        n.scale = s * a.node().scale;
        n.kids = a.node().kids;
    } else {
        n.scale = s;
        n.kids = {a};
    }
    return make(std::move(n));
}

OperatorExpr delta(const OperatorExpr& x) { return wrap(OpKind::Delta, x); }
OperatorExpr nabla(const OperatorExpr& x) { return wrap(OpKind::Nabla, x); }
OperatorExpr dcomm(const OperatorExpr& x) { return wrap(OpKind::DComm, x); }

OperatorExpr adjoint(const OperatorExpr& x) {
    const OpNode& n = x.node();
    switch (n.kind) {
        case OpKind::Identity:
        case OpKind::F:
        case OpKind::P:
        case OpKind::Dirac:
        case OpKind::AbsDPow:
        case OpKind::EqK:
        case OpKind::EqKInv:
            return x;
        case OpKind::Gen: return OperatorExpr::gen(adjoint(n.letter), flip(n.part));
        case OpKind::EqE: return OperatorExpr::eq_f();
        case OpKind::EqF: return OperatorExpr::eq_e();
        case OpKind::Scale: return n.scale * adjoint(n.kids[0]);
        case OpKind::Sum: {
            OpNode m;
            m.kind = OpKind::Sum;
            for (const auto& k : n.kids) m.kids.push_back(adjoint(k));
            return make(std::move(m));
        }
        case OpKind::Prod: {
            OpNode m;
            m.kind = OpKind::Prod;
            for (auto it = n.kids.rbegin(); it != n.kids.rend(); ++it) m.kids.push_back(adjoint(*it));
            return make(std::move(m));
        }
        case OpKind::Delta:
        case OpKind::Nabla:
        case OpKind::DComm: {
            return Scalar(-1) * wrap(n.kind, adjoint(n.kids[0]));
        }
    }
    return x;
}

std::string OperatorExpr::str() const {
    const OpNode& n = *n_;
    std::ostringstream os;
    switch (n.kind) {
        case OpKind::Identity: return "1";
        case OpKind::Gen:
            os << letter_name(n.letter);
            if (n.part == Part::Plus) os << "{+}";
            if (n.part == Part::Minus) os << "{-}";
            return os.str();
        case OpKind::F: return "F";
        case OpKind::P: return "P";
        case OpKind::Dirac: return "D";
        case OpKind::AbsDPow: os << "|D|^(" << n.z << ")"; return os.str();
        case OpKind::EqK: return "k";
        case OpKind::EqKInv: return "k^-1";
        case OpKind::EqE: return "e";
        case OpKind::EqF: return "f";
        case OpKind::Scale: return n.scale.str() + " (" + n.kids[0].str() + ")";
        case OpKind::Sum: {
            if (n.kids.empty()) return "0";
            for (size_t i = 0; i < n.kids.size(); ++i) os << (i ? " + " : "") << n.kids[i].str();
            return os.str();
        }
        case OpKind::Prod:
            for (size_t i = 0; i < n.kids.size(); ++i) {
                bool paren = n.kids[i].kind() == OpKind::Sum || n.kids[i].kind() == OpKind::Scale;
                os << (i ? " " : "") << (paren ? "(" : "") << n.kids[i].str() << (paren ? ")" : "");
            }
            return os.str();
        case OpKind::Delta: return "d(" + n.kids[0].str() + ")";
        case OpKind::Nabla: return "g(" + n.kids[0].str() + ")";
        case OpKind::DComm: return "D(" + n.kids[0].str() + ")";
    }
    return "?";
}

}  // namespace suq2
