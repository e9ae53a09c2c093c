#include "suq2/parser.hpp"

#include <cctype>

namespace suq2 {

namespace {

struct Value {
    bool is_op = false;
    AlgebraElement alg;
    OperatorExpr op;

    OperatorExpr as_op() const { return is_op ? op : OperatorExpr::from_element(alg); }
};

Value add(const Value& a, const Value& b, bool minus, Mode mode) {
    Value r;
    Scalar m1 = mode == Mode::Exact ? Scalar(-1) : Scalar(-1.0);
    if (!a.is_op && !b.is_op) {
        r.alg = minus ? a.alg - b.alg : a.alg + b.alg;
        return r;
    }
    r.is_op = true;
    r.op = minus ? a.as_op() + m1 * b.as_op() : a.as_op() + b.as_op();
    return r;
}

Value mul(const Value& a, const Value& b) {
    Value r;
    if (!a.is_op && !b.is_op) {
        r.alg = a.alg * b.alg;
        return r;
    }
    r.is_op = true;
    r.op = a.as_op() * b.as_op();
    return r;
}

class Parser {
public:
    Parser(const std::string& s, Mode mode) : s_(s), mode_(mode) {}

    Value run() {
        Value v = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError("unexpected token '" + std::string(1, s_[pos_]) + "'", pos_);
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    Scalar one() const { return mode_ == Mode::Exact ? Scalar(1) : Scalar(1.0); }

    Value expr() {
        skip();
        bool neg = false;
        if (peek('-')) {
            ++pos_;
            neg = true;
        } else if (peek('+')) {
            ++pos_;
        }
        Value v = term();
        if (neg) v = add(zero(), v, true, mode_);
        for (;;) {
            if (peek('+')) {
                ++pos_;
                v = add(v, term(), false, mode_);
            } else if (peek('-')) {
                ++pos_;
                v = add(v, term(), true, mode_);
            } else {
                break;
            }
        }
        return v;
    }

    Value zero() const {
        Value v;
        v.alg = AlgebraElement(mode_);
        return v;
    }

    bool at_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == 'a' || c == 'b' || c == 'F' || c == 'P' || c == 'd' || c == 'D' || c == 'g' || c == '(';
    }

    Value term() {
        skip();
        size_t start = pos_;
        Scalar coeff = one();
        bool have_scalar = false;
        if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
            coeff = scalar();
            have_scalar = true;
        }
        Value v;
        v.alg = AlgebraElement(Word{}, coeff);
        bool any = false;
        while (at_factor()) {
            v = mul(v, factor());
            any = true;
        }
        if (!any && !have_scalar) {
            if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
            throw ParseError("unknown token '" + std::string(1, s_[pos_]) + "'", pos_ == start ? pos_ : start);
        }
        return v;
    }

    Scalar scalar() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string text = s_.substr(start, pos_ - start);
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            size_t ds = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (ds == pos_) throw ParseError("malformed rational", ds);
            Rational den(mpz_class(s_.substr(ds, pos_ - ds), 10));
            if (den == 0) throw ParseError("zero denominator", ds);
            Rational r = Rational(mpz_class(text, 10)) / den;
            r.canonicalize();
            return mode_ == Mode::Exact ? Scalar(r) : Scalar(r.get_d());
        }
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            size_t fs = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string frac = s_.substr(fs, pos_ - fs);
            if (text.empty() && frac.empty()) throw ParseError("malformed decimal", start);
            if (mode_ == Mode::Numeric) return Scalar(std::stod((text.empty() ? "0" : text) + "." + frac));
            Rational r(mpz_class((text.empty() ? "0" : text) + frac, 10), mpz_class("1" + std::string(frac.size(), '0'), 10));
            r.canonicalize();
            return Scalar(r);
        }
        Rational r(mpz_class(text, 10));
        return mode_ == Mode::Exact ? Scalar(r) : Scalar(r.get_d());
    }

    Value factor() {
        Value a = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            size_t ps = pos_;
            if (pos_ < s_.size() && s_[pos_] == '-')
                throw ParseError("negative powers of generators are not in the algebra", pos_);
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (ps == pos_) throw ParseError("expected nonnegative integer exponent", ps);
            int n = std::stoi(s_.substr(ps, pos_ - ps));
            Value r;
            r.alg = AlgebraElement(Word{}, one());
            for (int i = 0; i < n; ++i) r = mul(r, a);
            return r;
        }
        return a;
    }

    Value atom() {
        skip();
        char c = s_[pos_];
        Value v;
        if (c == 'a' || c == 'b') {
            ++pos_;
            bool star = pos_ < s_.size() && s_[pos_] == '*';
            if (star) ++pos_;
            Letter l = c == 'a' ? (star ? Letter::As : Letter::A) : (star ? Letter::Bs : Letter::B);
            v.alg = AlgebraElement(Word{l}, one());
            return v;
        }
        if (c == 'F' || c == 'P') {
            ++pos_;
            v.is_op = true;
            v.op = c == 'F' ? OperatorExpr::F() : OperatorExpr::P();
            return v;
        }
        if (c == 'd' || c == 'D' || c == 'g') {
            ++pos_;
            if (pos_ >= s_.size() || s_[pos_] != '(') throw ParseError("expected '(' after " + std::string(1, c), pos_);
            ++pos_;
            Value inner = expr();
            expect(')');
            v.is_op = true;
            OperatorExpr x = inner.as_op();
            v.op = c == 'd' ? delta(x) : (c == 'D' ? dcomm(x) : nabla(x));
            return v;
        }
        if (c == '(') {
            ++pos_;
            Value inner = expr();
            expect(')');
            return inner;
        }
        throw ParseError("unknown token '" + std::string(1, c) + "'", pos_);
    }

    const std::string& s_;
    Mode mode_;
    size_t pos_ = 0;
};

}  // namespace

ParseResult parse(const std::string& source, Mode mode) {
    Value v = Parser(source, mode).run();
    if (v.is_op) return v.op;
    return v.alg;
}

AlgebraElement parse_element(const std::string& source, Mode mode) {
    auto r = parse(source, mode);
    if (auto* a = std::get_if<AlgebraElement>(&r)) return *a;
    throw ParseError("expression is not an algebra element", 0);
}

OperatorExpr parse_operator(const std::string& source, Mode mode) {
    auto r = parse(source, mode);
    if (auto* a = std::get_if<AlgebraElement>(&r)) return OperatorExpr::from_element(*a);
    return std::get<OperatorExpr>(r);
}

}  // namespace suq2
