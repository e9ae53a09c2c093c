#pragma once

#include "suq2/operator.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace suq2 {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t offset)
        : std::runtime_error(msg + " at byte " + std::to_string(offset)), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

// Algebra-only inputs yield an AlgebraElement; F, P, d(), D(), g() promote to OperatorExpr.
using ParseResult = std::variant<AlgebraElement, OperatorExpr>;

// In exact mode decimals are read as exact rationals.
ParseResult parse(const std::string& source, Mode mode = Mode::Exact);
AlgebraElement parse_element(const std::string& source, Mode mode = Mode::Exact);
OperatorExpr parse_operator(const std::string& source, Mode mode = Mode::Exact);

}  // namespace suq2
