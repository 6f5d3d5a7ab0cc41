#pragma once

#include <memory>
#include <string>

#include "compacta/types.hpp"

namespace compacta {

// Minimal expression grammar for CLI-supplied functions:
//
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := ('+'|'-') unary | power
//   power   := primary ('^' integer)*
//   primary := number | number 'i' | 'i' | 'z'
//            | 'exp' '(' expr ')' | 'conj' '(' expr ')'
//            | 'piecewise' '(' 'disk' '(' num ',' num ',' num ')' ',' expr ',' expr ')'
//            | '(' expr ')'
//
// piecewise(disk(cx, cy, r), A, B) evaluates A when |z - (cx + i cy)| <= r,
// B otherwise. No general scripting.
class FunctionExpr {
public:
    static FunctionExpr parse(const std::string& text);  // ParseError on bad input

    Complex eval(Complex z) const;
    ComplexMap as_map() const;
    const std::string& source() const { return source_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string source_;
};

}  // namespace compacta
