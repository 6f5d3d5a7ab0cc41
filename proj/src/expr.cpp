#include "compacta/expr.hpp"

#include <cctype>
#include <cmath>
#include <vector>

#include "compacta/error.hpp"

namespace compacta {

struct FunctionExpr::Node {
    enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Neg, Exp, Conj, Piecewise };
    Op op = Op::Const;
    Complex value{};            // Const
    int exponent = 0;           // Pow
    Complex disk_center{};      // Piecewise
    double disk_radius = 0;     // Piecewise
    std::shared_ptr<const Node> lhs, rhs, alt;

    Complex eval(Complex z) const {
        switch (op) {
            case Op::Const: return value;
            case Op::Var: return z;
            case Op::Add: return lhs->eval(z) + rhs->eval(z);
            case Op::Sub: return lhs->eval(z) - rhs->eval(z);
            case Op::Mul: return lhs->eval(z) * rhs->eval(z);
            case Op::Div: return lhs->eval(z) / rhs->eval(z);
            case Op::Pow: {
                Complex base = lhs->eval(z);
                Complex acc{1, 0};
                int n = exponent >= 0 ? exponent : -exponent;
                for (int k = 0; k < n; ++k) acc *= base;
                return exponent >= 0 ? acc : Complex{1, 0} / acc;
            }
            case Op::Neg: return -lhs->eval(z);
            case Op::Exp: return std::exp(lhs->eval(z));
            case Op::Conj: return std::conj(lhs->eval(z));
            case Op::Piecewise:
                return std::abs(z - disk_center) <= disk_radius ? lhs->eval(z) : rhs->eval(z);
        }
        return {};
    }
};

namespace {

using NodePtr = std::shared_ptr<const FunctionExpr::Node>;
using Node = FunctionExpr::Node;

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    NodePtr run() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("ParseError", "unexpected input at position " + std::to_string(pos_) + " in '" +
                                   text_ + "'");
        return e;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            fail("ParseError", std::string("expected '") + c + "' at position " +
                                   std::to_string(pos_) + " in '" + text_ + "'");
    }
    bool peek_alpha() {
        skip_ws();
        return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
    }

    static NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

    NodePtr expr() {
        NodePtr lhs = term();
        while (true) {
            skip_ws();
            if (eat('+')) {
                Node n;
                n.op = Node::Op::Add;
                n.lhs = lhs;
                n.rhs = term();
                lhs = make(std::move(n));
            } else if (eat('-')) {
                Node n;
                n.op = Node::Op::Sub;
                n.lhs = lhs;
                n.rhs = term();
                lhs = make(std::move(n));
            } else {
                return lhs;
            }
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        while (true) {
            skip_ws();
            if (eat('*')) {
                Node n;
                n.op = Node::Op::Mul;
                n.lhs = lhs;
                n.rhs = unary();
                lhs = make(std::move(n));
            } else if (eat('/')) {
                Node n;
                n.op = Node::Op::Div;
                n.lhs = lhs;
                n.rhs = unary();
                lhs = make(std::move(n));
            } else {
                return lhs;
            }
        }
    }

    // '^' binds tighter than unary minus: -z^2 is -(z^2).
    NodePtr power() {
        NodePtr base = primary();
        while (eat('^')) {
            Node n;
            n.op = Node::Op::Pow;
            n.lhs = base;
            n.exponent = parse_int();
            base = make(std::move(n));
        }
        return base;
    }

    int parse_int() {
        skip_ws();
        bool neg = eat('-');
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("ParseError", "expected an integer exponent");
        int v = std::stoi(text_.substr(start, pos_ - start));
        return neg ? -v : v;
    }

    double parse_number() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        bool digits = false;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            digits = digits || std::isdigit(static_cast<unsigned char>(text_[pos_]));
            ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_++;
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            } else {
                pos_ = mark;
            }
        }
        if (!digits) fail("ParseError", "expected a number at position " + std::to_string(start));
        return std::stod(text_.substr(start, pos_ - start));
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    NodePtr unary() {
        skip_ws();
        if (eat('-')) {
            Node n;
            n.op = Node::Op::Neg;
            n.lhs = unary();
            return make(std::move(n));
        }
        if (eat('+')) return unary();
        return power();
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("ParseError", "unexpected end of expression");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double v = parse_number();
            if (pos_ < text_.size() && text_[pos_] == 'i') {
                ++pos_;
                Node n;
                n.value = Complex{0, v};
                return make(std::move(n));
            }
            Node n;
            n.value = Complex{v, 0};
            return make(std::move(n));
        }
        if (eat('(')) {
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if (peek_alpha()) {
            std::string id = parse_ident();
            if (id == "z") {
                Node n;
                n.op = Node::Op::Var;
                return make(std::move(n));
            }
            if (id == "i") {
                Node n;
                n.value = Complex{0, 1};
                return make(std::move(n));
            }
            if (id == "exp" || id == "conj") {
                expect('(');
                Node n;
                n.op = id == "exp" ? Node::Op::Exp : Node::Op::Conj;
                n.lhs = expr();
                expect(')');
                return make(std::move(n));
            }
            if (id == "piecewise") {
                expect('(');
                std::string region = parse_ident();
                if (region != "disk")
                    fail("ParseError", "piecewise region must be disk(cx, cy, r)");
                expect('(');
                double cx = parse_number();
                expect(',');
                double cy = parse_number();
                expect(',');
                double r = parse_number();
                expect(')');
                expect(',');
                Node n;
                n.op = Node::Op::Piecewise;
                n.disk_center = Complex{cx, cy};
                n.disk_radius = r;
                n.lhs = expr();
                expect(',');
                n.rhs = expr();
                expect(')');
                return make(std::move(n));
            }
            fail("ParseError", "unknown identifier '" + id + "'");
        }
        fail("ParseError", std::string("unexpected character '") + c + "' at position " +
                               std::to_string(pos_));
    }
};

}  // namespace

FunctionExpr FunctionExpr::parse(const std::string& text) {
    FunctionExpr fe;
    fe.source_ = text;
    fe.root_ = Parser(text).run();
    return fe;
}

Complex FunctionExpr::eval(Complex z) const { return root_->eval(z); }

ComplexMap FunctionExpr::as_map() const {
    auto root = root_;
    return [root](Complex z) { return root->eval(z); };
}

}  // namespace compacta
