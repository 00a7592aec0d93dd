#pragma once

#include <memory>
#include <string>

#include "motivic/motive.hpp"

namespace motivic::expr {

/// Abstract syntax of the class expression language:
///
///   expr   := term (("+" | "-") term)*
///   term   := factor ("*" factor)*
///   factor := atom ("^" nat)? | "-" factor
///   atom   := "L" | nat | "P" "(" int ")" | "A" "(" nat ")"
///           | "G" "(" nat "," nat ")" | "[X]" | "[Y]" | "(" expr ")"
///
/// +, -, * are left-associative; ^ binds tightest and takes a literal
/// nonnegative exponent only.
class ClassExpr {
public:
    enum class Kind {
        Literal,       // value
        Lefschetz,     // L
        Projective,    // P(value), value >= -1 checked at evaluation
        Affine,        // A(value)
        Grassmannian,  // G(value, value2)
        Generator,     // [X] or [Y]
        Negate,        // lhs
        Add,           // lhs, rhs
        Subtract,      // lhs, rhs
        Multiply,      // lhs, rhs
        Power,         // lhs ^ value
    };

    using Ptr = std::unique_ptr<ClassExpr>;

    static Ptr literal(long long value);
    static Ptr lefschetz();
    static Ptr projective(long long n);
    static Ptr affine(long long n);
    static Ptr grassmannian(long long k, long long n);
    static Ptr generator(Symbol s);
    static Ptr negate(Ptr e);
    static Ptr add(Ptr l, Ptr r);
    static Ptr subtract(Ptr l, Ptr r);
    static Ptr multiply(Ptr l, Ptr r);
    static Ptr power(Ptr base, long long exponent);

    Kind kind() const { return kind_; }
    long long value() const { return value_; }
    long long value2() const { return value2_; }
    Symbol generator_symbol() const { return sym_; }
    const ClassExpr* lhs() const { return lhs_.get(); }
    const ClassExpr* rhs() const { return rhs_.get(); }

    Ptr clone() const;
    bool equals(const ClassExpr& other) const;

private:
    ClassExpr(Kind kind) : kind_(kind) {}
    Kind kind_;
    long long value_ = 0;
    long long value2_ = 0;
    Symbol sym_ = Symbol::X;
    Ptr lhs_;
    Ptr rhs_;
};

/// Parses per the grammar above, whitespace-insensitive. ParseError carries
/// a 1-based character position and a description of what was expected.
ClassExpr::Ptr parse_expr(const std::string& text);

/// Prints a parseable rendering with minimal parentheses; parsing the
/// result yields a structurally identical tree.
std::string print_expr(const ClassExpr& e);

/// Structural evaluation into the class module. Class constructors may
/// throw DomainError; products of two symbol-carrying subvalues throw
/// SymbolProductError.
MotElem eval_expr(const ClassExpr& e);

}  // namespace motivic::expr
