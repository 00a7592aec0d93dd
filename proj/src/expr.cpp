#include "motivic/expr.hpp"

#include <cctype>
#include <sstream>

#include "motivic/classes.hpp"
#include "motivic/errors.hpp"

namespace motivic::expr {

ClassExpr::Ptr ClassExpr::literal(long long value) {
    Ptr e(new ClassExpr(Kind::Literal));
    e->value_ = value;
    return e;
}

ClassExpr::Ptr ClassExpr::lefschetz() { return Ptr(new ClassExpr(Kind::Lefschetz)); }

ClassExpr::Ptr ClassExpr::projective(long long n) {
    Ptr e(new ClassExpr(Kind::Projective));
    e->value_ = n;
    return e;
}

ClassExpr::Ptr ClassExpr::affine(long long n) {
    Ptr e(new ClassExpr(Kind::Affine));
    e->value_ = n;
    return e;
}

ClassExpr::Ptr ClassExpr::grassmannian(long long k, long long n) {
    Ptr e(new ClassExpr(Kind::Grassmannian));
    e->value_ = k;
    e->value2_ = n;
    return e;
}

ClassExpr::Ptr ClassExpr::generator(Symbol s) {
    Ptr e(new ClassExpr(Kind::Generator));
    e->sym_ = s;
    return e;
}

ClassExpr::Ptr ClassExpr::negate(Ptr inner) {
    Ptr e(new ClassExpr(Kind::Negate));
    e->lhs_ = std::move(inner);
    return e;
}

ClassExpr::Ptr ClassExpr::add(Ptr l, Ptr r) {
    Ptr e(new ClassExpr(Kind::Add));
    e->lhs_ = std::move(l);
    e->rhs_ = std::move(r);
    return e;
}

ClassExpr::Ptr ClassExpr::subtract(Ptr l, Ptr r) {
    Ptr e(new ClassExpr(Kind::Subtract));
    e->lhs_ = std::move(l);
    e->rhs_ = std::move(r);
    return e;
}

ClassExpr::Ptr ClassExpr::multiply(Ptr l, Ptr r) {
    Ptr e(new ClassExpr(Kind::Multiply));
    e->lhs_ = std::move(l);
    e->rhs_ = std::move(r);
    return e;
}

ClassExpr::Ptr ClassExpr::power(Ptr base, long long exponent) {
    Ptr e(new ClassExpr(Kind::Power));
    e->lhs_ = std::move(base);
    e->value_ = exponent;
    return e;
}

ClassExpr::Ptr ClassExpr::clone() const {
    Ptr e(new ClassExpr(kind_));
    e->value_ = value_;
    e->value2_ = value2_;
    e->sym_ = sym_;
    if (lhs_) e->lhs_ = lhs_->clone();
    if (rhs_) e->rhs_ = rhs_->clone();
    return e;
}

bool ClassExpr::equals(const ClassExpr& other) const {
    if (kind_ != other.kind_ || value_ != other.value_ || value2_ != other.value2_ ||
        sym_ != other.sym_)
        return false;
    if (static_cast<bool>(lhs_) != static_cast<bool>(other.lhs_) ||
        static_cast<bool>(rhs_) != static_cast<bool>(other.rhs_))
        return false;
    if (lhs_ && !lhs_->equals(*other.lhs_)) return false;
    if (rhs_ && !rhs_->equals(*other.rhs_)) return false;
    return true;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ClassExpr::Ptr run() {
        ClassExpr::Ptr e = expression();
        skip_space();
        if (pos_ != text_.size()) fail("end of input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError("expected " + expected, pos_ + 1);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("'") + c + "'");
    }

    long long natural() {
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("a nonnegative integer literal");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000'000) fail("a smaller integer literal");
            ++pos_;
        }
        return v;
    }

    long long integer() {
        skip_space();
        bool negative = consume('-');
        long long v = natural();
        return negative ? -v : v;
    }

    ClassExpr::Ptr expression() {
        ClassExpr::Ptr e = term();
        for (;;) {
            if (consume('+'))
                e = ClassExpr::add(std::move(e), term());
            else if (consume('-'))
                e = ClassExpr::subtract(std::move(e), term());
            else
                return e;
        }
    }

    ClassExpr::Ptr term() {
        ClassExpr::Ptr e = factor();
        while (consume('*')) e = ClassExpr::multiply(std::move(e), factor());
        return e;
    }

    ClassExpr::Ptr factor() {
        if (consume('-')) return ClassExpr::negate(factor());
        ClassExpr::Ptr e = atom();
        if (consume('^')) return ClassExpr::power(std::move(e), natural());
        return e;
    }

    ClassExpr::Ptr atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("an atom");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return ClassExpr::literal(natural());
        switch (c) {
            case 'L':
                ++pos_;
                return ClassExpr::lefschetz();
            case 'P': {
                ++pos_;
                expect('(');
                long long n = integer();
                expect(')');
                return ClassExpr::projective(n);
            }
            case 'A': {
                ++pos_;
                expect('(');
                long long n = natural();
                expect(')');
                return ClassExpr::affine(n);
            }
            case 'G': {
                ++pos_;
                expect('(');
                long long k = natural();
                expect(',');
                long long n = natural();
                expect(')');
                return ClassExpr::grassmannian(k, n);
            }
            case '[': {
                ++pos_;
                skip_space();
                Symbol s;
                if (consume('X'))
                    s = Symbol::X;
                else if (consume('Y'))
                    s = Symbol::Y;
                else
                    fail("'X' or 'Y'");
                expect(']');
                return ClassExpr::generator(s);
            }
            case '(': {
                ++pos_;
                ClassExpr::Ptr e = expression();
                expect(')');
                return e;
            }
            default:
                fail("an atom (L, a number, P(..), A(..), G(..,..), [X], [Y] or a parenthesis)");
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

// Precedence levels for printing with minimal parentheses.
enum Level { kSum = 0, kProduct = 1, kFactor = 2, kAtom = 3 };

Level node_level(const ClassExpr& e) {
    switch (e.kind()) {
        case ClassExpr::Kind::Add:
        case ClassExpr::Kind::Subtract:
            return kSum;
        case ClassExpr::Kind::Multiply:
            return kProduct;
        case ClassExpr::Kind::Negate:
            return kFactor;
        case ClassExpr::Kind::Power:
            return kFactor;
        default:
            return kAtom;
    }
}

void print_node(std::ostream& os, const ClassExpr& e, Level context) {
    const bool parens = node_level(e) < context;
    if (parens) os << "(";
    switch (e.kind()) {
        case ClassExpr::Kind::Literal:
            os << e.value();
            break;
        case ClassExpr::Kind::Lefschetz:
            os << "L";
            break;
        case ClassExpr::Kind::Projective:
            os << "P(" << e.value() << ")";
            break;
        case ClassExpr::Kind::Affine:
            os << "A(" << e.value() << ")";
            break;
        case ClassExpr::Kind::Grassmannian:
            os << "G(" << e.value() << "," << e.value2() << ")";
            break;
        case ClassExpr::Kind::Generator:
            os << symbol_name(e.generator_symbol());
            break;
        case ClassExpr::Kind::Negate:
            os << "-";
            print_node(os, *e.lhs(), kFactor);
            break;
        case ClassExpr::Kind::Add:
            print_node(os, *e.lhs(), kSum);
            os << " + ";
            print_node(os, *e.rhs(), kProduct);
            break;
        case ClassExpr::Kind::Subtract:
            print_node(os, *e.lhs(), kSum);
            os << " - ";
            print_node(os, *e.rhs(), kProduct);
            break;
        case ClassExpr::Kind::Multiply:
            print_node(os, *e.lhs(), kProduct);
            os << "*";
            print_node(os, *e.rhs(), kFactor);
            break;
        case ClassExpr::Kind::Power:
            print_node(os, *e.lhs(), kAtom);
            os << "^" << e.value();
            break;
    }
    if (parens) os << ")";
}

}  // namespace

ClassExpr::Ptr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string print_expr(const ClassExpr& e) {
    std::ostringstream os;
    print_node(os, e, kSum);
    return os.str();
}

namespace {

int class_param(long long v) {
    if (v > 100 || v < -100) throw DomainError("class parameter out of supported range");
    return static_cast<int>(v);
}

}  // namespace

MotElem eval_expr(const ClassExpr& e) {
    switch (e.kind()) {
        case ClassExpr::Kind::Literal:
            return MotElem(Poly(mpz_class(static_cast<long>(e.value()))));
        case ClassExpr::Kind::Lefschetz:
            return MotElem(Poly::lefschetz());
        case ClassExpr::Kind::Projective:
            return MotElem(projective_class(class_param(e.value())));
        case ClassExpr::Kind::Affine:
            return MotElem(affine_class(class_param(e.value())));
        case ClassExpr::Kind::Grassmannian:
            return MotElem(
                grassmannian_class(class_param(e.value()), class_param(e.value2())));
        case ClassExpr::Kind::Generator:
            return MotElem::symbol(e.generator_symbol());
        case ClassExpr::Kind::Negate:
            return -eval_expr(*e.lhs());
        case ClassExpr::Kind::Add:
            return eval_expr(*e.lhs()) + eval_expr(*e.rhs());
        case ClassExpr::Kind::Subtract:
            return eval_expr(*e.lhs()) - eval_expr(*e.rhs());
        case ClassExpr::Kind::Multiply:
            return eval_expr(*e.lhs()) * eval_expr(*e.rhs());
        case ClassExpr::Kind::Power:
            if (e.value() > 4096) throw DomainError("exponent out of supported range");
            return eval_expr(*e.lhs()).pow(static_cast<unsigned>(e.value()));
    }
    throw InternalError("unhandled expression node");
}

}  // namespace motivic::expr
