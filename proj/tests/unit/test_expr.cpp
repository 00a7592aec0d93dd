#include <doctest.h>

#include "motivic/classes.hpp"
#include "motivic/errors.hpp"
#include "motivic/expr.hpp"
#include "motivic/prng.hpp"

using motivic::MotElem;
using motivic::Poly;
using motivic::Symbol;
namespace expr = motivic::expr;

namespace {

MotElem eval(const std::string& text) { return expr::eval_expr(*expr::parse_expr(text)); }

// Random AST over the full grammar; scalar_only skips the generators so
// evaluation cannot hit the symbol-product restriction.
expr::ClassExpr::Ptr random_ast(motivic::Xorshift64Star& rng, int depth, bool scalar_only) {
    using CE = expr::ClassExpr;
    const std::uint32_t leaf = rng.below(scalar_only ? 5u : 6u);
    if (depth <= 0 || rng.below(4) == 0) {
        switch (leaf) {
            case 0: return CE::literal(static_cast<long long>(rng.below(13)));
            case 1: return CE::lefschetz();
            case 2: return CE::projective(static_cast<long long>(rng.below(10)) - 1);
            case 3: return CE::affine(static_cast<long long>(rng.below(9)));
            case 4: {
                const long long n = static_cast<long long>(rng.below(9));
                const long long k = static_cast<long long>(rng.below(9));
                return CE::grassmannian(k, n);
            }
            default: return CE::generator(rng.below(2) == 0 ? Symbol::X : Symbol::Y);
        }
    }
    switch (rng.below(5)) {
        case 0:
            return CE::add(random_ast(rng, depth - 1, scalar_only),
                           random_ast(rng, depth - 1, scalar_only));
        case 1:
            return CE::subtract(random_ast(rng, depth - 1, scalar_only),
                                random_ast(rng, depth - 1, scalar_only));
        case 2:
            return CE::multiply(random_ast(rng, depth - 1, scalar_only),
                                random_ast(rng, depth - 1, scalar_only));
        case 3:
            return CE::negate(random_ast(rng, depth - 1, scalar_only));
        default:
            return CE::power(random_ast(rng, depth - 1, scalar_only),
                             static_cast<long long>(rng.below(4)));
    }
}

}  // namespace

TEST_CASE("parsing and evaluation of the reference expressions") {
    CHECK(eval("L^2 - 1") == MotElem(Poly::monomial(2) - Poly(1)));
    CHECK(eval("P(6)*(L^4+L^2+1)") == MotElem(motivic::grassmannian_class(2, 7)));
    MotElem relation = eval("([X] - [Y]) * L^6");
    CHECK(relation == motivic::relation_element());
    CHECK(eval("G(2,7) - P(6)*(L^4+L^2+1)").is_zero());
    CHECK(eval("[X]*0").is_zero());
    CHECK(eval("([X]-[Y])*(L^2-1)*(L-1)*L^7").normal_form().is_zero());
    CHECK(eval("P(-1)").is_zero());
    CHECK(eval("-3") == MotElem(-3));
    CHECK(eval("2^3") == MotElem(8));
    CHECK(eval("A(3)") == MotElem(Poly::monomial(3)));
    CHECK(eval("--L") == MotElem(Poly::lefschetz()));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(expr::parse_expr("L^-1"), motivic::ParseError);
    try {
        expr::parse_expr("L^-1");
    } catch (const motivic::ParseError& e) {
        CHECK(e.position == 3);
    }
    CHECK_THROWS_AS(expr::parse_expr(""), motivic::ParseError);
    CHECK_THROWS_AS(expr::parse_expr("L +"), motivic::ParseError);
    CHECK_THROWS_AS(expr::parse_expr("Q(3)"), motivic::ParseError);
    CHECK_THROWS_AS(expr::parse_expr("[Z]"), motivic::ParseError);
    CHECK_THROWS_AS(expr::parse_expr("G(2 7)"), motivic::ParseError);
    CHECK_THROWS_AS(expr::parse_expr("A(-1)"), motivic::ParseError);
    CHECK_THROWS_AS(expr::parse_expr("(L"), motivic::ParseError);
    CHECK_THROWS_AS(expr::parse_expr("L L"), motivic::ParseError);
}

TEST_CASE("whitespace is immaterial") {
    auto tight = expr::parse_expr("([X]-[Y])*L^6");
    auto spaced = expr::parse_expr("  ( [X] -  [Y] )   * L ^ 6 ");
    CHECK(tight->equals(*spaced));
}

TEST_CASE("evaluation propagates domain errors") {
    CHECK_THROWS_AS(eval("[X]*[Y]"), motivic::SymbolProductError);
    CHECK_THROWS_AS(eval("[X]^2"), motivic::SymbolProductError);
    CHECK_THROWS_AS(eval("P(-5)"), motivic::DomainError);
    CHECK(eval("[X]^1") == MotElem::symbol(Symbol::X));
    CHECK(eval("[X]^0") == MotElem(1));
}

TEST_CASE("print-parse round trip is a fixed point") {
    motivic::Xorshift64Star rng(20240919);
    for (int i = 0; i < 1000; ++i) {
        auto ast = random_ast(rng, 4, false);
        const std::string text = expr::print_expr(*ast);
        auto reparsed = expr::parse_expr(text);
        INFO(text);
        CHECK(ast->equals(*reparsed));
        CHECK(expr::print_expr(*reparsed) == text);
    }
}

TEST_CASE("evaluation is a homomorphism on scalar expressions") {
    motivic::Xorshift64Star rng(555);
    for (int i = 0; i < 300; ++i) {
        auto a = random_ast(rng, 3, true);
        auto b = random_ast(rng, 3, true);
        MotElem va = expr::eval_expr(*a);
        MotElem vb = expr::eval_expr(*b);
        CHECK(expr::eval_expr(*expr::ClassExpr::add(a->clone(), b->clone())) == va + vb);
        CHECK(expr::eval_expr(*expr::ClassExpr::subtract(a->clone(), b->clone())) == va - vb);
        CHECK(expr::eval_expr(*expr::ClassExpr::multiply(a->clone(), b->clone())) == va * vb);
    }
}
