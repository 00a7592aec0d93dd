#include <doctest.h>

#include "motivic/census.hpp"
#include "motivic/classes.hpp"
#include "motivic/errors.hpp"
#include "motivic/pfaffian.hpp"

using motivic::MotElem;
using motivic::Poly;
using motivic::Symbol;
namespace pf = motivic::pfaffian;

namespace {

Poly L(int k) { return Poly::monomial(k); }

}  // namespace

TEST_CASE("rank-4 fiber strata terms") {
    pf::Rank4FiberStrata s = pf::rank4_fiber_strata();
    CHECK(s.kernel_line_term == motivic::projective_class(2) * L(5));
    CHECK(s.hyperplane_kernel_line_term.is_zero());
    CHECK(s.generic_line_term ==
          (motivic::projective_class(5) - motivic::projective_class(3)) * L(4));
    CHECK(s.line_total == (motivic::projective_class(5) - Poly(1)) * L(4));
    CHECK(s.within_hyperplane_term ==
          motivic::grassmannian_class(2, 5) + motivic::projective_class(3) * L(4));
    CHECK(s.total == s.line_total + s.within_hyperplane_term);
}

TEST_CASE("fiber classes") {
    Poly quartic = L(4) + L(2) + Poly(1);
    CHECK(pf::fiber_class_rank4() == motivic::projective_class(5) * quartic + L(6));
    CHECK(pf::fiber_class_rank6() == motivic::projective_class(5) * quartic);
    CHECK(pf::fiber_class_rank4() - pf::fiber_class_rank6() == L(6));

    CHECK(pf::fiber_class_rank4().eval(2) == 1387);
    CHECK(pf::fiber_class_rank6().eval(2) == 1323);
    CHECK(pf::fiber_class_rank6().eval(3) == 364 * 91);
    CHECK(pf::fiber_class_rank6().eval(3) == 33124);
}

TEST_CASE("fiber evaluations match the brute-force census") {
    for (std::uint32_t p : {2u, 3u}) {
        const auto rank4 = motivic::census::count_isotropic_planes(
            motivic::SkewForm::standard(7, 4, p));
        const auto rank6 = motivic::census::count_isotropic_planes(
            motivic::SkewForm::standard(7, 6, p));
        CHECK(pf::fiber_class_rank4().eval(mpz_class(p)) ==
              mpz_class(static_cast<unsigned long>(rank4)));
        CHECK(pf::fiber_class_rank6().eval(mpz_class(p)) ==
              mpz_class(static_cast<unsigned long>(rank6)));
    }
}

TEST_CASE("incidence class through the Grassmannian projection") {
    MotElem h = pf::incidence_class_via_grassmannian();
    CHECK(h.scalar() == motivic::grassmannian_class(2, 7) * motivic::projective_class(5));
    CHECK(h.scalar() == motivic::projective_class(6) * (L(4) + L(2) + Poly(1)) *
                            motivic::projective_class(5));
    CHECK(h.sym_coeff(Symbol::X) == L(6));
    CHECK(!h.has_symbol(Symbol::Y));
    CHECK(h.scalar().eval(2) == 2667 * 63);
    CHECK(h.scalar().eval(2) == 168021);
}

TEST_CASE("incidence class through the form projection") {
    MotElem h = pf::incidence_class_via_pfaffian();
    CHECK(h.scalar() ==
          motivic::projective_class(6) * motivic::projective_class(5) * (L(4) + L(2) + Poly(1)));
    CHECK(h.sym_coeff(Symbol::Y) == L(6));
    CHECK(!h.has_symbol(Symbol::X));
}

TEST_CASE("the derived relation") {
    MotElem relation = pf::derive_relation();
    CHECK(relation.scalar().is_zero());
    CHECK(relation.sym_coeff(Symbol::X) == L(6));
    CHECK(relation.sym_coeff(Symbol::Y) == -L(6));
    CHECK(relation == motivic::relation_element());
    CHECK(relation.normal_form().is_zero());
}

TEST_CASE("assembly order does not change the result") {
    MotElem y = MotElem::symbol(Symbol::Y);
    MotElem a = y * MotElem(pf::fiber_class_rank4()) +
                (MotElem(motivic::projective_class(6)) - y) * MotElem(pf::fiber_class_rank6());
    MotElem b = (MotElem(motivic::projective_class(6)) - y) * MotElem(pf::fiber_class_rank6()) +
                y * MotElem(pf::fiber_class_rank4());
    MotElem c = MotElem(motivic::projective_class(6)) * MotElem(pf::fiber_class_rank6()) +
                y * MotElem(pf::fiber_class_rank4() - pf::fiber_class_rank6());
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a == pf::incidence_class_via_pfaffian());
}

TEST_CASE("the coarse annihilation identity and its controls") {
    CHECK(pf::check_coarse_relation());
    MotElem too_low =
        (MotElem::symbol(Symbol::X) - MotElem::symbol(Symbol::Y)) * MotElem(L(5));
    CHECK(!too_low.normal_form().is_zero());
    MotElem wrong_sign =
        (MotElem::symbol(Symbol::X) + MotElem::symbol(Symbol::Y)) * MotElem(L(6));
    CHECK(!wrong_sign.normal_form().is_zero());
}

TEST_CASE("the symbolic suite is green") {
    for (const auto& check : pf::run_symbolic_suite()) {
        INFO(check.name);
        CHECK(check.passed);
    }
}
