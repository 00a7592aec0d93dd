#include "motivic/pfaffian.hpp"

#include "motivic/classes.hpp"
#include "motivic/errors.hpp"

namespace motivic::pfaffian {

namespace {

// L^4 + L^2 + 1, the factor shared by both fiber classes.
Poly quartic_factor() {
    return Poly::monomial(4) + Poly::monomial(2) + Poly(1);
}

}  // namespace

Rank4FiberStrata rank4_fiber_strata() {
    Rank4FiberStrata s;
    // Lines D of the hyperplane H, by position relative to the kernels:
    // ker(w) is 3-dimensional, ker(w|_H) adds one dimension, and each case
    // contributes a constant fiber over its stratum.
    s.kernel_line_term = projective_class(2) * Poly::monomial(5);
    s.hyperplane_kernel_line_term = Poly{};
    s.generic_line_term = (projective_class(5) - projective_class(3)) * Poly::monomial(4);
    s.line_total = s.kernel_line_term + s.hyperplane_kernel_line_term + s.generic_line_term;
    // Planes contained in H: w restricts to H with a 4-dimensional kernel,
    // giving [G(2,5)] plus a line bundle contribution over P(ker(w|_H)).
    s.within_hyperplane_term = grassmannian_class(2, 5) + projective_class(3) * Poly::monomial(4);
    s.total = s.line_total + s.within_hyperplane_term;
    return s;
}

Poly fiber_class_rank4() {
    Rank4FiberStrata s = rank4_fiber_strata();
    if (s.line_total != (projective_class(5) - Poly(1)) * Poly::monomial(4))
        throw InternalError("rank-4 fiber: line strata do not sum to ([P^5]-1)*L^4");
    Poly closed = projective_class(5) * quartic_factor() + Poly::monomial(6);
    if (s.total != closed)
        throw InternalError("rank-4 fiber: strata assembly disagrees with the closed form");
    return s.total;
}

Poly fiber_class_rank6() { return projective_class(5) * quartic_factor(); }

MotElem incidence_class_via_grassmannian() {
    MotElem h(grassmannian_class(2, 7) * projective_class(5));
    return h + MotElem::symbol(Symbol::X) * MotElem(Poly::monomial(6));
}

MotElem incidence_class_via_pfaffian() {
    MotElem y = MotElem::symbol(Symbol::Y);
    MotElem forms_space(projective_class(6));
    MotElem h = y * MotElem(fiber_class_rank4()) + (forms_space - y) * MotElem(fiber_class_rank6());

    MotElem expected(projective_class(6) * projective_class(5) * quartic_factor());
    expected = expected + y * MotElem(Poly::monomial(6));
    if (h != expected)
        throw DerivationMismatchError("incidence class via forms does not simplify as expected");
    return h;
}

MotElem derive_relation() {
    MotElem diff = incidence_class_via_grassmannian() - incidence_class_via_pfaffian();
    if (!diff.scalar().is_zero())
        throw DerivationMismatchError("incidence difference has a nonzero scalar part");
    if (diff.sym_coeff(Symbol::X) != Poly::monomial(6) ||
        diff.sym_coeff(Symbol::Y) != -Poly::monomial(6))
        throw DerivationMismatchError("incidence difference is not ([X] - [Y]) * L^6");
    if (!diff.normal_form().is_zero())
        throw DerivationMismatchError("derived relation does not reduce to zero");
    return diff;
}

bool check_coarse_relation() {
    Poly factor = (Poly::monomial(2) - Poly(1)) * (Poly::monomial(1) - Poly(1)) * Poly::monomial(7);
    MotElem lhs = (MotElem::symbol(Symbol::X) - MotElem::symbol(Symbol::Y)) * MotElem(factor);
    return lhs.normal_form().is_zero();
}

namespace {

bool relation_controls_hold() {
    // Nearby elements must NOT reduce to zero: too low a power, wrong sign.
    MotElem low = (MotElem::symbol(Symbol::X) - MotElem::symbol(Symbol::Y)) *
                  MotElem(Poly::monomial(5));
    MotElem wrong_sign = (MotElem::symbol(Symbol::X) + MotElem::symbol(Symbol::Y)) *
                         MotElem(Poly::monomial(6));
    return !low.normal_form().is_zero() && !wrong_sign.normal_form().is_zero();
}

}  // namespace

std::vector<SymbolicCheck> run_symbolic_suite() {
    std::vector<SymbolicCheck> out;
    auto check = [&out](const std::string& name, auto&& fn) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const Error&) {
            ok = false;
        }
        out.push_back({name, ok});
    };

    check("gaussian_binomial_oracle", [] {
        for (int n = 0; n <= 10; ++n)
            for (int k = 0; k <= n; ++k)
                if (grassmannian_class(k, n) != gaussian_binomial(k, n)) return false;
        return true;
    });
    check("grassmannian_duality", [] {
        for (int n = 0; n <= 10; ++n)
            for (int k = 0; k <= n; ++k)
                if (grassmannian_class(k, n) != grassmannian_class(n - k, n)) return false;
        return true;
    });
    check("grassmannian_recursion_relation", [] {
        // Re-verified on the Gaussian-binomial side, independent of the
        // memoized recursion that uses the relation as its definition.
        for (int n = 3; n <= 10; ++n)
            for (int k = 2; k < n; ++k) {
                Poly lhs = gaussian_binomial(k, n);
                Poly rhs = gaussian_binomial(k, n - 1) +
                           Poly::monomial(n - k) * gaussian_binomial(k - 1, n - 1);
                if (lhs != rhs) return false;
            }
        return true;
    });
    check("g2_closed_form", [] {
        for (int n = 4; n <= 10; ++n)
            if (grassmannian_g2_closed_form(n) != grassmannian_class(2, n)) return false;
        Poly g25 = projective_class(4) * (Poly::monomial(2) + Poly(1));
        Poly g27 = projective_class(6) *
                   (Poly::monomial(4) + Poly::monomial(2) + Poly(1));
        return grassmannian_class(2, 5) == g25 && grassmannian_class(2, 7) == g27;
    });
    check("projective_step", [] {
        for (int n = 0; n <= 10; ++n)
            if (projective_class(n) - projective_class(n - 1) != Poly::monomial(n)) return false;
        return true;
    });
    check("rank4_fiber_strata", [] {
        Rank4FiberStrata s = rank4_fiber_strata();
        Poly expected_u = (projective_class(5) - Poly(1)) * Poly::monomial(4);
        return s.line_total == expected_u &&
               fiber_class_rank4() ==
                   projective_class(5) * (Poly::monomial(4) + Poly::monomial(2) + Poly(1)) +
                       Poly::monomial(6);
    });
    check("rank6_fiber", [] {
        return fiber_class_rank6() ==
               projective_class(5) * (Poly::monomial(4) + Poly::monomial(2) + Poly(1));
    });
    check("fiber_difference_is_L6", [] {
        return fiber_class_rank4() - fiber_class_rank6() == Poly::monomial(6);
    });
    check("incidence_grassmannian_side", [] {
        MotElem h = incidence_class_via_grassmannian();
        return h.scalar() == grassmannian_class(2, 7) * projective_class(5) &&
               h.sym_coeff(Symbol::X) == Poly::monomial(6) && !h.has_symbol(Symbol::Y);
    });
    check("incidence_pfaffian_side", [] {
        MotElem h = incidence_class_via_pfaffian();
        return h.scalar() ==
                   projective_class(6) * projective_class(5) *
                       (Poly::monomial(4) + Poly::monomial(2) + Poly(1)) &&
               h.sym_coeff(Symbol::Y) == Poly::monomial(6) && !h.has_symbol(Symbol::X);
    });
    check("relation_derivation", [] {
        MotElem relation = derive_relation();
        return relation == relation_element() && relation.normal_form().is_zero();
    });
    check("coarse_relation", [] { return check_coarse_relation(); });
    check("relation_controls", [] { return relation_controls_hold(); });
    return out;
}

}  // namespace motivic::pfaffian
