#pragma once

#include <string>
#include <vector>

#include "motivic/motive.hpp"
#include "motivic/poly.hpp"

namespace motivic::pfaffian {

/// Strata of the fiber of the incidence projection over a rank-4 form,
/// kept as separate named terms so every intermediate identity of the
/// derivation can be checked, not just the endpoint.
///
/// The fiber is the locus of isotropic 2-planes of a rank-4 alternating
/// form on 7-space. Planes meeting the distinguished hyperplane
/// H = ker-complement + kernel in a single line D fall into three cases by
/// the position of D relative to ker(w) and ker(w|_H); planes inside H
/// form the Grassmannian part.
struct Rank4FiberStrata {
    Poly kernel_line_term;             // D in ker(w): [P^2] * L^5
    Poly hyperplane_kernel_line_term;  // D in ker(w|_H) \ ker(w): empty fiber
    Poly generic_line_term;            // remaining D: ([P^5] - [P^3]) * L^4
    Poly line_total;                   // sum of the three, equals ([P^5] - 1) * L^4
    Poly within_hyperplane_term;       // planes inside H: [G(2,5)] + [P^3] * L^4
    Poly total;                        // fiber class
};

Rank4FiberStrata rank4_fiber_strata();

/// Fiber class over a rank-4 form: [P^5] * (L^4 + L^2 + 1) + L^6, assembled
/// from the strata above. InternalError if the assembly disagrees with the
/// closed form.
Poly fiber_class_rank4();

/// Fiber class over a rank-6 form: [P^5] * (L^4 + L^2 + 1).
Poly fiber_class_rank6();

/// Class of the incidence set {(T, w) : w|_T = 0} computed through the
/// projection to the Grassmannian of 2-planes:
/// [G(2,7)] * [P^5] + [X] * L^6.
MotElem incidence_class_via_grassmannian();

/// The same class computed through the projection to the space of forms,
/// assembled from the two fiber classes as
/// [Y] * fiber4 + ([P^6] - [Y]) * fiber6. DerivationMismatchError if the
/// simplified result is not [P^6] * [P^5] * (L^4 + L^2 + 1) + [Y] * L^6.
MotElem incidence_class_via_pfaffian();

/// Difference of the two incidence computations. Must come out exactly as
/// ([X] - [Y]) * L^6 with zero scalar part and reduce to zero in normal
/// form; DerivationMismatchError otherwise.
MotElem derive_relation();

/// The coarser annihilation identity: ([X] - [Y]) * (L^2 - 1) * (L - 1) * L^7
/// lies in the submodule generated by the L^6 relation, i.e. its normal
/// form is zero.
bool check_coarse_relation();

struct SymbolicCheck {
    std::string name;
    bool passed;
};

/// The full symbolic identity suite: Grassmannian classes against the
/// Gaussian-binomial oracle, the recursion relation, the closed forms, the
/// fiber strata, both incidence computations, the relation derivation and
/// the coarse identity. Never throws; failures are reported in the result.
std::vector<SymbolicCheck> run_symbolic_suite();

}  // namespace motivic::pfaffian
