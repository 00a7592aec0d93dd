#include <doctest.h>

#include "motivic/errors.hpp"
#include "motivic/prng.hpp"
#include "motivic/skew.hpp"

using motivic::FpMatrix;
using motivic::SkewForm;

namespace {

SkewForm random_alternating(motivic::Xorshift64Star& rng, int n, std::uint32_t p) {
    std::vector<std::uint32_t> upper(static_cast<std::size_t>(n * (n - 1) / 2));
    for (auto& v : upper) v = rng.below(p);
    return SkewForm::from_upper_triangle(n, p, upper);
}

std::vector<std::uint32_t> random_vector(motivic::Xorshift64Star& rng, int n, std::uint32_t p) {
    std::vector<std::uint32_t> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = rng.below(p);
    return v;
}

std::vector<std::uint32_t> unit_vector(int n, int i) {
    std::vector<std::uint32_t> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

}  // namespace

TEST_CASE("the alternating invariant is enforced") {
    // Symmetric with a nonzero diagonal entry: antisymmetric over F_2 but
    // not alternating, and the constructor must reject it.
    FpMatrix m(3, 3, 2);
    m.set_raw(0, 0, 1);
    CHECK_THROWS_AS(SkewForm{m}, motivic::NotAlternatingError);

    FpMatrix sym(3, 3, 2);
    sym.set_raw(0, 1, 1);
    sym.set_raw(1, 0, 1);
    sym.set_raw(2, 2, 1);
    CHECK_THROWS_AS(SkewForm{sym}, motivic::NotAlternatingError);
    sym.set_raw(2, 2, 0);
    CHECK_NOTHROW(SkewForm{sym});  // over F_2, x = -x

    FpMatrix bad(2, 2, 5);
    bad.set_raw(0, 1, 1);
    bad.set_raw(1, 0, 1);  // should be -1 = 4
    CHECK_THROWS_AS(SkewForm{bad}, motivic::NotAlternatingError);
}

TEST_CASE("form evaluation") {
    const SkewForm w4 = SkewForm::standard(7, 4, 3);
    // The first basis vector pairs with the third in the block layout.
    CHECK(motivic::evaluate_form(w4, unit_vector(7, 0), unit_vector(7, 2)).value == 1);
    CHECK(motivic::evaluate_form(w4, unit_vector(7, 2), unit_vector(7, 0)).value == 2);

    motivic::Xorshift64Star rng(31);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int i = 0; i < 100; ++i) {
            SkewForm w = random_alternating(rng, 7, p);
            auto u = random_vector(rng, 7, p);
            auto v = random_vector(rng, 7, p);
            CHECK(motivic::evaluate_form(w, u, u).value == 0);
            auto uv = motivic::evaluate_form(w, u, v).value;
            auto vu = motivic::evaluate_form(w, v, u).value;
            CHECK((uv + vu) % p == 0);
        }
    }

    std::vector<std::uint32_t> short_vec(5, 0);
    CHECK_THROWS_AS(motivic::evaluate_form(w4, short_vec, unit_vector(7, 0)),
                    motivic::DimensionMismatchError);
}

TEST_CASE("form evaluation is bilinear") {
    motivic::Xorshift64Star rng(77);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int i = 0; i < 100; ++i) {
            SkewForm w = random_alternating(rng, 7, p);
            auto u = random_vector(rng, 7, p);
            auto x = random_vector(rng, 7, p);
            auto v = random_vector(rng, 7, p);
            const std::uint32_t a = rng.below(p), b = rng.below(p);
            std::vector<std::uint32_t> combo(7);
            for (int t = 0; t < 7; ++t)
                combo[static_cast<std::size_t>(t)] =
                    (a * u[static_cast<std::size_t>(t)] + b * x[static_cast<std::size_t>(t)]) % p;
            const std::uint32_t lhs = motivic::evaluate_form(w, combo, v).value;
            const std::uint32_t rhs = (a * motivic::evaluate_form(w, u, v).value +
                                       b * motivic::evaluate_form(w, x, v).value) %
                                      p;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("standard forms are already in normal form") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto nf = motivic::congruence_normal_form(SkewForm::standard(7, 4, p));
        CHECK(nf.rank == 4);
        CHECK(nf.transform == FpMatrix::identity(7, p));
    }
}

TEST_CASE("normal form on random alternating forms") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        motivic::Xorshift64Star rng(500 + p);
        for (int i = 0; i < 1000; ++i) {
            SkewForm w = random_alternating(rng, 7, p);
            auto nf = motivic::congruence_normal_form(w);
            CHECK(nf.rank % 2 == 0);
            CHECK(nf.rank == w.rank());
            CHECK(motivic::matrix_rank(nf.transform) == 7);
            FpMatrix transported = nf.transform.transposed() * w.matrix() * nf.transform;
            CHECK(transported == SkewForm::standard(7, nf.rank, p).matrix());
        }
    }
}

TEST_CASE("rank-6 forms over F_3 reach the standard block shape") {
    motivic::Xorshift64Star rng(606);
    int found = 0;
    while (found < 25) {
        SkewForm w = random_alternating(rng, 7, 3);
        if (w.rank() != 6) continue;
        ++found;
        auto nf = motivic::congruence_normal_form(w);
        CHECK(nf.rank == 6);
        CHECK(nf.transform.transposed() * w.matrix() * nf.transform ==
              SkewForm::standard(7, 6, 3).matrix());
    }
}
