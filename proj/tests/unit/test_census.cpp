#include <doctest.h>

#include "motivic/census.hpp"
#include "motivic/classes.hpp"
#include "motivic/errors.hpp"
#include "motivic/pfaffian.hpp"
#include "motivic/prng.hpp"
#include "oracles.hpp"

using motivic::SkewForm;
namespace census = motivic::census;

namespace {

SkewForm random_alternating(motivic::Xorshift64Star& rng, std::uint32_t p) {
    std::vector<std::uint32_t> upper(21);
    for (auto& v : upper) v = rng.below(p);
    return SkewForm::from_upper_triangle(7, p, upper);
}

SkewForm random_of_rank(motivic::Xorshift64Star& rng, std::uint32_t p, int rank) {
    for (;;) {
        SkewForm w = random_alternating(rng, p);
        if (w.rank() == rank) return w;
    }
}

SkewForm congruent_by_random_basis(motivic::Xorshift64Star& rng, const SkewForm& w) {
    const std::uint32_t p = w.modulus();
    const int n = w.dim();
    for (;;) {
        motivic::FpMatrix t(n, n, p);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t.set_raw(i, j, rng.below(p));
        if (motivic::matrix_rank(t) != n) continue;
        return SkewForm(t.transposed() * w.matrix() * t);
    }
}

}  // namespace

TEST_CASE("isotropic plane counts over F_2 against the frozen oracle values") {
    CHECK(census::count_isotropic_planes(SkewForm::standard(7, 4, 2)) == 1387);
    CHECK(census::count_isotropic_planes(SkewForm::standard(7, 6, 2)) == 1323);
    CHECK(census::count_isotropic_planes(SkewForm::zero(7, 2)) == 2667);
}

TEST_CASE("isotropic plane counts match the span-set oracle") {
    // The oracle enumerates pairs of vectors and dedups spans as point
    // sets, with its own bilinear evaluation.
    for (int rank : {2, 4, 6}) {
        auto matrix = oracle::standard_alternating_matrix(7, rank, 2);
        auto counted = oracle::count_planes_where(
            7, 2, [&](const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v) {
                return oracle::bilinear_value(matrix, 7, 2, u, v) == 0;
            });
        CHECK(census::count_isotropic_planes(SkewForm::standard(7, rank, 2)) == counted);
    }
    // Same cross-check on 5-space over F_3, where the oracle stays cheap.
    auto matrix = oracle::standard_alternating_matrix(5, 4, 3);
    auto counted = oracle::count_planes_where(
        5, 3, [&](const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v) {
            return oracle::bilinear_value(matrix, 5, 3, u, v) == 0;
        });
    motivic::FpMatrix m(5, 5, 3);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            m.set_raw(i, j, matrix[static_cast<std::size_t>(i * 5 + j)]);
    CHECK(census::count_isotropic_planes(SkewForm(m)) == counted);
}

TEST_CASE("the count depends only on the rank") {
    for (std::uint32_t p : {2u, 3u}) {
        motivic::Xorshift64Star rng(900 + p);
        for (int rank : {2, 4, 6}) {
            const auto reference =
                census::count_isotropic_planes(SkewForm::standard(7, rank, p));
            for (int i = 0; i < 10; ++i) {
                SkewForm w = random_of_rank(rng, p, rank);
                CHECK(census::count_isotropic_planes(w) == reference);
            }
        }
    }
}

TEST_CASE("counts are invariant under congruence") {
    for (std::uint32_t p : {2u, 3u}) {
        motivic::Xorshift64Star rng(1700 + p);
        for (int i = 0; i < 12; ++i) {
            SkewForm w = random_alternating(rng, p);
            SkewForm moved = congruent_by_random_basis(rng, w);
            CHECK(census::count_isotropic_planes(w) == census::count_isotropic_planes(moved));
        }
    }
}

TEST_CASE("strata census over F_2") {
    census::StrataCensus s = census::stratify_rank4_fiber(SkewForm::standard(7, 4, 2));
    CHECK(s.case1_lines == 7);
    CHECK(s.case2_lines == 8);
    CHECK(s.case3_lines == 48);
    CHECK(s.case1_fiber == 32);
    CHECK(s.case3_fiber == 16);
    CHECK(s.g2h_count == 395);
    CHECK(s.total == 1387);
    CHECK(s.case1_lines * s.case1_fiber + s.case3_lines * s.case3_fiber + s.g2h_count ==
          s.total);
    // The hyperplane part is [G(2,5)] + [P^3] * L^4 evaluated at 2.
    CHECK(mpz_class(static_cast<unsigned long>(s.g2h_count)) ==
          (motivic::grassmannian_class(2, 5) +
           motivic::projective_class(3) * motivic::Poly::monomial(4))
              .eval(2));
}

TEST_CASE("strata census across primes and congruence moves") {
    motivic::Xorshift64Star rng(2024);
    for (std::uint32_t p : {2u, 3u}) {
        census::StrataCensus s = census::stratify_rank4_fiber(SkewForm::standard(7, 4, p));
        CHECK(mpz_class(static_cast<unsigned long>(s.case1_lines)) ==
              motivic::projective_class(2).eval(mpz_class(p)));
        CHECK(mpz_class(static_cast<unsigned long>(
                  s.case1_lines + s.case2_lines + s.case3_lines)) ==
              motivic::projective_class(5).eval(mpz_class(p)));
        CHECK(s.total == census::count_isotropic_planes(SkewForm::standard(7, 4, p)));

        // Any rank-4 form gives the same census.
        SkewForm moved = congruent_by_random_basis(rng, SkewForm::standard(7, 4, p));
        census::StrataCensus t = census::stratify_rank4_fiber(moved);
        CHECK(t.case1_lines == s.case1_lines);
        CHECK(t.case2_lines == s.case2_lines);
        CHECK(t.case3_lines == s.case3_lines);
        CHECK(t.g2h_count == s.g2h_count);
        CHECK(t.total == s.total);
    }
    CHECK_THROWS_AS(census::stratify_rank4_fiber(SkewForm::standard(7, 6, 3)),
                    motivic::RankMismatchError);
}

TEST_CASE("seeded sampling is deterministic and generic") {
    census::WSpace a = census::sample_generic_w(3, 42);
    census::WSpace b = census::sample_generic_w(3, 42);
    REQUIRE(a.forms().size() == 7);
    for (std::size_t i = 0; i < 7; ++i) CHECK(a.forms()[i] == b.forms()[i]);
    CHECK(a.generic());
    CHECK(census::forms_independent(a.forms()));

    // Every nonzero form of the span of a generic W has rank 4 or 6.
    std::uint64_t span_size = 0;
    census::for_each_projective_form(a.forms(), [&](const SkewForm& f) {
        ++span_size;
        const int r = motivic::matrix_rank(f.matrix());
        CHECK((r == 4 || r == 6));
    });
    CHECK(span_size == 1093);

    census::WSpace c = census::sample_generic_w(3, 43);
    bool all_equal = true;
    for (std::size_t i = 0; i < 7; ++i) all_equal = all_equal && a.forms()[i] == c.forms()[i];
    CHECK(!all_equal);

    CHECK_THROWS_AS(census::sample_generic_w(7, 1), motivic::DomainError);
}

TEST_CASE("x and y locus counts") {
    for (std::uint32_t p : {2u, 3u}) {
        census::WSpace w = census::sample_generic_w(p, 1);
        const auto x = census::count_x_locus(w);
        const auto y = census::count_y_locus(w);
        CHECK(x == y);
        CHECK(y <= (static_cast<std::uint64_t>(1) << 25));
        // y is bounded by the size of the projective span.
        const std::uint64_t span = p == 2 ? 127 : 1093;
        CHECK(y <= span);
        // x is bounded by each single-form fiber count.
        for (const auto& f : w.forms())
            CHECK(x <= census::count_isotropic_planes(f));
    }
}

TEST_CASE("a degenerate all-zero span leaves every plane isotropic") {
    std::vector<SkewForm> zeros(7, SkewForm::zero(7, 2));
    CHECK(census::count_common_isotropic_planes(zeros) == 2667);
}

TEST_CASE("building a span from explicit forms") {
    census::WSpace sampled = census::sample_generic_w(3, 8);
    std::vector<SkewForm> forms(sampled.forms().begin(), sampled.forms().end());
    census::WSpace rebuilt = census::WSpace::from_forms(forms);
    CHECK(rebuilt.generic());

    // A span that contains a rank-2 form is flagged as non-generic.
    forms[0] = SkewForm::standard(7, 2, 3);
    if (census::forms_independent(forms)) {
        census::WSpace tainted = census::WSpace::from_forms(forms);
        CHECK(!tainted.generic());
    }

    std::vector<SkewForm> dependent(7, SkewForm::standard(7, 4, 3));
    CHECK_THROWS_AS(census::WSpace::from_forms(dependent), motivic::DomainError);
}

TEST_CASE("malformed reports are rejected") {
    CHECK_THROWS_AS(census::CensusReport::from_json_string(
                        R"({"prime": 2, "seed": 1, "counts": {}, "checks": {"a": "maybe"}})"),
                    motivic::DomainError);
}

TEST_CASE("incidence counted both ways") {
    census::WSpace w = census::sample_generic_w(2, 5);
    census::IncidenceCount h = census::count_incidence(w);
    CHECK(h.via_planes == h.via_forms);

    const auto x = census::count_x_locus(w);
    const auto y = census::count_y_locus(w);
    CHECK(h.via_planes == (2667 - x) * 63 + x * 127);
    CHECK(h.via_forms == y * 1387 + (127 - y) * 1323);
}

TEST_CASE("both incidence counts agree even on a non-generic span") {
    // Force a rank-2 form into the basis; the two-fiber formula no longer
    // applies, but the two enumerations still count the same finite set.
    motivic::Xorshift64Star rng(2718);
    for (;;) {
        census::WSpace seed_w = census::sample_generic_w(2, rng.next());
        std::vector<SkewForm> forms(seed_w.forms().begin(), seed_w.forms().end());
        forms[3] = SkewForm::standard(7, 2, 2);
        if (!census::forms_independent(forms)) continue;
        census::WSpace w = census::WSpace::from_forms(forms);
        CHECK(!w.generic());
        census::IncidenceCount h = census::count_incidence(w);
        CHECK(h.via_planes == h.via_forms);
        break;
    }
}

TEST_CASE("report serialization round-trips") {
    auto reports = census::verify_suite(2, std::vector<std::uint64_t>{9});
    REQUIRE(reports.size() == 1);
    const census::CensusReport& r = reports[0];
    census::CensusReport back = census::CensusReport::from_json_string(r.to_json_string());
    CHECK(back == r);
    CHECK(back.to_json_string() == r.to_json_string());
}

TEST_CASE("the standard suite passes at p = 2 and p = 3") {
    for (std::uint32_t p : {2u, 3u}) {
        auto reports = census::verify_suite(p, std::vector<std::uint64_t>{1});
        REQUIRE(reports.size() == 1);
        for (const auto& [name, status] : reports[0].checks) {
            INFO(name);
            CHECK(status == census::CheckStatus::Pass);
        }
        CHECK(reports[0].counts.at("x_w") == reports[0].counts.at("y_w"));
        CHECK(reports[0].all_passed());
    }
    CHECK_THROWS_AS(census::verify_suite(7, std::vector<std::uint64_t>{1}),
                    motivic::DomainError);
}

TEST_CASE("suite results do not depend on the worker count") {
    census::SuiteOptions two;
    two.threads = 2;
    auto lone = census::verify_suite(2, std::vector<std::uint64_t>{3});
    auto dual = census::verify_suite(2, std::vector<std::uint64_t>{3}, two);
    REQUIRE(lone.size() == dual.size());
    CHECK(lone[0] == dual[0]);
    CHECK(lone[0].to_json_string() == dual[0].to_json_string());
}
