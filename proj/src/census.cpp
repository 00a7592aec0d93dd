#include "motivic/census.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <thread>

#include "motivic/classes.hpp"
#include "motivic/errors.hpp"
#include "motivic/pfaffian.hpp"
#include "motivic/prng.hpp"

namespace motivic::census {

namespace {

constexpr int kDim = 7;
constexpr int kUpper = kDim * (kDim - 1) / 2;  // 21 coordinates per form

std::uint64_t ipow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Number of points of P^d over F_p.
std::uint64_t projective_points(int d, std::uint32_t p) {
    return (ipow(p, d + 1) - 1) / (p - 1);
}

std::uint64_t eval_u64(const Poly& poly, std::uint32_t q) {
    mpz_class v = poly.eval(mpz_class(q));
    if (!v.fits_ulong_p()) throw InternalError("evaluated class does not fit in 64 bits");
    return v.get_ui();
}

bool plane_isotropic(const SkewForm& w, const FpMatrix& basis) {
    const std::size_t n = static_cast<std::size_t>(basis.cols());
    return evaluate_form(w, {basis.row(0), n}, {basis.row(1), n}).value == 0;
}

std::vector<std::uint32_t> upper_triangle_of(const SkewForm& w) {
    std::vector<std::uint32_t> u;
    u.reserve(kUpper);
    for (int i = 0; i < w.dim(); ++i)
        for (int j = i + 1; j < w.dim(); ++j) u.push_back(w.matrix().at(i, j));
    return u;
}

void check_seven_forms(std::span<const SkewForm> forms) {
    if (forms.size() != 7) throw DomainError("a form span needs exactly 7 basis forms");
    for (const auto& f : forms)
        if (f.dim() != kDim || f.modulus() != forms.front().modulus())
            throw DimensionMismatchError("forms must share dimension 7 and one modulus");
}

// Runs fn(i) for i in [0, count) on `threads` workers; results are merged
// in index order by the caller, so scheduling cannot change the outcome.
void parallel_for_index(std::uint64_t count, int threads,
                        const std::function<void(std::uint64_t)>& fn) {
    if (threads <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (;;) {
                std::uint64_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

bool forms_independent(std::span<const SkewForm> forms) {
    check_seven_forms(forms);
    FpMatrix coords(static_cast<int>(forms.size()), kUpper, forms.front().modulus());
    for (std::size_t i = 0; i < forms.size(); ++i) {
        auto u = upper_triangle_of(forms[i]);
        for (int j = 0; j < kUpper; ++j) coords.set_raw(static_cast<int>(i), j, u[static_cast<std::size_t>(j)]);
    }
    return matrix_rank(coords) == static_cast<int>(forms.size());
}

void for_each_projective_form(std::span<const SkewForm> basis,
                              const std::function<void(const SkewForm&)>& fn) {
    check_seven_forms(basis);
    const std::uint32_t p = basis.front().modulus();
    std::vector<std::vector<std::uint32_t>> uppers;
    uppers.reserve(basis.size());
    for (const auto& f : basis) uppers.push_back(upper_triangle_of(f));

    std::vector<std::uint32_t> c(basis.size(), 0);
    std::vector<std::uint32_t> mixed(kUpper);
    // First nonzero coefficient normalized to 1; trailing digits count in
    // base p with the last digit fastest.
    for (std::size_t lead = 0; lead < basis.size(); ++lead) {
        std::fill(c.begin(), c.end(), 0);
        c[lead] = 1;
        const std::size_t nfree = basis.size() - lead - 1;
        const std::uint64_t combos = ipow(p, static_cast<int>(nfree));
        for (std::uint64_t idx = 0; idx < combos; ++idx) {
            std::uint64_t rem = idx;
            for (std::size_t t = basis.size(); t-- > lead + 1;) {
                c[t] = static_cast<std::uint32_t>(rem % p);
                rem /= p;
            }
            for (int u = 0; u < kUpper; ++u) {
                std::uint64_t acc = 0;
                for (std::size_t i = lead; i < basis.size(); ++i)
                    acc += static_cast<std::uint64_t>(c[i]) *
                           uppers[i][static_cast<std::size_t>(u)];
                mixed[static_cast<std::size_t>(u)] = static_cast<std::uint32_t>(acc % p);
            }
            fn(SkewForm::from_upper_triangle(kDim, p, mixed));
        }
    }
}

std::uint64_t count_isotropic_planes(const SkewForm& w, int threads) {
    return reduce_subspaces<std::uint64_t>(
        2, w.dim(), w.modulus(), threads, 0,
        [&w](std::uint64_t& acc, const FpMatrix& basis) {
            if (plane_isotropic(w, basis)) ++acc;
        },
        [](std::uint64_t& a, std::uint64_t&& b) { a += b; });
}

std::uint64_t count_common_isotropic_planes(std::span<const SkewForm> forms, int threads) {
    if (forms.empty()) throw DomainError("need at least one form");
    const std::uint32_t p = forms.front().modulus();
    const int n = forms.front().dim();
    for (const auto& f : forms)
        if (f.dim() != n || f.modulus() != p)
            throw DimensionMismatchError("forms must share dimension and modulus");
    return reduce_subspaces<std::uint64_t>(
        2, n, p, threads, 0,
        [&forms](std::uint64_t& acc, const FpMatrix& basis) {
            for (const auto& f : forms)
                if (!plane_isotropic(f, basis)) return;
            ++acc;
        },
        [](std::uint64_t& a, std::uint64_t&& b) { a += b; });
}

WSpace WSpace::from_forms(std::vector<SkewForm> forms) {
    if (!forms_independent(forms))
        throw DomainError("basis forms are linearly dependent");
    bool generic = true;
    for_each_projective_form(forms, [&](const SkewForm& f) {
        if (generic && matrix_rank(f.matrix()) <= 2) generic = false;
    });
    return WSpace(std::move(forms), generic);
}

WSpace sample_generic_w(std::uint32_t p, std::uint64_t seed) {
    if (p != 2 && p != 3 && p != 5) throw DomainError("sampling supports p in {2,3,5}");
    Xorshift64Star rng(seed);
    constexpr int kAttempts = 256;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<SkewForm> forms;
        forms.reserve(7);
        std::vector<std::uint32_t> upper(kUpper);
        for (int f = 0; f < 7; ++f) {
            for (auto& v : upper) v = rng.below(p);
            forms.push_back(SkewForm::from_upper_triangle(kDim, p, upper));
        }
        if (!forms_independent(forms)) continue;
        bool generic = true;
        for_each_projective_form(forms, [&](const SkewForm& f) {
            if (generic && matrix_rank(f.matrix()) <= 2) generic = false;
        });
        if (!generic) continue;
        return WSpace(std::move(forms), true);
    }
    throw GenericityExhaustedError("no generic span found within " +
                                   std::to_string(kAttempts) + " attempts");
}

std::uint64_t count_x_locus(const WSpace& w, int threads) {
    return count_common_isotropic_planes(w.forms(), threads);
}

std::uint64_t count_y_locus(const WSpace& w) {
    std::uint64_t low_rank = 0;
    for_each_projective_form(w.forms(), [&](const SkewForm& f) {
        if (matrix_rank(f.matrix()) <= 4) ++low_rank;
    });
    return low_rank;
}

IncidenceCount count_incidence(const WSpace& w, int threads) {
    const std::uint32_t p = w.modulus();
    const std::uint64_t lines_in_kernel7 = projective_points(6, p);
    const std::uint64_t lines_in_kernel6 = projective_points(5, p);

    // Through the plane projection: the restriction map W -> forms on T is a
    // linear functional with kernel of dimension 7 (T in X) or 6.
    std::uint64_t via_planes = reduce_subspaces<std::uint64_t>(
        2, kDim, p, threads, 0,
        [&](std::uint64_t& acc, const FpMatrix& basis) {
            bool all_vanish = true;
            for (const auto& f : w.forms())
                if (!plane_isotropic(f, basis)) {
                    all_vanish = false;
                    break;
                }
            acc += all_vanish ? lines_in_kernel7 : lines_in_kernel6;
        },
        [](std::uint64_t& a, std::uint64_t&& b) { a += b; });

    // Through the form projection: one full fiber count per projective form.
    std::vector<SkewForm> span_forms;
    span_forms.reserve(projective_points(6, p));
    for_each_projective_form(w.forms(),
                             [&](const SkewForm& f) { span_forms.push_back(f); });
    std::vector<std::uint64_t> per_form(span_forms.size(), 0);
    parallel_for_index(span_forms.size(), threads, [&](std::uint64_t i) {
        per_form[i] = count_isotropic_planes(span_forms[i], 1);
    });
    std::uint64_t via_forms = 0;
    for (std::uint64_t c : per_form) via_forms += c;

    return {via_planes, via_forms};
}

StrataCensus stratify_rank4_fiber(const SkewForm& w, int threads) {
    const std::uint32_t p = w.modulus();
    if (w.dim() != kDim) throw DimensionMismatchError("strata census expects forms on 7-space");
    if (w.rank() != 4) throw RankMismatchError("strata census expects a rank-4 form");

    // Counts are congruence-invariant, so work with the standard
    // representative: pairs (e0,e2), (e1,e3); H = {x_0 = 0};
    // ker(w) = <e4,e5,e6>; ker(w|_H) = <e2,e4,e5,e6>.
    const SkewForm std_form = SkewForm::standard(kDim, 4, p);

    struct Pass {
        std::uint64_t in_hyperplane = 0;
        std::uint64_t total = 0;
        std::vector<std::uint32_t> fiber_by_line;
    };
    Pass init;
    init.fiber_by_line.assign(ipow(p, kDim), 0);

    auto encode = [p](const std::uint32_t* v) {
        std::uint64_t key = 0;
        for (int i = kDim - 1; i >= 0; --i) key = key * p + v[i];
        return key;
    };

    Pass pass = reduce_subspaces<Pass>(
        2, kDim, p, threads, init,
        [&](Pass& s, const FpMatrix& basis) {
            if (!plane_isotropic(std_form, basis)) return;
            ++s.total;
            if (basis.at(0, 0) == 1) {
                // The plane meets H = {x_0 = 0} in the line spanned by the
                // second basis row, already in canonical form.
                ++s.fiber_by_line[encode(basis.row(1))];
            } else {
                ++s.in_hyperplane;
            }
        },
        [](Pass& a, Pass&& b) {
            a.in_hyperplane += b.in_hyperplane;
            a.total += b.total;
            for (std::size_t i = 0; i < a.fiber_by_line.size(); ++i)
                a.fiber_by_line[i] += b.fiber_by_line[i];
        });

    StrataCensus census;
    census.p = p;
    census.case1_lines = census.case2_lines = census.case3_lines = 0;
    census.case1_fiber = ipow(p, 5);
    census.case3_fiber = ipow(p, 4);
    census.g2h_count = pass.in_hyperplane;
    census.total = pass.total;

    std::uint32_t line[kDim];
    for_each_subspace(1, kDim - 1, p, [&](const FpMatrix& rep) {
        line[0] = 0;
        for (int j = 0; j < kDim - 1; ++j) line[j + 1] = rep.at(0, j);
        const bool in_kernel = line[1] == 0 && line[2] == 0 && line[3] == 0;
        const bool in_restricted_kernel = line[1] == 0 && line[3] == 0;
        std::uint64_t expected;
        if (in_kernel) {
            ++census.case1_lines;
            expected = census.case1_fiber;
        } else if (in_restricted_kernel) {
            ++census.case2_lines;
            expected = 0;
        } else {
            ++census.case3_lines;
            expected = census.case3_fiber;
        }
        if (pass.fiber_by_line[encode(line)] != expected)
            throw InternalError("per-line fiber count deviates from its stratum value");
    });

    if (census.case1_lines + census.case2_lines + census.case3_lines !=
        projective_points(5, p))
        throw InternalError("line strata do not partition the hyperplane's lines");
    if (census.case1_lines * census.case1_fiber + census.case3_lines * census.case3_fiber +
            census.g2h_count !=
        census.total)
        throw InternalError("strata totals do not add up to the fiber count");
    return census;
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    throw InternalError("unknown check status");
}

namespace {

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "fail") return CheckStatus::Fail;
    if (s == "skipped") return CheckStatus::Skipped;
    throw DomainError("unknown check status '" + s + "'");
}

}  // namespace

bool CensusReport::all_passed() const {
    for (const auto& [name, status] : checks)
        if (status == CheckStatus::Fail) return false;
    return true;
}

std::string CensusReport::to_json_string(int indent) const {
    nlohmann::json j;
    j["prime"] = prime;
    j["seed"] = seed;
    j["counts"] = nlohmann::json::object();
    for (const auto& [name, value] : counts) j["counts"][name] = value;
    j["checks"] = nlohmann::json::object();
    for (const auto& [name, status] : checks) j["checks"][name] = to_string(status);
    return j.dump(indent);
}

CensusReport CensusReport::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CensusReport r;
    r.prime = j.at("prime").get<std::uint32_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& [name, value] : j.at("counts").items())
        r.counts[name] = value.get<long long>();
    for (const auto& [name, value] : j.at("checks").items())
        r.checks[name] = status_from_string(value.get<std::string>());
    return r;
}

namespace {

const char* const kCheckNames[] = {
    "grassmannian_count",   "fiber_rank4_formula",          "fiber_rank6_formula",
    "strata_rank4",         "genericity",                   "x_equals_y",
    "incidence_two_ways",   "incidence_grassmannian_formula",
    "incidence_pfaffian_formula",
};

}  // namespace

std::vector<CensusReport> verify_suite(std::uint32_t p, std::span<const std::uint64_t> seeds,
                                       const SuiteOptions& options) {
    if (p != 2 && p != 3 && p != 5) throw DomainError("census suite supports p in {2,3,5}");
    const int threads = std::max(1, options.threads);
    const bool run_incidence = p <= 3 || options.incidence_at_p5;

    std::vector<CensusReport> reports;
    for (std::uint64_t seed : seeds) {
        CensusReport r;
        r.prime = p;
        r.seed = seed;
        for (const char* name : kCheckNames) r.checks[name] = CheckStatus::Skipped;

        auto run_check = [&r](const char* name, auto&& fn) {
            try {
                r.checks[name] = fn() ? CheckStatus::Pass : CheckStatus::Fail;
            } catch (const Error&) {
                r.checks[name] = CheckStatus::Fail;
            }
        };

        // Length of the actual enumeration stream, not the cell-count sum.
        const std::uint64_t grassmannian = reduce_subspaces<std::uint64_t>(
            2, kDim, p, threads, 0, [](std::uint64_t& a, const FpMatrix&) { ++a; },
            [](std::uint64_t& a, std::uint64_t&& b) { a += b; });
        r.counts["grassmannian"] = static_cast<long long>(grassmannian);
        run_check("grassmannian_count", [&] {
            return grassmannian == subspace_count(2, kDim, p) &&
                   mpz_class(static_cast<unsigned long>(grassmannian)) ==
                       grassmannian_class(2, kDim).eval(mpz_class(p));
        });

        const std::uint64_t fiber4 =
            count_isotropic_planes(SkewForm::standard(kDim, 4, p), threads);
        const std::uint64_t fiber6 =
            count_isotropic_planes(SkewForm::standard(kDim, 6, p), threads);
        const std::uint64_t fiber2 =
            count_isotropic_planes(SkewForm::standard(kDim, 2, p), threads);
        r.counts["fiber_rank4"] = static_cast<long long>(fiber4);
        r.counts["fiber_rank6"] = static_cast<long long>(fiber6);
        r.counts["fiber_rank2"] = static_cast<long long>(fiber2);  // informational
        run_check("fiber_rank4_formula",
                  [&] { return fiber4 == eval_u64(pfaffian::fiber_class_rank4(), p); });
        run_check("fiber_rank6_formula",
                  [&] { return fiber6 == eval_u64(pfaffian::fiber_class_rank6(), p); });

        run_check("strata_rank4", [&] {
            StrataCensus s = stratify_rank4_fiber(SkewForm::standard(kDim, 4, p), threads);
            return s.total == fiber4 && s.case1_lines == projective_points(2, p) &&
                   s.case1_lines + s.case2_lines + s.case3_lines == projective_points(5, p);
        });

        std::uint64_t x_count = 0, y_count = 0;
        try {
            WSpace w = sample_generic_w(p, seed);
            r.checks["genericity"] = CheckStatus::Pass;

            x_count = count_x_locus(w, threads);
            y_count = count_y_locus(w);
            r.counts["x_w"] = static_cast<long long>(x_count);
            r.counts["y_w"] = static_cast<long long>(y_count);
            run_check("x_equals_y", [&] { return x_count == y_count; });

            if (run_incidence) {
                IncidenceCount h = count_incidence(w, threads);
                r.counts["h_via_planes"] = static_cast<long long>(h.via_planes);
                r.counts["h_via_forms"] = static_cast<long long>(h.via_forms);
                run_check("incidence_two_ways",
                          [&] { return h.via_planes == h.via_forms; });
                run_check("incidence_grassmannian_formula", [&] {
                    // Class of the incidence set through the plane
                    // projection, with the x count substituted.
                    const std::uint64_t np5 = projective_points(5, p);
                    const std::uint64_t np6 = projective_points(6, p);
                    return h.via_planes == (grassmannian - x_count) * np5 + x_count * np6;
                });
                run_check("incidence_pfaffian_formula", [&] {
                    const std::uint64_t np6 = projective_points(6, p);
                    return h.via_forms == y_count * fiber4 + (np6 - y_count) * fiber6;
                });
            }
        } catch (const GenericityExhaustedError&) {
            // Recorded as skipped entries; not a failure of the suite.
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace motivic::census
