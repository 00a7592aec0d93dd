#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "motivic/skew.hpp"
#include "motivic/subspace.hpp"

namespace motivic::census {

/// A 7-dimensional space of alternating forms on F_p^7, spanned by 7
/// linearly independent forms. `generic` records that the projective span
/// contains no nonzero form of rank <= 2, which is exactly the hypothesis
/// the two-fiber incidence count needs.
class WSpace {
public:
    /// Validates: exactly 7 forms on F_p^7 over one modulus, linearly
    /// independent as vectors of upper-triangle coordinates. The generic
    /// flag is computed by scanning the whole projective span.
    static WSpace from_forms(std::vector<SkewForm> forms);

    std::uint32_t modulus() const { return forms_.front().modulus(); }
    std::span<const SkewForm> forms() const { return forms_; }
    bool generic() const { return generic_; }

private:
    friend WSpace sample_generic_w(std::uint32_t p, std::uint64_t seed);
    WSpace(std::vector<SkewForm> forms, bool generic)
        : forms_(std::move(forms)), generic_(generic) {}
    std::vector<SkewForm> forms_;
    bool generic_;
};

/// Deterministic seeded sampling of a generic WSpace (xorshift64*, 21
/// upper-triangle entries per form, 7 forms per attempt). Dependent or
/// non-generic draws are rejected; GenericityExhaustedError after 256
/// attempts. DomainError unless p in {2,3,5}.
WSpace sample_generic_w(std::uint32_t p, std::uint64_t seed);

/// True iff the 7 forms are linearly independent in the coordinate space of
/// alternating matrices.
bool forms_independent(std::span<const SkewForm> forms);

/// Calls fn for every nonzero form of the span up to scalar, i.e. for
/// coefficient vectors whose first nonzero entry is 1, in base-p counting
/// order. (p^7 - 1) / (p - 1) calls in total.
void for_each_projective_form(std::span<const SkewForm> basis,
                              const std::function<void(const SkewForm&)>& fn);

/// Number of 2-planes T of F_p^n with w vanishing on T, by streaming the
/// RREF enumeration and evaluating the form on each basis.
std::uint64_t count_isotropic_planes(const SkewForm& w, int threads = 1);

/// Number of 2-planes isotropic for every one of the given forms (hence for
/// the whole span, by bilinearity).
std::uint64_t count_common_isotropic_planes(std::span<const SkewForm> forms, int threads = 1);

/// Points of the locus X: 2-planes isotropic for all of W.
std::uint64_t count_x_locus(const WSpace& w, int threads = 1);

/// Points of the locus Y: members of the projective span of rank <= 4.
std::uint64_t count_y_locus(const WSpace& w);

struct IncidenceCount {
    std::uint64_t via_planes;  // sum over 2-planes of projectivized kernels
    std::uint64_t via_forms;   // sum over forms of isotropic-plane counts
};

/// Counts the incidence set {(T, [w]) : w|_T = 0} both ways; the two totals
/// enumerate the same finite set and must agree.
IncidenceCount count_incidence(const WSpace& w, int threads = 1);

/// Census of the fiber over a rank-4 form, stratifying the lines D of the
/// distinguished hyperplane H by their position relative to ker(w) and
/// ker(w|_H). The form is moved to the standard congruence representative
/// first; every per-line fiber count is verified against its stratum value
/// (p^5, 0, p^4) and InternalError is thrown on any mismatch.
/// RankMismatchError if the form does not have rank 4.
struct StrataCensus {
    std::uint32_t p;
    std::uint64_t case1_lines;  // D inside ker(w)
    std::uint64_t case2_lines;  // D inside ker(w|_H) but not ker(w)
    std::uint64_t case3_lines;  // the rest
    std::uint64_t case1_fiber;  // p^5
    std::uint64_t case3_fiber;  // p^4
    std::uint64_t g2h_count;    // isotropic planes contained in H
    std::uint64_t total;        // equals count_isotropic_planes
};

StrataCensus stratify_rank4_fiber(const SkewForm& w, int threads = 1);

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

/// Result of one verification run at one (prime, seed). Serializes to
/// {"prime": int, "seed": int, "counts": {...}, "checks": {...}} with the
/// stable count keys x_w, y_w, h_via_planes, h_via_forms, grassmannian,
/// fiber_rank4, fiber_rank6 (fiber_rank2 is measured and reported as well,
/// but asserted against nothing).
struct CensusReport {
    std::uint32_t prime = 2;
    std::uint64_t seed = 0;
    std::map<std::string, long long> counts;
    std::map<std::string, CheckStatus> checks;

    bool all_passed() const;
    std::string to_json_string(int indent = -1) const;
    static CensusReport from_json_string(const std::string& text);

    friend bool operator==(const CensusReport& a, const CensusReport& b) {
        return a.prime == b.prime && a.seed == b.seed && a.counts == b.counts &&
               a.checks == b.checks;
    }
};

struct SuiteOptions {
    int threads = 1;
    /// Include the incidence (h_*) checks even at p = 5. Off by default:
    /// the p = 5 incidence sum enumerates 19531 full fiber counts.
    bool incidence_at_p5 = false;
};

/// Runs every point-count identity per seed: the Grassmannian count, the
/// two fiber counts against the evaluated fiber classes, the rank-4 strata
/// census, the x/y locus equality, and (for p <= 3) both incidence sums
/// against the evaluated class formulas. GenericityExhausted turns the
/// seed-dependent checks into "skipped" entries rather than an error.
/// DomainError unless p in {2,3,5}.
std::vector<CensusReport> verify_suite(std::uint32_t p, std::span<const std::uint64_t> seeds,
                                       const SuiteOptions& options = {});

}  // namespace motivic::census
