/*
   Copyright 2026 The primefourier Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file uncertainty.hpp
 * @brief The additive uncertainty bound |supp f| + |supp f^| >= p + 1 on
 *        Z/pZ: checking it, certifying it is tight, and building functions
 *        with any admissible pair of supports.
 *
 * Every construction here is verified by an exact support computation before
 * it is returned.
 */

#ifndef PRIMEFOURIER_UNCERTAINTY_HPP
#define PRIMEFOURIER_UNCERTAINTY_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fourier.hpp"
#include "parallel.hpp"

namespace primefourier {

struct UncertaintyReport {
    unsigned p = 0;
    SupportSet supp_f;
    SupportSet supp_fhat;
    std::size_t sum = 0;
    std::size_t product = 0;
    bool additive_bound_holds = false;
    bool product_bound_holds = false;
};

/// Computes both supports of a nonzero f and checks the additive and
/// multiplicative bounds. A failing bound raises theorem_violation.
inline UncertaintyReport verify_uncertainty(const SignalFn& f) {
    if (f.is_zero()) throw precondition_error("uncertainty bound needs a nonzero function");
    const unsigned p = f.modulus().value();
    UncertaintyReport r{p, support(f), support(dft(f))};
    r.sum = r.supp_f.size() + r.supp_fhat.size();
    r.product = r.supp_f.size() * r.supp_fhat.size();
    r.additive_bound_holds = r.sum >= p + 1;
    r.product_bound_holds = r.product >= p;
    if (!r.additive_bound_holds || !r.product_bound_holds)
        throw theorem_violation("support pair " + to_string(r.supp_f) + ", " + to_string(r.supp_fhat) +
                                " breaks the uncertainty bound");
    return r;
}

struct AchievabilityWitness {
    SupportSet target_A;
    SupportSet target_B;
    SignalFn f;
    /// Auxiliary row set of the exact-pair solve; empty for combinations.
    SupportSet tilde_A;
    /// Sub-pairs whose witnesses were combined; empty for the exact case.
    std::vector<std::pair<SupportSet, SupportSet>> family;
    /// Integer weights of the accepted combination.
    std::vector<std::uint64_t> coefficients;
    std::uint64_t seed = 0;
    /// Combination draws made; 0 when no combination stage ran.
    unsigned attempts = 0;
};

namespace detail {

inline void require_nonempty_pair(const SupportSet& a, const SupportSet& b) {
    require_same_modulus(a.modulus(), b.modulus());
    if (a.empty() || b.empty()) throw precondition_error("support sets must be nonempty");
}

inline void verify_supports(const SignalFn& f, const SupportSet& a, const SupportSet& b) {
    const SupportSet got_a = support(f);
    const SupportSet got_b = support(dft(f));
    if (got_a != a || got_b != b)
        throw theorem_violation("constructed supports " + to_string(got_a) + ", " + to_string(got_b) +
                                " differ from targets " + to_string(a) + ", " + to_string(b));
}

}  // namespace detail

/// Witness for |A| + |B| = p + 1.
///
/// With xi = min(B) and T = (Z/pZ \ B) u {xi}, solves for f supported on A
/// with f^ = 0 on T \ {xi} and f^(xi) = 1. The coefficient matrix is the
/// minor on rows -T and columns A, invertible since |T| = |A|.
inline AchievabilityWitness construct_exact_pair(const SupportSet& A, const SupportSet& B) {
    detail::require_nonempty_pair(A, B);
    const PrimeModulus p = A.modulus();
    if (A.size() + B.size() != p.value() + 1)
        throw precondition_error("exact construction needs |A| + |B| = p + 1");

    const unsigned xi = B.min();
    const SupportSet outside = B.complement();
    std::vector<unsigned> t(outside.begin(), outside.end());
    t.push_back(xi);
    const SupportSet tilde_a(p, std::move(t));

    // Row -t of the minor is the equation for f^(t): sum_a f(a) w^(-a t) = p f^(t).
    const FourierMinor minor = minor_matrix(p, tilde_a.negate(), A);
    std::vector<CycloNum> rhs(A.size(), CycloNum(p));
    rhs[*minor.rows.index_of(p.reduce(-static_cast<std::int64_t>(xi)))] = CycloNum(p, Rational(p.value()));
    const std::vector<CycloNum> c = minor_solve(minor, std::move(rhs));

    std::vector<CycloNum> values(p.value(), CycloNum(p));
    for (std::size_t k = 0; k < A.size(); ++k) values[A[k]] = c[k];
    SignalFn f(p, std::move(values));
    detail::verify_supports(f, A, B);
    return AchievabilityWitness{A, B, std::move(f), tilde_a, {}, {}};
}

/// Sub-pairs (A'_i, B) with |A'_i| = p + 1 - |B| whose union covers A. The
/// A'_i are windows of consecutive elements of A in sorted order, the last
/// one shifted back to end at the largest element. Because |B| <= p, the
/// excess |A| + |B| - p - 1 never exceeds |A| - 1, so B needs no splitting.
inline std::vector<std::pair<SupportSet, SupportSet>> covering_family(const SupportSet& A, const SupportSet& B) {
    detail::require_nonempty_pair(A, B);
    const PrimeModulus p = A.modulus();
    if (A.size() + B.size() < p.value() + 1) throw precondition_error("covering family needs |A| + |B| >= p + 1");
    const std::size_t width = p.value() + 1 - B.size();
    std::vector<std::pair<SupportSet, SupportSet>> family;
    for (std::size_t start = 0;; start += width) {
        const std::size_t s = std::min(start, A.size() - width);
        family.emplace_back(SupportSet(p, std::vector<unsigned>(A.begin() + static_cast<std::ptrdiff_t>(s),
                                                                A.begin() + static_cast<std::ptrdiff_t>(s + width))),
                            B);
        if (s + width >= A.size()) break;
    }
    return family;
}

struct CombinationOptions {
    std::uint64_t seed = 0;
    unsigned max_attempts = 32;
    std::uint64_t max_coefficient = std::uint64_t{1} << 16;
};

/// Witness for any |A| + |B| >= p + 1. Beyond the exact case, combines the
/// covering family's witnesses with seeded random weights in
/// [1, max_coefficient] and keeps the first draw whose supports are exactly
/// A and B.
inline AchievabilityWitness construct_support_pair(const SupportSet& A, const SupportSet& B,
                                                   const CombinationOptions& options = {}) {
    detail::require_nonempty_pair(A, B);
    const PrimeModulus p = A.modulus();
    if (A.size() + B.size() < p.value() + 1)
        throw precondition_error("no function has supports of total size " + std::to_string(A.size() + B.size()) +
                                 " <= p");
    if (A.size() + B.size() == p.value() + 1) {
        AchievabilityWitness w = construct_exact_pair(A, B);
        w.seed = options.seed;
        return w;
    }

    auto family = covering_family(A, B);
    std::vector<SignalFn> parts;
    parts.reserve(family.size());
    for (const auto& [sub_a, sub_b] : family) parts.push_back(construct_exact_pair(sub_a, sub_b).f);

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> draw(1, options.max_coefficient);
    for (unsigned attempt = 1; attempt <= options.max_attempts; ++attempt) {
        std::vector<std::uint64_t> lambda(parts.size());
        for (auto& l : lambda) l = draw(rng);
        SignalFn f(p);
        for (std::size_t i = 0; i < parts.size(); ++i) f += Rational(static_cast<unsigned long>(lambda[i])) * parts[i];
        if (support(f) == A && support(dft(f)) == B)
            return AchievabilityWitness{A,      B, std::move(f), SupportSet(p), std::move(family), std::move(lambda),
                                        options.seed, attempt};
    }
    throw budget_exceeded("no combination with supports " + to_string(A) + ", " + to_string(B) + " within " +
                          std::to_string(options.max_attempts) + " attempts (seed " + std::to_string(options.seed) +
                          ")");
}

/// Certifies that no nonzero f has supp f in A and supp f^ in B, for
/// |A| + |B| <= p: the |A| smallest residues outside B give an invertible
/// minor against A, so f^ vanishing there forces f = 0. Returns false only if
/// that minor is singular.
inline bool certify_tightness(PrimeModulus p, const SupportSet& A, const SupportSet& B) {
    require_same_modulus(p, A.modulus());
    require_same_modulus(p, B.modulus());
    if (A.empty()) throw precondition_error("tightness needs a nonempty A");
    if (A.size() + B.size() > p.value()) throw precondition_error("tightness needs |A| + |B| <= p");
    const SupportSet outside = B.complement();
    const SupportSet tilde_a(p, std::vector<unsigned>(outside.begin(),
                                                      outside.begin() + static_cast<std::ptrdiff_t>(A.size())));
    return !determinant(minor_matrix(p, tilde_a.negate(), A).entries).is_zero();
}

struct CertificationOptions {
    std::int64_t max_p = 7;
    unsigned jobs = 1;
    CombinationOptions combination{};
    /// Keep one record per checked instance (for CSV output).
    bool record_instances = false;
};

struct InstanceRecord {
    std::string kind;  // "minor", "tightness" or "achievability"
    SupportSet first;
    SupportSet second;
    bool ok = false;
    unsigned attempts = 0;
};

struct CertificationSummary {
    unsigned p = 0;
    std::size_t minors_checked = 0;
    std::size_t minors_nonzero = 0;
    std::size_t tightness_checked = 0;
    std::size_t tightness_certified = 0;
    std::size_t achievability_checked = 0;
    std::size_t achievability_ok = 0;
    std::size_t combination_pairs = 0;
    unsigned max_attempts_used = 0;
    std::vector<std::string> theorem_failures;
    std::vector<std::string> budget_failures;
    std::vector<InstanceRecord> instances;

    bool all_passed() const noexcept { return theorem_failures.empty() && budget_failures.empty(); }
};

/// Sweeps every equal-size minor, every (A, B) with |A| + |B| <= p for
/// tightness, and every nonempty (A, B) with |A| + |B| >= p + 1 for
/// achievability. Failures are collected, not thrown.
inline CertificationSummary exhaustive_certification(PrimeModulus p, const CertificationOptions& options = {}) {
    if (static_cast<std::int64_t>(p.value()) > options.max_p)
        throw budget_exceeded("exhaustive certification is limited to p <= " + std::to_string(options.max_p));
    if (p.value() > 20) throw budget_exceeded("exhaustive certification enumerates 4^p pairs; p <= 20 required");

    const unsigned n = p.value();
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<std::vector<std::uint64_t>> by_size(n + 1);
    for (std::uint64_t m = 0; m < subsets; ++m) by_size[static_cast<std::size_t>(std::popcount(m))].push_back(m);

    struct Task {
        int kind;
        std::uint64_t a, b;
    };
    std::vector<Task> tasks;
    for (unsigned k = 1; k <= n; ++k)
        for (auto r : by_size[k])
            for (auto c : by_size[k]) tasks.push_back({0, r, c});
    for (std::uint64_t a = 1; a < subsets; ++a)
        for (std::uint64_t b = 0; b < subsets; ++b) {
            const auto total = static_cast<unsigned>(std::popcount(a) + std::popcount(b));
            if (total <= n) tasks.push_back({1, a, b});
            else if (b != 0) tasks.push_back({2, a, b});
        }

    struct Outcome {
        bool ok = false;
        bool budget = false;
        unsigned attempts = 0;
        std::string message;
    };
    const auto outcomes = parallel_map(tasks.size(), options.jobs, [&](std::size_t i) {
        const Task& t = tasks[i];
        const SupportSet a = SupportSet::from_mask(p, t.a);
        const SupportSet b = SupportSet::from_mask(p, t.b);
        Outcome o;
        try {
            if (t.kind == 0) {
                o.ok = !determinant(minor_matrix(p, a, b).entries).is_zero();
            } else if (t.kind == 1) {
                o.ok = certify_tightness(p, a, b);
            } else {
                o.attempts = construct_support_pair(a, b, options.combination).attempts;
                o.ok = true;
            }
        } catch (const theorem_violation& e) {
            o.message = e.what();
        } catch (const budget_exceeded& e) {
            o.budget = true;
            o.message = e.what();
        }
        return o;
    });

    static constexpr const char* kinds[] = {"minor", "tightness", "achievability"};
    CertificationSummary s;
    s.p = n;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const Task& t = tasks[i];
        const Outcome& o = outcomes[i];
        switch (t.kind) {
            case 0:
                ++s.minors_checked;
                s.minors_nonzero += o.ok;
                break;
            case 1:
                ++s.tightness_checked;
                s.tightness_certified += o.ok;
                break;
            default:
                ++s.achievability_checked;
                s.achievability_ok += o.ok;
                s.combination_pairs += o.attempts > 0;
                s.max_attempts_used = std::max(s.max_attempts_used, o.attempts);
        }
        if (!o.ok) {
            const std::string what = std::string(kinds[t.kind]) + " " +
                                     to_string(SupportSet::from_mask(p, t.a)) + " " +
                                     to_string(SupportSet::from_mask(p, t.b)) +
                                     (o.message.empty() ? "" : ": " + o.message);
            (o.budget ? s.budget_failures : s.theorem_failures).push_back(what);
        }
        if (options.record_instances)
            s.instances.push_back(
                {kinds[t.kind], SupportSet::from_mask(p, t.a), SupportSet::from_mask(p, t.b), o.ok, o.attempts});
    }
    return s;
}

}  // namespace primefourier

#endif  // PRIMEFOURIER_UNCERTAINTY_HPP
