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

#include <gtest/gtest.h>

#include <bit>

#include "test_support.hpp"

using namespace primefourier;

namespace {

// Supports read off a floating transform; the exact path is not involved.
void expect_float_supports(const SignalFn& f, const SupportSet& a, const SupportSet& b) {
    const auto values = pf_test::embed_all(f);
    const auto spectrum = pf_test::float_dft(values);
    for (unsigned x = 0; x < values.size(); ++x) {
        EXPECT_EQ(std::abs(values[x]) > 1e-9, a.contains(x)) << "x = " << x;
        EXPECT_EQ(std::abs(spectrum[x]) > 1e-9, b.contains(x)) << "xi = " << x;
    }
}

}  // namespace

TEST(VerifyUncertainty, Examples) {
    const PrimeModulus p5(5);
    auto r = verify_uncertainty(SignalFn::dirac(p5, 0));
    EXPECT_EQ(r.sum, 6U);
    EXPECT_EQ(r.supp_fhat.size(), 5U);
    r = verify_uncertainty(SignalFn::constant(p5));
    EXPECT_EQ(r.sum, 6U);
    EXPECT_EQ(r.supp_f.size(), 5U);

    const std::vector<std::int64_t> two{1, 1, 0, 0, 0};
    r = verify_uncertainty(SignalFn::from_integers(p5, two));
    EXPECT_EQ(r.supp_f, SupportSet(p5, {0, 1}));
    EXPECT_EQ(r.supp_fhat, SupportSet::full(p5));
    EXPECT_EQ(r.sum, 7U);
    EXPECT_EQ(r.product, 10U);
    EXPECT_TRUE(r.additive_bound_holds && r.product_bound_holds);

    EXPECT_THROW(verify_uncertainty(SignalFn(p5)), precondition_error);
}

TEST(VerifyUncertainty, AdversarialInputs) {
    std::mt19937_64 rng(41);
    for (int p : {2, 3, 5, 7, 11, 13}) {
        const PrimeModulus m(p);
        for (int b = 0; b < p; ++b) {
            EXPECT_NO_THROW(verify_uncertainty(SignalFn::character(m, b)));
            EXPECT_NO_THROW(verify_uncertainty(SignalFn::dirac(m, b, Rational(-3, 7))));
        }
        for (int i = 0; i < 30; ++i) {
            // Indicator of a random set, then its spectrum as a new signal.
            const SupportSet s = pf_test::random_nonempty_subset(m, rng);
            std::vector<std::int64_t> ind(p);
            for (unsigned x : s) ind[x] = 1;
            const SignalFn f = SignalFn::from_integers(m, ind);
            EXPECT_NO_THROW(verify_uncertainty(f));
            EXPECT_NO_THROW(verify_uncertainty(dft(f)));
        }
    }
}

TEST(ConstructExactPair, Examples) {
    const PrimeModulus p3(3);
    auto w = construct_exact_pair(SupportSet(p3, {0}), SupportSet::full(p3));
    EXPECT_EQ(support(w.f), SupportSet(p3, {0}));
    EXPECT_TRUE(w.f[0].is_rational());

    w = construct_exact_pair(SupportSet::full(p3), SupportSet(p3, {0}));
    EXPECT_EQ(w.f[0], w.f[1]);
    EXPECT_EQ(w.f[1], w.f[2]);
    EXPECT_FALSE(w.f[0].is_zero());

    EXPECT_THROW(PrimeModulus(4), precondition_error);

    const SupportSet A(p3, {0, 2}), B(p3, {0, 1});
    w = construct_exact_pair(A, B);
    EXPECT_EQ(w.tilde_A, SupportSet(p3, {0, 2}));
    EXPECT_EQ(support(w.f), A);
    EXPECT_EQ(support(dft(w.f)), B);
    expect_float_supports(w.f, A, B);
    // f^ is 1 at min(B) and 0 on the rest of tilde_A.
    EXPECT_EQ(dft(w.f)[0], CycloNum(p3, Rational(1)));
}

TEST(ConstructExactPair, Preconditions) {
    const PrimeModulus p5(5);
    EXPECT_THROW(construct_exact_pair(SupportSet(p5), SupportSet::full(p5)), precondition_error);
    EXPECT_THROW(construct_exact_pair(SupportSet(p5, {0, 1}), SupportSet::full(p5)), precondition_error);
    EXPECT_THROW(construct_exact_pair(SupportSet(p5, {0}), SupportSet(PrimeModulus(7), {0})), precondition_error);
}

TEST(CoveringFamily, CoversWithExactSizes) {
    std::mt19937_64 rng(3);
    for (int p : {3, 5, 7, 11}) {
        const PrimeModulus m(p);
        for (int i = 0; i < 100; ++i) {
            const SupportSet A = pf_test::random_nonempty_subset(m, rng);
            const SupportSet B = pf_test::random_nonempty_subset(m, rng);
            if (A.size() + B.size() < static_cast<std::size_t>(p + 1)) continue;
            const auto family = covering_family(A, B);
            EXPECT_LE(family.size(), A.size() + B.size());
            SupportSet ua(m), ub(m);
            for (const auto& [a, b] : family) {
                EXPECT_EQ(a.size() + b.size(), static_cast<std::size_t>(p + 1));
                EXPECT_TRUE(a.is_subset_of(A));
                EXPECT_TRUE(b.is_subset_of(B));
                ua = ua.unite(a);
                ub = ub.unite(b);
            }
            EXPECT_EQ(ua, A);
            EXPECT_EQ(ub, B);
        }
    }
}

TEST(ConstructSupportPair, Examples) {
    const PrimeModulus p5(5), p3(3);
    const auto exact = construct_support_pair(SupportSet(p3, {0, 2}), SupportSet(p3, {0, 1}));
    EXPECT_EQ(exact.f, construct_exact_pair(SupportSet(p3, {0, 2}), SupportSet(p3, {0, 1})).f);
    EXPECT_EQ(exact.attempts, 0U);

    const SupportSet full = SupportSet::full(p5);
    auto w = construct_support_pair(full, full);
    EXPECT_EQ(support(w.f), full);
    EXPECT_EQ(support(dft(w.f)), full);
    EXPECT_GE(w.attempts, 1U);
    expect_float_supports(w.f, full, full);

    const SupportSet A(p5, {0, 1, 2, 3});
    w = construct_support_pair(A, full);
    EXPECT_EQ(support(w.f), A);
    EXPECT_EQ(support(dft(w.f)), full);
    EXPECT_EQ(w.coefficients.size(), w.family.size());
    expect_float_supports(w.f, A, full);

    EXPECT_THROW(construct_support_pair(SupportSet(p5, {0}), SupportSet(p5, {0})), precondition_error);
}

TEST(ConstructSupportPair, SeedDeterminesWitness) {
    const PrimeModulus p7(7);
    const SupportSet A(p7, {0, 1, 3, 4, 6}), B(p7, {1, 2, 3, 5, 6});
    const auto a = construct_support_pair(A, B, {.seed = 99});
    const auto b = construct_support_pair(A, B, {.seed = 99});
    const auto c = construct_support_pair(A, B, {.seed = 100});
    EXPECT_EQ(a.f, b.f);
    EXPECT_EQ(a.coefficients, b.coefficients);
    EXPECT_NE(a.coefficients, c.coefficients);
    EXPECT_EQ(support(c.f), A);
}

TEST(ConstructSupportPair, RetryBudgetExhaustionReported) {
    // Weights fixed to 1 everywhere still work, so force failure with zero attempts.
    const PrimeModulus p5(5);
    const SupportSet full = SupportSet::full(p5);
    EXPECT_THROW(construct_support_pair(full, full, {.seed = 0, .max_attempts = 0}), budget_exceeded);
}

TEST(ConstructSupportPair, ScalingInvariance) {
    const PrimeModulus p7(7);
    const auto w = construct_support_pair(SupportSet(p7, {1, 2, 5}), SupportSet(p7, {0, 2, 3, 4, 6}));
    for (const Rational& s : {Rational(-1), Rational(3, 8), Rational(1000)}) {
        const SignalFn g = s * w.f;
        EXPECT_EQ(support(g), w.target_A);
        EXPECT_EQ(support(dft(g)), w.target_B);
    }
}

TEST(CertifyTightness, Examples) {
    const PrimeModulus p5(5), p3(3);
    for (unsigned a = 0; a < 5; ++a) EXPECT_TRUE(certify_tightness(p5, SupportSet(p5, {a}), SupportSet(p5, {0, 1, 2, 3})));
    EXPECT_TRUE(certify_tightness(p5, SupportSet(p5, {0, 1}), SupportSet(p5, {0, 2, 3})));
    EXPECT_THROW(certify_tightness(p5, SupportSet(p5, {0, 1}), SupportSet(p5, {0, 2, 3, 4})), precondition_error);
    EXPECT_THROW(certify_tightness(p5, SupportSet(p5), SupportSet(p5, {0})), precondition_error);

    // Brute-force enumeration for p = 3: the count of (A, B) with A nonempty and
    // |A| + |B| <= 3 is 34.
    std::size_t count = 0;
    for (std::uint64_t a = 1; a < 8; ++a)
        for (std::uint64_t b = 0; b < 8; ++b) {
            if (std::popcount(a) + std::popcount(b) > 3) continue;
            EXPECT_TRUE(certify_tightness(p3, SupportSet::from_mask(p3, a), SupportSet::from_mask(p3, b)));
            ++count;
        }
    EXPECT_EQ(count, 34U);
}

TEST(ExhaustiveCertification, CountsForSmallPrimes) {
    auto s = exhaustive_certification(PrimeModulus(3));
    EXPECT_TRUE(s.all_passed());
    EXPECT_EQ(s.minors_checked, 19U);
    EXPECT_EQ(s.minors_nonzero, 19U);
    EXPECT_EQ(s.tightness_checked, 34U);
    EXPECT_EQ(s.achievability_checked, 22U);
    EXPECT_EQ(s.achievability_ok, 22U);

    s = exhaustive_certification(PrimeModulus(5), {.jobs = 2, .record_instances = true});
    EXPECT_TRUE(s.all_passed());
    EXPECT_EQ(s.minors_checked, 251U);
    EXPECT_EQ(s.instances.size(), s.minors_checked + s.tightness_checked + s.achievability_checked);

    EXPECT_THROW(exhaustive_certification(PrimeModulus(11)), budget_exceeded);
}

TEST(ExhaustiveCertification, ParallelismDoesNotChangeResults) {
    const auto one = exhaustive_certification(PrimeModulus(5), {.jobs = 1, .record_instances = true});
    const auto four = exhaustive_certification(PrimeModulus(5), {.jobs = 4, .record_instances = true});
    ASSERT_EQ(one.instances.size(), four.instances.size());
    for (std::size_t i = 0; i < one.instances.size(); ++i) {
        EXPECT_EQ(one.instances[i].first, four.instances[i].first);
        EXPECT_EQ(one.instances[i].second, four.instances[i].second);
        EXPECT_EQ(one.instances[i].attempts, four.instances[i].attempts);
    }
    EXPECT_EQ(one.max_attempts_used, four.max_attempts_used);
}
