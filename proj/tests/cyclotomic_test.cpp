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

#include <cstdlib>

#include "test_support.hpp"

using namespace primefourier;
using pf_test::random_cyclo;

namespace {

std::vector<Rational> q(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST(PrimeModulus, AcceptsPrimesRejectsOthers) {
    EXPECT_EQ(PrimeModulus(2).value(), 2U);
    EXPECT_EQ(PrimeModulus(10007).value(), 10007U);
    EXPECT_THROW(PrimeModulus(4), precondition_error);
    EXPECT_THROW(PrimeModulus(1), precondition_error);
    EXPECT_THROW(PrimeModulus(0), precondition_error);
    EXPECT_THROW(PrimeModulus(-7), precondition_error);
    EXPECT_THROW(PrimeModulus(10009), precondition_error);  // prime, above default bound
    EXPECT_EQ(PrimeModulus(10009, 20000).value(), 10009U);
}

TEST(PrimeModulus, TrialDivisionMatchesSieve) {
    std::vector<bool> composite(2000);
    for (int i = 2; i < 2000; ++i)
        for (int j = 2 * i; j < 2000; j += i) composite[j] = true;
    for (int n = 0; n < 2000; ++n) EXPECT_EQ(is_prime(n), n >= 2 && !composite[n]) << n;
}

TEST(RootPower, CanonicalVectors) {
    const PrimeModulus p5(5), p3(3);
    EXPECT_EQ(root_power(p5, 0), CycloNum(p5, q({1, 0, 0, 0})));
    EXPECT_EQ(root_power(p5, 7), CycloNum(p5, q({0, 0, 1, 0})));
    EXPECT_EQ(root_power(p3, 2), CycloNum(p3, q({-1, -1})));
    EXPECT_EQ(root_power(p5, -1), root_power(p5, 4));
}

TEST(Arithmetic, Examples) {
    const PrimeModulus p5(5), p3(3);
    const CycloNum w = root_power(p5, 1);
    EXPECT_TRUE((w + (-w)).is_zero());
    EXPECT_EQ(w * root_power(p5, 4), CycloNum(p5, Rational(1)));
    const CycloNum w3 = root_power(p3, 1);
    const CycloNum one3(p3, Rational(1));
    EXPECT_EQ((w3 + one3) * (w3 - one3), CycloNum(p3, q({-2, -1})));
}

TEST(Arithmetic, ModulusMismatchRejected) {
    const CycloNum a(PrimeModulus(5), Rational(1));
    const CycloNum b(PrimeModulus(7), Rational(1));
    EXPECT_THROW(a + b, precondition_error);
    EXPECT_THROW(a * b, precondition_error);
}

TEST(Arithmetic, CoefficientCountEnforced) {
    EXPECT_THROW(CycloNum(PrimeModulus(5), q({1, 2, 3, 4, 5})), precondition_error);
}

TEST(ZeroTest, Examples) {
    const PrimeModulus p5(5);
    CycloNum s(p5);
    for (int k = 0; k < 5; ++k) s += root_power(p5, k);
    EXPECT_TRUE(is_zero(s));
    EXPECT_FALSE(is_zero(root_power(p5, 2) - CycloNum(p5, Rational(1))));
}

TEST(Inverse, Examples) {
    const PrimeModulus p5(5), p3(3);
    EXPECT_EQ(inverse(root_power(p5, 1)), CycloNum(p5, q({-1, -1, -1, -1})));
    EXPECT_EQ(inverse(CycloNum(p5, Rational(2))), CycloNum(p5, Rational(1, 2)));
    // (1 - w)(2 + w) = 2 - w - w^2 = 3 in Q(w_3).
    const CycloNum a(p3, q({1, -1}));
    const CycloNum expected = CycloNum(p3, q({2, 1})) * Rational(1, 3);
    EXPECT_EQ(inverse(a), expected);
    EXPECT_NEAR(std::abs(embed(a) * embed(expected) - 1.0), 0.0, 1e-12);
    EXPECT_THROW(inverse(CycloNum(p5)), std::domain_error);
}

TEST(Inverse, FieldAxiomOnRandomElements) {
    std::mt19937_64 rng(11);
    for (int p : {2, 3, 5, 7, 11, 13}) {
        const PrimeModulus m(p);
        const CycloNum one(m, Rational(1));
        for (int i = 0; i < 40; ++i) {
            CycloNum a = random_cyclo(m, rng);
            if (a.is_zero()) continue;
            EXPECT_TRUE((a * inverse(a) - one).is_zero()) << to_string(a);
        }
    }
}

TEST(Conjugation, Examples) {
    const PrimeModulus p7(7);
    EXPECT_EQ(conj(root_power(p7, 1)), root_power(p7, 6));
    EXPECT_EQ(conj(CycloNum(p7, Rational(3, 4))), CycloNum(p7, Rational(3, 4)));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const CycloNum a = random_cyclo(p7, rng);
        EXPECT_EQ(conj(conj(a)), a);
        EXPECT_NEAR(std::abs(embed(conj(a)) - std::conj(embed(a))), 0.0, 1e-9);
    }
}

TEST(Embedding, MinimalPolynomialIdentity) {
    const PrimeModulus p7(7);
    CycloNum s(p7);
    for (int k = 0; k <= 5; ++k) s += root_power(p7, k);
    EXPECT_LT(std::abs(embed(s) - (-pf_test::unit_root(7, -1))), 1e-12);
}

TEST(Embedding, NonPrimeRejectedBeforeEmbedding) { EXPECT_THROW(PrimeModulus(4), precondition_error); }

TEST(Embedding, OverflowReported) {
    Rational huge(1);
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
    huge = big;
    EXPECT_THROW(embed(CycloNum(PrimeModulus(5), huge)), std::overflow_error);
}

// Ring axioms, conjugation as homomorphism and the floating embedding as an
// approximate homomorphism, on seeded random samples.
TEST(Properties, RingAxiomsAndHomomorphisms) {
    std::mt19937_64 rng(2026);
    for (int p : {2, 3, 5, 7, 11, 13, 31, 97}) {
        const PrimeModulus m(p);
        for (int i = 0; i < 20; ++i) {
            const CycloNum a = random_cyclo(m, rng, 1000);
            const CycloNum b = random_cyclo(m, rng, 1000);
            const CycloNum c = random_cyclo(m, rng, 1000);
            EXPECT_TRUE((a + (-a)).is_zero());
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(conj(a * b), conj(a) * conj(b));
            EXPECT_EQ(a.times_root(3), a * root_power(m, 3));
            const std::complex<double> ab = embed(a) * embed(b);
            EXPECT_LT(std::abs(embed(a * b) - ab), 1e-9 * std::max(1.0, std::abs(ab)));
        }
    }
}

TEST(Properties, RootsOfUnityRelations) {
    for (int p : {2, 3, 5, 7, 11, 13, 101}) {
        const PrimeModulus m(p);
        CycloNum power(m, Rational(1)), sum(m);
        for (int k = 0; k < p; ++k) {
            sum += power;
            power *= root_power(m, 1);
        }
        EXPECT_EQ(power, CycloNum(m, Rational(1))) << p;
        EXPECT_TRUE(sum.is_zero()) << p;
    }
}

TEST(TextForm, CanonicalAndParsable) {
    const PrimeModulus p5(5);
    const CycloNum a(p5, {Rational(1, 2), Rational(-3), Rational(0), Rational(7, 9)});
    EXPECT_EQ(to_string(a), "1/2 + -3*w + 0*w^2 + 7/9*w^3");
    EXPECT_EQ(to_string(root_power(PrimeModulus(3), 2)), "-1 + -1*w");
    EXPECT_EQ(parse_cyclonum(p5, "2*w^4 + 1"), CycloNum(p5, q({-1, -2, -2, -2})));
    EXPECT_THROW(parse_cyclonum(p5, "1 + x"), precondition_error);
    EXPECT_THROW(parse_cyclonum(p5, "1/0"), precondition_error);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 30; ++i) {
        CycloNum b = random_cyclo(p5, rng) * Rational(1, 1 + i);
        EXPECT_EQ(parse_cyclonum(p5, to_string(b)), b);
    }
}

TEST(GaloisReduce, Examples) {
    const PrimeModulus p5(5), p3(3);
    IntPolynomial sq(1);
    sq.add_term({2}, 1);
    const std::vector<unsigned> k3{3};
    EXPECT_EQ(galois_reduce(sq, k3, p5), IntPolynomial(1).add_term({1}, 1));

    IntPolynomial prod(2);
    prod.add_term({1, 1}, 1);
    const std::vector<unsigned> k23{2, 3};
    EXPECT_EQ(galois_reduce(prod, k23, p5), IntPolynomial(1).add_term({0}, 1));

    IntPolynomial phi(1);
    phi.add_term({0}, 1).add_term({1}, 1).add_term({2}, 1);
    const std::vector<unsigned> k1{1};
    EXPECT_EQ(galois_reduce(phi, k1, p3), phi);

    const std::vector<unsigned> bad{5};
    EXPECT_THROW(galois_reduce(sq, bad, p5), precondition_error);
}

TEST(GaloisDivisibility, Examples) {
    const PrimeModulus p3(3), p5(5);
    IntPolynomial phi(1);
    phi.add_term({0}, 1).add_term({1}, 1).add_term({2}, 1);
    const std::vector<unsigned> k1{1};
    auto r = galois_divisibility_check(phi, k1, p3);
    EXPECT_TRUE(r.vanishes_at_roots);
    EXPECT_EQ(r.value_at_one, 3);
    EXPECT_TRUE(r.divisible_by_p);

    IntPolynomial lin(1);
    lin.add_term({1}, 1).add_term({0}, -1);
    const std::vector<unsigned> k0{0};
    r = galois_divisibility_check(lin, k0, p5);
    EXPECT_TRUE(r.vanishes_at_roots);
    EXPECT_EQ(r.value_at_one, 0);
    EXPECT_TRUE(r.divisible_by_p);

    IntPolynomial diff(2);
    diff.add_term({1, 0}, 1).add_term({0, 1}, -1);
    const std::vector<unsigned> k12{1, 2};
    r = galois_divisibility_check(diff, k12, p5);
    EXPECT_FALSE(r.vanishes_at_roots);
}

// Random integer polynomials in up to 4 variables of degree up to 20; the
// univariate fold must agree with direct exact evaluation at the roots and at
// 1, and a vanishing value must come with divisibility by p.
TEST(GaloisDivisibility, RandomPolynomialsNeverContradict) {
    std::mt19937_64 rng(77);
    std::size_t vanishing = 0;
    for (int p : {2, 3, 5, 7, 11, 13}) {
        const PrimeModulus m(p);
        for (int trial = 0; trial < 300; ++trial) {
            const unsigned n = std::uniform_int_distribution<unsigned>(1, 4)(rng);
            IntPolynomial poly(n);
            const int terms = std::uniform_int_distribution<int>(1, 8)(rng);
            for (int t = 0; t < terms; ++t) {
                IntPolynomial::Exponents e(n);
                for (auto& x : e) x = std::uniform_int_distribution<unsigned>(0, 20 / n)(rng);
                poly.add_term(e, std::uniform_int_distribution<int>(-3, 3)(rng));
            }
            // Multiply in a factor that vanishes at the chosen roots now and then.
            std::vector<unsigned> k(n);
            for (auto& x : k) x = std::uniform_int_distribution<unsigned>(0, p - 1)(rng);
            if (trial % 3 == 0) {
                IntPolynomial with_phi(n);
                for (const auto& [e, c] : poly.terms())
                    for (unsigned i = 0; i < static_cast<unsigned>(p); ++i) {
                        auto e2 = e;
                        e2[0] += i;
                        with_phi.add_term(e2, c);
                    }
                poly = with_phi;
                if (k[0] == 0) k[0] = 1;
            }
            const auto r = galois_divisibility_check(poly, k, m);
            EXPECT_FALSE(r.vanishes_at_roots && !r.divisible_by_p);

            CycloNum direct(m);
            for (const auto& [e, c] : poly.terms()) {
                CycloNum term(m, Rational(c));
                for (unsigned j = 0; j < n; ++j)
                    term = term.times_root(static_cast<std::int64_t>(e[j]) * k[j]);
                direct += term;
            }
            EXPECT_EQ(direct.is_zero(), r.vanishes_at_roots);
            EXPECT_EQ(galois_reduce(poly, k, m).value_at_ones(), poly.value_at_ones());
            vanishing += r.vanishes_at_roots;
        }
    }
    EXPECT_GT(vanishing, 100U);
}
