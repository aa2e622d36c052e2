#include <gtest/gtest.h>

#include "generators.hpp"
#include "taftcat/k0.hpp"
#include "taftcat/theorem.hpp"

using namespace taftcat;
using namespace taftcat::tgen;

namespace {

const GradingScheme kZ2 = GradingScheme::z2(3, 5);

K0Class k0_of_monomial(long i, long j) {
    return K0Class(3, 5, LaurentPolynomial2::monomial(i, j));
}

TEST(K0Class, FreeModuleClassIsZero) {
    K0Class c = class_of(free_module(kZ2, {0, 0}));
    // the representative is [n]_x [m]_y on the nose
    EXPECT_EQ(c.rep(), LaurentPolynomial2::quantum_x(3) * LaurentPolynomial2::quantum_y(5));
    EXPECT_TRUE(c.is_zero());

    // shifted free modules are unit multiples, still zero
    EXPECT_TRUE(class_of(free_module(kZ2, {-1, 2})).is_zero());
}

TEST(K0Class, SimpleAndSums) {
    GradedModule s = interval_module(kZ2, {2, -1}, Direction::D0, 1);
    EXPECT_EQ(class_of(s), k0_of_monomial(2, -1));
    GradedModule t = interval_module(kZ2, {0, 1}, Direction::D1, 1);
    EXPECT_EQ(class_of(direct_sum(s, t)), class_of(s) + class_of(t));
    EXPECT_THROW(class_of(counterexample_module()), std::domain_error);
}

TEST(K0Class, EqualityIsCongruence) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> ex(-3, 3);
    std::uniform_int_distribution<int> co(-3, 3);
    auto rand_class = [&]() {
        LaurentPolynomial2 p;
        for (int t = 0; t < 4; ++t)
            p.add_term(ex(rng), ex(rng), Integer(co(rng)));
        return K0Class(3, 5, p);
    };
    LaurentPolynomial2 ideal_gen = LaurentPolynomial2::quantum_x(3) * LaurentPolynomial2::quantum_y(5);
    for (int iter = 0; iter < 50; ++iter) {
        K0Class a = rand_class(), b = rand_class(), c = rand_class();
        // a' = a + unit*[n]_x[m]_y is the same class
        K0Class a2 = K0Class(3, 5, a.rep() + ideal_gen * LaurentPolynomial2::monomial(ex(rng), ex(rng)));
        EXPECT_EQ(a, a2);
        EXPECT_EQ(a + c, a2 + c);
        EXPECT_EQ(a * b, a2 * b);
        EXPECT_EQ((a + b) * c, a * c + b * c);
    }
}

TEST(K0Class, AdditivityOnSplitAndCanonicalSes) {
    GradedModule x = random_module(kZ2, 15, 20);
    GradedModule z = random_module(kZ2, 15, 21);
    // split sequence via direct sum
    GradedModule y = direct_sum(x, z);
    EXPECT_EQ(class_of(y), class_of(x) + class_of(z));

    for (uint64_t seed = 0; seed < 9; ++seed) {
        GradedModule w = random_module(kZ2, 20, 7000 + seed);
        Triangle t = random_ses(w, static_cast<int>(seed));
        EXPECT_TRUE(class_additivity_check(t)) << "seed " << seed;
    }

    // 0 -> P = P -> 0 with P free: both sides zero
    GradedModule p = free_module(kZ2, {0, 0});
    Triangle t = cone_from_ses(identity_morphism(p), zero_morphism(p, GradedModule(kZ2)));
    EXPECT_TRUE(class_additivity_check(t));
    EXPECT_TRUE(class_of(t.y).is_zero());
}

TEST(K0Class, Multiplicativity) {
    GradedModule u = unit_module(kZ2);
    GradedModule s1 = interval_module(kZ2, {1, 2}, Direction::D0, 1);
    GradedModule s2 = interval_module(kZ2, {2, 1}, Direction::D1, 1);
    EXPECT_TRUE(class_multiplicativity_check(u, s1));
    EXPECT_EQ(class_of(tensor(s1, s2)), k0_of_monomial(3, 3));

    for (uint64_t seed = 0; seed < 8; ++seed) {
        GradedModule x = random_module(kZ2, 10, 8000 + seed);
        GradedModule y = random_module(kZ2, 10, 9000 + seed);
        EXPECT_TRUE(class_multiplicativity_check(x, y)) << "seed " << seed;
    }
}

TEST(QuotientClass, ProjectivesDie) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        GradedModule p = random_projective(kZ2, 30, 10000 + seed);
        QuotientImage img = quotient_class(class_of(p));
        EXPECT_TRUE(img.xy.is_zero()) << "seed " << seed;
        EXPECT_TRUE(img.cyclo.is_zero()) << "seed " << seed;
    }
}

TEST(QuotientClass, MonomialPipelineMatchesExponentArithmetic) {
    auto [alpha, beta] = crt_exponents(3, 5);
    for (long a = -2; a <= 2; ++a) {
        for (long b = -2; b <= 2; ++b) {
            QuotientImage img = quotient_class(K0Class(3, 5, LaurentPolynomial2::monomial(a, b)));
            long k = mod_nonneg(a * alpha + b * beta, 15);
            CycloInteger expect(15, IntPolynomial::monomial(static_cast<int>(k)));
            EXPECT_EQ(img.cyclo, expect) << a << "," << b;
        }
    }
}

TEST(QuotientClass, QuantumXDiesInTheIdeal) {
    K0Class qn(3, 5, LaurentPolynomial2::quantum_x(3));
    QuotientImage img = quotient_class(qn);
    EXPECT_TRUE(img.xy.is_zero());
    EXPECT_TRUE(img.cyclo.is_zero());
}

TEST(NonInvertibility, EvaluationWitness) {
    // x -> 0, y -> 1 is well-defined into Z/(m): the defining relation
    // [n]_x [m]_y evaluates to 1 * m = 0 (mod m), yet it sends x to the
    // non-unit 0, so x has no inverse in Z[x, y, y^{-1}]/([n]_x [m]_y)
    const long n = 3, m = 5;
    LaurentPolynomial2 rel = LaurentPolynomial2::quantum_x(n) * LaurentPolynomial2::quantum_y(m);
    Integer value = 0;
    for (const auto& [e, c] : rel.terms())
        if (e.first == 0)  // 0^i kills every term with i > 0
            value += c;
    EXPECT_EQ(value, m);
    EXPECT_EQ(value % m, 0);
}

TEST(SingleAlgebra, FactsForSmallN) {
    for (long n : {2, 3, 5, 7}) {
        SingleAlgebraFacts f = single_algebra_facts(n);
        EXPECT_TRUE(f.x_two_sided_inverse) << n;
        EXPECT_TRUE(f.free_class_zero) << n;
    }
    // n = 2: x is identified with -1, the classical sign of the shift
    EXPECT_EQ(single_algebra_facts(2).nf_x, IntPolynomial(-1));
    EXPECT_EQ(single_algebra_facts(3).nf_x, IntPolynomial::monomial(1));
    EXPECT_THROW(single_algebra_facts(1), std::domain_error);
}

TEST(Theorem, SmallOddPrimePairs) {
    for (auto [n, m] : std::vector<std::pair<long, long>>{{3, 5}, {3, 7}, {5, 7}}) {
        TheoremReport r = verify_cyclotomic_theorem(n, m);
        EXPECT_TRUE(r.step1_ideal_image) << n << "," << m;
        EXPECT_TRUE(r.step2_redundancy) << n << "," << m;
        EXPECT_TRUE(r.step3_crt) << n << "," << m;
        EXPECT_TRUE(r.step4_principal) << n << "," << m;
        EXPECT_TRUE(r.all());
    }
}

TEST(Theorem, ReportRendering) {
    TheoremReport r = verify_cyclotomic_theorem(3, 5);
    EXPECT_EQ(r.to_text(), "step1: PASS\nstep2: PASS\nstep3: PASS\nstep4: PASS\n");
    auto j = r.to_json();
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["m"], 5);
    EXPECT_TRUE(j["all"].get<bool>());
}

TEST(Theorem, RejectsInvalidInputs) {
    EXPECT_THROW(verify_cyclotomic_theorem(3, 3), std::domain_error);
    EXPECT_THROW(verify_cyclotomic_theorem(4, 5), std::domain_error);
    EXPECT_THROW(verify_cyclotomic_theorem(2, 5), std::domain_error);
    EXPECT_THROW(verify_cyclotomic_theorem(3, 2), std::domain_error);
}

}  // namespace
