#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace knotlab;

namespace {

const IntMatrix kBase{{0, 2}, {1, 0}};

/// Random valid form of genus 1 or 2, built by congruence and enlargement.
SeifertMatrix random_form(std::mt19937_64& rng) {
    SeifertMatrix s = SeifertMatrix::validate(oracle::random_genus_one(rng, 3));
    std::bernoulli_distribution coin(0.5);
    if (coin(rng)) {
        std::uniform_int_distribution<int> d(-2, 2);
        std::vector<IntMatrix::Entry> q{d(rng), d(rng)};
        s = coin(rng) ? enlarge_lambda2(s, q) : enlarge_lambda3(s, q);
    }
    return apply_lambda1(s, CongruenceCertificate::make(oracle::random_unimodular(rng, s.size(), 4)));
}

}  // namespace

TEST(Matrix, ParseBothFormats) {
    EXPECT_EQ(IntMatrix::parse("[[0,2],[1,0]]"), kBase);
    EXPECT_EQ(IntMatrix::parse(" [ [0, 2] , [1,0] ] "), kBase);
    EXPECT_EQ(IntMatrix::parse("0 2\n1 0\n"), kBase);
    EXPECT_EQ(IntMatrix::parse("[]").rows(), 0u);
    EXPECT_EQ(IntMatrix::parse("").rows(), 0u);
    EXPECT_EQ(kBase.to_string(), "[[0,2],[1,0]]");
    EXPECT_EQ(IntMatrix::parse(kBase.to_rows_string()), kBase);
    for (const char* bad : {"[[0,2],[1]]", "[[0,x]]", "0 2\n1", "[[1,2]", "1 2 z"}) {
        EXPECT_THROW(IntMatrix::parse(bad), DomainError) << bad;
    }
}

TEST(Matrix, OverflowIsAnError) {
    const IntMatrix big{{std::numeric_limits<std::int64_t>::max()}};
    EXPECT_THROW(big * IntMatrix{{2}}, DomainError);
}

TEST(Matrix, BareissAgreesWithLeibniz) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-9, 9), size(1, 6);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = static_cast<std::size_t>(size(rng));
        IntMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng) % 3 == 0 ? 0 : d(rng);
        EXPECT_EQ(determinant(m), oracle::leibniz_det(oracle::big(m)));
    }
    EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
}

TEST(Seifert, ValidateRejectsExactlyBadSkewDeterminant) {
    EXPECT_NO_THROW(SeifertMatrix::validate(kBase));
    EXPECT_THROW(SeifertMatrix::parse("[[0,1],[1,0]]"), DomainError);
    EXPECT_THROW(SeifertMatrix::parse("[[1,2,3],[4,5,6],[7,8,9]]"), DomainError);
    EXPECT_THROW(SeifertMatrix::parse("[[1,2]]"), DomainError);
    EXPECT_EQ(SeifertMatrix::parse("[]").size(), 0u);

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int i = 0; i < 2000; ++i) {
        const std::size_t n = i % 2 == 0 ? 2 : 4;
        IntMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
        const bool ok = oracle::leibniz_det(oracle::big(m - m.transpose())) == 1;
        bool accepted = true;
        try {
            SeifertMatrix::validate(m);
        } catch (const DomainError&) {
            accepted = false;
        }
        EXPECT_EQ(accepted, ok) << m.to_string();
    }
}

TEST(Seifert, AlexanderValues) {
    const auto target = LaurentPoly::parse("2 - 5t + 2t^2");
    EXPECT_EQ(alexander(SeifertMatrix::validate(kBase)), target);
    EXPECT_EQ(alexander(SeifertMatrix::parse("[[-3,2],[1,0]]")), target);
    EXPECT_EQ(alexander(SeifertMatrix::parse("[[-1,1],[0,-1]]")), LaurentPoly::parse("1 - t + t^2"));
    EXPECT_EQ(alexander(SeifertMatrix()), LaurentPoly::constant(1));
    const std::vector<IntMatrix::Entry> q2{5, -7}, q3{1, 1};
    const SeifertMatrix big = enlarge_lambda3(enlarge_lambda2(SeifertMatrix::validate(kBase), q2), std::vector<IntMatrix::Entry>{1, 1, 0, 0});
    EXPECT_EQ(alexander(enlarge_lambda2(SeifertMatrix::validate(kBase), q2)), target);
    EXPECT_EQ(alexander(enlarge_lambda3(SeifertMatrix::validate(kBase), q3)), target);
    EXPECT_EQ(alexander(big), target);
}

TEST(Seifert, AlexanderAgreesWithLeibnizOracle) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 150; ++i) {
        const SeifertMatrix s = random_form(rng);
        EXPECT_EQ(oracle::from(alexander_determinant(s)), oracle::alexander_raw(s.matrix())) << s.to_string();
        EXPECT_EQ(oracle::from(alexander(s)), oracle::normalize(oracle::alexander_raw(s.matrix())));
    }
}

TEST(Seifert, SignatureAgreesWithDescartesOracle) {
    EXPECT_EQ(signature(SeifertMatrix::validate(kBase)), 0);
    EXPECT_EQ(signature(SeifertMatrix::parse("[[-1,1],[0,-1]]")), -2);
    EXPECT_EQ(signature(SeifertMatrix::parse("[[1,0],[-1,1]]")), 2);
    std::mt19937_64 rng(29);
    for (int i = 0; i < 150; ++i) {
        const SeifertMatrix s = random_form(rng);
        EXPECT_EQ(signature(s), oracle::signature(s.matrix())) << s.to_string();
    }
}

TEST(Seifert, DeterminantInvariant) {
    EXPECT_EQ(determinant_invariant(SeifertMatrix::validate(kBase)), 9);
    EXPECT_EQ(determinant_invariant(SeifertMatrix::parse("[[0,3],[2,0]]")), 25);
    EXPECT_EQ(determinant_invariant(SeifertMatrix()), 1);
}

TEST(Seifert, InvariantsSurviveMoves) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int i = 0; i < 120; ++i) {
        const SeifertMatrix s = random_form(rng);
        const LaurentPoly a = alexander(s);
        const int sig = signature(s);
        const Integer det = determinant_invariant(s);

        const SeifertMatrix moved = apply_lambda1(s, CongruenceCertificate::make(oracle::random_unimodular(rng, s.size(), 5)));
        EXPECT_EQ(alexander(moved), a);
        EXPECT_EQ(signature(moved), sig);
        EXPECT_EQ(determinant_invariant(moved), det);

        std::vector<IntMatrix::Entry> q(s.size());
        for (auto& v : q) v = d(rng);
        for (const SeifertMatrix& e : {enlarge_lambda2(s, q), enlarge_lambda3(s, q)}) {
            EXPECT_EQ(alexander(e), a);
            EXPECT_EQ(signature(e), sig);
            EXPECT_EQ(determinant_invariant(e), det);
        }
        EXPECT_EQ(normalize_units(substitute_inverse(a)), a);
    }
}

TEST(Seifert, EnlargementLayout) {
    const std::vector<IntMatrix::Entry> none;
    EXPECT_EQ(enlarge_lambda2(SeifertMatrix(), none).matrix(), (IntMatrix{{0, 1}, {0, 0}}));
    EXPECT_EQ(enlarge_lambda3(SeifertMatrix(), none).matrix(), (IntMatrix{{0, 0}, {1, 0}}));
    const std::vector<IntMatrix::Entry> q{4, 5};
    EXPECT_EQ(enlarge_lambda2(SeifertMatrix::validate(kBase), q).matrix(),
              (IntMatrix{{0, 2, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {4, 5, 0, 0}}));
    EXPECT_EQ(enlarge_lambda3(SeifertMatrix::validate(kBase), q).matrix(),
              (IntMatrix{{0, 2, 0, 4}, {1, 0, 0, 5}, {0, 0, 0, 0}, {0, 0, 1, 0}}));
    EXPECT_THROW(enlarge_lambda2(SeifertMatrix::validate(kBase), none), DomainError);
}

TEST(Seifert, TryReduceInvertsEnlargement) {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int i = 0; i < 200; ++i) {
        const SeifertMatrix s = random_form(rng);
        std::vector<IntMatrix::Entry> q(s.size());
        for (auto& v : q) v = d(rng);
        const auto r2 = try_reduce(enlarge_lambda2(s, q));
        ASSERT_TRUE(r2);
        EXPECT_EQ(r2->inner, s);
        EXPECT_EQ(r2->move, EnlargementMove::lambda2);
        EXPECT_EQ(r2->q, q);
        const auto r3 = try_reduce(enlarge_lambda3(s, q));
        ASSERT_TRUE(r3);
        EXPECT_EQ(r3->inner, s);
        EXPECT_EQ(r3->move, EnlargementMove::lambda3);
        EXPECT_EQ(r3->q, q);
    }
    EXPECT_FALSE(try_reduce(SeifertMatrix::validate(kBase)));
    EXPECT_FALSE(try_reduce(SeifertMatrix()));
}

TEST(Seifert, ConnectSumForm) {
    const SeifertMatrix b = SeifertMatrix::validate(kBase);
    const SeifertMatrix k = connect_sum_form(b, b);
    EXPECT_EQ(k.genus(), 2u);
    EXPECT_EQ(k.matrix(), (IntMatrix{{0, 2, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 1, 0}}));
    EXPECT_EQ(alexander(k), alexander(b) * alexander(b));
    EXPECT_EQ(connect_sum_form(b, SeifertMatrix()), b);
}

TEST(Seifert, CertificateMustBeUnimodular) {
    EXPECT_THROW(CongruenceCertificate::make(IntMatrix{{2, 0}, {0, 1}}), DomainError);
    EXPECT_NO_THROW(CongruenceCertificate::make(IntMatrix{{0, 1}, {1, 0}}));
    EXPECT_THROW(apply_lambda1(SeifertMatrix::validate(kBase), CongruenceCertificate::identity(4)), DomainError);
}
