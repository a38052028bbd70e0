#include <random>

#include <gtest/gtest.h>

#include "qchow/errors.hpp"
#include "qchow/factored_fraction.hpp"
#include "qchow/poly_text.hpp"
#include "qchow/sparse_poly.hpp"

using namespace qchow;

namespace {

SparsePoly random_poly(std::mt19937& rng, int terms, unsigned max_exp) {
    std::uniform_int_distribution<int> coeff(-20, 20);
    std::uniform_int_distribution<unsigned> ex(0, max_exp);
    SparsePoly p(Varset::L);
    for (int i = 0; i < terms; ++i)
        p += SparsePoly::monomial(Varset::L, {ex(rng), ex(rng), ex(rng), ex(rng)}, coeff(rng));
    return p;
}

LinearForm random_form(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-3, 3);
    LinearForm f;
    while (f.is_zero()) f = LinearForm(c(rng), c(rng), c(rng));
    return f;
}

SparsePoly L(const char* s) { return parse_poly(s, Varset::L); }

}  // namespace

TEST(SparsePoly, CanonicalTextPutsHFirstWithinADegree) {
    SparsePoly p = parse_poly("8*c1^2 - 20*c1*h + 9*h^2");
    EXPECT_EQ(p.to_string(), "9*h^2 - 20*c1*h + 8*c1^2");
    EXPECT_EQ(parse_poly("c2 + c1^2 + h^3").to_string(), "h^3 + c1^2 + c2");
    EXPECT_EQ(SparsePoly(Varset::C).to_string(), "0");
    EXPECT_EQ(parse_poly("-1").to_string(), "-1");
}

TEST(SparsePoly, ParsePrintRoundTrip) {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        SparsePoly p = random_poly(rng, 12, 4);
        EXPECT_EQ(parse_poly(p.to_string(), Varset::L), p);
    }
}

TEST(SparsePoly, ArithmeticMatchesExpansion) {
    SparsePoly a = L("l1 + l2");
    SparsePoly b = L("l1 - l2");
    EXPECT_EQ(a * b, L("l1^2 - l2^2"));
    EXPECT_EQ(a.pow(3), L("l1^3 + 3*l1^2*l2 + 3*l1*l2^2 + l2^3"));
    EXPECT_EQ(L("h").mul_linear(LinearForm(1, 0, -1), 2), L("l1*h - l3*h + 2*h^2"));
    EXPECT_THROW(a + parse_poly("c1"), VarsetMismatch);
}

TEST(SparsePoly, ExactDivisionRecoversRandomQuotients) {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        SparsePoly q = random_poly(rng, 15, 5);
        LinearForm f = random_form(rng);
        SparsePoly p = q.mul_linear(f);
        EXPECT_EQ(exact_div_linear(p, f), q);
    }
}

TEST(SparsePoly, ExactDivisionRejectsNonMultiples) {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        SparsePoly q = random_poly(rng, 10, 4);
        LinearForm f = random_form(rng);
        SparsePoly p = q.mul_linear(f) + SparsePoly::monomial(Varset::L, {0, 0, 0, 7}, 1);
        EXPECT_THROW(exact_div_linear(p, f), NotDivisible);
    }
    EXPECT_THROW(exact_div_linear(L("2*l1 + 2*l2"), LinearForm(2, 1, 0)), NotDivisible);
    EXPECT_EQ(exact_div_linear(L("2*l1 + 2*l2"), LinearForm(1, 1, 0)), L("2"));
}

TEST(FactoredFraction, IntegerContentCancels) {
    FactoredFraction f(L("6*l1"), 3);
    EXPECT_EQ(frac_to_poly(f), L("2*l1"));
    EXPECT_THROW(frac_to_poly(FactoredFraction(L("l1"), 2)), ResidualDenominator);
    EXPECT_THROW(frac_to_poly(FactoredFraction(L("l1"), 1, {LinearForm(0, 1, 0)})), ResidualDenominator);
}

TEST(FactoredFraction, DenominatorsAreNormalized) {
    FactoredFraction f(L("1"), 1, {LinearForm(-2, 2, 0)});
    EXPECT_EQ(f.den_int(), 2);
    ASSERT_EQ(f.den_forms().size(), 1u);
    EXPECT_EQ(f.den_forms().front(), LinearForm(1, -1, 0));
    EXPECT_EQ(f.numerator(), L("-1"));
}

// sum_i x_i^k / prod_{j != i} (x_i - x_j) is the complete homogeneous
// symmetric polynomial of degree k - 2 in three variables.
TEST(FactoredFraction, LagrangeIdentity) {
    const LinearForm x[3] = {LinearForm::l(0), LinearForm::l(1), LinearForm::l(2)};
    const char* expected[] = {"0", "0", "1", "l1 + l2 + l3",
                              "l1^2 + l2^2 + l3^2 + l1*l2 + l1*l3 + l2*l3"};
    for (unsigned k = 0; k <= 4; ++k) {
        FactoredFraction sum;
        for (int i = 0; i < 3; ++i) {
            std::vector<LinearForm> den;
            for (int j = 0; j < 3; ++j)
                if (j != i) den.push_back(x[i] - x[j]);
            sum += FactoredFraction(SparsePoly::linear(x[i]).pow(k), 1, den);
        }
        EXPECT_EQ(frac_to_poly(sum), L(expected[k])) << "k=" << k;
    }
}

TEST(FactoredFraction, AdditionIsOrderIndependent) {
    std::mt19937 rng(5);
    std::vector<FactoredFraction> parts;
    for (int i = 0; i < 6; ++i) {
        std::vector<LinearForm> den{random_form(rng), random_form(rng)};
        parts.emplace_back(random_poly(rng, 5, 3), 1 + static_cast<int>(rng() % 4), den);
    }
    FactoredFraction fwd, rev;
    for (const auto& p : parts) fwd += p;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) rev += *it;
    // Compare by clearing denominators against each other.
    FactoredFraction diff = fwd;
    FactoredFraction neg(-rev.numerator(), rev.den_int(), rev.den_forms());
    diff += neg;
    EXPECT_TRUE(diff.numerator().is_zero());
}
