#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "qchow/hnf.hpp"
#include "qchow/poly_text.hpp"
#include "qchow/zideal.hpp"

using namespace qchow;

namespace {

SparsePoly C(const char* s) { return parse_poly(s, Varset::C); }

SparsePoly random_homogeneous(std::mt19937& rng, int d) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    SparsePoly p(Varset::C);
    for (const auto& m : graded_monomials(d, Varset::C)) p += SparsePoly::monomial(Varset::C, m, coeff(rng));
    return p;
}

// Brute force: is b an integer combination of the columns of A with entries
// in [-r, r]?
bool brute_in_lattice(const std::vector<std::vector<long>>& A, const std::vector<long>& b, int r) {
    const std::size_t n = A.front().size();
    std::vector<int> x(n, -r);
    for (;;) {
        bool ok = true;
        for (std::size_t i = 0; i < A.size() && ok; ++i) {
            long s = 0;
            for (std::size_t j = 0; j < n; ++j) s += A[i][j] * x[j];
            ok = s == b[i];
        }
        if (ok) return true;
        std::size_t k = 0;
        while (k < n && x[k] == r) x[k++] = -r;
        if (k == n) return false;
        ++x[k];
    }
}

}  // namespace

TEST(GradedMonomials, WeightedCounts) {
    auto two = graded_monomials(2, Varset::C);
    std::set<std::string> got;
    for (const auto& m : two) got.insert(SparsePoly::monomial(Varset::C, m).to_string());
    EXPECT_EQ(got, (std::set<std::string>{"c1^2", "c1*h", "h^2", "c2"}));
    // Count against a direct enumeration of a + 2b + 3c + e = d.
    for (int d = 0; d <= 15; ++d) {
        std::size_t n = 0;
        for (int a = 0; a <= d; ++a)
            for (int b = 0; 2 * b <= d; ++b)
                for (int c = 0; 3 * c <= d; ++c)
                    if (a + 2 * b + 3 * c <= d) ++n;
        EXPECT_EQ(graded_monomials(d, Varset::C).size(), n);
        EXPECT_EQ(graded_monomials(d, Varset::L).size(), static_cast<std::size_t>((d + 1) * (d + 2) * (d + 3) / 6));
    }
}

TEST(Hnf, AgreesWithBruteForceOnSmallSystems) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> e(-4, 4);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t m = 2 + trial % 2, n = 2 + (trial / 2) % 2;
        std::vector<std::vector<long>> A(m, std::vector<long>(n));
        std::vector<std::vector<mpz_class>> Az(m, std::vector<mpz_class>(n));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) Az[i][j] = A[i][j] = e(rng);
        std::vector<long> b(m);
        std::vector<mpz_class> bz(m);
        for (std::size_t i = 0; i < m; ++i) bz[i] = b[i] = e(rng);
        auto x = hnf_solve(Az, bz);
        if (x) {
            for (std::size_t i = 0; i < m; ++i) {
                mpz_class s = 0;
                for (std::size_t j = 0; j < n; ++j) s += Az[i][j] * (*x)[j];
                EXPECT_EQ(s, bz[i]);
            }
        } else {
            EXPECT_FALSE(brute_in_lattice(A, b, 12)) << "trial " << trial;
        }
    }
}

TEST(Hnf, DetectsIndexOfSublattice) {
    std::vector<std::vector<mpz_class>> A{{2, 0}, {0, 3}};
    EXPECT_FALSE(hnf_solve(A, {1, 0}).has_value());
    EXPECT_TRUE(hnf_solve(A, {4, -3}).has_value());
}

TEST(Member, RandomCombinationsAreMembersWithCertificates) {
    std::mt19937 rng(23);
    IdealBasis I{"I", {C("3*h - c1"), C("c1^2 - 4*c2 + h^2"), C("2*c3 + c1*c2")}};
    for (int trial = 0; trial < 20; ++trial) {
        SparsePoly f(Varset::C);
        int d = 3 + trial % 4;
        for (const auto& g : I.gens) f += random_homogeneous(rng, d - g.degree()) * g;
        auto r = member(f, I);
        ASSERT_TRUE(r.member);
        ASSERT_TRUE(r.certificate->verify());
        EXPECT_TRUE(check_certificate_line(r.certificate->to_line()));
    }
}

TEST(Member, IntegralityMatters) {
    IdealBasis I{"I", {C("2*c1")}};
    auto r = member(C("c1"), I);
    EXPECT_FALSE(r.member);
    EXPECT_EQ(r.failing_degree, 1);
    EXPECT_TRUE(member(C("6*c1*h"), I).member);
    EXPECT_TRUE(member_mod(C("c1"), IdealBasis{"J", {C("3*c1")}}, 2));
    EXPECT_FALSE(member_mod(C("c1"), IdealBasis{"J", {C("3*c1")}}, 3));
    EXPECT_FALSE(member_mod(C("3*c1"), IdealBasis{"J", {C("9*c1")}}, 9));
    EXPECT_TRUE(member_mod(C("3*c1"), IdealBasis{"J", {C("12*c1")}}, 9));
}

TEST(Member, IdealEqualityOfDifferentBases) {
    IdealBasis a{"a", {C("c1 + h"), C("c2")}};
    IdealBasis b{"b", {C("c1 + h"), C("c2 + 5*c1^2 + 5*c1*h")}};
    EXPECT_TRUE(ideal_equal(a, b).equal);
    IdealBasis c{"c", {C("c1 + h"), C("2*c2")}};
    EXPECT_FALSE(ideal_equal(a, c).equal);
}

TEST(Certificate, TamperedLineFails) {
    EXPECT_TRUE(check_certificate_line("2*c1*h = (h)*(2*c1)"));
    EXPECT_FALSE(check_certificate_line("2*c1*h = (h)*(3*c1)"));
}
