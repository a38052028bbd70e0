#include <gtest/gtest.h>

#include <map>
#include <set>

#include "qchow/errors.hpp"
#include "qchow/parallel.hpp"
#include "qchow/poly_text.hpp"
#include "qchow/report.hpp"
#include "qchow/scenarios.hpp"

using namespace qchow;

namespace {

// Coefficients of prod_n (1 - x^n)^(-tau(n)): weighted partitions of d are
// multisets of pairs (k, m) with sum k*m = d, and n = k*m has tau(n) such pairs.
std::vector<long> weighted_partition_counts(int top) {
    std::vector<long> series(top + 1, 0);
    series[0] = 1;
    for (int n = 1; n <= top; ++n) {
        int tau = 0;
        for (int k = 1; k <= n; ++k) tau += n % k == 0;
        for (int t = 0; t < tau; ++t)
            for (int d = n; d <= top; ++d) series[d] += series[d - n];
    }
    return series;
}

}  // namespace

TEST(Strata, PartitionCountsMatchGeneratingFunction) {
    auto expected = weighted_partition_counts(8);
    for (int d = 1; d <= 8; ++d) {
        auto parts = weighted_partitions(d);
        EXPECT_EQ(static_cast<long>(parts.size()), expected[d]) << d;
        std::set<std::string> labels;
        for (const auto& p : parts) {
            int s = 0;
            for (std::size_t j = 0; j < p.mu.size(); ++j) {
                s += p.mu[j] * p.m[j];
                if (j) {
                    EXPECT_LE(p.mu[j - 1], p.mu[j]);
                    if (p.mu[j - 1] == p.mu[j]) EXPECT_GE(p.m[j - 1], p.m[j]);
                }
            }
            EXPECT_EQ(s, d);
            labels.insert(p.label());
        }
        EXPECT_EQ(labels.size(), parts.size());
    }
}

TEST(Strata, QuarticCodimensions) {
    auto parts = weighted_partitions(4);
    ASSERT_EQ(parts.size(), 11u);
    std::map<std::string, int> computed;
    for (const auto& p : parts) computed[p.label()] = codim(p, 4);
    EXPECT_EQ(computed.at("{1,3}(1,1)"), 3);
    EXPECT_EQ(computed.at("{1}(4)"), 12);
    EXPECT_EQ(computed.at("{2}(2)"), 9);
    for (const auto& [label, c] : quartic_strata_codims()) EXPECT_EQ(computed.at(label), c) << label;
    for (const auto& [a, b] : quartic_strata_edges()) EXPECT_LT(computed.at(a), computed.at(b));
    EXPECT_TRUE(scenario_strata().pass());
}

TEST(Scenarios, GeneratorCounts) {
    auto tuples = eta_tuples();
    EXPECT_EQ(tuples.size(), 160u);
    std::set<std::array<unsigned, 7>> unique(tuples.begin(), tuples.end());
    EXPECT_EQ(unique.size(), tuples.size());
    const unsigned w[7] = {1, 2, 1, 2, 3, 2, 3};
    for (const auto& t : tuples) {
        unsigned d = 0;
        for (int k = 0; k < 7; ++k) d += w[k] * t[k];
        EXPECT_LE(d, 6u);
    }
    EXPECT_EQ(tuples.front(), (std::array<unsigned, 7>{}));

    auto gens = hilb2w2_generators();
    EXPECT_EQ(gens.size(), 45u);
    std::set<std::string> labels;
    for (const auto& g : gens) labels.insert(g.label());
    EXPECT_EQ(labels.size(), 45u);
    EXPECT_EQ(gens.front().label(), "1");
}

TEST(Scenarios, TermCounts) {
    EXPECT_EQ(alpha_terms(0).size(), 36u);
    EXPECT_EQ(square_terms(0).size(), 6u);
    EXPECT_EQ(line_cubic_terms(0).size(), 30u);
    EXPECT_EQ(binodal_terms(0, 0).size(), 81u);
    EXPECT_EQ(hilb2w2_terms(hilb2w2_generators()[0]).size(), 45u);
    EXPECT_EQ(trinodal_terms({}).size(), 186u);
}

TEST(Scenarios, SquareImagesAreSquares) {
    for (const auto& t : square_terms(1)) {
        EXPECT_EQ(t.image.degree(), 4);
        for (int k = 0; k < 3; ++k) EXPECT_EQ(t.image.e[k] % 2, 0);
    }
    EXPECT_EQ(square_terms(0)[0].image.to_string(), "X^4");
}

TEST(Scenarios, LineCubicRestrictionAndDelta) {
    auto terms = line_cubic_terms(1);
    EXPECT_EQ(terms[0].label, "(X,X^3)");
    EXPECT_EQ(terms[0].numerator, parse_poly("-l1", Varset::L));
    EXPECT_EQ(localize_pushforward(line_cubic_terms(0)), delta13());
    auto v = scenario_line_cubic();
    EXPECT_TRUE(v.pass());
    for (const auto& r : v.rows)
        if (r.label != "1") EXPECT_TRUE(r.certificate && r.certificate->verify());
}

TEST(Scenarios, AlphaRegeneratesIdeal) {
    auto v = scenario_alpha();
    ASSERT_TRUE(v.integrity_ok) << v.integrity_message;
    EXPECT_TRUE(v.pass());
    for (const auto& r : v.rows) {
        ASSERT_TRUE(r.certificate) << r.label;
        EXPECT_TRUE(r.certificate->verify()) << r.label;
    }
    EXPECT_EQ(v.rows.back().label, "p4");
}

TEST(Scenarios, IndependenceNegatives) {
    auto v = scenario_independence();
    EXPECT_TRUE(v.pass());
    int negatives = 0;
    for (const auto& r : v.rows) {
        if (r.expected_negative) {
            ++negatives;
            EXPECT_FALSE(r.member) << r.label;
            EXPECT_FALSE(r.certificate) << r.label;
        }
    }
    EXPECT_GE(negatives, 3);
}

TEST(Scenarios, PresentationSubstitution) {
    auto v = scenario_presentation();
    EXPECT_TRUE(v.pass());
    EXPECT_EQ(v.rows[0].value, "-9*c1");
    EXPECT_EQ(v.rows[2].value, "c1*c2 - 28*c3");
}

TEST(Scenarios, ParallelismDoesNotChangeReport) {
    auto a = run_scenarios({"square", "binodal"}, {1});
    auto b = run_scenarios({"square", "binodal"}, {4});
    for (auto* vs : {&a, &b})
        for (auto& v : *vs) v.seconds = 0;
    EXPECT_EQ(report_json(a), report_json(b));
    EXPECT_EQ(exit_code(a), 0);
}

TEST(Scenarios, UnknownIdRejected) {
    EXPECT_THROW(run_scenarios({"alpha", "bogus"}, {}), std::invalid_argument);
}

TEST(Scenarios, ExitCodes) {
    Verdict ok;
    ok.rows.push_back({"x", "1", "(1)", true, false, std::nullopt});
    Verdict failed = ok;
    failed.rows[0].member = false;
    Verdict broken = ok;
    broken.integrity_ok = false;
    EXPECT_EQ(exit_code({ok}), 0);
    EXPECT_EQ(exit_code({ok, failed}), 1);
    EXPECT_EQ(exit_code({failed, broken}), 2);
    EXPECT_FALSE(Verdict{}.pass());
}

TEST(Scenarios, ParallelMapKeepsOrderAndRethrows) {
    auto v = parallel_map<int>(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
    for (int i = 0; i < 100; ++i) EXPECT_EQ(v[i], i * i);
    EXPECT_THROW(parallel_map<int>(10, 3,
                                   [](std::size_t i) -> int {
                                       if (i == 7) throw NotSymmetric("boom");
                                       return 0;
                                   }),
                 NotSymmetric);
}

TEST(Scenarios, IntegrityErrorIsReported) {
    // A localization sum missing one fixed point cannot be polynomial.
    auto terms = alpha_terms(0);
    terms.pop_back();
    EXPECT_THROW(localize_pushforward(terms), ResidualDenominator);
}
