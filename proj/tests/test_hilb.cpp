#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "qchow/errors.hpp"
#include "qchow/hilb.hpp"
#include "qchow/poly_text.hpp"

using namespace qchow;

namespace {

SparsePoly Lp(const char* s) { return parse_poly(s, Varset::L); }

std::set<std::string> names(const std::vector<FormMonomial>& ms) {
    std::set<std::string> s;
    for (const auto& m : ms) s.insert(m.to_string());
    return s;
}

const MonomialIdealPoint& h3(int i) { return hilb_fixed_points(3)[static_cast<std::size_t>(i - 1)]; }

}  // namespace

TEST(HilbTables, Sizes) {
    EXPECT_EQ(hilb_fixed_points(2).size(), 9u);
    EXPECT_EQ(hilb_fixed_points(3).size(), 22u);
    EXPECT_EQ(h3(8).ideal_string(), "(X^2, X*Y, Y^2)");
    for (const auto& p : hilb_fixed_points(2)) EXPECT_EQ(p.length(), 2) << p.label;
    for (const auto& p : hilb_fixed_points(3)) EXPECT_EQ(p.length(), 3) << p.label;
    EXPECT_EQ(htilde_fixed_points().size(), 31u);
}

TEST(HilbTables, InfiniteColengthIsRejected) {
    EXPECT_THROW(make_ideal_point("line", plane(), {{1, 0, 0}}), InfiniteColength);
}

TEST(TangentWeights, Hilb2MatchesPrintedProducts) {
    const auto& pts = hilb_fixed_points(2);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto t = monomial_tangent_weights(pts[i]);
        EXPECT_EQ(t.weights.size(), 4u) << pts[i].label;
        EXPECT_EQ(t.product(), printed_ctop_hilb2()[i]) << pts[i].label;
    }
}

TEST(TangentWeights, Hilb3MatchesPrintedCaseFormulas) {
    for (const auto& p : hilb_fixed_points(3)) {
        auto t = monomial_tangent_weights(p);
        EXPECT_EQ(t.weights.size(), 6u) << p.label;
        EXPECT_EQ(t.product(), printed_ctop_hilb3(p)) << p.label;
    }
    EXPECT_EQ(monomial_tangent_weights(h3(1)).product(),
              Lp("(l3-l1)*(l3-l2)*(l2-l1)*(l2-l3)*(l1-l2)*(l1-l3)"));
}

TEST(TangentWeights, Hilb2W2MatchesPrintedFormulas) {
    const auto& data = hilb2w2_fixed_data();
    ASSERT_EQ(data.size(), 45u);
    for (const auto& p : data) {
        auto t = monomial_tangent_weights(p.ideal);
        EXPECT_EQ(t.weights.size(), 10u) << p.label;
        EXPECT_EQ(t.product(), p.printed_ctop) << p.label;
    }
}

TEST(Blowup, WeightsAtP8) {
    const MonomialIdealPoint& p8 = h3(8);
    BlowupPoint b{&p8, Direction::U2U};
    auto chi = b.chi();
    EXPECT_EQ(chi[0], LinearForm(1, 0, -1));
    EXPECT_EQ(chi[1], LinearForm(0, 1, -1));
    auto w = blowup_tangent_weights(b);
    const LinearForm u = chi[0], v = chi[1];
    std::vector<LinearForm> expect{-u, -v, (v - 2 * u) + u, (u - 2 * v) + u, -v + u, -u};
    std::sort(w.begin(), w.end());
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(w, expect);
    EXPECT_EQ(b.label(), "(p8,x*y^2)");
    EXPECT_EQ((BlowupPoint{&p8, Direction::V2U}).label(), "(p8,x^3)");
}

TEST(Blowup, SwappingUAndVPermutesDirections) {
    const MonomialIdealPoint& p8 = h3(8);
    auto swap = [](const std::vector<LinearForm>& ws) {
        std::vector<LinearForm> out;
        for (const auto& w : ws) out.push_back({w.a[1], w.a[0], w.a[2]});
        std::sort(out.begin(), out.end());
        return out;
    };
    auto sorted = [](std::vector<LinearForm> w) {
        std::sort(w.begin(), w.end());
        return w;
    };
    EXPECT_EQ(swap(blowup_tangent_weights({&p8, Direction::U2U})), sorted(blowup_tangent_weights({&p8, Direction::V2V})));
    EXPECT_EQ(swap(blowup_tangent_weights({&p8, Direction::U2V})), sorted(blowup_tangent_weights({&p8, Direction::V2U})));
    for (const auto& h : htilde_fixed_points()) {
        auto w = h.tangent();
        EXPECT_EQ(w.size(), 6u) << h.label();
        for (const auto& x : w) EXPECT_FALSE(x.is_zero()) << h.label();
    }
}

// Partial derivatives of X^a Y^b Z^c at a coordinate point, by direct
// evaluation.
TEST(Fibers, SingularAtMatchesPartials) {
    for (int c = 0; c < 3; ++c) {
        auto fib = fiber_monomials_singular_at(c);
        EXPECT_EQ(fib.size(), 12u);
        std::set<std::string> brute;
        for (const auto& m : monomials(4)) {
            bool singular = true;
            for (int v = 0; v < 3; ++v) {
                if (m.e[v] == 0) continue;
                auto d = m.e;
                --d[v];
                bool nonzero_at_point = true;
                for (int k = 0; k < 3; ++k)
                    if (k != c && d[k] > 0) nonzero_at_point = false;
                if (nonzero_at_point) singular = false;
            }
            if (singular) brute.insert(m.to_string());
        }
        EXPECT_EQ(names(fib), brute);
    }
    EXPECT_FALSE(names(fiber_monomials_singular_at(0)).count("X^4"));
}

TEST(Fibers, DoubleMatchesPairwiseDivisibility) {
    for (const auto& p : hilb_fixed_points(2)) {
        auto fib = fiber_monomials_double(p);
        EXPECT_EQ(fib.size(), 9u) << p.label;
        std::set<std::string> brute;
        for (const auto& m : monomials(4))
            for (const auto& a : p.generators)
                for (const auto& b : p.generators) {
                    FormMonomial g{{static_cast<int>(a[0] + b[0]), static_cast<int>(a[1] + b[1]),
                                    static_cast<int>(a[2] + b[2])}};
                    if (divides(g, m)) brute.insert(m.to_string());
                }
        EXPECT_EQ(names(fib), brute) << p.label;
    }
    EXPECT_EQ(names(fiber_monomials_double(hilb_fixed_points(2)[0])),
              (std::set<std::string>{"X^4", "X^3*Y", "X^3*Z", "X^2*Y^2", "X^2*Y*Z", "X^2*Z^2", "X*Y^2*Z",
                                     "X*Y*Z^2", "Y^2*Z^2"}));
}

TEST(Fibers, Trinodal) {
    std::size_t total = 0;
    for (const auto& h : htilde_fixed_points()) {
        auto fib = fiber_monomials_trinodal(h);
        EXPECT_EQ(fib.size(), 6u) << h.label();
        total += fib.size();
    }
    EXPECT_EQ(total, 186u);
    const auto& pts = htilde_fixed_points();
    auto find = [&](const std::string& label) {
        return *std::find_if(pts.begin(), pts.end(), [&](const HtildePoint& h) { return h.label() == label; });
    };
    EXPECT_EQ(names(fiber_monomials_trinodal(find("p1"))),
              (std::set<std::string>{"X^2*Y^2", "X^2*Z^2", "Y^2*Z^2", "X^2*Y*Z", "X*Y^2*Z", "X*Y*Z^2"}));
    EXPECT_EQ(names(fiber_monomials_trinodal(find("p11"))),
              (std::set<std::string>{"X^4", "X^3*Y", "X^3*Z", "X^2*Y^2", "X^2*Y*Z", "X^2*Z^2"}));
    EXPECT_EQ(names(fiber_monomials_trinodal(find("(p8,x^3)"))),
              (std::set<std::string>{"X^4", "X^3*Y", "X^2*Y^2", "X*Y^3", "Y^4", "X^3*Z"}));
    EXPECT_EQ(trinodal_type(find("p1")), TrinodalType::NodesOnly);
    EXPECT_EQ(trinodal_type(find("p17")), TrinodalType::Rectilinear);
}

TEST(Restrictions, Hilb2MatchesPrintedTables) {
    const auto& pts = hilb_fixed_points(2);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto r = hilb2_restriction(pts[i]);
        EXPECT_EQ(r.h1, printed_hilb2_restrictions()[i].h1) << pts[i].label;
        EXPECT_EQ(r.s, printed_hilb2_restrictions()[i].s) << pts[i].label;
    }
}

TEST(Restrictions, EBundleRootsMatchPrintedEntries) {
    std::map<std::string, const MonomialIdealPoint*> by_label;
    for (const auto& p : hilb_fixed_points(3)) by_label[p.label] = &p;
    for (const auto& [key, roots] : printed_e_roots()) {
        auto got = e_bundle_roots(*by_label.at(key.first));
        EXPECT_EQ(got[static_cast<std::size_t>(key.second)], roots) << key.first << " E" << key.second;
    }
    // At p17 the printed E0 and E2 lines repeat other rows; the structure
    // sheaf basis 1, x, x^2 in the chart Z != 0 gives these instead.
    auto p17 = e_bundle_roots(*by_label.at("p17"));
    const LinearForm l1 = LinearForm::l(0), l3 = LinearForm::l(2);
    auto sorted = [](std::vector<LinearForm> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    EXPECT_EQ(p17[0], sorted({LinearForm{}, l1 - l3, 2 * (l1 - l3)}));
    EXPECT_EQ(p17[2], sorted({2 * l3, l1 + l3, 2 * l1}));
}

TEST(Hilb2W2, SigmaAndTau) {
    const auto& d = hilb2w2_fixed_data();
    EXPECT_EQ(d[0].label, "(Q1,Q2)");
    EXPECT_EQ(d[0].sigma[1], Lp("l1 + 3*l2 + 4*l3"));
    EXPECT_EQ(d[0].tau, LinearForm(3, 1, 0));
    auto flag = std::find_if(d.begin(), d.end(), [](const Hilb2W2Point& p) { return p.label == "(Q1>Q2)"; });
    ASSERT_NE(flag, d.end());
    EXPECT_EQ(flag->tau, LinearForm(4, 0, 0));
    EXPECT_EQ(flag->image.to_string(), "X^4");
}
