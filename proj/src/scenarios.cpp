#include "qchow/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "qchow/errors.hpp"
#include "qchow/hilb.hpp"
#include "qchow/parallel.hpp"
#include "qchow/poly_text.hpp"

namespace qchow {

bool Verdict::pass() const {
    return integrity_ok && !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const VerdictRow& r) { return r.pass(); });
}

namespace {

SparsePoly C(const char* s) { return parse_poly(s, Varset::C); }

SparsePoly linear_power(const LinearForm& w, unsigned e) {
    SparsePoly p = SparsePoly::constant(Varset::L, 1);
    for (unsigned k = 0; k < e; ++k) p = p.mul_linear(w, 0);
    return p;
}

VerdictRow membership_row(std::string label, const SparsePoly& f, const IdealBasis& ideal, bool expected_negative = false) {
    VerdictRow row;
    row.label = std::move(label);
    row.value = f.to_string();
    row.target = ideal.name;
    row.expected_negative = expected_negative;
    auto res = member(f, ideal);
    row.member = res.member;
    row.certificate = std::move(res.certificate);
    return row;
}

struct Generator {
    std::string label;
    std::vector<FixedPointTerm> terms;
};

// Pushforward of every generator followed by a membership query, run in
// parallel; the rows come back in generator order.
std::vector<VerdictRow> pushforward_rows(const std::vector<Generator>& gens, const IdealBasis& ideal, unsigned jobs) {
    return parallel_map<VerdictRow>(gens.size(), jobs, [&](std::size_t i) {
        ChernPoly p = localize_pushforward(gens[i].terms);
        return membership_row(gens[i].label, p, ideal);
    });
}

template <class F>
Verdict timed(std::string id, F&& body) {
    Verdict v;
    v.id = std::move(id);
    auto start = std::chrono::steady_clock::now();
    try {
        body(v);
    } catch (const IntegrityError& e) {
        v.integrity_ok = false;
        v.integrity_message = e.what();
    }
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return v;
}

std::string power_label(const char* base, unsigned e) {
    if (e == 0) return "1";
    if (e == 1) return base;
    return std::string(base) + "^" + std::to_string(e);
}

}  // namespace

const IdealBasis& alpha_ideal() {
    static const IdealBasis ideal{"(a1,a2,a3)",
                                  {C("27*h - 36*c1"), C("9*h^2 - 6*c1*h - 24*c2"), C("h^3 - c1*h^2 + c2*h - 28*c3")}};
    return ideal;
}

const SparsePoly& delta13() {
    static const SparsePoly d = C("55*h^3 - 220*c1*h^2 + (280*c1^2 + 40*c2)*h + 224*c3 - 96*c1^3 - 128*c1*c2");
    return d;
}

const IdealBasis& alpha_delta_ideal() {
    static const IdealBasis ideal = [] {
        IdealBasis b = alpha_ideal();
        b.name = "(a1,a2,a3,d13)";
        b.gens.push_back(delta13());
        return b;
    }();
    return ideal;
}

std::vector<FixedPointTerm> alpha_terms(unsigned power) {
    std::vector<FixedPointTerm> out;
    for (int c = 0; c < 3; ++c) {
        FormMonomial pt;
        pt.e[c] = 1;
        auto base = proj_tangent_weights(1, pt);
        SparsePoly num = linear_power(-pt.character(), power);
        auto fiber = fiber_monomials_singular_at(c);
        for (const auto& m : fiber) {
            FixedPointTerm t;
            t.label = "(" + pt.to_string() + "," + m.to_string() + ")";
            t.numerator = num;
            t.tangent = base;
            auto f = fiber_tangent_weights(fiber, m);
            t.tangent.insert(t.tangent.end(), f.begin(), f.end());
            t.image = m;
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::vector<FixedPointTerm> square_terms(unsigned power) {
    std::vector<FixedPointTerm> out;
    for (const auto& q : monomials(2)) {
        FixedPointTerm t;
        t.label = q.to_string();
        t.numerator = linear_power(hyperplane_restriction(q), power);
        t.tangent = proj_tangent_weights(2, q);
        t.image = q * q;
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<FixedPointTerm> line_cubic_terms(unsigned power) {
    std::vector<FixedPointTerm> out;
    for (const auto& l : monomials(1))
        for (const auto& c : monomials(3)) {
            FixedPointTerm t;
            t.label = "(" + l.to_string() + "," + c.to_string() + ")";
            t.numerator = linear_power(hyperplane_restriction(l), power);
            t.tangent = proj_tangent_weights(1, l);
            auto w = proj_tangent_weights(3, c);
            t.tangent.insert(t.tangent.end(), w.begin(), w.end());
            t.image = l * c;
            out.push_back(std::move(t));
        }
    return out;
}

std::vector<FixedPointTerm> binodal_terms(unsigned i, unsigned j) {
    std::vector<FixedPointTerm> out;
    for (const auto& p : hilb_fixed_points(2)) {
        auto base = monomial_tangent_weights(p);
        auto r = hilb2_restriction(p);
        SparsePoly num = linear_power(r.h1, i) * linear_power(r.s, j);
        auto fiber = fiber_monomials_double(p);
        for (const auto& m : fiber) {
            FixedPointTerm t;
            t.label = "(" + p.label + "," + m.to_string() + ")";
            t.numerator = num;
            t.tangent = base.weights;
            auto f = fiber_tangent_weights(fiber, m);
            t.tangent.insert(t.tangent.end(), f.begin(), f.end());
            t.extra_int = base.extra_int;
            t.image = m;
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::vector<FixedPointTerm> binodal_base_terms() { return binodal_terms(0, 0); }

namespace {

// The seven Chern classes c1(E0), c2(E0), c1(E1), c2(E1), c3(E1), c2(E2),
// c3(E2) at a point of Hilb^3.
std::array<SparsePoly, 7> eta_classes(const MonomialIdealPoint& p) {
    auto roots = e_bundle_roots(p);
    std::array<std::array<SparsePoly, 4>, 3> e;
    for (int b = 0; b < 3; ++b) {
        e[b][0] = SparsePoly::constant(Varset::L, 1);
        for (int t = 1; t <= 3; ++t) e[b][t] = SparsePoly(Varset::L);
        for (const auto& x : roots[b])
            for (int t = 3; t >= 1; --t) e[b][t] += e[b][t - 1].mul_linear(x, 0);
    }
    return {e[0][1], e[0][2], e[1][1], e[1][2], e[1][3], e[2][2], e[2][3]};
}

}  // namespace

std::vector<FixedPointTerm> trinodal_terms(const std::array<unsigned, 7>& tuple) {
    std::map<const MonomialIdealPoint*, SparsePoly> numerators;
    std::vector<FixedPointTerm> out;
    for (const auto& h : htilde_fixed_points()) {
        auto it = numerators.find(h.base);
        if (it == numerators.end()) {
            auto cls = eta_classes(*h.base);
            SparsePoly num = SparsePoly::constant(Varset::L, 1);
            for (int k = 0; k < 7; ++k) num = num * cls[k].pow(tuple[k]);
            it = numerators.emplace(h.base, std::move(num)).first;
        }
        auto tangent = h.tangent();
        auto extra = h.extra_int();
        auto fiber = fiber_monomials_trinodal(h);
        for (const auto& m : fiber) {
            FixedPointTerm t;
            t.label = "(" + h.label() + "," + m.to_string() + ")";
            t.numerator = it->second;
            t.tangent = tangent;
            auto f = fiber_tangent_weights(fiber, m);
            t.tangent.insert(t.tangent.end(), f.begin(), f.end());
            t.extra_int = extra;
            t.image = m;
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::string Hilb2W2Generator::label() const {
    std::string s;
    auto add = [&](const std::string& f) {
        if (!s.empty()) s += '*';
        s += f;
    };
    if (a) add(power_label("tau", a));
    for (int k = 0; k < 4; ++k)
        if (b[k]) add(power_label(("s" + std::to_string(k + 1)).c_str(), b[k]));
    return s.empty() ? "1" : s;
}

std::vector<Hilb2W2Generator> hilb2w2_generators() {
    std::vector<Hilb2W2Generator> out;
    for (unsigned a = 0; a <= 2; ++a)
        for (unsigned deg = 0; deg <= 2; ++deg)
            for (unsigned b1 = deg + 1; b1-- > 0;)
                for (unsigned b2 = deg - b1 + 1; b2-- > 0;)
                    for (unsigned b3 = deg - b1 - b2 + 1; b3-- > 0;)
                        out.push_back({a, {b1, b2, b3, deg - b1 - b2 - b3}});
    return out;
}

std::vector<FixedPointTerm> hilb2w2_terms(const Hilb2W2Generator& g) {
    std::vector<FixedPointTerm> out;
    for (const auto& p : hilb2w2_fixed_data()) {
        FixedPointTerm t;
        t.label = p.label;
        SparsePoly num = linear_power(p.tau, g.a);
        for (int k = 0; k < 4; ++k) num = num * p.sigma[k + 1].pow(g.b[k]);
        t.numerator = std::move(num);
        auto w = monomial_tangent_weights(p.ideal);
        t.tangent = std::move(w.weights);
        t.extra_int = w.extra_int;
        t.image = p.image;
        out.push_back(std::move(t));
    }
    return out;
}

namespace {
constexpr std::array<unsigned, 7> kEtaWeights{1, 2, 1, 2, 3, 2, 3};
}

std::vector<std::array<unsigned, 7>> eta_tuples() {
    const auto& w = kEtaWeights;
    std::vector<std::array<unsigned, 7>> out;
    std::array<unsigned, 7> t{};
    auto rec = [&](auto&& self, int k, unsigned left) -> void {
        if (k == 7) {
            out.push_back(t);
            return;
        }
        for (unsigned e = 0; e * w[k] <= left; ++e) {
            t[k] = e;
            self(self, k + 1, left - e * w[k]);
        }
        t[k] = 0;
    };
    rec(rec, 0, 6);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        unsigned da = 0, db = 0;
        for (int k = 0; k < 7; ++k) da += a[k] * w[k], db += b[k] * w[k];
        return da < db;
    });
    return out;
}

std::string eta_label(const std::array<unsigned, 7>& t) {
    std::string s = "eta(";
    for (int k = 0; k < 7; ++k) s += (k ? "," : "") + std::to_string(t[k]);
    return s + ")";
}

std::string WeightedPartition::label() const {
    std::string s = "{";
    for (std::size_t k = 0; k < mu.size(); ++k) s += (k ? "," : "") + std::to_string(mu[k]);
    s += "}(";
    for (std::size_t k = 0; k < m.size(); ++k) s += (k ? "," : "") + std::to_string(m[k]);
    return s + ")";
}

std::vector<WeightedPartition> weighted_partitions(int d) {
    if (d < 1) throw IntegrityError("weighted partitions need d >= 1");
    // Pairs (k, m) with k ascending and, for equal k, m descending; sum k*m = d.
    std::vector<WeightedPartition> out;
    WeightedPartition cur;
    auto rec = [&](auto&& self, int left, int min_k, int max_m) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = min_k; k <= left; ++k)
            for (int m = (k == min_k ? std::min(max_m, left / k) : left / k); m >= 1; --m) {
                cur.mu.push_back(k);
                cur.m.push_back(m);
                self(self, left - k * m, k, m);
                cur.mu.pop_back();
                cur.m.pop_back();
            }
    };
    rec(rec, d, 1, d);
    return out;
}

int codim(const WeightedPartition& wp, int d) {
    auto N = [](int k) { return k * (k + 3) / 2; };
    if (wp.mu.size() == 1 && wp.m[0] == 1) return 1;
    int s = 0;
    for (int k : wp.mu) s += N(k);
    return N(d) - s;
}

const std::vector<std::pair<std::string, std::string>>& quartic_strata_edges() {
    static const std::vector<std::pair<std::string, std::string>> edges{
        {"{4}(1)", "{1,3}(1,1)"},         {"{4}(1)", "{2,2}(1,1)"},
        {"{1,3}(1,1)", "{1,1,2}(1,1,1)"}, {"{2,2}(1,1)", "{1,1,2}(1,1,1)"},
        {"{2,2}(1,1)", "{2}(2)"},         {"{1,1,2}(1,1,1)", "{1,1,1,1}(1,1,1,1)"},
        {"{1,1,2}(1,1,1)", "{1,2}(2,1)"}, {"{1,1,1,1}(1,1,1,1)", "{1,1,1}(2,1,1)"},
        {"{1,2}(2,1)", "{1,1,1}(2,1,1)"}, {"{1,1,1}(2,1,1)", "{1,1}(3,1)"},
        {"{1,1,1}(2,1,1)", "{1,1}(2,2)"}, {"{2}(2)", "{1,1}(2,2)"},
        {"{1,1}(2,2)", "{1}(4)"},         {"{1,1}(3,1)", "{1}(4)"},
    };
    return edges;
}

const std::vector<std::pair<std::string, int>>& quartic_strata_codims() {
    static const std::vector<std::pair<std::string, int>> codims{
        {"{4}(1)", 1},          {"{1,3}(1,1)", 3},         {"{2,2}(1,1)", 4},
        {"{1,1,2}(1,1,1)", 5},  {"{1,1,1,1}(1,1,1,1)", 6}, {"{1,2}(2,1)", 7},
        {"{1,1,1}(2,1,1)", 8},  {"{2}(2)", 9},             {"{1,1}(2,2)", 10},
        {"{1,1}(3,1)", 10},     {"{1}(4)", 12},
    };
    return codims;
}

Verdict scenario_alpha(const RunOptions& opt) {
    return timed("alpha", [&](Verdict& v) {
        auto betas = parallel_map<ChernPoly>(3, opt.jobs, [](std::size_t i) {
            return localize_pushforward(alpha_terms(static_cast<unsigned>(i)));
        });
        IdealBasis beta{"(b0,b1,b2)", betas};
        const auto& alpha = alpha_ideal();
        auto eq = ideal_equal(beta, alpha);
        for (std::size_t i = 0; i < 3; ++i) {
            VerdictRow r;
            r.label = "b" + std::to_string(i);
            r.value = betas[i].to_string();
            r.target = alpha.name;
            r.member = eq.forward[i].member;
            r.certificate = eq.forward[i].certificate;
            v.rows.push_back(std::move(r));
        }
        for (std::size_t i = 0; i < 3; ++i) {
            VerdictRow r;
            r.label = "a" + std::to_string(i + 1);
            r.value = alpha.gens[i].to_string();
            r.target = beta.name;
            r.member = eq.backward[i].member;
            r.certificate = eq.backward[i].certificate;
            v.rows.push_back(std::move(r));
        }
        for (std::size_t i = 0; i < 3; ++i) {
            if (betas[i] == alpha.gens[i])
                v.notes.push_back("b" + std::to_string(i) + " = a" + std::to_string(i + 1));
            else if (betas[i] == -1 * alpha.gens[i])
                v.notes.push_back("b" + std::to_string(i) + " = -a" + std::to_string(i + 1));
        }
        v.rows.push_back(membership_row("p4", relation_polynomial(4), alpha));
    });
}

Verdict scenario_square(const RunOptions& opt) {
    return timed("square", [&](Verdict& v) {
        std::vector<Generator> gens;
        for (unsigned e = 0; e <= 5; ++e) gens.push_back({power_label("h2", e), square_terms(e)});
        v.rows = pushforward_rows(gens, alpha_ideal(), opt.jobs);
    });
}

Verdict scenario_hilb2w2(const RunOptions& opt) {
    return timed("hilb2w2", [&](Verdict& v) {
        std::vector<Generator> gens;
        for (const auto& g : hilb2w2_generators()) gens.push_back({g.label(), hilb2w2_terms(g)});
        v.rows = pushforward_rows(gens, alpha_ideal(), opt.jobs);
    });
}

Verdict scenario_line_cubic(const RunOptions& opt) {
    return timed("line-cubic", [&](Verdict& v) {
        auto pushes = parallel_map<ChernPoly>(3, opt.jobs, [](std::size_t i) {
            return localize_pushforward(line_cubic_terms(static_cast<unsigned>(i)));
        });
        VerdictRow eq;
        eq.label = "1";
        eq.value = pushes[0].to_string();
        eq.target = delta13().to_string();
        eq.member = pushes[0] == delta13();
        v.rows.push_back(std::move(eq));
        v.rows.push_back(membership_row("h1", pushes[1], alpha_delta_ideal()));
        v.rows.push_back(membership_row("h1^2", pushes[2], alpha_delta_ideal()));
    });
}

Verdict scenario_binodal(const RunOptions& opt) {
    return timed("binodal", [&](Verdict& v) {
        std::vector<Generator> gens;
        for (unsigned i = 0; i <= 2; ++i)
            for (unsigned j = 0; j <= 2; ++j) {
                std::string label = power_label("h1", i);
                if (j) label = (i ? label + "*" : std::string()) + power_label("s", j);
                gens.push_back({label, binodal_terms(i, j)});
            }
        v.rows = pushforward_rows(gens, alpha_ideal(), opt.jobs);
    });
}

Verdict scenario_trinodal(const RunOptions& opt) {
    return timed("trinodal", [&](Verdict& v) {
        auto tuples = eta_tuples();
        v.rows = parallel_map<VerdictRow>(tuples.size(), opt.jobs, [&](std::size_t i) {
            ChernPoly p = localize_pushforward(trinodal_terms(tuples[i]));
            return membership_row(eta_label(tuples[i]), p, alpha_ideal());
        });
    });
}

Verdict scenario_independence(const RunOptions&) {
    return timed("independence", [&](Verdict& v) {
        const auto& a = alpha_ideal().gens;
        IdealBasis a1{"(a1)", {a[0]}};
        IdealBasis a12{"(a1,a2)", {a[0], a[1]}};
        v.rows.push_back(membership_row("a2", a[1], a1, true));
        v.rows.push_back(membership_row("a3", a[2], a12, true));
        v.rows.push_back(membership_row("d13", delta13(), alpha_ideal(), true));

        auto mod_row = [&](std::string label, const SparsePoly& f, const IdealBasis& ideal, unsigned long m) {
            VerdictRow r;
            r.label = std::move(label) + " mod " + std::to_string(m);
            r.value = f.to_string();
            r.target = ideal.name;
            r.member = member_mod(f, ideal, m);
            r.expected_negative = true;
            v.rows.push_back(std::move(r));
        };
        mod_row("a2", a[1], a1, 9);
        mod_row("a3", a[2], a12, 3);
        mod_row("d13", delta13(), alpha_ideal(), 3);

        MembershipCertificate printed;
        printed.target = 3 * delta13();
        printed.gens = a;
        printed.cofactors = {C("9*h^2 - 20*c1*h + 8*c1^2"), C("-2*(3*h - 8*c1)"), C("-24")};
        VerdictRow pr;
        pr.label = "3*d13 printed";
        pr.value = printed.target.to_string();
        pr.target = alpha_ideal().name;
        pr.member = printed.verify();
        if (pr.member) pr.certificate = printed;
        v.rows.push_back(std::move(pr));
        v.rows.push_back(membership_row("3*d13", printed.target, alpha_ideal()));
    });
}

Verdict scenario_presentation(const RunOptions&) {
    return timed("presentation", [&](Verdict& v) {
        std::array<SparsePoly, 4> sub{C("c1"), C("c2"), C("c3"), C("c1")};
        IdealBasis restricted{"(a1,a2,a3,d13)|h=c1", {}};
        for (const auto& g : alpha_delta_ideal().gens) restricted.gens.push_back(g.substitute(Varset::C, sub));
        IdealBasis target{"(9*c1,6*(c1^2+4*c2),c1*c2-28*c3,c1^3+28*c3)",
                          {C("9*c1"), C("6*(c1^2 + 4*c2)"), C("c1*c2 - 28*c3"), C("c1^3 + 28*c3")}};
        auto eq = ideal_equal(restricted, target);
        static const char* names[4] = {"a1", "a2", "a3", "d13"};
        for (std::size_t i = 0; i < 4; ++i) {
            VerdictRow r;
            r.label = std::string(names[i]) + "|h=c1";
            r.value = restricted.gens[i].to_string();
            r.target = target.name;
            r.member = eq.forward[i].member;
            r.certificate = eq.forward[i].certificate;
            v.rows.push_back(std::move(r));
        }
        for (std::size_t i = 0; i < 4; ++i) {
            VerdictRow r;
            r.label = target.gens[i].to_string();
            r.value = target.gens[i].to_string();
            r.target = restricted.name;
            r.member = eq.backward[i].member;
            r.certificate = eq.backward[i].certificate;
            v.rows.push_back(std::move(r));
        }
    });
}

Verdict scenario_strata(const RunOptions&) {
    return timed("strata", [&](Verdict& v) {
        const int d = 4;
        auto parts = weighted_partitions(d);
        std::map<std::string, int> computed;
        for (const auto& p : parts) computed[p.label()] = codim(p, d);
        const auto& printed = quartic_strata_codims();
        for (const auto& [label, c] : printed) {
            VerdictRow r;
            r.label = label;
            auto it = computed.find(label);
            r.value = it == computed.end() ? "missing" : std::to_string(it->second);
            r.target = std::to_string(c);
            r.member = it != computed.end() && it->second == c;
            v.rows.push_back(std::move(r));
        }
        VerdictRow count;
        count.label = "partitions";
        count.value = std::to_string(parts.size());
        count.target = std::to_string(printed.size());
        count.member = parts.size() == printed.size();
        v.rows.push_back(std::move(count));
        // Closure must strictly raise the codimension.
        for (const auto& [a, b] : quartic_strata_edges()) {
            VerdictRow r;
            r.label = a + " > " + b;
            int ca = computed.count(a) ? computed[a] : -1;
            int cb = computed.count(b) ? computed[b] : -1;
            r.value = std::to_string(ca) + " < " + std::to_string(cb);
            r.target = "closure";
            r.member = ca > 0 && cb > ca;
            v.rows.push_back(std::move(r));
        }
    });
}

const std::vector<std::string>& scenario_ids() {
    static const std::vector<std::string> ids{"alpha",    "square",       "hilb2w2",      "line-cubic", "binodal",
                                              "trinodal", "independence", "presentation", "strata"};
    return ids;
}

bool scenario_is_gated(const std::string& id) { return id != "alpha" && id != "strata"; }

std::vector<Verdict> run_scenarios(const std::vector<std::string>& ids, const RunOptions& opt) {
    using Fn = Verdict (*)(const RunOptions&);
    static const std::map<std::string, Fn> table{
        {"alpha", scenario_alpha},       {"square", scenario_square},
        {"hilb2w2", scenario_hilb2w2},   {"line-cubic", scenario_line_cubic},
        {"binodal", scenario_binodal},   {"trinodal", scenario_trinodal},
        {"independence", scenario_independence}, {"presentation", scenario_presentation},
        {"strata", scenario_strata},
    };
    for (const auto& id : ids)
        if (!table.count(id)) throw std::invalid_argument("unknown scenario: " + id);

    std::optional<bool> gate;
    std::vector<Verdict> out;
    for (const auto& id : scenario_ids()) {
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) continue;
        if (scenario_is_gated(id) && !gate) {
            auto it = std::find_if(out.begin(), out.end(), [](const Verdict& v) { return v.id == "alpha"; });
            if (it != out.end()) {
                gate = it->integrity_ok && std::any_of(it->rows.begin(), it->rows.end(), [](const VerdictRow& r) {
                           return r.label == "p4" && r.member;
                       });
            } else {
                gate = member(relation_polynomial(4), alpha_ideal()).member;
            }
        }
        if (scenario_is_gated(id) && !*gate) {
            Verdict v;
            v.id = id;
            VerdictRow r;
            r.label = "p4 gate";
            r.value = relation_polynomial(4).to_string();
            r.target = alpha_ideal().name;
            r.member = false;
            v.rows.push_back(std::move(r));
            v.notes.push_back("skipped: p4 is not in " + alpha_ideal().name);
            out.push_back(std::move(v));
            continue;
        }
        out.push_back(table.at(id)(opt));
    }
    return out;
}

}  // namespace qchow
