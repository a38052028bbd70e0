#include "qchow/hilb.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qchow/errors.hpp"
#include "qchow/poly_text.hpp"

namespace qchow {

namespace {

Mono xyz(unsigned a, unsigned b, unsigned c) { return {a, b, c}; }

bool mono_divides(const Mono& a, const Mono& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

bool in_monomial_ideal(const std::vector<Mono>& gens, const Mono& m) {
    return std::any_of(gens.begin(), gens.end(), [&](const Mono& g) { return mono_divides(g, m); });
}

std::vector<Mono> minimalize(std::vector<Mono> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Mono> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            redundant = j != i && mono_divides(gens[j], gens[i]);
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

LinearForm mono_char(const Mono& m, const std::vector<LinearForm>& chars) {
    LinearForm c;
    for (std::size_t k = 0; k < m.size(); ++k) c += static_cast<std::int64_t>(m[k]) * chars[k];
    return c;
}

std::string mono_string(const Mono& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (!m[k]) continue;
        if (!s.empty()) s += '*';
        s += names[k];
        if (m[k] > 1) s += '^' + std::to_string(m[k]);
    }
    return s.empty() ? "1" : s;
}

// Standard monomials of a zero-dimensional local monomial ideal.
std::vector<Mono> standard_monomials(const std::vector<Mono>& gens, std::size_t nvars) {
    std::vector<unsigned> bound(nvars, 0);
    for (std::size_t k = 0; k < nvars; ++k) {
        bool pure = false;
        for (const auto& g : gens) {
            unsigned others = 0;
            for (std::size_t t = 0; t < nvars; ++t)
                if (t != k) others += g[t];
            if (others == 0 && g[k] > 0) {
                bound[k] = bound[k] ? std::min(bound[k], g[k]) : g[k];
                pure = true;
            }
        }
        if (!pure) throw InfiniteColength("local ideal has no pure power of a variable");
    }
    std::vector<Mono> out;
    Mono m(nvars, 0);
    for (;;) {
        if (!in_monomial_ideal(gens, m)) out.push_back(m);
        std::size_t k = 0;
        while (k < nvars && ++m[k] >= bound[k]) m[k++] = 0;
        if (k == nvars) break;
    }
    std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) {
        unsigned da = std::accumulate(a.begin(), a.end(), 0u), db = std::accumulate(b.begin(), b.end(), 0u);
        if (da != db) return da < db;
        return a > b;
    });
    return out;
}

LinearForm primitive_part(const LinearForm& w, std::int64_t* content) {
    std::int64_t g = w.content();
    *content = g;
    return {w.a[0] / g, w.a[1] / g, w.a[2] / g};
}

SparsePoly product_of(const std::vector<LinearForm>& ws, const mpz_class& k = 1) {
    SparsePoly p = SparsePoly::constant(Varset::L, k);
    for (const auto& w : ws) p = p.mul_linear(w);
    return p;
}

SparsePoly Lp(const char* s) { return parse_poly(s, Varset::L); }

}  // namespace

const AmbientSpace& plane() {
    static const AmbientSpace p{"P2", {"X", "Y", "Z"}, {LinearForm::l(0), LinearForm::l(1), LinearForm::l(2)}};
    return p;
}

const AmbientSpace& quadric_space() {
    static const AmbientSpace q = [] {
        AmbientSpace a;
        a.name = "P(W2)";
        for (std::size_t k = 0; k < monomials(2).size(); ++k) {
            a.coord_names.push_back("a" + std::to_string(k + 1));
            a.coord_chars.push_back(-monomials(2)[k].character());
        }
        return a;
    }();
    return q;
}

int MonomialIdealPoint::length() const {
    int n = 0;
    for (const auto& p : support) n += static_cast<int>(p.standard.size());
    return n;
}

std::string MonomialIdealPoint::ideal_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) s += ", ";
        s += mono_string(generators[i], ambient->coord_names);
    }
    return s + ")";
}

MonomialIdealPoint make_ideal_point(std::string label, const AmbientSpace& ambient, std::vector<Mono> generators) {
    MonomialIdealPoint pt;
    pt.label = std::move(label);
    pt.ambient = &ambient;
    const std::size_t n = ambient.coord_chars.size();
    for (const auto& g : generators)
        if (g.size() != n) throw IntegrityError("generator has the wrong number of exponents");
    pt.generators = std::move(generators);
    for (std::size_t c = 0; c < n; ++c) {
        LocalPiece piece;
        piece.coord = static_cast<int>(c);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == c) continue;
            piece.vars.push_back(static_cast<int>(k));
            piece.var_chars.push_back(ambient.coord_chars[k] - ambient.coord_chars[c]);
        }
        std::vector<Mono> local;
        for (const auto& g : pt.generators) {
            Mono m;
            for (int k : piece.vars) m.push_back(g[static_cast<std::size_t>(k)]);
            local.push_back(std::move(m));
        }
        piece.gens = minimalize(std::move(local));
        const Mono one(n - 1, 0);
        if (in_monomial_ideal(piece.gens, one)) continue;
        piece.standard = standard_monomials(piece.gens, n - 1);
        pt.support.push_back(std::move(piece));
    }
    if (pt.support.empty()) throw IntegrityError("ideal " + pt.label + " has empty support");
    return pt;
}

const std::vector<MonomialIdealPoint>& hilb_fixed_points(int n) {
    static const std::vector<MonomialIdealPoint> two = [] {
        const std::vector<std::vector<Mono>> table = {
            {xyz(1, 0, 0), xyz(0, 1, 1)}, {xyz(0, 1, 0), xyz(1, 0, 1)}, {xyz(0, 0, 1), xyz(1, 1, 0)},
            {xyz(1, 0, 0), xyz(0, 2, 0)}, {xyz(2, 0, 0), xyz(0, 1, 0)}, {xyz(0, 1, 0), xyz(0, 0, 2)},
            {xyz(0, 0, 1), xyz(0, 2, 0)}, {xyz(1, 0, 0), xyz(0, 0, 2)}, {xyz(2, 0, 0), xyz(0, 0, 1)},
        };
        std::vector<MonomialIdealPoint> pts;
        for (std::size_t i = 0; i < table.size(); ++i)
            pts.push_back(make_ideal_point("p" + std::to_string(i + 1), plane(), table[i]));
        return pts;
    }();
    static const std::vector<MonomialIdealPoint> three = [] {
        const std::vector<std::vector<Mono>> table = {
            {xyz(1, 1, 0), xyz(1, 0, 1), xyz(0, 1, 1)},  // p1
            {xyz(2, 0, 0), xyz(0, 1, 1), xyz(1, 1, 0)},  // p2
            {xyz(2, 0, 0), xyz(0, 1, 1), xyz(1, 0, 1)},  // p3
            {xyz(0, 2, 0), xyz(1, 0, 1), xyz(1, 1, 0)},  // p4
            {xyz(0, 2, 0), xyz(1, 0, 1), xyz(0, 1, 1)},  // p5
            {xyz(0, 0, 2), xyz(1, 1, 0), xyz(1, 0, 1)},  // p6
            {xyz(0, 0, 2), xyz(1, 1, 0), xyz(0, 1, 1)},  // p7
            {xyz(2, 0, 0), xyz(1, 1, 0), xyz(0, 2, 0)},  // p8
            {xyz(2, 0, 0), xyz(1, 0, 1), xyz(0, 0, 2)},  // p9
            {xyz(0, 2, 0), xyz(0, 1, 1), xyz(0, 0, 2)},  // p10
            {xyz(1, 0, 0), xyz(0, 2, 1)},                // p11
            {xyz(2, 0, 1), xyz(0, 1, 0)},                // p12
            {xyz(2, 1, 0), xyz(0, 0, 1)},                // p13
            {xyz(1, 0, 0), xyz(0, 1, 2)},                // p14
            {xyz(0, 0, 1), xyz(1, 2, 0)},                // p15
            {xyz(1, 0, 2), xyz(0, 1, 0)},                // p16
            {xyz(3, 0, 0), xyz(0, 1, 0)},                // p17
            {xyz(1, 0, 0), xyz(0, 3, 0)},                // p18
            {xyz(3, 0, 0), xyz(0, 0, 1)},                // p19
            {xyz(1, 0, 0), xyz(0, 0, 3)},                // p20
            {xyz(0, 1, 0), xyz(0, 0, 3)},                // p21
            {xyz(0, 3, 0), xyz(0, 0, 1)},                // p22
        };
        std::vector<MonomialIdealPoint> pts;
        for (std::size_t i = 0; i < table.size(); ++i)
            pts.push_back(make_ideal_point("p" + std::to_string(i + 1), plane(), table[i]));
        return pts;
    }();
    if (n == 2) return two;
    if (n == 3) return three;
    throw IntegrityError("only Hilb^2 and Hilb^3 are tabulated");
}

std::vector<LinearForm> hom_weights(const LocalPiece& piece) {
    const std::size_t nv = piece.vars.size();
    const auto& gens = piece.gens;
    std::set<std::vector<int>> shifts;
    for (const auto& s : piece.standard)
        for (const auto& g : gens) {
            std::vector<int> d(nv);
            for (std::size_t k = 0; k < nv; ++k) d[k] = static_cast<int>(s[k]) - static_cast<int>(g[k]);
            shifts.insert(d);
        }

    // A homomorphism of weight d sends g_i to c_i * x^(g_i + d); the
    // pairwise syzygies force (L/g_i) phi(g_i) = (L/g_j) phi(g_j) in R/I.
    auto shifted = [&](const Mono& m, const std::vector<int>& d, Mono* out) {
        out->resize(nv);
        for (std::size_t k = 0; k < nv; ++k) {
            int v = static_cast<int>(m[k]) + d[k];
            if (v < 0) return false;
            (*out)[k] = static_cast<unsigned>(v);
        }
        return !in_monomial_ideal(gens, *out);
    };

    std::vector<LinearForm> weights;
    for (const auto& d : shifts) {
        const std::size_t r = gens.size();
        std::vector<char> valid(r);
        Mono tmp;
        for (std::size_t i = 0; i < r; ++i) valid[i] = shifted(gens[i], d, &tmp);
        std::vector<std::size_t> parent(r);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<char> zero(r, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j) {
                if (!valid[i] && !valid[j]) continue;
                Mono lcm(nv);
                for (std::size_t k = 0; k < nv; ++k) lcm[k] = std::max(gens[i][k], gens[j][k]);
                if (!shifted(lcm, d, &tmp)) continue;
                if (valid[i] && valid[j])
                    parent[find(i)] = find(j);
                else
                    zero[valid[i] ? i : j] = 1;
            }
        std::set<std::size_t> free_classes, dead_classes;
        for (std::size_t i = 0; i < r; ++i) {
            if (!valid[i]) continue;
            free_classes.insert(find(i));
            if (zero[i]) dead_classes.insert(find(i));
        }
        const std::size_t dim = free_classes.size() - dead_classes.size();
        LinearForm w;
        for (std::size_t k = 0; k < nv; ++k) w += static_cast<std::int64_t>(d[k]) * piece.var_chars[k];
        for (std::size_t t = 0; t < dim; ++t) weights.push_back(w);
    }
    return weights;
}

SparsePoly TangentWeights::product() const { return product_of(weights, extra_int); }

TangentWeights monomial_tangent_weights(const MonomialIdealPoint& pt) {
    TangentWeights t;
    for (const auto& piece : pt.support)
        for (const auto& w : hom_weights(piece)) {
            if (w.is_zero()) throw IntegrityError("zero tangent weight at " + pt.label);
            std::int64_t c = 1;
            t.weights.push_back(primitive_part(w, &c));
            t.extra_int *= static_cast<long>(c);
        }
    return t;
}

const std::vector<SparsePoly>& printed_ctop_hilb2() {
    static const std::vector<SparsePoly> table = {
        Lp("(l2-l1)*(l2-l3)*(l3-l1)*(l3-l2)"),     Lp("(l3-l1)*(l3-l2)*(l1-l2)*(l1-l3)"),
        Lp("(l2-l1)*(l2-l3)*(l1-l2)*(l1-l3)"),     Lp("(l3-l1)*(2*l3-2*l2)*(l2-l1)*(l3-l2)"),
        Lp("2*(l3-l2)*(l1-l2)*(l3-l1)*(l3-l1)"),   Lp("2*(l1-l2)*(l3-l2)*(l1-l3)*(l1-l3)"),
        Lp("2*(l1-l3)*(l2-l3)*(l1-l2)*(l1-l2)"),   Lp("2*(l2-l1)*(l3-l1)*(l2-l3)*(l2-l3)"),
        Lp("2*(l2-l3)*(l1-l3)*(l2-l1)*(l2-l1)"),
    };
    return table;
}

bool is_noncurvilinear(const MonomialIdealPoint& pt) {
    if (pt.support.size() != 1 || pt.support[0].vars.size() != 2) return false;
    const std::vector<Mono> square{{0, 2}, {1, 1}, {2, 0}};
    auto gens = pt.support[0].gens;
    std::sort(gens.begin(), gens.end());
    return gens == square;
}

std::optional<int> linear_generator(const MonomialIdealPoint& pt) {
    for (const auto& g : pt.generators)
        if (std::accumulate(g.begin(), g.end(), 0u) == 1)
            return static_cast<int>(std::find(g.begin(), g.end(), 1u) - g.begin());
    return std::nullopt;
}

SparsePoly printed_ctop_hilb3(const MonomialIdealPoint& pt) {
    auto lin = [](const LinearForm& f) { return SparsePoly::linear(f); };
    if (pt.support.size() == 3) return Lp("(l3-l1)*(l3-l2)*(l2-l1)*(l2-l3)*(l1-l2)*(l1-l3)");
    if (pt.support.size() == 2) {
        const LocalPiece* dbl = pt.support[0].standard.size() == 2 ? &pt.support[0] : &pt.support[1];
        const LocalPiece* sgl = dbl == &pt.support[0] ? &pt.support[1] : &pt.support[0];
        // Double point (u^2, v): u is the variable whose square is a generator.
        int ui = 0;
        for (const auto& g : dbl->gens)
            if (g[0] == 2 || g[1] == 2) ui = g[0] == 2 ? 0 : 1;
        SparsePoly u = lin(dbl->var_chars[ui]), v = lin(dbl->var_chars[1 - ui]);
        SparsePoly s = lin(sgl->var_chars[0]), t = lin(sgl->var_chars[1]);
        return SparsePoly::constant(Varset::L, 2) * u * u * (-v) * (u - v) * s * t;
    }
    const LocalPiece& p = pt.support.front();
    if (is_noncurvilinear(pt)) {
        SparsePoly u = lin(p.var_chars[0]), v = lin(p.var_chars[1]);
        SparsePoly two = SparsePoly::constant(Varset::L, 2);
        // Basis: two directions along the non-curvilinear locus (weights
        // -chi_u, -chi_v) and the four normal directions.
        return (-u) * (-v) * (-u) * (v - two * u) * (u - two * v) * (-v);
    }
    int ui = 0;
    for (const auto& g : p.gens)
        if (g[0] == 3 || g[1] == 3) ui = g[0] == 3 ? 0 : 1;
    SparsePoly u = lin(p.var_chars[ui]), v = lin(p.var_chars[1 - ui]);
    SparsePoly two = SparsePoly::constant(Varset::L, 2);
    return SparsePoly::constant(Varset::L, -6) * u * u * u * (-v) * (u - v) * (two * u - v);
}

std::string direction_name(Direction d) {
    switch (d) {
        case Direction::U2U: return "u2*u";
        case Direction::U2V: return "u2*v";
        case Direction::V2U: return "v2*u";
        case Direction::V2V: return "v2*v";
    }
    return "?";
}

namespace {

// Normal weight of a^2(dual) (x) b, and its exponent shift b - 2a.
std::array<int, 2> direction_shift(Direction d) {
    switch (d) {
        case Direction::U2U: return {-1, 0};
        case Direction::U2V: return {-2, 1};
        case Direction::V2U: return {1, -2};
        case Direction::V2V: return {0, -1};
    }
    return {0, 0};
}

constexpr std::array<Direction, 4> kDirections{Direction::U2U, Direction::U2V, Direction::V2U, Direction::V2V};

LinearForm direction_weight(const std::array<LinearForm, 2>& chi, Direction d) {
    auto s = direction_shift(d);
    return static_cast<std::int64_t>(s[0]) * chi[0] + static_cast<std::int64_t>(s[1]) * chi[1];
}

}  // namespace

std::array<LinearForm, 2> BlowupPoint::chi() const {
    if (!base || !is_noncurvilinear(*base)) throw IntegrityError("blow-up point over a curvilinear base");
    return {base->support[0].var_chars[0], base->support[0].var_chars[1]};
}

std::array<unsigned, 2> BlowupPoint::cubic() const {
    auto s = direction_shift(dir);
    return {static_cast<unsigned>(s[0] + 2), static_cast<unsigned>(s[1] + 2)};
}

std::string BlowupPoint::label() const {
    static const char* local[3] = {"x", "y", "z"};
    const LocalPiece& p = base->support[0];
    auto c = cubic();
    std::string g;
    for (int k = 0; k < 2; ++k) {
        if (!c[k]) continue;
        if (!g.empty()) g += '*';
        g += local[p.vars[k]];
        if (c[k] > 1) g += '^' + std::to_string(c[k]);
    }
    return "(" + base->label + "," + g + ")";
}

std::vector<LinearForm> blowup_tangent_weights(const BlowupPoint& pt) {
    auto chi = pt.chi();
    std::vector<LinearForm> w{-chi[0], -chi[1]};
    const LinearForm nj = direction_weight(chi, pt.dir);
    for (Direction d : kDirections)
        if (d != pt.dir) w.push_back(direction_weight(chi, d) - nj);
    w.push_back(nj);
    for (const auto& x : w)
        if (x.is_zero()) throw IntegrityError("zero weight at " + pt.label());
    return w;
}

std::string HtildePoint::label() const {
    return dir ? BlowupPoint{base, *dir}.label() : base->label;
}

std::vector<LinearForm> HtildePoint::tangent() const {
    if (dir) return blowup_tangent_weights({base, *dir});
    return monomial_tangent_weights(*base).weights;
}

mpz_class HtildePoint::extra_int() const {
    if (dir) return 1;
    return monomial_tangent_weights(*base).extra_int;
}

const std::vector<HtildePoint>& htilde_fixed_points() {
    static const std::vector<HtildePoint> pts = [] {
        const auto& h3 = hilb_fixed_points(3);
        std::vector<HtildePoint> out;
        for (const auto& p : h3)
            if (!is_noncurvilinear(p)) out.push_back({&p, std::nullopt});
        for (const auto& p : h3)
            if (is_noncurvilinear(p))
                for (Direction d : kDirections) out.push_back({&p, d});
        return out;
    }();
    return pts;
}

TrinodalType trinodal_type(const HtildePoint& pt) {
    if (pt.dir) return TrinodalType::Exceptional;
    if (linear_generator(*pt.base)) return TrinodalType::Rectilinear;
    if (is_noncurvilinear(*pt.base)) throw IntegrityError("non-curvilinear point is not a point of the blow-up");
    return TrinodalType::NodesOnly;
}

std::vector<FormMonomial> degree_part_of_power(const MonomialIdealPoint& pt, int d, int k) {
    std::vector<Mono> power{Mono(pt.generators.front().size(), 0)};
    for (int t = 0; t < k; ++t) {
        std::vector<Mono> next;
        for (const auto& a : power)
            for (const auto& g : pt.generators) {
                Mono m(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + g[i];
                next.push_back(m);
            }
        power = minimalize(std::move(next));
    }
    std::vector<FormMonomial> out;
    for (const auto& m : monomials(d)) {
        Mono e{static_cast<unsigned>(m.e[0]), static_cast<unsigned>(m.e[1]), static_cast<unsigned>(m.e[2])};
        if (in_monomial_ideal(power, e)) out.push_back(m);
    }
    return out;
}

std::vector<FormMonomial> fiber_monomials_singular_at(int coord) {
    std::vector<FormMonomial> out;
    for (const auto& m : monomials(4))
        if (m.e[static_cast<std::size_t>(coord)] <= 2) out.push_back(m);
    return out;
}

std::vector<FormMonomial> fiber_monomials_double(const MonomialIdealPoint& pt) {
    return degree_part_of_power(pt, 4, 2);
}

std::vector<FormMonomial> fiber_monomials_trinodal(const HtildePoint& pt) {
    switch (trinodal_type(pt)) {
        case TrinodalType::NodesOnly:
            return degree_part_of_power(*pt.base, 4, 2);
        case TrinodalType::Rectilinear: {
            int c = *linear_generator(*pt.base);
            std::vector<FormMonomial> out;
            for (const auto& m : monomials(4))
                if (m.e[static_cast<std::size_t>(c)] >= 2) out.push_back(m);
            return out;
        }
        case TrinodalType::Exceptional: {
            const LocalPiece& p = pt.base->support[0];
            std::vector<Mono> local;
            for (const auto& a : p.gens)
                for (const auto& b : p.gens) local.push_back({a[0] + b[0], a[1] + b[1]});
            auto c = BlowupPoint{pt.base, *pt.dir}.cubic();
            local.push_back({c[0], c[1]});
            local = minimalize(std::move(local));
            std::vector<FormMonomial> out;
            for (const auto& m : monomials(4)) {
                Mono e;
                for (int v : p.vars) e.push_back(static_cast<unsigned>(m.e[static_cast<std::size_t>(v)]));
                if (in_monomial_ideal(local, e)) out.push_back(m);
            }
            return out;
        }
    }
    return {};
}

const std::vector<Hilb2W2Point>& hilb2w2_fixed_data() {
    static const std::vector<Hilb2W2Point> data = [] {
        const auto& Q = monomials(2);
        const std::size_t n = Q.size();
        auto chi = [&](std::size_t k) { return SparsePoly::linear(Q[k].character()); };
        auto build = [&](std::size_t i, std::size_t j, bool flag) {
            Hilb2W2Point p;
            p.i = static_cast<int>(i);
            p.j = static_cast<int>(j);
            p.flag = flag;
            p.label = "(Q" + std::to_string(i + 1) + (flag ? ">" : ",") + "Q" + std::to_string(j + 1) + ")";
            std::vector<Mono> gens;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                Mono m(n, 0);
                m[k] = 1;
                gens.push_back(m);
            }
            Mono last(n, 0);
            if (flag) {
                last[j] = 2;
            } else {
                last[i] = 1;
                last[j] = 1;
            }
            gens.push_back(last);
            p.ideal = make_ideal_point(p.label, quadric_space(), gens);
            p.image = flag ? Q[i] * Q[i] : Q[i] * Q[j];
            p.tau = flag ? 2 * Q[i].character() : Q[i].character() + Q[j].character();
            std::vector<SparsePoly> rest;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j) rest.push_back(chi(k));
            // Elementary symmetric functions of the remaining four characters.
            std::array<SparsePoly, 5> e;
            e[0] = SparsePoly::constant(Varset::L, 1);
            for (int t = 1; t <= 4; ++t) e[t] = SparsePoly(Varset::L);
            for (const auto& x : rest)
                for (int t = 4; t >= 1; --t) e[t] += e[t - 1] * x;
            p.sigma = e;
            SparsePoly c = SparsePoly::constant(Varset::L, 1);
            if (flag) {
                SparsePoly d = chi(i) - chi(j);
                c = SparsePoly::constant(Varset::L, 2) * d * d;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != i && k != j) c = c * (chi(k) - chi(i)) * (chi(k) - chi(j));
            } else {
                for (std::size_t k = 0; k < n; ++k)
                    if (k != i) c = c * (chi(k) - chi(i));
                for (std::size_t l = 0; l < n; ++l)
                    if (l != j) c = c * (chi(l) - chi(j));
            }
            p.printed_ctop = c;
            return p;
        };
        std::vector<Hilb2W2Point> out;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) out.push_back(build(i, j, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) out.push_back(build(i, j, true));
        return out;
    }();
    return data;
}

Hilb2Restriction hilb2_restriction(const MonomialIdealPoint& pt) {
    Hilb2Restriction r;
    bool lin = false, quad = false;
    for (const auto& g : pt.generators) {
        unsigned d = std::accumulate(g.begin(), g.end(), 0u);
        LinearForm c = mono_char(g, pt.ambient->coord_chars);
        if (d == 1) {
            r.h1 = -c;
            lin = true;
        } else if (d == 2) {
            r.s = -c;
            quad = true;
        }
    }
    if (!lin || !quad) throw IntegrityError("point " + pt.label + " is not a length-two subscheme of a line");
    return r;
}

const std::vector<Hilb2Restriction>& printed_hilb2_restrictions() {
    static const std::vector<Hilb2Restriction> table = {
        {{-1, 0, 0}, {0, -1, -1}}, {{0, -1, 0}, {-1, 0, -1}}, {{0, 0, -1}, {-1, -1, 0}},
        {{-1, 0, 0}, {0, -2, 0}},  {{0, -1, 0}, {-2, 0, 0}},  {{0, -1, 0}, {0, 0, -2}},
        {{0, 0, -1}, {0, -2, 0}},  {{-1, 0, 0}, {0, 0, -2}},  {{0, 0, -1}, {-2, 0, 0}},
    };
    return table;
}

std::array<std::vector<LinearForm>, 3> e_bundle_roots(const MonomialIdealPoint& pt) {
    std::array<std::vector<LinearForm>, 3> roots;
    for (const auto& piece : pt.support) {
        const LinearForm base = pt.ambient->coord_chars[static_cast<std::size_t>(piece.coord)];
        for (const auto& m : piece.standard) {
            LinearForm c = mono_char(m, piece.var_chars);
            for (int i = 0; i < 3; ++i) roots[i].push_back(c + static_cast<std::int64_t>(i) * base);
        }
    }
    for (auto& r : roots) std::sort(r.begin(), r.end());
    return roots;
}

const std::map<std::pair<std::string, int>, std::vector<LinearForm>>& printed_e_roots() {
    static const std::map<std::pair<std::string, int>, std::vector<LinearForm>> table = [] {
        const LinearForm l1 = LinearForm::l(0), l2 = LinearForm::l(1), l3 = LinearForm::l(2), z{};
        std::map<std::pair<std::string, int>, std::vector<LinearForm>> t;
        t[{"p1", 0}] = {z, z, z};
        t[{"p1", 2}] = {2 * l1, 2 * l2, 2 * l3};
        t[{"p2", 0}] = {z, z, l1 - l3};
        t[{"p2", 2}] = {2 * l2, l1 + l3, 2 * l3};
        t[{"p8", 0}] = {z, l1 - l3, l2 - l3};
        t[{"p8", 2}] = {l1 + l3, l2 + l3, 2 * l3};
        t[{"p11", 0}] = {z, z, l2 - l3};
        t[{"p11", 1}] = {l2, l3, l2};
        t[{"p11", 2}] = {2 * l2, l2 + l3, 2 * l3};
        t[{"p17", 1}] = {l3, l1, 2 * l1 - l3};
        for (int i = 1; i <= 10; ++i) t[{"p" + std::to_string(i), 1}] = {l1, l2, l3};
        for (auto& [k, v] : t) std::sort(v.begin(), v.end());
        return t;
    }();
    return table;
}

}  // namespace qchow
