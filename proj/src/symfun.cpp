#include "qchow/symfun.hpp"

#include <map>

#include "qchow/errors.hpp"

namespace qchow {

bool is_symmetric(const SparsePoly& p) {
    if (p.varset() != Varset::L) throw VarsetMismatch();
    return p.permute({1, 0, 2}) == p && p.permute({0, 2, 1}) == p;
}

namespace {

const std::array<SparsePoly, 3>& elementary() {
    static const std::array<SparsePoly, 3> e = [] {
        SparsePoly l1 = SparsePoly::variable(Varset::L, 0);
        SparsePoly l2 = SparsePoly::variable(Varset::L, 1);
        SparsePoly l3 = SparsePoly::variable(Varset::L, 2);
        return std::array<SparsePoly, 3>{l1 + l2 + l3, l1 * l2 + l1 * l3 + l2 * l3, l1 * l2 * l3};
    }();
    return e;
}

}  // namespace

ChernPoly to_chern(const SparsePoly& p) {
    if (!is_symmetric(p)) throw NotSymmetric("polynomial is not symmetric in l1, l2, l3");
    const auto& e = elementary();
    std::map<std::array<unsigned, 3>, SparsePoly> cache;
    auto product = [&](unsigned a, unsigned b, unsigned c) -> const SparsePoly& {
        auto [it, fresh] = cache.try_emplace({a, b, c}, Varset::L);
        if (fresh) it->second = e[0].pow(a) * e[1].pow(b) * e[2].pow(c);
        return it->second;
    };

    SparsePoly rem = p;
    std::vector<SparsePoly::Term> out;
    while (!rem.is_zero()) {
        const auto& lead = rem.terms().front();
        Exponent x = SparsePoly::unpack(lead.key);
        if (x[0] < x[1] || x[1] < x[2]) throw NotSymmetric("leading exponent is not a partition");
        unsigned a = x[0] - x[1], b = x[1] - x[2], c = x[2];
        mpz_class k = lead.coeff;
        SparsePoly sub = product(a, b, c).mul_monomial({0, 0, 0, x[3]}, k);
        // e1 = -c1 and e3 = -c3.
        if ((a + c) % 2) k = -k;
        out.push_back({SparsePoly::pack({a, b, c, x[3]}), k});
        rem -= sub;
    }
    ChernPoly r(Varset::C);
    for (auto& t : out) r += SparsePoly::monomial(Varset::C, SparsePoly::unpack(t.key), t.coeff);
    return r;
}

SparsePoly from_chern(const ChernPoly& c) {
    if (c.varset() != Varset::C) throw VarsetMismatch();
    const auto& e = elementary();
    return c.substitute(Varset::L, {-e[0], e[1], -e[2], SparsePoly::variable(Varset::L, 3)});
}

}  // namespace qchow
