#include "qchow/equiv.hpp"

#include <map>
#include <mutex>

#include "qchow/errors.hpp"

namespace qchow {

std::string FormMonomial::to_string() const {
    static const char* names[3] = {"X", "Y", "Z"};
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += names[i];
        if (e[i] > 1) s += '^' + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

FormMonomial operator*(const FormMonomial& a, const FormMonomial& b) {
    return {{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
}

bool divides(const FormMonomial& a, const FormMonomial& b) {
    return a.e[0] <= b.e[0] && a.e[1] <= b.e[1] && a.e[2] <= b.e[2];
}

namespace {

std::vector<FormMonomial> build_monomials(int d) {
    std::vector<FormMonomial> out;
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) out.push_back({{i, j, d - i - j}});
    return out;
}

constexpr int kCached = 8;

}  // namespace

const std::vector<FormMonomial>& monomials(int d) {
    static const std::array<std::vector<FormMonomial>, kCached + 1> table = [] {
        std::array<std::vector<FormMonomial>, kCached + 1> t;
        for (int k = 0; k <= kCached; ++k) t[k] = build_monomials(k);
        return t;
    }();
    if (d < 0 || d > kCached) throw IntegrityError("monomial degree out of supported range");
    return table[d];
}

int monomial_index(const FormMonomial& m) {
    const auto& all = monomials(m.degree());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == m) return static_cast<int>(i);
    throw IntegrityError("monomial with a negative exponent: " + m.to_string());
}

std::vector<LinearForm> proj_tangent_weights(int d, const FormMonomial& m) {
    if (m.degree() != d) throw IntegrityError("monomial degree differs from the space");
    return fiber_tangent_weights(monomials(d), m);
}

std::vector<LinearForm> fiber_tangent_weights(const std::vector<FormMonomial>& fiber, const FormMonomial& c) {
    std::vector<LinearForm> w;
    bool found = false;
    for (const auto& k : fiber) {
        if (k == c) {
            found = true;
            continue;
        }
        w.push_back(k.character() - c.character());
    }
    if (!found) throw IntegrityError("fixed point " + c.to_string() + " is not in its fiber");
    return w;
}

LinearForm hyperplane_restriction(const FormMonomial& m) { return -m.character(); }

const SparsePoly& fixed_point_class(int d, const FormMonomial& m) {
    static std::mutex mu;
    static std::map<FormMonomial, SparsePoly> cache;
    if (m.degree() != d) throw IntegrityError("monomial degree differs from the space");
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    SparsePoly p = SparsePoly::constant(Varset::L, 1);
    for (const auto& k : monomials(d))
        if (k != m) p = p.mul_linear(k.character(), 1);
    return cache.emplace(m, std::move(p)).first->second;
}

ChernPoly relation_polynomial(int d) {
    SparsePoly p = SparsePoly::constant(Varset::L, 1);
    for (const auto& k : monomials(d)) p = p.mul_linear(k.character(), 1);
    return to_chern(p);
}

SparsePoly localize_sum(const std::vector<FixedPointTerm>& terms, int target_degree) {
    FactoredFraction sum;
    for (const auto& t : terms) {
        if (t.image.degree() != target_degree)
            throw IntegrityError("term " + t.label + " has an image outside the target space");
        for (const auto& w : t.tangent)
            if (w.is_zero()) throw IntegrityError("term " + t.label + " has a zero tangent weight");
        SparsePoly num = t.numerator * fixed_point_class(target_degree, t.image);
        sum += FactoredFraction(std::move(num), t.extra_int, t.tangent);
    }
    return frac_to_poly(sum);
}

ChernPoly localize_pushforward(const std::vector<FixedPointTerm>& terms, int target_degree) {
    return to_chern(localize_sum(terms, target_degree));
}

}  // namespace qchow
