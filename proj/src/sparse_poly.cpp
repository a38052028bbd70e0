#include "qchow/sparse_poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "qchow/errors.hpp"

namespace qchow {

namespace {

constexpr unsigned kShift[4] = {48, 32, 16, 0};
constexpr std::uint64_t kMask = 0xffff;

using Terms = std::vector<SparsePoly::Term>;

void check_same(const SparsePoly& a, const SparsePoly& b) {
    if (a.varset() != b.varset()) throw VarsetMismatch();
}

// a + k * (b shifted by `shift`); both inputs sorted descending.
Terms merge_scaled(const Terms& a, const Terms& b, std::uint64_t shift, const mpz_class& k) {
    Terms out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].key > b[j].key + shift)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || a[i].key < b[j].key + shift) {
            out.push_back({b[j].key + shift, b[j].coeff * k});
            ++j;
        } else {
            mpz_class c = a[i].coeff + b[j].coeff * k;
            if (c != 0) out.push_back({a[i].key, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t residue(const mpz_class& c, std::uint64_t p) {
    return mpz_fdiv_ui(c.get_mpz_t(), p);
}

}  // namespace

const std::array<int, 4>& weights(Varset vs) {
    static const std::array<int, 4> wl{1, 1, 1, 1};
    static const std::array<int, 4> wc{1, 2, 3, 1};
    return vs == Varset::L ? wl : wc;
}

const std::array<const char*, 4>& variable_names(Varset vs) {
    static const std::array<const char*, 4> nl{"l1", "l2", "l3", "h"};
    static const std::array<const char*, 4> nc{"c1", "c2", "c3", "h"};
    return vs == Varset::L ? nl : nc;
}

std::uint64_t SparsePoly::pack(const Exponent& e) {
    std::uint64_t k = 0;
    for (int i = 0; i < 4; ++i) {
        if (e[i] > kMask) throw IntegrityError("exponent overflow");
        k |= static_cast<std::uint64_t>(e[i]) << kShift[i];
    }
    return k;
}

Exponent SparsePoly::unpack(std::uint64_t key) {
    Exponent e{};
    for (int i = 0; i < 4; ++i) e[i] = static_cast<unsigned>((key >> kShift[i]) & kMask);
    return e;
}

SparsePoly SparsePoly::from_terms(Varset vs, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.key > y.key; });
    SparsePoly out(vs);
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().key == t.key) {
            out.terms_.back().coeff += t.coeff;
            if (out.terms_.back().coeff == 0) out.terms_.pop_back();
        } else if (t.coeff != 0) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

SparsePoly SparsePoly::constant(Varset vs, const mpz_class& c) {
    SparsePoly p(vs);
    if (c != 0) p.terms_.push_back({0, c});
    return p;
}

SparsePoly SparsePoly::variable(Varset vs, int index) {
    Exponent e{};
    e.at(static_cast<std::size_t>(index)) = 1;
    return monomial(vs, e);
}

SparsePoly SparsePoly::monomial(Varset vs, const Exponent& e, const mpz_class& c) {
    SparsePoly p(vs);
    if (c != 0) p.terms_.push_back({pack(e), c});
    return p;
}

SparsePoly SparsePoly::linear(const LinearForm& f, std::int64_t h_coeff) {
    std::vector<Term> t;
    for (int i = 0; i < 3; ++i) {
        if (f.a[i] != 0) {
            Exponent e{};
            e[i] = 1;
            t.push_back({pack(e), mpz_class(static_cast<long>(f.a[i]))});
        }
    }
    if (h_coeff != 0) t.push_back({pack({0, 0, 0, 1}), mpz_class(static_cast<long>(h_coeff))});
    return from_terms(Varset::L, std::move(t));
}

int SparsePoly::weighted_degree(std::uint64_t key) const {
    const auto& w = weights(vs_);
    Exponent e = unpack(key);
    int d = 0;
    for (int i = 0; i < 4; ++i) d += w[i] * static_cast<int>(e[i]);
    return d;
}

int SparsePoly::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, weighted_degree(t.key));
    return d;
}

bool SparsePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = weighted_degree(terms_.front().key);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return weighted_degree(t.key) == d; });
}

SparsePoly SparsePoly::homogeneous_part(int d) const {
    SparsePoly out(vs_);
    for (const auto& t : terms_)
        if (weighted_degree(t.key) == d) out.terms_.push_back(t);
    return out;
}

std::vector<int> SparsePoly::degrees_present() const {
    std::vector<int> ds;
    for (const auto& t : terms_) ds.push_back(weighted_degree(t.key));
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

mpz_class SparsePoly::coefficient(const Exponent& e) const {
    std::uint64_t k = pack(e);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, std::uint64_t key) { return t.key > key; });
    if (it != terms_.end() && it->key == k) return it->coeff;
    return 0;
}

mpz_class SparsePoly::content() const {
    mpz_class g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

unsigned SparsePoly::max_exponent(int var) const {
    unsigned m = 0;
    for (const auto& t : terms_) m = std::max(m, unpack(t.key)[var]);
    return m;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    check_same(*this, o);
    terms_ = merge_scaled(terms_, o.terms_, 0, 1);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    check_same(*this, o);
    terms_ = merge_scaled(terms_, o.terms_, 0, -1);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const mpz_class& k) {
    if (k == 0) {
        terms_.clear();
    } else if (k != 1) {
        for (auto& t : terms_) t.coeff *= k;
    }
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    check_same(a, b);
    const SparsePoly& small = a.size() <= b.size() ? a : b;
    const SparsePoly& big = a.size() <= b.size() ? b : a;
    if (small.is_zero()) return SparsePoly(a.varset());
    // Each row is big times one term of small; rows stay sorted, so a
    // balanced pairwise merge combines them.
    std::vector<Terms> rows;
    rows.reserve(small.size());
    for (const auto& t : small.terms_) rows.push_back(merge_scaled({}, big.terms_, t.key, t.coeff));
    while (rows.size() > 1) {
        std::vector<Terms> next;
        for (std::size_t i = 0; i + 1 < rows.size(); i += 2)
            next.push_back(merge_scaled(rows[i], rows[i + 1], 0, 1));
        if (rows.size() % 2) next.push_back(std::move(rows.back()));
        rows = std::move(next);
    }
    SparsePoly out(a.varset());
    out.terms_ = std::move(rows.front());
    return out;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.vs_ != b.vs_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

SparsePoly SparsePoly::pow(unsigned n) const {
    SparsePoly r = constant(vs_, 1);
    SparsePoly b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

SparsePoly SparsePoly::mul_monomial(const Exponent& e, const mpz_class& c) const {
    SparsePoly out(vs_);
    out.terms_ = merge_scaled({}, terms_, pack(e), c);
    if (c == 0) out.terms_.clear();
    return out;
}

SparsePoly SparsePoly::mul_linear(const LinearForm& f, std::int64_t h_coeff) const {
    if (vs_ != Varset::L) throw VarsetMismatch();
    Terms acc;
    for (int i = 0; i < 4; ++i) {
        std::int64_t c = i < 3 ? f.a[i] : h_coeff;
        if (c == 0) continue;
        Exponent e{};
        e[i] = 1;
        acc = merge_scaled(acc, terms_, pack(e), mpz_class(static_cast<long>(c)));
    }
    SparsePoly out(vs_);
    out.terms_ = std::move(acc);
    return out;
}

SparsePoly SparsePoly::divexact(const mpz_class& k) const {
    SparsePoly out = *this;
    for (auto& t : out.terms_) {
        if (!mpz_divisible_p(t.coeff.get_mpz_t(), k.get_mpz_t()))
            throw NotDivisible("coefficient not divisible by " + k.get_str());
        mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), k.get_mpz_t());
    }
    return out;
}

std::optional<SparsePoly> SparsePoly::try_div_linear(const LinearForm& f) const {
    if (vs_ != Varset::L) throw VarsetMismatch();
    if (f.is_zero()) throw NotDivisible("division by the zero form");
    if (terms_.empty()) return SparsePoly(vs_);

    int lead = 0;
    while (f.a[lead] == 0) ++lead;

    // Cheap necessary condition: p vanishes on the hyperplane f = 0 modulo a
    // large prime at a fixed pseudo-random point.
    {
        constexpr std::uint64_t P = (1ULL << 61) - 1;
        std::array<std::uint64_t, 4> pt{0x1234567ULL, 0x89abcdefULL, 0x31415926ULL, 0x27182818ULL};
        std::uint64_t s = 0;
        for (int i = 0; i < 3; ++i) {
            if (i == lead) continue;
            std::uint64_t c = static_cast<std::uint64_t>((f.a[i] % static_cast<std::int64_t>(P) + P) % P);
            s = (s + mulmod(c, pt[i], P)) % P;
        }
        std::uint64_t a = static_cast<std::uint64_t>((f.a[lead] % static_cast<std::int64_t>(P) + P) % P);
        pt[lead] = mulmod(P - s, powmod(a, P - 2, P), P);
        if (s == 0) pt[lead] = 0;
        if (eval_mod(pt, P) != 0) return std::nullopt;
    }

    Exponent unit{};
    unit[lead] = 1;
    const std::uint64_t lead_key = pack(unit);
    const mpz_class lead_coeff(static_cast<long>(f.a[lead]));
    std::vector<std::pair<std::uint64_t, mpz_class>> tail;
    for (int i = lead + 1; i < 3; ++i) {
        if (f.a[i] == 0) continue;
        Exponent e{};
        e[i] = 1;
        tail.emplace_back(pack(e), mpz_class(static_cast<long>(f.a[i])));
    }

    std::map<std::uint64_t, mpz_class, std::greater<>> rem;
    for (const auto& t : terms_) rem.emplace_hint(rem.end(), t.key, t.coeff);
    Terms quot;
    mpz_class q;
    while (!rem.empty()) {
        auto it = rem.begin();
        Exponent e = unpack(it->first);
        if (e[lead] == 0) return std::nullopt;
        if (!mpz_divisible_p(it->second.get_mpz_t(), lead_coeff.get_mpz_t())) return std::nullopt;
        mpz_divexact(q.get_mpz_t(), it->second.get_mpz_t(), lead_coeff.get_mpz_t());
        std::uint64_t qkey = it->first - lead_key;
        rem.erase(it);
        for (const auto& [k, c] : tail) {
            auto [jt, inserted] = rem.try_emplace(qkey + k);
            jt->second -= q * c;
            if (jt->second == 0) rem.erase(jt);
        }
        quot.push_back({qkey, q});
    }
    SparsePoly out(vs_);
    out.terms_ = std::move(quot);
    return out;
}

SparsePoly exact_div_linear(const SparsePoly& p, const LinearForm& f) {
    auto q = p.try_div_linear(f);
    if (!q) throw NotDivisible("polynomial is not divisible by " + f.to_string());
    return std::move(*q);
}

SparsePoly SparsePoly::permute(const std::array<int, 3>& perm) const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& term : terms_) {
        Exponent e = unpack(term.key);
        Exponent f = e;
        for (int i = 0; i < 3; ++i) f[perm[i]] = e[i];
        t.push_back({pack(f), term.coeff});
    }
    return from_terms(vs_, std::move(t));
}

SparsePoly SparsePoly::substitute(Varset target, const std::array<SparsePoly, 4>& images) const {
    for (const auto& im : images)
        if (im.varset() != target) throw VarsetMismatch();
    std::array<std::vector<SparsePoly>, 4> powers;
    for (int i = 0; i < 4; ++i) {
        powers[i].push_back(constant(target, 1));
        unsigned m = max_exponent(i);
        for (unsigned k = 1; k <= m; ++k) powers[i].push_back(powers[i].back() * images[i]);
    }
    SparsePoly out(target);
    for (const auto& term : terms_) {
        Exponent e = unpack(term.key);
        SparsePoly m = constant(target, term.coeff);
        for (int i = 0; i < 4; ++i)
            if (e[i]) m = m * powers[i][e[i]];
        out += m;
    }
    return out;
}

std::uint64_t SparsePoly::eval_mod(const std::array<std::uint64_t, 4>& point, std::uint64_t p) const {
    std::array<std::vector<std::uint64_t>, 4> pw;
    for (int i = 0; i < 4; ++i) {
        unsigned m = max_exponent(i);
        pw[i].resize(m + 1);
        pw[i][0] = 1 % p;
        for (unsigned k = 1; k <= m; ++k) pw[i][k] = mulmod(pw[i][k - 1], point[i] % p, p);
    }
    std::uint64_t s = 0;
    for (const auto& t : terms_) {
        Exponent e = unpack(t.key);
        std::uint64_t v = residue(t.coeff, p);
        for (int i = 0; i < 4; ++i) v = mulmod(v, pw[i][e[i]], p);
        s += v;
        if (s >= p) s -= p;
    }
    return s;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [&](const Term* x, const Term* y) {
        int dx = weighted_degree(x->key), dy = weighted_degree(y->key);
        if (dx != dy) return dx > dy;
        std::uint64_t hx = x->key & kMask, hy = y->key & kMask;
        if (hx != hy) return hx > hy;
        return x->key > y->key;
    });
    const auto& names = variable_names(vs_);
    std::ostringstream os;
    bool first = true;
    for (const Term* t : order) {
        const bool neg = sgn(t->coeff) < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        mpz_class mag = abs(t->coeff);
        Exponent e = unpack(t->key);
        bool any_var = false;
        for (int i = 0; i < 4; ++i) any_var |= e[i] != 0;
        bool need_star = false;
        if (mag != 1 || !any_var) {
            os << mag.get_str();
            need_star = true;
        }
        for (int i = 0; i < 4; ++i) {
            if (!e[i]) continue;
            if (need_star) os << '*';
            os << names[i];
            if (e[i] > 1) os << '^' << e[i];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

}  // namespace qchow
