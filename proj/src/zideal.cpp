#include "qchow/zideal.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "qchow/errors.hpp"
#include "qchow/hnf.hpp"
#include "qchow/poly_text.hpp"

namespace qchow {

std::vector<Exponent> graded_monomials(int degree, Varset vs) {
    std::vector<Exponent> out;
    if (degree < 0) return out;
    const auto& w = weights(vs);
    for (int a = degree / w[0]; a >= 0; --a) {
        int ra = degree - a * w[0];
        for (int b = ra / w[1]; b >= 0; --b) {
            int rb = ra - b * w[1];
            for (int c = rb / w[2]; c >= 0; --c) {
                int rc = rb - c * w[2];
                if (rc % w[3]) continue;
                out.push_back({static_cast<unsigned>(a), static_cast<unsigned>(b), static_cast<unsigned>(c),
                               static_cast<unsigned>(rc / w[3])});
            }
        }
    }
    return out;
}

bool MembershipCertificate::verify() const {
    if (gens.size() != cofactors.size()) return false;
    SparsePoly sum(target.varset());
    for (std::size_t i = 0; i < gens.size(); ++i) sum += cofactors[i] * gens[i];
    return sum == target;
}

std::string MembershipCertificate::to_line() const {
    std::string s = target.to_string() + " =";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        s += i ? " + " : " ";
        s += "(" + cofactors[i].to_string() + ")*(" + gens[i].to_string() + ")";
    }
    if (gens.empty()) s += " 0";
    return s;
}

bool check_certificate_line(std::string_view line) {
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("certificate line has no '='");
    SparsePoly lhs = parse_poly(line.substr(0, eq));
    SparsePoly rhs = parse_poly(line.substr(eq + 1), lhs.varset());
    if (lhs.varset() != rhs.varset()) {
        if (lhs.is_zero() && rhs.is_zero()) return true;
        return false;
    }
    return lhs == rhs;
}

namespace {

// Degree-d slice of an ideal: rows are the monomials of degree d, columns
// the products monomial * generator.
struct GradedSystem {
    Varset vs;
    std::unordered_map<std::uint64_t, int> row_of;
    std::vector<std::pair<int, Exponent>> column_origin;  // (generator, multiplier)
    std::unique_ptr<LatticeSolver> solver;
    std::vector<SparseVec> columns;  // kept for the modular test

    GradedSystem(const IdealBasis& ideal, int d, unsigned long modulus) {
        vs = ideal.gens.front().varset();
        auto mons = graded_monomials(d, vs);
        for (std::size_t i = 0; i < mons.size(); ++i) row_of[SparsePoly::pack(mons[i])] = static_cast<int>(i);
        for (std::size_t g = 0; g < ideal.gens.size(); ++g) {
            const SparsePoly& gen = ideal.gens[g];
            if (gen.is_zero()) continue;
            for (const auto& m : graded_monomials(d - gen.degree(), vs)) {
                SparseVec col;
                for (const auto& t : gen.terms()) col.emplace_back(row_of.at(t.key + SparsePoly::pack(m)), t.coeff);
                std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                columns.push_back(std::move(col));
                column_origin.emplace_back(static_cast<int>(g), m);
            }
        }
        const int rows = static_cast<int>(mons.size());
        if (modulus == 0) {
            solver = std::make_unique<LatticeSolver>(rows, columns);
        } else if (!is_prime(modulus)) {
            std::vector<SparseVec> aug = columns;
            for (int r = 0; r < rows; ++r) aug.push_back({{r, mpz_class(modulus)}});
            solver = std::make_unique<LatticeSolver>(rows, aug);
        }
    }

    static bool is_prime(unsigned long m) {
        if (m < 2) return false;
        for (unsigned long q = 2; q * q <= m; ++q)
            if (m % q == 0) return false;
        return true;
    }

    std::vector<mpz_class> rhs(const SparsePoly& f) const {
        std::vector<mpz_class> b(row_of.size());
        for (const auto& t : f.terms()) b[static_cast<std::size_t>(row_of.at(t.key))] = t.coeff;
        return b;
    }
};

class SystemCache {
public:
    std::shared_ptr<const GradedSystem> get(const IdealBasis& ideal, int d, unsigned long modulus) {
        std::string key = std::to_string(d) + "|" + std::to_string(modulus);
        for (const auto& g : ideal.gens) key += "|" + g.to_string();
        std::shared_ptr<Entry> e;
        {
            std::lock_guard lock(mu_);
            auto& slot = entries_[key];
            if (!slot) slot = std::make_shared<Entry>();
            e = slot;
        }
        std::call_once(e->once, [&] { e->sys = std::make_shared<GradedSystem>(ideal, d, modulus); });
        return e->sys;
    }

private:
    struct Entry {
        std::once_flag once;
        std::shared_ptr<const GradedSystem> sys;
    };
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<Entry>> entries_;
};

SystemCache& cache() {
    static SystemCache c;
    return c;
}

void check_ideal(const IdealBasis& ideal, const SparsePoly& f) {
    if (ideal.gens.empty()) throw IntegrityError("ideal " + ideal.name + " has no generators");
    for (const auto& g : ideal.gens) {
        if (g.varset() != f.varset()) throw VarsetMismatch();
        if (!g.is_homogeneous()) throw IntegrityError("generator of " + ideal.name + " is not homogeneous");
    }
}

}  // namespace

MembershipResult member(const SparsePoly& f, const IdealBasis& ideal) {
    check_ideal(ideal, f);
    MembershipResult res;
    MembershipCertificate cert{f, ideal.gens, std::vector<SparsePoly>(ideal.gens.size(), SparsePoly(f.varset()))};
    for (int d : f.degrees_present()) {
        SparsePoly piece = f.homogeneous_part(d);
        auto sys = cache().get(ideal, d, 0);
        auto x = sys->solver->solve(sys->rhs(piece));
        if (!x) {
            res.failing_degree = d;
            return res;
        }
        for (std::size_t j = 0; j < x->size(); ++j) {
            if ((*x)[j] == 0) continue;
            const auto& [g, m] = sys->column_origin[j];
            cert.cofactors[static_cast<std::size_t>(g)] += SparsePoly::monomial(f.varset(), m, (*x)[j]);
        }
    }
    if (!cert.verify()) throw IntegrityError("membership certificate failed to verify");
    res.member = true;
    res.certificate = std::move(cert);
    return res;
}

IdealEquality ideal_equal(const IdealBasis& a, const IdealBasis& b) {
    IdealEquality eq;
    eq.equal = true;
    for (const auto& g : a.gens) {
        eq.forward.push_back(member(g, b));
        eq.equal = eq.equal && eq.forward.back().member;
    }
    for (const auto& g : b.gens) {
        eq.backward.push_back(member(g, a));
        eq.equal = eq.equal && eq.backward.back().member;
    }
    return eq;
}

bool member_mod(const SparsePoly& f, const IdealBasis& ideal, unsigned long modulus) {
    if (modulus < 2) throw IntegrityError("modulus must be at least 2");
    check_ideal(ideal, f);
    for (int d : f.degrees_present()) {
        SparsePoly piece = f.homogeneous_part(d);
        auto sys = cache().get(ideal, d, modulus);
        bool ok = sys->solver ? sys->solver->solve(sys->rhs(piece)).has_value()
                              : in_span_mod_prime(static_cast<int>(sys->row_of.size()), sys->columns,
                                                  sys->rhs(piece), modulus);
        if (!ok) return false;
    }
    return true;
}

}  // namespace qchow
