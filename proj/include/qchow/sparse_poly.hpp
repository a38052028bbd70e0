#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qchow/linear_form.hpp"

namespace qchow {

// L: (l1, l2, l3, h) with weights (1,1,1,1).
// C: (c1, c2, c3, h) with weights (1,2,3,1).
enum class Varset : std::uint8_t { L, C };

using Exponent = std::array<unsigned, 4>;

const std::array<int, 4>& weights(Varset vs);
const std::array<const char*, 4>& variable_names(Varset vs);

// Sparse polynomial over Z in four variables.  Terms are kept sorted by
// descending lexicographic exponent with variable 0 most significant.
class SparsePoly {
public:
    struct Term {
        std::uint64_t key;
        mpz_class coeff;
    };

    explicit SparsePoly(Varset vs = Varset::L) : vs_(vs) {}

    static SparsePoly constant(Varset vs, const mpz_class& c);
    static SparsePoly variable(Varset vs, int index);
    static SparsePoly monomial(Varset vs, const Exponent& e, const mpz_class& c = 1);
    // a1*l1 + a2*l2 + a3*l3 + h_coeff*h in the L variable set.
    static SparsePoly linear(const LinearForm& f, std::int64_t h_coeff = 0);

    static std::uint64_t pack(const Exponent& e);
    static Exponent unpack(std::uint64_t key);

    Varset varset() const { return vs_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    int weighted_degree(std::uint64_t key) const;
    // Largest weighted degree of a term; -1 for zero.
    int degree() const;
    bool is_homogeneous() const;
    SparsePoly homogeneous_part(int d) const;
    std::vector<int> degrees_present() const;

    mpz_class coefficient(const Exponent& e) const;
    // Nonnegative gcd of the coefficients.
    mpz_class content() const;
    unsigned max_exponent(int var) const;

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const mpz_class& k);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(SparsePoly a, const mpz_class& k) { return a *= k; }
    friend SparsePoly operator*(const mpz_class& k, SparsePoly a) { return a *= k; }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b);

    SparsePoly pow(unsigned n) const;
    SparsePoly mul_monomial(const Exponent& e, const mpz_class& c = 1) const;
    SparsePoly mul_linear(const LinearForm& f, std::int64_t h_coeff = 0) const;
    SparsePoly divexact(const mpz_class& k) const;

    std::optional<SparsePoly> try_div_linear(const LinearForm& f) const;

    // Permutes the first three variables: variable i is sent to perm[i].
    SparsePoly permute(const std::array<int, 3>& perm) const;
    // Replaces variable i by images[i], producing a polynomial in `target`.
    SparsePoly substitute(Varset target, const std::array<SparsePoly, 4>& images) const;

    // Value modulo a prime p < 2^62 at the given residues.
    std::uint64_t eval_mod(const std::array<std::uint64_t, 4>& point, std::uint64_t p) const;

    // Canonical text: descending weighted degree, then descending power of
    // h, then descending lex order in the remaining variables.
    std::string to_string() const;

private:
    static SparsePoly from_terms(Varset vs, std::vector<Term> terms);  // sorts and merges
    Varset vs_;
    std::vector<Term> terms_;
};

// Throws NotDivisible when f does not divide p.
SparsePoly exact_div_linear(const SparsePoly& p, const LinearForm& f);

}  // namespace qchow
