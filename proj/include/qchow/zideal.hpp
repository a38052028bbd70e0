#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qchow/sparse_poly.hpp"

namespace qchow {

// Homogeneous generators in a common variable set.
struct IdealBasis {
    std::string name;
    std::vector<SparsePoly> gens;
};

// All monomials of the given weighted degree, in descending lex order.
std::vector<Exponent> graded_monomials(int degree, Varset vs);

struct MembershipCertificate {
    SparsePoly target;
    std::vector<SparsePoly> gens;
    std::vector<SparsePoly> cofactors;

    // Recomputes sum cofactor_i * gen_i and compares with the target.
    bool verify() const;
    // "target = (cof_1)*(gen_1) + ... + (cof_r)*(gen_r)"
    std::string to_line() const;
};

struct MembershipResult {
    bool member = false;
    std::optional<MembershipCertificate> certificate;
    int failing_degree = -1;
};

MembershipResult member(const SparsePoly& f, const IdealBasis& ideal);

struct IdealEquality {
    bool equal = false;
    std::vector<MembershipResult> forward;   // generators of the first ideal in the second
    std::vector<MembershipResult> backward;  // generators of the second ideal in the first
};

IdealEquality ideal_equal(const IdealBasis& a, const IdealBasis& b);

// Membership after reducing coefficients modulo m >= 2.
bool member_mod(const SparsePoly& f, const IdealBasis& ideal, unsigned long modulus);

// Checks a certificate line by parsing both sides and expanding.
bool check_certificate_line(std::string_view line);

}  // namespace qchow
