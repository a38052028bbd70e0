#pragma once

#include <array>
#include <string>
#include <vector>

#include "qchow/factored_fraction.hpp"
#include "qchow/symfun.hpp"

namespace qchow {

// X^i Y^j Z^k of degree i+j+k.
struct FormMonomial {
    std::array<int, 3> e{0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2]; }
    LinearForm character() const { return {e[0], e[1], e[2]}; }
    std::string to_string() const;  // e.g. X^2*Y*Z, or 1

    friend bool operator==(const FormMonomial&, const FormMonomial&) = default;
    friend auto operator<=>(const FormMonomial&, const FormMonomial&) = default;
};

FormMonomial operator*(const FormMonomial& a, const FormMonomial& b);
// Componentwise divisibility.
bool divides(const FormMonomial& a, const FormMonomial& b);

// Basis of W_d, lexicographically descending in (i, j, k); for d = 2 and
// d = 4 this is the order Q1..Q6 and F1..F15.
const std::vector<FormMonomial>& monomials(int d);
// Position of m inside monomials(m.degree()).
int monomial_index(const FormMonomial& m);

std::vector<LinearForm> proj_tangent_weights(int d, const FormMonomial& m);
LinearForm hyperplane_restriction(const FormMonomial& m);
// prod over k != m of (h + theta_k); cached for d <= 4.
const SparsePoly& fixed_point_class(int d, const FormMonomial& m);
ChernPoly relation_polynomial(int d);

struct FixedPointTerm {
    std::string label;
    SparsePoly numerator{Varset::L};
    std::vector<LinearForm> tangent;
    mpz_class extra_int = 1;
    FormMonomial image;
};

// Sum of numerator * [image] / (extra_int * prod tangent) in the ring of
// P(W_d), returned in the l variables with unit denominator.
SparsePoly localize_sum(const std::vector<FixedPointTerm>& terms, int target_degree = 4);

// localize_sum followed by symmetrization into Chern variables.
ChernPoly localize_pushforward(const std::vector<FixedPointTerm>& terms, int target_degree = 4);

// Weights {theta_k - theta_c : k in fiber, k != c} of a linear subspace of
// P(W_d) spanned by the monomials in `fiber`, at the point c.
std::vector<LinearForm> fiber_tangent_weights(const std::vector<FormMonomial>& fiber, const FormMonomial& c);

}  // namespace qchow
