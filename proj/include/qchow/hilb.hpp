#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qchow/equiv.hpp"

namespace qchow {

// Projective space with torus-diagonal coordinates.
struct AmbientSpace {
    std::string name;
    std::vector<std::string> coord_names;
    std::vector<LinearForm> coord_chars;  // character of each coordinate function
};

// P^2 with coordinates X, Y, Z of characters l1, l2, l3.
const AmbientSpace& plane();
// P(W_2) with coordinates a_1..a_6 dual to Q_1..Q_6, of characters -chi_k.
const AmbientSpace& quadric_space();

using Mono = std::vector<unsigned>;  // exponents over some list of variables

// Monomial ideal at one support point, in the affine chart where the
// coordinate `coord` is 1.  vars lists the remaining ambient coordinates.
struct LocalPiece {
    int coord = 0;
    std::vector<int> vars;
    std::vector<LinearForm> var_chars;  // char(x_k / x_coord)
    std::vector<Mono> gens;             // minimal generators
    std::vector<Mono> standard;         // monomials outside the ideal
};

struct MonomialIdealPoint {
    std::string label;
    const AmbientSpace* ambient = nullptr;
    std::vector<Mono> generators;  // homogeneous, over ambient coordinates
    std::vector<LocalPiece> support;

    int length() const;
    std::string ideal_string() const;  // e.g. (X, Y*Z)
};

// Builds the point from homogeneous monomial generators and derives its
// support.  Throws InfiniteColength for non-zero-dimensional ideals.
MonomialIdealPoint make_ideal_point(std::string label, const AmbientSpace& ambient, std::vector<Mono> generators);

// The tabulated fixed points of Hilb^2 P^2 (p1..p9) and Hilb^3 P^2 (p1..p22).
const std::vector<MonomialIdealPoint>& hilb_fixed_points(int n);

struct TangentWeights {
    mpz_class extra_int = 1;
    std::vector<LinearForm> weights;  // primitive
    SparsePoly product() const;
};

// Weights of Hom(I/I^2, R/I) summed over the support.
TangentWeights monomial_tangent_weights(const MonomialIdealPoint& pt);

// Raw weights before extracting content, one per basis vector.
std::vector<LinearForm> hom_weights(const LocalPiece& piece);

// Tabulated c_top products for Hilb^2 P^2 (p1..p9) and, via the printed
// case formulas, for Hilb^3 P^2 (p1..p22).
const std::vector<SparsePoly>& printed_ctop_hilb2();
SparsePoly printed_ctop_hilb3(const MonomialIdealPoint& pt);

enum class Direction { U2U, U2V, V2U, V2V };
std::string direction_name(Direction d);

bool is_noncurvilinear(const MonomialIdealPoint& pt);  // local ideal (u,v)^2
std::optional<int> linear_generator(const MonomialIdealPoint& pt);  // ambient coordinate index

struct BlowupPoint {
    const MonomialIdealPoint* base = nullptr;
    Direction dir = Direction::U2U;

    std::string label() const;
    // Local characters of u and v at the support of the base.
    std::array<LinearForm, 2> chi() const;
    // Cubic in u, v attached to the normal direction, as exponents.
    std::array<unsigned, 2> cubic() const;
};

std::vector<LinearForm> blowup_tangent_weights(const BlowupPoint& pt);

// Fixed point of the blown-up Hilb^3: a base point, or a base point in the
// non-curvilinear locus together with a normal direction.
struct HtildePoint {
    const MonomialIdealPoint* base = nullptr;
    std::optional<Direction> dir;

    std::string label() const;
    std::vector<LinearForm> tangent() const;
    mpz_class extra_int() const;
};

// p1..p7, p11..p22, then the twelve exceptional points.
const std::vector<HtildePoint>& htilde_fixed_points();

enum class TrinodalType { NodesOnly = 1, Exceptional = 2, Rectilinear = 3 };
TrinodalType trinodal_type(const HtildePoint& pt);

std::vector<FormMonomial> fiber_monomials_singular_at(int coord);
std::vector<FormMonomial> fiber_monomials_double(const MonomialIdealPoint& pt);
std::vector<FormMonomial> fiber_monomials_trinodal(const HtildePoint& pt);

// Degree-d monomials of P^2 lying in I^k for a point of Hilb^n P^2.
std::vector<FormMonomial> degree_part_of_power(const MonomialIdealPoint& pt, int d, int k);

struct Hilb2W2Point {
    std::string label;
    int i = 0, j = 0;  // 0-based indices into Q_1..Q_6
    bool flag = false;
    MonomialIdealPoint ideal;
    FormMonomial image;
    LinearForm tau;
    std::array<SparsePoly, 5> sigma;  // sigma_0..sigma_4
    SparsePoly printed_ctop{Varset::L};
};

const std::vector<Hilb2W2Point>& hilb2w2_fixed_data();

// Hilb^2 restrictions of h1 and s.
struct Hilb2Restriction {
    LinearForm h1, s;
};
Hilb2Restriction hilb2_restriction(const MonomialIdealPoint& pt);
const std::vector<Hilb2Restriction>& printed_hilb2_restrictions();

// Chern roots of E_0, E_1, E_2 at a point of Hilb^n P^2.
std::array<std::vector<LinearForm>, 3> e_bundle_roots(const MonomialIdealPoint& pt);
// Explicit entries from the printed tables, keyed by (label, bundle index).
// Known misprints are excluded and recorded separately.
const std::map<std::pair<std::string, int>, std::vector<LinearForm>>& printed_e_roots();

}  // namespace qchow
