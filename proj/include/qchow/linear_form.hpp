#pragma once

#include <array>
#include <cstdint>
#include <compare>
#include <string>

namespace qchow {

// Integer combination a1*l1 + a2*l2 + a3*l3 of the torus characters.
struct LinearForm {
    std::array<std::int64_t, 3> a{0, 0, 0};

    LinearForm() = default;
    constexpr LinearForm(std::int64_t a1, std::int64_t a2, std::int64_t a3) : a{a1, a2, a3} {}

    static constexpr LinearForm l(int i) {
        LinearForm f;
        f.a[static_cast<std::size_t>(i)] = 1;
        return f;
    }

    bool is_zero() const { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

    // gcd of the coefficients (0 for the zero form).
    std::int64_t content() const;

    // Primitive form with positive first nonzero coefficient; `scale` receives
    // the signed factor with *this == scale * result.
    LinearForm normalized(std::int64_t* scale = nullptr) const;

    LinearForm operator-() const { return {-a[0], -a[1], -a[2]}; }
    friend LinearForm operator+(const LinearForm& x, const LinearForm& y) {
        return {x.a[0] + y.a[0], x.a[1] + y.a[1], x.a[2] + y.a[2]};
    }
    friend LinearForm operator-(const LinearForm& x, const LinearForm& y) { return x + (-y); }
    friend LinearForm operator*(std::int64_t k, const LinearForm& x) {
        return {k * x.a[0], k * x.a[1], k * x.a[2]};
    }
    LinearForm& operator+=(const LinearForm& y) { return *this = *this + y; }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    friend auto operator<=>(const LinearForm&, const LinearForm&) = default;

    std::string to_string() const;
};

}  // namespace qchow
