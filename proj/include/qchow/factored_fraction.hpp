#pragma once

#include <vector>

#include "qchow/sparse_poly.hpp"

namespace qchow {

// num / (den_int * prod den_forms) with the numerator in the L variable set.
// Denominator forms are stored primitive with positive leading coefficient,
// sorted, with repetition.
class FactoredFraction {
public:
    FactoredFraction() : num_(Varset::L), den_int_(1) {}
    explicit FactoredFraction(SparsePoly num, const mpz_class& den_int = 1,
                              const std::vector<LinearForm>& den_forms = {});

    const SparsePoly& numerator() const { return num_; }
    const mpz_class& den_int() const { return den_int_; }
    const std::vector<LinearForm>& den_forms() const { return den_forms_; }

    // Cancels denominator forms dividing the numerator and the integer content.
    FactoredFraction& reduce();

    friend FactoredFraction operator+(const FactoredFraction& a, const FactoredFraction& b);
    FactoredFraction& operator+=(const FactoredFraction& b) { return *this = *this + b; }

private:
    SparsePoly num_;
    mpz_class den_int_;
    std::vector<LinearForm> den_forms_;
};

FactoredFraction frac_add(const FactoredFraction& a, const FactoredFraction& b);
FactoredFraction frac_reduce(FactoredFraction f);
// Throws ResidualDenominator unless the reduced denominator is a unit.
SparsePoly frac_to_poly(const FactoredFraction& f);

}  // namespace qchow
