#include "qchow/factored_fraction.hpp"

#include <algorithm>

#include "qchow/errors.hpp"

namespace qchow {

FactoredFraction::FactoredFraction(SparsePoly num, const mpz_class& den_int,
                                   const std::vector<LinearForm>& den_forms)
    : num_(std::move(num)), den_int_(den_int) {
    if (num_.varset() != Varset::L) throw VarsetMismatch();
    if (den_int_ == 0) throw IntegrityError("zero denominator");
    for (const auto& f : den_forms) {
        if (f.is_zero()) throw IntegrityError("zero weight in a denominator");
        std::int64_t scale = 1;
        den_forms_.push_back(f.normalized(&scale));
        den_int_ *= static_cast<long>(scale);
    }
    std::sort(den_forms_.begin(), den_forms_.end());
    if (den_int_ < 0) {
        den_int_ = -den_int_;
        num_ = -num_;
    }
}

FactoredFraction& FactoredFraction::reduce() {
    if (num_.is_zero()) {
        den_int_ = 1;
        den_forms_.clear();
        return *this;
    }
    std::vector<LinearForm> kept;
    for (std::size_t i = 0; i < den_forms_.size();) {
        std::size_t j = i;
        while (j < den_forms_.size() && den_forms_[j] == den_forms_[i]) ++j;
        std::size_t k = i;
        for (; k < j; ++k) {
            auto q = num_.try_div_linear(den_forms_[i]);
            if (!q) break;
            num_ = std::move(*q);
        }
        kept.insert(kept.end(), j - k, den_forms_[i]);
        i = j;
    }
    den_forms_ = std::move(kept);
    mpz_class g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_int_.get_mpz_t());
    if (g > 1) {
        num_ = num_.divexact(g);
        den_int_ /= g;
    }
    return *this;
}

FactoredFraction operator+(const FactoredFraction& a, const FactoredFraction& b) {
    if (a.num_.is_zero()) return b;
    if (b.num_.is_zero()) return a;
    FactoredFraction out;
    // Multiset union of the denominator forms; missing factors multiply the
    // other numerator.
    std::vector<LinearForm> ua, ub;
    std::size_t i = 0, j = 0;
    const auto& da = a.den_forms_;
    const auto& db = b.den_forms_;
    while (i < da.size() || j < db.size()) {
        if (j == db.size() || (i < da.size() && da[i] < db[j])) {
            out.den_forms_.push_back(da[i]);
            ub.push_back(da[i++]);
        } else if (i == da.size() || db[j] < da[i]) {
            out.den_forms_.push_back(db[j]);
            ua.push_back(db[j++]);
        } else {
            out.den_forms_.push_back(da[i]);
            ++i;
            ++j;
        }
    }
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.den_int_.get_mpz_t(), b.den_int_.get_mpz_t());
    out.den_int_ = l;
    SparsePoly na = a.num_ * mpz_class(l / a.den_int_);
    for (const auto& f : ua) na = na.mul_linear(f);
    SparsePoly nb = b.num_ * mpz_class(l / b.den_int_);
    for (const auto& f : ub) nb = nb.mul_linear(f);
    out.num_ = na + nb;
    return out.reduce();
}

FactoredFraction frac_add(const FactoredFraction& a, const FactoredFraction& b) { return a + b; }

FactoredFraction frac_reduce(FactoredFraction f) { return f.reduce(); }

SparsePoly frac_to_poly(const FactoredFraction& f) {
    FactoredFraction r = frac_reduce(f);
    if (!r.den_forms().empty() || r.den_int() != 1) {
        std::string den = r.den_int().get_str();
        for (const auto& l : r.den_forms()) den += "*(" + l.to_string() + ")";
        throw ResidualDenominator("denominator " + den + " survives reduction");
    }
    return r.numerator();
}

}  // namespace qchow
