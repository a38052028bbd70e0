#include "qchow/linear_form.hpp"

#include <numeric>
#include <sstream>

namespace qchow {

std::int64_t LinearForm::content() const {
    return std::gcd(std::gcd(a[0], a[1]), a[2]);
}

LinearForm LinearForm::normalized(std::int64_t* scale) const {
    std::int64_t g = content();
    if (g == 0) {
        if (scale) *scale = 0;
        return *this;
    }
    for (auto c : a) {
        if (c != 0) {
            if (c < 0) g = -g;
            break;
        }
    }
    if (scale) *scale = g;
    return {a[0] / g, a[1] / g, a[2] / g};
}

std::string LinearForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 3; ++i) {
        std::int64_t c = a[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::int64_t m = c < 0 ? -c : c;
        if (m != 1) os << m << '*';
        os << 'l' << (i + 1);
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace qchow
