#include "superaff/findim.hpp"

namespace superaff {

DominanceVerdict is_even_dominant_integral(const RootSystem& rs, const AffineWeight& w)
{
    DominanceVerdict v;
    for (const auto& g : rs.even_simple) {
        Rational x = 2 * rs.inner(w.finite, g) / rs.inner(g, g);
        if (!is_integer(x) || x < 0) v.violations.emplace_back(g, x);
    }
    v.accepted = v.violations.empty();
    return v;
}

}  // namespace superaff
