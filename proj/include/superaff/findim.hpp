#pragma once

#include "superaff/rational.hpp"
#include "superaff/rootdata.hpp"
#include "superaff/weyl.hpp"

#include <utility>
#include <vector>

namespace superaff {

struct DominanceVerdict {
    bool accepted = true;
    /// (even simple root, 2(lambda, gamma)/(gamma, gamma)) for every failing gamma.
    std::vector<std::pair<Vector, Rational>> violations;
};

/// Accepts iff 2(lambda, gamma)/(gamma, gamma) is a nonnegative integer for every even simple gamma.
DominanceVerdict is_even_dominant_integral(const RootSystem& rs, const AffineWeight& w);

}  // namespace superaff
