#pragma once

#include "superaff/rational.hpp"
#include "superaff/rootdata.hpp"
#include "superaff/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superaff {

struct WitnessResult {
    Vector alpha;
    Rational bound;  // (rho, alpha - y^{-1} alpha)
    bool strict = false;
    Rational threshold;
    int branch = 0;  // 1: y^{-1} theta_w < 0, 2: positive and moved, 3: fixed
};

/// Which theta-analogue, lattice and thresholds apply to a family, and on which y.
struct WitnessPlan {
    enum class Domain { NonIdentity, OutsideSecond, OutsideFirst, InsideFirstPrimeNonIdentity };

    Domain domain = Domain::NonIdentity;
    Vector theta_w;
    std::vector<Vector> basis;  // Q_w,+ is their nonnegative span
    Rational threshold_negative;  // branch 1
    bool strict_negative = false;
    Rational threshold_positive;  // branches 2 and 3
    bool strict_positive = true;
    std::string description;
};

/// Throws PreconditionError for osp(2m|2n) with m = n + 1 (no boundary levels, no plan).
WitnessPlan witness_plan(const RootSystem& rs);

/// Precomputes the subgroups the domain test needs; reuse it across many y.
class WitnessSolver {
public:
    explicit WitnessSolver(const RootSystem& rs);

    const WitnessPlan& plan() const { return plan_; }
    bool in_domain(const WeylElement& y) const;
    /// PreconditionError outside the domain; InternalError if a verified inequality fails.
    WitnessResult find(const WeylElement& y) const;

private:
    const RootSystem* rs_;
    WitnessPlan plan_;
    WeylGroup subgroup_;
    Matrix basis_gram_inverse_;
};

WitnessResult find_witness(const RootSystem& rs, const WeylElement& y);

/// Long-root argument for osp(2m+1|2n) and osp(2m|2n): the first factor W_1 permutes the roots +-2 delta_i.
class LongRootSolver {
public:
    explicit LongRootSolver(const RootSystem& rs);

    /// Positive long roots of the first factor, 2 delta_1, ..., 2 delta_n.
    const std::vector<Vector>& long_positive() const { return long_positive_; }
    const WeylGroup& first_factor() const { return w1_; }
    const WeylGroup& stabilizer() const { return w1_prime_; }

    /// alpha in the long positive roots with y^{-1} alpha negative. PreconditionError when y is not in W_1 minus W'_1.
    Vector find(const WeylElement& y) const;

private:
    const RootSystem* rs_;
    std::vector<Vector> long_positive_;
    WeylGroup w1_;
    WeylGroup w1_prime_;
};

Vector find_long_root_witness(const RootSystem& rs, const WeylElement& y);

/// (rho, gamma) is an odd integer for every long root gamma = +-2 delta_i.
bool long_roots_have_odd_rho(const RootSystem& rs);

}  // namespace superaff
