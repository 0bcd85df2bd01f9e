#include "superaff/witness.hpp"

#include "superaff/errors.hpp"

namespace superaff {

namespace {

bool meets(const Rational& value, const Rational& threshold, bool strict)
{
    return strict ? value > threshold : value >= threshold;
}

}  // namespace

WitnessPlan witness_plan(const RootSystem& rs)
{
    const FamilySpec& s = rs.spec;
    WitnessPlan p;
    switch (s.family) {
    case Family::SimpleA:
    case Family::SimpleB2:
    case Family::SimpleG2:
        p.domain = WitnessPlan::Domain::NonIdentity;
        p.theta_w = rs.theta;
        p.basis = rs.even_simple;
        p.threshold_negative = rs.h_dual;
        p.strict_negative = false;
        p.threshold_positive = rs.h_dual;
        p.description = "theta over Q_+, >= h∨ / > h∨";
        return p;
    case Family::SlSuper:
        p.domain = WitnessPlan::Domain::OutsideSecond;
        p.theta_w = rs.derived.at("theta_1");
        p.basis.assign(rs.simple_roots.begin(), rs.simple_roots.begin() + (s.n - 1));
        p.threshold_negative = s.n - s.m;
        p.threshold_positive = s.n - s.m;
        p.strict_positive = false;
        p.description = "theta_1 over Q_1,+, >= n - m";
        return p;
    case Family::OspC:
        p.domain = WitnessPlan::Domain::NonIdentity;
        p.theta_w = rs.derived.at("theta_0");
        p.basis = rs.even_simple;
        p.threshold_negative = s.n;
        p.strict_negative = true;
        p.threshold_positive = s.n;
        p.description = "theta_0 over Q_0,+, > n";
        return p;
    case Family::OspB:
        if (s.m == 0) {
            p.domain = WitnessPlan::Domain::NonIdentity;
            p.theta_w = rs.theta;
            p.basis = rs.even_simple;
            p.threshold_negative = s.n;
            p.threshold_positive = rs.h_dual;
            p.description = "theta over Q_0,+, >= n / > n + 1/2";
            return p;
        }
        break;
    case Family::OspD:
        if (s.m == s.n + 1)
            throw PreconditionError(s.name() + ": h∨ = 0, no witness plan");
        break;
    case Family::F4:
    case Family::G3: break;
    }

    bool second_factor_plan = s.family == Family::F4 || s.family == Family::G3 || s.m > s.n;
    p.threshold_negative = rs.h_dual;
    p.strict_negative = true;
    p.threshold_positive = rs.h_dual;
    if (second_factor_plan) {
        p.domain = WitnessPlan::Domain::OutsideFirst;
        p.theta_w = rs.derived.at("theta'");
        p.basis = even_factors(rs).second;
        p.description = "theta' over Q_2,+, > h∨";
    } else {
        p.domain = WitnessPlan::Domain::InsideFirstPrimeNonIdentity;
        p.theta_w = rs.theta;
        p.basis.assign(rs.simple_roots.begin(), rs.simple_roots.begin() + (s.n - 1));
        p.basis.push_back(rs.derived.at("alpha'_n"));
        p.description = "theta over Q_1,+ (with alpha'_n), > h∨";
    }
    return p;
}

WitnessSolver::WitnessSolver(const RootSystem& rs) : rs_(&rs), plan_(witness_plan(rs))
{
    switch (plan_.domain) {
    case WitnessPlan::Domain::OutsideSecond: subgroup_ = generate_subgroup(rs, even_factors(rs).second); break;
    case WitnessPlan::Domain::OutsideFirst: subgroup_ = generate_subgroup(rs, even_factors(rs).first); break;
    case WitnessPlan::Domain::InsideFirstPrimeNonIdentity:
        subgroup_ = generate_subgroup(
            rs, std::vector<Vector>(rs.simple_roots.begin(), rs.simple_roots.begin() + (rs.spec.n - 1)));
        break;
    case WitnessPlan::Domain::NonIdentity: break;
    }
    const std::size_t b = plan_.basis.size();
    Matrix g(b, b);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) g(i, j) = rs.inner(plan_.basis[i], plan_.basis[j]);
    auto gi = inverse(g);
    if (!gi) throw InternalError(rs.spec.name() + ": witness basis is degenerate");
    basis_gram_inverse_ = *gi;
}

bool WitnessSolver::in_domain(const WeylElement& y) const
{
    switch (plan_.domain) {
    case WitnessPlan::Domain::NonIdentity: return !y.is_identity();
    case WitnessPlan::Domain::OutsideSecond:
    case WitnessPlan::Domain::OutsideFirst: return !subgroup_.contains(y);
    case WitnessPlan::Domain::InsideFirstPrimeNonIdentity: return subgroup_.contains(y) && !y.is_identity();
    }
    return false;
}

WitnessResult WitnessSolver::find(const WeylElement& y) const
{
    const RootSystem& rs = *rs_;
    if (!in_domain(y)) throw PreconditionError(rs.spec.name() + ": y is outside the witness domain (" + plan_.description + ")");

    auto pull = [&](const Vector& v) { return y.apply_inverse(v); };
    auto gain = [&](const Vector& v) { return rs.inner(rs.rho, v - pull(v)); };
    const Vector& tw = plan_.theta_w;
    const Vector moved = pull(tw);

    WitnessResult r;
    if (!rs.in_positive_cone(moved)) {
        r.branch = 1;
        r.alpha = tw;
        r.threshold = plan_.threshold_negative;
        r.strict = plan_.strict_negative;
    } else {
        r.threshold = plan_.threshold_positive;
        r.strict = plan_.strict_positive;
        if (moved != tw) {
            r.branch = 2;
            const Rational c = gain(tw);
            if (c <= 0) throw InternalError(rs.spec.name() + ": (rho, theta_w - y^{-1} theta_w) is not positive");
            int k = 1;
            while (!meets(k * c, r.threshold, r.strict)) ++k;
            r.alpha = Rational(k) * tw;
        } else {
            r.branch = 3;
            const Vector* pick = nullptr;
            for (const auto& a : plan_.basis)
                if (gain(a) > 0) {
                    pick = &a;
                    break;
                }
            if (!pick) throw InternalError(rs.spec.name() + ": no simple root is moved by y although y != 1");
            const Rational c = gain(*pick);
            int m = 1;
            while (!meets(m * c, r.threshold, r.strict)) ++m;
            // theta_w is fixed, so adding multiples of it does not change the bound.
            for (int k = 0;; ++k) {
                Vector a = Rational(k) * tw + Rational(m) * *pick;
                if (rs.in_positive_cone(rs.theta + pull(a))) {
                    r.alpha = a;
                    break;
                }
                if (k > 1000) throw InternalError(rs.spec.name() + ": no k puts theta + y^{-1} alpha in Q_+");
            }
        }
    }
    r.bound = gain(r.alpha);

    // Verify everything the result promises.
    std::vector<Rational> p;
    for (const auto& b : plan_.basis) p.push_back(rs.inner(r.alpha, b));
    Vector coeffs = basis_gram_inverse_ * Vector(p);
    Vector back(rs.dim);
    for (std::size_t i = 0; i < plan_.basis.size(); ++i) {
        if (coeffs[i] < 0 || !is_integer(coeffs[i]))
            throw InternalError(rs.spec.name() + ": witness alpha is not in the positive lattice");
        back += coeffs[i] * plan_.basis[i];
    }
    if (back != r.alpha) throw InternalError(rs.spec.name() + ": witness alpha is outside the lattice span");
    if (!rs.in_positive_cone(rs.theta + pull(r.alpha)))
        throw InternalError(rs.spec.name() + ": theta + y^{-1} alpha is not in Q_+");
    if (!meets(r.bound, r.threshold, r.strict))
        throw InternalError(rs.spec.name() + ": witness bound " + to_string(r.bound) + " misses threshold " +
                            to_string(r.threshold));
    return r;
}

WitnessResult find_witness(const RootSystem& rs, const WeylElement& y)
{
    return WitnessSolver(rs).find(y);
}

LongRootSolver::LongRootSolver(const RootSystem& rs) : rs_(&rs)
{
    if (rs.spec.family != Family::OspB && rs.spec.family != Family::OspD)
        throw PreconditionError(rs.spec.name() + ": long-root witness applies to osp(2m+1|2n) and osp(2m|2n) only");
    for (int i = 0; i < rs.spec.n; ++i) long_positive_.push_back(Vector::unit(rs.dim, i, 2));
    w1_ = generate_subgroup(rs, even_factors(rs).first);
    w1_prime_ = generate_subgroup(
        rs, std::vector<Vector>(rs.simple_roots.begin(), rs.simple_roots.begin() + (rs.spec.n - 1)));
}

Vector LongRootSolver::find(const WeylElement& y) const
{
    const RootSystem& rs = *rs_;
    if (!w1_.contains(y)) throw PreconditionError(rs.spec.name() + ": y is not in W_1");
    if (w1_prime_.contains(y)) throw PreconditionError("stabilizer element has no witness");
    for (const auto& a : long_positive_) {
        Vector back = y.apply_inverse(a);
        if (rs.in_positive_cone(back)) continue;
        bool long_root = false;
        for (const auto& l : long_positive_) long_root = long_root || back == -l;
        if (!long_root) throw InternalError(rs.spec.name() + ": W_1 does not preserve the long roots");
        if (rs.spec.family == Family::OspB && rs.spec.m > rs.spec.n) {
            Rational g = rs.inner(rs.rho, a - back);
            if (!is_integer(g) || numerator(g) % 2 != 0)
                throw InternalError(rs.spec.name() + ": (rho, alpha - y^{-1} alpha) is not even");
        }
        return a;
    }
    throw InternalError(rs.spec.name() + ": y outside W'_1 fixes every long positive root");
}

Vector find_long_root_witness(const RootSystem& rs, const WeylElement& y)
{
    return LongRootSolver(rs).find(y);
}

bool long_roots_have_odd_rho(const RootSystem& rs)
{
    if (rs.spec.family != Family::OspB && rs.spec.family != Family::OspD) return false;
    for (int i = 0; i < rs.spec.n; ++i)
        for (int s : {2, -2}) {
            Rational g = rs.inner(rs.rho, Vector::unit(rs.dim, i, s));
            if (!is_integer(g) || numerator(g) % 2 == 0) return false;
        }
    return true;
}

}  // namespace superaff
