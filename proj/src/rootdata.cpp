#include "superaff/rootdata.hpp"

#include "superaff/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace superaff {

namespace {

Vector e(std::size_t d, std::size_t i, const Rational& c = 1)
{
    return Vector::unit(d, i, c);
}

// +-e_i +- e_j for i < j in idx (all four sign choices).
void add_pm_pairs(std::vector<Vector>& out, std::size_t d, const std::vector<std::size_t>& idx)
{
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            for (int s1 : {1, -1})
                for (int s2 : {1, -1}) out.push_back(e(d, idx[a], s1) + e(d, idx[b], s2));
}

void add_pm_singles(std::vector<Vector>& out, std::size_t d, const std::vector<std::size_t>& idx,
                    const Rational& scale)
{
    for (auto i : idx)
        for (int s : {1, -1}) out.push_back(e(d, i, scale * s));
}

std::vector<std::size_t> range(std::size_t from, std::size_t to)
{
    std::vector<std::size_t> r;
    for (std::size_t i = from; i < to; ++i) r.push_back(i);
    return r;
}

// e_i - (e_0' + e_1' + e_2')/3 inside a block of three coordinates starting at offset.
Vector traceless(std::size_t d, std::size_t offset, std::size_t i)
{
    Vector v(d);
    for (std::size_t k = 0; k < 3; ++k) v[offset + k] = Rational(-1, 3);
    v[offset + i] += 1;
    return v;
}

struct Realization {
    std::vector<Rational> signature;
    std::vector<Vector> simple;
    std::vector<Parity> parity;
    std::vector<Vector> even;
    std::vector<Vector> odd;
};

Realization sl_super(int n, int m)
{
    const std::size_t d = n + m;
    Realization r;
    for (int i = 0; i < n; ++i) r.signature.push_back(1);
    for (int j = 0; j < m; ++j) r.signature.push_back(-1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        r.simple.push_back(e(d, i) - e(d, i + 1));
        r.parity.push_back(static_cast<int>(i) == n - 1 ? Parity::Odd : Parity::Even);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            bool same = (static_cast<int>(i) < n) == (static_cast<int>(j) < n);
            (same ? r.even : r.odd).push_back(e(d, i) - e(d, j));
        }
    return r;
}

Realization osp_c(int n)
{
    const std::size_t d = n + 1;  // coordinate 0 is epsilon, 1..n are delta_i
    const Rational half(1, 2);
    Realization r;
    r.signature.push_back(-half);
    for (int i = 0; i < n; ++i) r.signature.push_back(half);
    r.simple.push_back(e(d, 0) - e(d, 1));
    r.parity.push_back(Parity::Odd);
    for (std::size_t i = 1; i < d - 1; ++i) {
        r.simple.push_back(e(d, i) - e(d, i + 1));
        r.parity.push_back(Parity::Even);
    }
    r.simple.push_back(e(d, d - 1, 2));
    r.parity.push_back(Parity::Even);
    auto deltas = range(1, d);
    add_pm_pairs(r.even, d, deltas);
    add_pm_singles(r.even, d, deltas, 2);
    for (auto i : deltas)
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) r.odd.push_back(e(d, 0, s1) + e(d, i, s2));
    return r;
}

// Shared by osp(2m+1|2n) and osp(2m|2n): delta_1..delta_n then epsilon_1..epsilon_m.
Realization osp_bd(int m, int n, bool type_b)
{
    const std::size_t d = n + m;
    Realization r;
    Rational sd = m <= n ? Rational(1, 2) : Rational(-1);
    Rational se = m <= n ? Rational(-1, 2) : Rational(1);
    for (int i = 0; i < n; ++i) r.signature.push_back(sd);
    for (int j = 0; j < m; ++j) r.signature.push_back(se);

    for (int i = 0; i + 1 < n; ++i) {
        r.simple.push_back(e(d, i) - e(d, i + 1));
        r.parity.push_back(Parity::Even);
    }
    if (m == 0) {
        r.simple.push_back(e(d, n - 1));
        r.parity.push_back(Parity::Odd);
    } else {
        r.simple.push_back(e(d, n - 1) - e(d, n));
        r.parity.push_back(Parity::Odd);
        for (std::size_t j = n; j + 1 < d; ++j) {
            r.simple.push_back(e(d, j) - e(d, j + 1));
            r.parity.push_back(Parity::Even);
        }
        r.simple.push_back(type_b ? e(d, d - 1) : e(d, d - 2) + e(d, d - 1));
        r.parity.push_back(Parity::Even);
    }

    auto deltas = range(0, n);
    auto epsilons = range(n, d);
    add_pm_pairs(r.even, d, deltas);
    add_pm_singles(r.even, d, deltas, 2);
    add_pm_pairs(r.even, d, epsilons);
    if (type_b) add_pm_singles(r.even, d, epsilons, 1);
    for (auto i : deltas)
        for (auto j : epsilons)
            for (int s1 : {1, -1})
                for (int s2 : {1, -1}) r.odd.push_back(e(d, i, s1) + e(d, j, s2));
    if (type_b) add_pm_singles(r.odd, d, deltas, 1);
    return r;
}

Realization f4()
{
    const std::size_t d = 4;  // delta, eps_1, eps_2, eps_3
    const Rational half(1, 2);
    Realization r;
    r.signature = {-3, 1, 1, 1};
    r.simple = {Vector{half, -half, -half, -half}, e(d, 3), e(d, 2) - e(d, 3), e(d, 1) - e(d, 2)};
    r.parity = {Parity::Odd, Parity::Even, Parity::Even, Parity::Even};
    add_pm_singles(r.even, d, {0}, 1);
    add_pm_singles(r.even, d, {1, 2, 3}, 1);
    add_pm_pairs(r.even, d, {1, 2, 3});
    for (int a : {1, -1})
        for (int b : {1, -1})
            for (int c : {1, -1})
                for (int x : {1, -1}) r.odd.push_back(Vector{half * a, half * b, half * c, half * x});
    return r;
}

Realization g3()
{
    const std::size_t d = 4;  // delta, then e_1, e_2, e_3 with eps_i = e_i - (e_1+e_2+e_3)/3
    Realization r;
    r.signature = {Rational(-2, 3), 1, 1, 1};
    std::vector<Vector> eps = {traceless(d, 1, 0), traceless(d, 1, 1), traceless(d, 1, 2)};
    r.simple = {e(d, 0) + eps[0], eps[1], eps[2] - eps[1]};
    r.parity = {Parity::Odd, Parity::Even, Parity::Even};
    add_pm_singles(r.even, d, {0}, 2);
    for (const auto& x : eps) {
        r.even.push_back(x);
        r.even.push_back(-x);
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) r.even.push_back(eps[i] - eps[j]);
    add_pm_singles(r.odd, d, {0}, 1);
    for (const auto& x : eps)
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) r.odd.push_back(e(d, 0, s1) + Rational(s2) * x);
    return r;
}

Realization simple_a(int n)
{
    const std::size_t d = n + 1;
    Realization r;
    r.signature.assign(d, Rational(1));
    for (std::size_t i = 0; i + 1 < d; ++i) {
        r.simple.push_back(e(d, i) - e(d, i + 1));
        r.parity.push_back(Parity::Even);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i != j) r.even.push_back(e(d, i) - e(d, j));
    return r;
}

// sp(4) as C_2 with (e_i, e_i) = 1/2, so the long roots +-2e_i have square length 2.
Realization simple_b2()
{
    const std::size_t d = 2;
    Realization r;
    r.signature = {Rational(1, 2), Rational(1, 2)};
    r.simple = {e(d, 0) - e(d, 1), e(d, 1, 2)};
    r.parity = {Parity::Even, Parity::Even};
    add_pm_pairs(r.even, d, {0, 1});
    add_pm_singles(r.even, d, {0, 1}, 2);
    return r;
}

Realization simple_g2()
{
    const std::size_t d = 3;
    Realization r;
    r.signature.assign(d, Rational(1));
    std::vector<Vector> eps = {traceless(d, 0, 0), traceless(d, 0, 1), traceless(d, 0, 2)};
    r.simple = {eps[1], eps[2] - eps[1]};
    r.parity = {Parity::Even, Parity::Even};
    for (const auto& x : eps) {
        r.even.push_back(x);
        r.even.push_back(-x);
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) r.even.push_back(eps[i] - eps[j]);
    return r;
}

void check_spec(const FamilySpec& s)
{
    auto fail = [&](const std::string& why) { throw ConstructionError(s.name() + ": " + why); };
    switch (s.family) {
    case Family::SlSuper:
        if (s.m <= 0) fail("sl(n|m) requires m > 0");
        if (s.n == s.m) fail("h∨ = 0: no boundary admissible levels");
        if (s.n < s.m) fail("sl(n|m) requires n > m (write the larger block first)");
        break;
    case Family::OspC:
        if (s.n < 1) fail("osp(2|2n) requires n >= 1");
        break;
    case Family::OspB:
        if (s.n < 1) fail("osp(2m+1|2n) requires n >= 1");
        if (s.m < 0) fail("osp(2m+1|2n) requires m >= 0");
        break;
    case Family::OspD:
        if (s.n < 1) fail("osp(2m|2n) requires n >= 1");
        if (s.m < 2) fail("osp(2m|2n) requires m >= 2");
        break;
    case Family::SimpleA:
        if (s.n < 1) fail("sl(n+1) requires n >= 1");
        break;
    default:
        break;
    }
}

std::string describe(const RootSystem& rs, const Vector& v)
{
    std::ostringstream os;
    os << v << " in " << rs.spec.name();
    return os.str();
}

long long factorial(int k)
{
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

long long hyperoctahedral(int k)
{
    return (1LL << k) * factorial(k);
}

}  // namespace

std::string FamilySpec::name() const
{
    auto s = [](int x) { return std::to_string(x); };
    switch (family) {
    case Family::SlSuper: return "sl(" + s(n) + "|" + s(m) + ")";
    case Family::OspC: return "osp(2|" + s(2 * n) + ")";
    case Family::OspB: return "osp(" + s(2 * m + 1) + "|" + s(2 * n) + ")";
    case Family::OspD: return "osp(" + s(2 * m) + "|" + s(2 * n) + ")";
    case Family::F4: return "F(4)";
    case Family::G3: return "G(3)";
    case Family::SimpleA: return "sl(" + s(n + 1) + ")";
    case Family::SimpleB2: return "sp(4)";
    case Family::SimpleG2: return "g2";
    }
    return "?";
}

bool FamilySpec::is_super() const
{
    return family != Family::SimpleA && family != Family::SimpleB2 && family != Family::SimpleG2;
}

bool FamilySpec::is_type_one() const
{
    return family == Family::SlSuper || family == Family::OspC;
}

Rational RootSystem::inner(const Vector& v, const Vector& w) const
{
    if (v.size() != dim || w.size() != dim)
        throw DomainError("inner: expected vectors of dimension " + std::to_string(dim));
    Rational s = 0;
    for (std::size_t k = 0; k < dim; ++k)
        if (v[k] != 0 && w[k] != 0) s += basis_signature[k] * v[k] * w[k];
    return s;
}

std::vector<Rational> RootSystem::pairings(const Vector& v) const
{
    std::vector<Rational> p;
    p.reserve(rank());
    for (const auto& a : simple_roots) p.push_back(inner(v, a));
    return p;
}

std::vector<Rational> RootSystem::pi_coords(const Vector& v) const
{
    Vector p(pairings(v));
    Vector c = gram_inverse_ * p;
    return c.data();
}

Vector RootSystem::from_pi_coords(const std::vector<Rational>& c) const
{
    if (c.size() != rank()) throw DomainError("from_pi_coords: wrong number of coefficients");
    Vector v(dim);
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) v += c[j] * simple_roots[j];
    return v;
}

bool RootSystem::is_even_root(const Vector& v) const
{
    return std::find(even_roots.begin(), even_roots.end(), v) != even_roots.end();
}

bool RootSystem::is_odd_root(const Vector& v) const
{
    return std::find(odd_roots.begin(), odd_roots.end(), v) != odd_roots.end();
}

bool RootSystem::is_root(const Vector& v) const
{
    return is_even_root(v) || is_odd_root(v);
}

bool RootSystem::in_positive_cone(const Vector& v) const
{
    for (const auto& c : pi_coords(v))
        if (c < 0) return false;
    return true;
}

bool RootSystem::is_positive_root(const Vector& v) const
{
    if (!is_root(v)) throw DomainError("not a root: " + describe(*this, v));
    return in_positive_cone(v);
}

bool RootSystem::is_derived(const Vector& v) const
{
    for (const auto& [name, w] : derived)
        if (w == v) return true;
    return false;
}

std::optional<std::size_t> RootSystem::odd_node() const
{
    for (std::size_t i = 0; i < parity.size(); ++i)
        if (parity[i] == Parity::Odd) return i;
    return std::nullopt;
}

void validate_family_spec(const FamilySpec& spec)
{
    check_spec(spec);
}

Rational inner(const RootSystem& rs, const Vector& v, const Vector& w)
{
    return rs.inner(v, w);
}

Vector coroot(const RootSystem& rs, const Vector& alpha)
{
    if (!rs.is_root(alpha) && !rs.is_derived(alpha))
        throw DomainError("coroot: not a root or registered derived root: " + describe(rs, alpha));
    Rational n = rs.inner(alpha, alpha);
    if (n == 0) return alpha;
    return (Rational(2) / n) * alpha;
}

std::vector<Vector> even_simple_system(const RootSystem& rs)
{
    return rs.even_simple;
}

Matrix cartan_matrix(const RootSystem& rs)
{
    const std::size_t r = rs.rank();
    Matrix a(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        const Rational& gii = rs.gram(i, i);
        for (std::size_t j = 0; j < r; ++j) a(i, j) = gii == 0 ? rs.gram(i, j) : 2 * rs.gram(i, j) / gii;
    }
    return a;
}

namespace {

std::size_t first_block(const FamilySpec& s)
{
    switch (s.family) {
    case Family::SlSuper:
    case Family::OspB:
    case Family::OspD: return static_cast<std::size_t>(s.n);
    case Family::F4:
    case Family::G3: return 1;
    default: return static_cast<std::size_t>(-1);  // unsplit: everything is in the first factor
    }
}

bool supported_below(const Vector& v, std::size_t block)
{
    for (std::size_t k = block; k < v.size(); ++k)
        if (v[k] != 0) return false;
    return true;
}

}  // namespace

EvenFactors even_factors(const RootSystem& rs)
{
    EvenFactors f;
    const std::size_t block = first_block(rs.spec);
    for (const auto& g : rs.even_simple) (supported_below(g, block) ? f.first : f.second).push_back(g);
    return f;
}

WeylOrders expected_weyl_orders(const FamilySpec& s)
{
    auto z = [](long long a, long long b) {
        return WeylOrders{static_cast<std::size_t>(a * b), static_cast<std::size_t>(a),
                          static_cast<std::size_t>(b)};
    };
    switch (s.family) {
    case Family::SlSuper: return z(factorial(s.n), factorial(s.m));
    case Family::OspC: return z(hyperoctahedral(s.n), 1);
    case Family::OspB: return z(hyperoctahedral(s.n), hyperoctahedral(s.m));
    case Family::OspD: return z(hyperoctahedral(s.n), hyperoctahedral(s.m) / 2);
    case Family::F4: return z(2, 48);
    case Family::G3: return z(2, 12);
    case Family::SimpleA: return z(factorial(s.n + 1), 1);
    case Family::SimpleB2: return z(8, 1);
    case Family::SimpleG2: return z(12, 1);
    }
    return z(1, 1);
}

std::pair<std::size_t, std::size_t> expected_root_counts(const FamilySpec& s)
{
    const std::size_t n = s.n, m = s.m;
    switch (s.family) {
    case Family::SlSuper: return {n * (n - 1) + m * (m - 1), 2 * n * m};
    case Family::OspC: return {2 * n * n, 4 * n};
    case Family::OspB: return {2 * n * n + 2 * m * m, 4 * n * m + 2 * n};
    case Family::OspD: return {2 * n * n + 2 * m * (m - 1), 4 * n * m};
    case Family::F4: return {20, 16};
    case Family::G3: return {14, 14};
    case Family::SimpleA: return {n * (n + 1), 0};
    case Family::SimpleB2: return {8, 0};
    case Family::SimpleG2: return {12, 0};
    }
    return {0, 0};
}

Rational expected_h_dual(const FamilySpec& s)
{
    const Rational half(1, 2);
    switch (s.family) {
    case Family::SlSuper: return s.n - s.m;
    case Family::OspC: return s.n;
    case Family::OspB:
        if (s.m <= s.n) return Rational(s.n - s.m) + half;
        return 2 * (s.m - s.n) - 1;
    case Family::OspD:
        if (s.m <= s.n) return s.n - s.m + 1;
        return 2 * (s.m - s.n) - 2;
    case Family::F4: return 3;
    case Family::G3: return 2;
    case Family::SimpleA: return s.n + 1;
    case Family::SimpleB2: return 3;
    case Family::SimpleG2: return 4;
    }
    return 0;
}

int expected_lacety(const FamilySpec& s)
{
    switch (s.family) {
    case Family::SlSuper: return 1;
    case Family::OspC: return s.n > 1 ? 2 : 1;
    case Family::OspB:
        if (s.m <= s.n) return s.n > 1 ? 2 : 1;
        return s.m > 1 ? 2 : 1;
    case Family::OspD:
        if (s.m <= s.n) return s.n > 1 ? 2 : 1;
        return 1;
    case Family::F4: return 2;
    case Family::G3: return 3;
    case Family::SimpleA: return 1;
    case Family::SimpleB2: return 2;
    case Family::SimpleG2: return 3;
    }
    return 1;
}

RootSystem build_root_system(const FamilySpec& spec)
{
    validate_family_spec(spec);
    Realization r;
    switch (spec.family) {
    case Family::SlSuper: r = sl_super(spec.n, spec.m); break;
    case Family::OspC: r = osp_c(spec.n); break;
    case Family::OspB: r = osp_bd(spec.m, spec.n, true); break;
    case Family::OspD: r = osp_bd(spec.m, spec.n, false); break;
    case Family::F4: r = f4(); break;
    case Family::G3: r = g3(); break;
    case Family::SimpleA: r = simple_a(spec.n); break;
    case Family::SimpleB2: r = simple_b2(); break;
    case Family::SimpleG2: r = simple_g2(); break;
    }

    RootSystem rs;
    rs.spec = spec;
    rs.dim = r.signature.size();
    rs.basis_signature = r.signature;
    rs.simple_roots = r.simple;
    rs.parity = r.parity;
    rs.even_roots = r.even;
    rs.odd_roots = r.odd;

    auto fail = [&](const std::string& why) { throw ConstructionError(spec.name() + ": " + why); };

    const std::size_t rank = rs.simple_roots.size();
    rs.gram = Matrix(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) rs.gram(i, j) = rs.inner(rs.simple_roots[i], rs.simple_roots[j]);
    auto gi = inverse(rs.gram);
    if (!gi) fail("Gram matrix of the simple roots is degenerate");
    rs.gram_inverse_ = *gi;

    // Root set sanity: counts, no duplicates, closed under negation, integral Pi-coordinates of one sign.
    auto [ne, no] = expected_root_counts(spec);
    if (rs.even_roots.size() != ne || rs.odd_roots.size() != no)
        fail("root counts " + std::to_string(rs.even_roots.size()) + "/" + std::to_string(rs.odd_roots.size()) +
             " differ from " + std::to_string(ne) + "/" + std::to_string(no));
    {
        std::set<Vector> all(rs.even_roots.begin(), rs.even_roots.end());
        all.insert(rs.odd_roots.begin(), rs.odd_roots.end());
        if (all.size() != ne + no) fail("duplicate roots");
        for (const auto& v : all)
            if (!all.count(-v)) fail("root set not closed under negation");
    }
    for (std::size_t i = 0; i < rank; ++i) {
        bool ok = rs.parity[i] == Parity::Even ? rs.is_even_root(rs.simple_roots[i]) : rs.is_odd_root(rs.simple_roots[i]);
        if (!ok) fail("simple root " + std::to_string(i + 1) + " is missing or has the wrong parity");
    }
    auto classify_sign = [&](const Vector& v) {
        auto c = rs.pi_coords(v);
        bool nonneg = true, nonpos = true;
        for (const auto& x : c) {
            if (!is_integer(x)) fail("non-integral Pi-coordinates for root " + describe(rs, v));
            if (x < 0) nonneg = false;
            if (x > 0) nonpos = false;
        }
        if (nonneg == nonpos) fail("root is neither positive nor negative: " + describe(rs, v));
        return nonneg;
    };
    for (const auto& v : rs.even_roots)
        if (classify_sign(v)) rs.positive_even.push_back(v);
    for (const auto& v : rs.odd_roots)
        if (classify_sign(v)) rs.positive_odd.push_back(v);
    rs.positive_roots = rs.positive_even;
    rs.positive_roots.insert(rs.positive_roots.end(), rs.positive_odd.begin(), rs.positive_odd.end());

    // Signed half-sum, then the defining pairing property.
    rs.rho = Vector(rs.dim);
    const Rational half(1, 2);
    for (const auto& v : rs.positive_even) rs.rho += half * v;
    for (const auto& v : rs.positive_odd) rs.rho -= half * v;
    for (std::size_t i = 0; i < rank; ++i)
        if (rs.inner(rs.rho, rs.simple_roots[i]) != half * rs.gram(i, i))
            fail("(rho, alpha_" + std::to_string(i + 1) + ") != (alpha_i, alpha_i)/2");

    // Highest root: unique positive root of maximal height, locally maximal.
    auto height = [&](const Vector& v) {
        Rational h = 0;
        for (const auto& c : rs.pi_coords(v)) h += c;
        return h;
    };
    Rational best = -1;
    int ties = 0;
    for (const auto& v : rs.positive_roots) {
        Rational h = height(v);
        if (h > best) {
            best = h;
            rs.theta = v;
            ties = 1;
        } else if (h == best) {
            ++ties;
        }
    }
    if (ties != 1) fail("highest root is not unique");
    for (const auto& a : rs.simple_roots)
        if (rs.is_root(rs.theta + a)) fail("theta + alpha_i is a root");
    for (const auto& c : rs.pi_coords(rs.theta)) {
        if (c < 1) fail("theta has a mark below 1");
        rs.marks.push_back(c.convert_to<int>());
    }
    rs.h_dual = rs.inner(rs.rho, rs.theta) + half * rs.inner(rs.theta, rs.theta);
    if (rs.h_dual != expected_h_dual(spec))
        fail("h_dual " + to_string(rs.h_dual) + " differs from " + to_string(expected_h_dual(spec)));

    // Lacety from the positive-norm even roots.
    {
        Rational lo = -1, hi = -1;
        for (const auto& v : rs.even_roots) {
            Rational n = rs.inner(v, v);
            if (n <= 0) continue;
            if (lo < 0 || n < lo) lo = n;
            if (hi < 0 || n > hi) hi = n;
        }
        if (lo < 0) fail("no even root of positive square length");
        Rational ratio = hi / lo;
        if (!is_integer(ratio)) fail("non-integral lacety");
        rs.lacety = ratio.convert_to<int>();
        if (rs.lacety != expected_lacety(spec))
            fail("lacety " + std::to_string(rs.lacety) + " differs from " + std::to_string(expected_lacety(spec)));
    }

    // Even simple system: indecomposable even positives, ordered by descending Pi-coordinates.
    {
        std::set<Vector> sums;
        for (const auto& a : rs.positive_even)
            for (const auto& b : rs.positive_even) sums.insert(a + b);
        std::vector<std::pair<std::vector<Rational>, Vector>> keyed;
        for (const auto& v : rs.positive_even)
            if (!sums.count(v)) keyed.push_back({rs.pi_coords(v), v});
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        for (auto& [k, v] : keyed) rs.even_simple.push_back(v);
        if (rs.even_simple.empty()) fail("empty even simple system");
        Matrix g(rs.even_simple.size(), rs.even_simple.size());
        for (std::size_t i = 0; i < rs.even_simple.size(); ++i)
            for (std::size_t j = 0; j < rs.even_simple.size(); ++j)
                g(i, j) = rs.inner(rs.even_simple[i], rs.even_simple[j]);
        if (!inverse(g)) fail("even simple roots are linearly dependent");
        for (const auto& v : rs.even_simple)
            if (rs.inner(v, v) == 0) fail("isotropic even simple root");
    }

    // Closure of each parity class under the even reflections.
    for (const auto& g : rs.even_simple) {
        const Rational gg = rs.inner(g, g);
        auto refl = [&](const Vector& v) { return v - (2 * rs.inner(v, g) / gg) * g; };
        for (const auto& v : rs.even_roots)
            if (!rs.is_even_root(refl(v))) fail("even roots not closed under reflections");
        for (const auto& v : rs.odd_roots)
            if (!rs.is_odd_root(refl(v))) fail("odd roots not closed under reflections");
    }

    // Derived roots used by later modules.
    if (spec.family == Family::SlSuper) {
        Vector t(rs.dim);
        for (int i = 0; i + 1 < spec.n; ++i) t += rs.simple_roots[i];
        rs.derived["theta_1"] = t;
    }
    if (spec.family == Family::OspC) rs.derived["theta_0"] = rs.theta - rs.simple_roots[0];
    if (spec.family == Family::OspB || spec.family == Family::OspD)
        rs.derived["alpha'_n"] = Vector::unit(rs.dim, spec.n - 1, 2);
    {
        EvenFactors f = even_factors(rs);
        if (!f.second.empty()) {
            const std::size_t block = first_block(spec);
            Vector top;
            Rational top_h = -1;
            for (const auto& v : rs.positive_even) {
                bool in_second = true;
                for (std::size_t k = 0; k < block && k < v.size(); ++k)
                    if (v[k] != 0) in_second = false;
                if (!in_second) continue;
                Rational h = height(v);
                if (h > top_h) top_h = h, top = v;
            }
            rs.derived["theta'"] = top;
        }
    }
    for (const auto& [name, v] : rs.derived)
        if (!rs.is_even_root(v)) fail("derived root " + name + " is not an even root");
    return rs;
}

}  // namespace superaff
