#pragma once

// Independent reference computations for the tests. Nothing here calls into the
// admissible/classify/witness code paths it is used to check.

#include "superaff/rational.hpp"
#include "superaff/rootdata.hpp"
#include "superaff/weyl.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using superaff::FamilySpec;
using superaff::Matrix;
using superaff::Rational;
using superaff::RootSystem;
using superaff::Vector;

inline Rational q(long long p, long long d = 1)
{
    return Rational(p, d);
}

inline const std::vector<std::pair<std::string, FamilySpec>>& roster()
{
    static const std::vector<std::pair<std::string, FamilySpec>> r = {
        {"sl(2|1)", FamilySpec::sl_super(2, 1)}, {"sl(3|1)", FamilySpec::sl_super(3, 1)},
        {"sl(3|2)", FamilySpec::sl_super(3, 2)}, {"osp(2|2)", FamilySpec::osp_c(1)},
        {"osp(2|4)", FamilySpec::osp_c(2)},      {"osp(1|2)", FamilySpec::osp_b(0, 1)},
        {"osp(1|4)", FamilySpec::osp_b(0, 2)},   {"osp(3|2)", FamilySpec::osp_b(1, 1)},
        {"osp(5|2)", FamilySpec::osp_b(2, 1)},   {"osp(6|2)", FamilySpec::osp_d(3, 1)},
        {"osp(4|4)", FamilySpec::osp_d(2, 2)},   {"F(4)", FamilySpec::f4()},
        {"G(3)", FamilySpec::g3()},              {"sl(2)", FamilySpec::simple_a(1)},
        {"sl(3)", FamilySpec::simple_a(2)},      {"sp(4)", FamilySpec::simple_b2()},
        {"g2", FamilySpec::simple_g2()},
    };
    return r;
}

/// Hand-transcribed reference values per family.
struct FamilyTable {
    std::vector<int> marks;
    std::vector<Rational> rho_pairings;
    Rational h_dual;
    int lacety;
};

inline FamilyTable family_table(const FamilySpec& s)
{
    FamilyTable p;
    const int n = s.n, m = s.m;
    switch (s.family) {
    case superaff::Family::SlSuper:
        p.marks.assign(n + m - 1, 1);
        for (int i = 1; i <= n + m - 1; ++i) p.rho_pairings.push_back(i < n ? q(1) : i == n ? q(0) : q(-1));
        p.h_dual = n - m;
        p.lacety = 1;
        break;
    case superaff::Family::OspC:
        p.marks.push_back(1);
        for (int i = 2; i <= n; ++i) p.marks.push_back(2);
        p.marks.push_back(1);
        p.rho_pairings.push_back(0);
        for (int i = 2; i <= n; ++i) p.rho_pairings.push_back(q(1, 2));
        p.rho_pairings.push_back(1);
        p.h_dual = n;
        p.lacety = n > 1 ? 2 : 1;
        break;
    case superaff::Family::OspB:
        p.marks.assign(n + m, 2);
        if (m == 0) {
            for (int i = 1; i < n; ++i) p.rho_pairings.push_back(q(1, 2));
            p.rho_pairings.push_back(q(1, 4));
            p.h_dual = q(2 * n + 1, 2);
            p.lacety = n > 1 ? 2 : 1;
        } else if (m > n) {
            for (int i = 1; i < n; ++i) p.rho_pairings.push_back(-1);
            p.rho_pairings.push_back(0);
            for (int i = n + 1; i < n + m; ++i) p.rho_pairings.push_back(1);
            p.rho_pairings.push_back(q(1, 2));
            p.h_dual = 2 * (m - n) - 1;
            p.lacety = 2;
        } else {
            for (int i = 1; i < n; ++i) p.rho_pairings.push_back(q(1, 2));
            p.rho_pairings.push_back(0);
            for (int i = n + 1; i < n + m; ++i) p.rho_pairings.push_back(q(-1, 2));
            p.rho_pairings.push_back(q(-1, 4));
            p.h_dual = q(2 * (n - m) + 1, 2);
            p.lacety = n > 1 ? 2 : 1;
        }
        break;
    case superaff::Family::OspD:
        p.marks.assign(n + m - 2, 2);
        p.marks.push_back(1);
        p.marks.push_back(1);
        if (m > n) {
            for (int i = 1; i < n; ++i) p.rho_pairings.push_back(-1);
            p.rho_pairings.push_back(0);
            for (int i = n + 1; i <= n + m; ++i) p.rho_pairings.push_back(1);
            p.h_dual = 2 * (m - n - 1);
            p.lacety = 1;
        } else {
            for (int i = 1; i < n; ++i) p.rho_pairings.push_back(q(1, 2));
            p.rho_pairings.push_back(0);
            for (int i = n + 1; i <= n + m; ++i) p.rho_pairings.push_back(q(-1, 2));
            p.h_dual = n - m + 1;
            p.lacety = 2;
        }
        break;
    case superaff::Family::F4:
        p.marks = {2, 3, 2, 1};
        p.rho_pairings = {0, q(1, 2), 1, 1};
        p.h_dual = 3;
        p.lacety = 2;
        break;
    case superaff::Family::G3:
        p.marks = {2, 4, 2};
        p.rho_pairings = {0, q(1, 3), 1};
        p.h_dual = 2;
        p.lacety = 3;
        break;
    case superaff::Family::SimpleA:
        p.marks.assign(n, 1);
        p.rho_pairings.assign(n, 1);
        p.h_dual = n + 1;
        p.lacety = 1;
        break;
    case superaff::Family::SimpleB2:
        // C_2 labelling: alpha_1 short, alpha_2 long; (theta, theta) = 2.
        p.marks = {2, 1};
        p.rho_pairings = {q(1, 2), 1};
        p.h_dual = 3;
        p.lacety = 2;
        break;
    case superaff::Family::SimpleG2:
        // alpha_1 short, alpha_2 long.
        p.marks = {3, 2};
        p.rho_pairings = {q(1, 3), 1};
        p.h_dual = 4;
        p.lacety = 3;
        break;
    }
    return p;
}

/// Cartan matrices as displayed for sl(n|m), osp(2|2n), F(4), G(3); empty for other families.
/// The osp(2|2n) display has distinct rows 1, n, n+1 and so needs n >= 2.
inline Matrix displayed_cartan(const FamilySpec& s)
{
    auto from_rows = [](const std::vector<std::vector<Rational>>& rows) {
        Matrix a(rows.size(), rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows.size(); ++j) a(i, j) = rows[i][j];
        return a;
    };
    switch (s.family) {
    case superaff::Family::SlSuper: {
        const int r = s.n + s.m - 1;
        Matrix a(r, r);
        for (int i = 0; i < r; ++i) {
            const bool odd = i == s.n - 1;
            a(i, i) = odd ? 0 : 2;
            if (i > 0) a(i, i - 1) = -1;
            if (i + 1 < r) a(i, i + 1) = odd ? 1 : -1;
        }
        return a;
    }
    case superaff::Family::OspC: {
        if (s.n < 2) return Matrix();
        const int r = s.n + 1;
        Matrix a(r, r);
        a(0, 0) = 0;
        a(0, 1) = q(-1, 2);
        for (int i = 1; i < r; ++i) {
            a(i, i) = 2;
            a(i, i - 1) = -1;
            if (i + 1 < r) a(i, i + 1) = i + 1 == r - 1 ? -2 : -1;
        }
        return a;
    }
    case superaff::Family::F4:
        return from_rows({{0, q(-1, 2), 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
    case superaff::Family::G3:
        return from_rows({{0, q(-1, 3), 0}, {-1, 2, -3}, {0, -1, 2}});
    default: return Matrix();
    }
}

inline long long fact(int k)
{
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

/// |W| from the classical types of the even part: A_k -> (k+1)!, B_k/C_k -> 2^k k!, D_k -> 2^{k-1} k!, G_2 -> 12.
inline long long weyl_order(const FamilySpec& s)
{
    auto bc = [](int k) { return (1LL << k) * fact(k); };
    switch (s.family) {
    case superaff::Family::SlSuper: return fact(s.n) * fact(s.m);
    case superaff::Family::OspC: return bc(s.n);
    case superaff::Family::OspB: return bc(s.n) * bc(s.m);
    case superaff::Family::OspD: return bc(s.n) * (1LL << (s.m - 1)) * fact(s.m);
    case superaff::Family::F4: return 2 * bc(3);
    case superaff::Family::G3: return 2 * 12;
    case superaff::Family::SimpleA: return fact(s.n + 1);
    case superaff::Family::SimpleB2: return bc(2);
    case superaff::Family::SimpleG2: return 12;
    }
    return 0;
}

/// Pi-coordinates through a locally inverted Gram matrix.
inline std::vector<Rational> coords(const RootSystem& rs, const Vector& v)
{
    const std::size_t r = rs.rank();
    Matrix g(r, r);
    Vector p(r);
    for (std::size_t i = 0; i < r; ++i) {
        p[i] = rs.inner(v, rs.simple_roots[i]);
        for (std::size_t j = 0; j < r; ++j) g(i, j) = rs.inner(rs.simple_roots[i], rs.simple_roots[j]);
    }
    return superaff::solve(g, p)->data();
}

inline bool positive_root(const RootSystem& rs, const Vector& v)
{
    for (const auto& c : coords(rs, v))
        if (c < 0) return false;
    return true;
}

/// gamma + c delta with gamma a root: positive iff c is an integer and c > 0, or c = 0 and gamma > 0.
inline bool positive_real_affine(const RootSystem& rs, const Vector& gamma, const Rational& c)
{
    if (!superaff::is_integer(c)) return false;
    return c > 0 || (c == 0 && positive_root(rs, gamma));
}

/// Raw conditions: (t_beta y) alpha_i = y alpha_i - (beta, y alpha_i) delta and
/// (t_beta y)(u delta - theta) = -y theta + (u + (beta, y theta)) delta are positive affine roots.
inline bool raw_admissible(const RootSystem& rs, const superaff::WeylElement& y, const Vector& beta, int u)
{
    const Vector yt = y.apply(rs.theta);
    if (!positive_real_affine(rs, -yt, Rational(u) + rs.inner(beta, yt))) return false;
    for (const auto& a : rs.simple_roots) {
        const Vector ya = y.apply(a);
        if (!positive_real_affine(rs, ya, -rs.inner(beta, ya))) return false;
    }
    return true;
}

/// (h∨/u)(beta, alpha_i) + (rho, y^{-1} alpha_i - alpha_i).
inline std::vector<Rational> pairing_identity(const RootSystem& rs, const superaff::WeylElement& y, const Vector& beta,
                                              int u)
{
    std::vector<Rational> out;
    for (const auto& a : rs.simple_roots)
        out.push_back(rs.h_dual / u * rs.inner(beta, a) + rs.inner(rs.rho, y.apply_inverse(a) - a));
    return out;
}

/// Every (y index, pairings of beta) passing the raw conditions with (beta, alpha_i) in (1/den)Z and
/// |(beta, alpha_i)| <= radius. Exhaustive, so keep rank, den and radius small.
inline std::set<std::pair<std::size_t, std::vector<Rational>>> lattice_sweep(const RootSystem& rs,
                                                                               const superaff::WeylGroup& w, int u,
                                                                               int den, int radius)
{
    std::set<std::pair<std::size_t, std::vector<Rational>>> hits;
    const std::size_t r = rs.rank();
    Matrix g(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) g(i, j) = rs.inner(rs.simple_roots[i], rs.simple_roots[j]);
    const Matrix gi = *superaff::inverse(g);
    std::vector<int> k(r, -radius * den);
    while (true) {
        Vector b(r);
        for (std::size_t i = 0; i < r; ++i) b[i] = Rational(k[i], den);
        Vector c = gi * b;
        Vector beta(rs.dim);
        for (std::size_t j = 0; j < r; ++j) beta += c[j] * rs.simple_roots[j];
        for (std::size_t yi = 0; yi < w.order(); ++yi)
            if (raw_admissible(rs, w.elements[yi], beta, u)) hits.insert({yi, b.data()});
        std::size_t pos = 0;
        while (pos < r && k[pos] == radius * den) k[pos++] = -radius * den;
        if (pos == r) break;
        ++k[pos];
    }
    return hits;
}

inline int theta_height(const RootSystem& rs)
{
    int h = 0;
    for (const auto& c : coords(rs, rs.theta)) h += c.convert_to<int>();
    return h;
}

/// A displayed finite-dimensionality row: (lambda, gamma) lies in scale * Z_{>=0}.
struct DisplayRow {
    std::vector<Rational> gamma_pi;  // gamma in Pi-coordinates
    Rational scale;
};

/// Hand-transcribed dominance conditions per family; empty when none are written out here.
inline std::vector<DisplayRow> display_rows(const FamilySpec& s)
{
    std::vector<DisplayRow> rows;
    const int n = s.n, m = s.m;
    auto unit = [](int r, int i) {
        std::vector<Rational> v(r);
        v[i] = 1;
        return v;
    };
    switch (s.family) {
    case superaff::Family::SlSuper: {
        const int r = n + m - 1;
        for (int i = 0; i < n - 1; ++i) rows.push_back({unit(r, i), 1});
        for (int i = n; i < r; ++i) rows.push_back({unit(r, i), -1});
        break;
    }
    case superaff::Family::OspB: {
        const int r = n + m;
        std::vector<Rational> alpha_prime(r);
        for (int i = n - 1; i < r; ++i) alpha_prime[i] = 2;
        if (m == 0) {
            // (lambda, alpha_i^vee) in Z>=0 and (lambda, alpha_n^vee) in 2Z>=0, alpha_n^vee = 4 alpha_n
            for (int i = 0; i < n - 1; ++i) rows.push_back({unit(r, i), q(1, 2)});
            rows.push_back({unit(r, n - 1), q(1, 2)});
        } else if (m > n) {
            for (int i = 0; i < n - 1; ++i) rows.push_back({unit(r, i), -1});
            rows.push_back({alpha_prime, -2});
            for (int i = n; i < r - 1; ++i) rows.push_back({unit(r, i), 1});
            rows.push_back({unit(r, r - 1), q(1, 2)});
        } else {
            for (int i = 0; i < n - 1; ++i) rows.push_back({unit(r, i), q(1, 2)});
            rows.push_back({alpha_prime, 1});
            for (int i = n; i < r - 1; ++i) rows.push_back({unit(r, i), q(-1, 2)});
            rows.push_back({unit(r, r - 1), q(-1, 4)});
        }
        break;
    }
    case superaff::Family::OspD: {
        const int r = n + m;
        std::vector<Rational> alpha_prime(r);
        for (int i = n - 1; i < r - 2; ++i) alpha_prime[i] = 2;
        alpha_prime[r - 2] = 1;
        alpha_prime[r - 1] = 1;
        const bool big = m > n;
        for (int i = 0; i < n - 1; ++i) rows.push_back({unit(r, i), big ? q(-1) : q(1, 2)});
        rows.push_back({alpha_prime, big ? q(-2) : q(1)});
        for (int i = n; i < r; ++i) rows.push_back({unit(r, i), big ? q(1) : q(-1, 2)});
        break;
    }
    case superaff::Family::F4:
        rows.push_back({unit(4, 1), q(1, 2)});
        rows.push_back({unit(4, 2), 1});
        rows.push_back({unit(4, 3), 1});
        rows.push_back({{2, 3, 2, 1}, q(-3, 2)});
        break;
    case superaff::Family::SimpleA:
    case superaff::Family::SimpleB2:
    case superaff::Family::SimpleG2:
        break;
    default: break;
    }
    return rows;
}

}  // namespace oracle
