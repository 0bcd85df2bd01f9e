#include "superaff/admissible.hpp"

#include "superaff/errors.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

namespace superaff {

namespace {

long long to_ll(const Integer& z)
{
    return z.convert_to<long long>();
}

Vector beta_from_inverse(const RootSystem& rs, const Matrix& m_inv, const std::vector<int>& d)
{
    Vector rhs(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) rhs[i] = -d[i];
    return rs.from_pi_coords((m_inv * rhs).data());
}

Matrix pairing_matrix(const RootSystem& rs, const WeylElement& y)
{
    const std::size_t r = rs.rank();
    Matrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        Vector ya = y.apply(rs.simple_roots[i]);
        for (std::size_t j = 0; j < r; ++j) m(i, j) = rs.inner(ya, rs.simple_roots[j]);
    }
    return m;
}

std::vector<Candidate> candidates_for(const RootSystem& rs, const WeylGroup& w, std::size_t yi, int u)
{
    const WeylElement& y = w.elements[yi];
    const std::size_t r = rs.rank();
    std::vector<int> lo(r);
    for (std::size_t i = 0; i < r; ++i) lo[i] = rs.is_positive_root(y.apply(rs.simple_roots[i])) ? 0 : 1;
    const int bound = rs.is_positive_root(y.apply(rs.theta)) ? u - 1 : u;

    auto m_inv = inverse(pairing_matrix(rs, y));
    if (!m_inv) throw InternalError("singular pairing matrix for y in " + rs.spec.name());

    std::vector<Candidate> out;
    std::vector<int> d(r);
    // Depth-first over d with the running weighted sum pruned against the bound.
    auto rec = [&](auto&& self, std::size_t i, int used) -> void {
        if (i == r) {
            Candidate c;
            c.y_index = yi;
            c.y = y;
            c.d = d;
            c.beta = beta_from_inverse(rs, *m_inv, d);
            for (std::size_t k = 0; k < r; ++k)
                if (-rs.inner(c.beta, y.apply(rs.simple_roots[k])) != d[k])
                    throw InternalError("beta does not reproduce d in " + rs.spec.name());
            if (!maps_simple_affine_roots_positive(rs, y, c.beta, u))
                throw InternalError("candidate fails the affine positivity recheck in " + rs.spec.name());
            c.weight = candidate_weight(rs, y, c.beta, u);
            out.push_back(std::move(c));
            return;
        }
        for (int v = lo[i]; used + rs.marks[i] * v <= bound; ++v) {
            d[i] = v;
            self(self, i + 1, used + rs.marks[i] * v);
        }
        d[i] = 0;
    };
    int floor_used = 0;
    for (std::size_t i = 0; i < r; ++i) floor_used += rs.marks[i] * lo[i];
    if (floor_used <= bound) rec(rec, 0, 0);
    return out;
}

}  // namespace

Rational principal_level(const RootSystem& rs, int u)
{
    return rs.h_dual / u - rs.h_dual;
}

std::optional<std::string> principal_level_violation(const RootSystem& rs, int u)
{
    if (u < 1) return "u must be a positive integer";
    if (rs.h_dual == 0) return "h∨ = 0: no boundary admissible levels";
    const long long p = to_ll(numerator(rs.h_dual));
    const long long q = to_ll(denominator(rs.h_dual));
    if (std::gcd(static_cast<long long>(u), static_cast<long long>(rs.lacety)) != 1)
        return "gcd(u, r∨) = gcd(" + std::to_string(u) + ", " + std::to_string(rs.lacety) + ") != 1";
    if (std::gcd(q * u, p) != 1) {
        if (q == 1)
            return "gcd(u, h∨) = gcd(" + std::to_string(u) + ", " + std::to_string(p) + ") != 1";
        return "gcd(2u, 2h∨) = gcd(" + std::to_string(2 * u) + ", " + std::to_string(p) + ") != 1";
    }
    return std::nullopt;
}

bool is_subprincipal_u(const RootSystem& rs, int u)
{
    if (rs.spec.family != Family::OspB || rs.spec.m != 0 || u < 1) return false;
    return u % 2 == 0 && std::gcd(u, 2 * rs.spec.n - 1) == 1;
}

std::vector<BoundaryLevel> boundary_levels(const RootSystem& rs, int u_max)
{
    std::vector<BoundaryLevel> out;
    if (rs.h_dual == 0) return out;
    for (int u = 1; u <= u_max; ++u) {
        if (!principal_level_violation(rs, u)) out.push_back({u, principal_level(rs, u), LevelKind::Principal});
        if (is_subprincipal_u(rs, u))
            out.push_back({u, Rational(2 * rs.spec.n - 1, 2 * u) - rs.h_dual, LevelKind::Subprincipal});
    }
    return out;
}

Vector beta_from_marks(const RootSystem& rs, const WeylElement& y, const std::vector<int>& d)
{
    if (d.size() != rs.rank()) throw DomainError("beta_from_marks: expected one d_i per simple root");
    Vector rhs(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) rhs[i] = -d[i];
    auto c = solve(pairing_matrix(rs, y), rhs);
    if (!c) throw InternalError("singular pairing matrix for y in " + rs.spec.name());
    return rs.from_pi_coords(c->data());
}

AffineWeight candidate_weight(const RootSystem& rs, const WeylElement& y, const Vector& beta, int u)
{
    AffineWeight w = shifted_translate_act(rs, y, beta, level_weight(rs, principal_level(rs, u)));
    w.delta_coeff = 0;
    return w;
}

bool is_positive_affine_root(const RootSystem& rs, const Vector& gamma, const Rational& c)
{
    if (!rs.is_root(gamma) || !is_integer(c)) return false;
    return c > 0 || (c == 0 && rs.is_positive_root(gamma));
}

bool maps_simple_affine_roots_positive(const RootSystem& rs, const WeylElement& y, const Vector& beta, int u)
{
    // Level-zero vectors: y moves the finite part, t_beta shifts delta by -(finite, beta).
    auto image = [&](const Vector& gamma, const Rational& c) {
        AffineWeight v{0, y.apply(gamma), c};
        return translate(rs, beta, v);
    };
    AffineWeight a0 = image(-rs.theta, u);
    if (!is_positive_affine_root(rs, a0.finite, a0.delta_coeff)) return false;
    for (const auto& a : rs.simple_roots) {
        AffineWeight ai = image(a, 0);
        if (!is_positive_affine_root(rs, ai.finite, ai.delta_coeff)) return false;
    }
    return true;
}

std::vector<Candidate> enumerate_candidates(const RootSystem& rs, const WeylGroup& w, int u,
                                            const EnumerateOptions& opts)
{
    if (opts.level_check == LevelCheck::Enforce) {
        if (auto why = principal_level_violation(rs, u)) {
            if (is_subprincipal_u(rs, u))
                throw RejectedLevelError(rs.spec.name() + ", u = " + std::to_string(u) +
                                         ": subprincipal level; only principal levels are classified");
            throw RejectedLevelError(rs.spec.name() + ", u = " + std::to_string(u) + ": " + *why);
        }
    } else if (u < 1 || rs.h_dual == 0) {
        throw RejectedLevelError(rs.spec.name() + ", u = " + std::to_string(u) + ": no level h∨/u - h∨ to test");
    }

    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(w.order()));
    std::vector<std::vector<Candidate>> per_y(w.order());
    if (threads <= 1) {
        for (std::size_t yi = 0; yi < w.order(); ++yi) per_y[yi] = candidates_for(rs, w, yi, u);
    } else {
        std::vector<std::future<void>> jobs;
        for (unsigned t = 0; t < threads; ++t)
            jobs.push_back(std::async(std::launch::async, [&, t] {
                for (std::size_t yi = t; yi < w.order(); yi += threads) per_y[yi] = candidates_for(rs, w, yi, u);
            }));
        for (auto& j : jobs) j.get();
    }
    // Concatenating in BFS order with d generated lexicographically gives the canonical (y_index, d) order.
    std::vector<Candidate> out;
    for (auto& v : per_y)
        for (auto& c : v) out.push_back(std::move(c));
    return out;
}

std::vector<Candidate> enumerate_candidates(const RootSystem& rs, int u, const EnumerateOptions& opts)
{
    return enumerate_candidates(rs, generate_weyl(rs), u, opts);
}

}  // namespace superaff
