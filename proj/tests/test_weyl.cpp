#include "doctest.h"

#include "oracle.hpp"
#include "superaff/errors.hpp"
#include "superaff/weyl.hpp"

#include <random>
#include <set>

using namespace superaff;
using oracle::q;

namespace {

Vector random_in_span(const RootSystem& rs, std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    std::vector<Rational> c(rs.rank());
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return rs.from_pi_coords(c);
}

AffineWeight random_weight(const RootSystem& rs, std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    return {Rational(num(rng), den(rng)), random_in_span(rs, rng), Rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("reflection examples")
{
    auto rs = build_root_system(FamilySpec::sl_super(2, 1));
    const auto& a = rs.simple_roots;
    CHECK(reflect(rs, a[0], a[0]) == -a[0]);
    CHECK(reflect(rs, a[0], rs.theta) == a[1]);
    auto s31 = build_root_system(FamilySpec::sl_super(3, 1));
    REQUIRE(s31.inner(s31.simple_roots[0], s31.simple_roots[2]) == 0);
    CHECK(reflect(s31, s31.simple_roots[0], s31.simple_roots[2]) == s31.simple_roots[2]);
    CHECK_THROWS_AS(reflect(rs, a[1], a[0]), DomainError);
}

TEST_CASE("group orders")
{
    CHECK(generate_weyl(build_root_system(FamilySpec::sl_super(2, 1))).order() == 2);
    CHECK(generate_weyl(build_root_system(FamilySpec::osp_c(2))).order() == 8);
    CHECK(generate_weyl(build_root_system(FamilySpec::f4())).order() == 96);

    for (const auto& [name, spec] : oracle::roster()) {
        CAPTURE(name);
        auto rs = build_root_system(spec);
        auto w = generate_weyl(rs);
        CHECK(w.order() == static_cast<std::size_t>(oracle::weyl_order(spec)));
        CHECK(w.elements[0].is_identity());

        const auto f = even_factors(rs);
        const auto expect = expected_weyl_orders(spec);
        const auto w1 = generate_subgroup(rs, f.first);
        const auto w2 = generate_subgroup(rs, f.second);
        CHECK(w1.order() == expect.first);
        CHECK(w2.order() == expect.second);
        CHECK(w1.order() * w2.order() == w.order());
        for (const auto& e : w1.elements) CHECK(w.contains(e));
        for (const auto& e : w2.elements) CHECK(w.contains(e));
    }
}

TEST_CASE("the element cap is enforced")
{
    auto rs = build_root_system(FamilySpec::f4());
    CHECK_THROWS_AS(generate_weyl(rs, 50), ResourceError);
}

TEST_CASE("elements preserve the form and permute roots by parity")
{
    for (const auto& [name, spec] : oracle::roster()) {
        CAPTURE(name);
        auto rs = build_root_system(spec);
        auto w = generate_weyl(rs);
        const std::set<Vector> even(rs.even_roots.begin(), rs.even_roots.end());
        const std::set<Vector> odd(rs.odd_roots.begin(), rs.odd_roots.end());
        const Matrix id = Matrix::identity(rs.dim);
        for (const auto& y : w.elements) {
            CHECK(y.matrix * y.inverse_matrix == id);
            CHECK(w.contains(y.inverse()));
            for (const auto& a : rs.simple_roots)
                for (const auto& b : rs.simple_roots) CHECK(rs.inner(y.apply(a), y.apply(b)) == rs.inner(a, b));
            std::set<Vector> ie, io;
            for (const auto& r : rs.even_roots) ie.insert(y.apply(r));
            for (const auto& r : rs.odd_roots) io.insert(y.apply(r));
            CHECK(ie == even);
            CHECK(io == odd);

            // the word reproduces the matrix
            Matrix m = id;
            for (auto it = y.word.rbegin(); it != y.word.rend(); ++it)
                m = reflection_matrix(rs, w.generators[*it]) * m;
            CHECK(m == y.matrix);
        }
    }
}

TEST_CASE("closure under composition")
{
    for (const auto& spec : {FamilySpec::osp_b(1, 1), FamilySpec::g3(), FamilySpec::sl_super(3, 2)}) {
        auto rs = build_root_system(spec);
        auto w = generate_weyl(rs);
        for (const auto& a : w.elements)
            for (const auto& b : w.elements) CHECK(w.find(a.matrix * b.matrix) != WeylGroup::npos);
    }
}

TEST_CASE("translations")
{
    std::mt19937 rng(3);
    auto rs = build_root_system(FamilySpec::osp_b(2, 1));
    const AffineWeight l0{1, Vector(rs.dim), 0};
    for (int t = 0; t < 50; ++t) {
        const Vector beta = random_in_span(rs, rng), gamma = random_in_span(rs, rng);
        const AffineWeight lam = random_weight(rs, rng);

        CHECK(translate(rs, Vector(rs.dim), lam) == lam);
        const auto tb = translate(rs, beta, l0);
        CHECK(tb.level == 1);
        CHECK(tb.finite == beta);
        CHECK(tb.delta_coeff == -rs.inner(beta, beta) / 2);
        CHECK(translate(rs, beta, translate(rs, gamma, lam)) == translate(rs, beta + gamma, lam));
        CHECK(translate(rs, beta, lam).level == lam.level);
    }
}

TEST_CASE("shifted action examples")
{
    auto rs = build_root_system(FamilySpec::sl_super(2, 1));
    auto w = generate_weyl(rs);
    const Rational k = rs.h_dual / 2 - rs.h_dual;
    const AffineWeight vac = level_weight(rs, k);
    CHECK(shifted_translate_act(rs, w.elements[0], Vector(rs.dim), vac) == vac);

    // (beta, alpha_1) = 0, (beta, alpha_2) = -1
    const Vector beta = rs.from_pi_coords({1, 2});
    REQUIRE(rs.pairings(beta) == std::vector<Rational>{0, -1});
    const auto lam = shifted_translate_act(rs, w.elements[0], beta, vac);
    CHECK(lam.level == q(-1, 2));
    CHECK(rs.pairings(lam.finite) == std::vector<Rational>{0, q(-1, 2)});
}

TEST_CASE("shifted-action pairing identity")
{
    std::mt19937 rng(5);
    for (const auto& [name, spec] : oracle::roster()) {
        CAPTURE(name);
        auto rs = build_root_system(spec);
        auto w = generate_weyl(rs);
        for (int u : {1, 2, 3, 5}) {
            const AffineWeight vac = level_weight(rs, rs.h_dual / u - rs.h_dual);
            for (const auto& y : w.elements) {
                const Vector beta = random_in_span(rs, rng);
                const auto lam = shifted_translate_act(rs, y, beta, vac);
                CHECK(lam.level == vac.level);
                CHECK(rs.pairings(lam.finite) == oracle::pairing_identity(rs, y, beta, u));
            }
        }
    }
}

TEST_CASE("shifted reflections are involutions")
{
    std::mt19937 rng(9);
    for (const auto& [name, spec] : oracle::roster()) {
        CAPTURE(name);
        auto rs = build_root_system(spec);
        for (const auto& g : rs.even_roots)
            for (int t = 0; t < 3; ++t) {
                const AffineWeight lam = random_weight(rs, rng);
                CHECK(shifted_reflect(rs, g, shifted_reflect(rs, g, lam)) == lam);
            }
    }
}
