#pragma once

#include "superaff/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superaff {

enum class Family {
    SlSuper,   // sl(n|m), n > m > 0
    OspC,      // osp(2|2n)
    OspB,      // osp(2m+1|2n), m >= 0
    OspD,      // osp(2m|2n), m >= 2
    F4,
    G3,
    SimpleA,   // sl(n+1)
    SimpleB2,  // sp(4)
    SimpleG2,
};

struct FamilySpec {
    Family family = Family::SimpleA;
    int n = 1;
    int m = 0;

    static FamilySpec sl_super(int n, int m) { return {Family::SlSuper, n, m}; }
    static FamilySpec osp_c(int n) { return {Family::OspC, n, 0}; }
    static FamilySpec osp_b(int m, int n) { return {Family::OspB, n, m}; }
    static FamilySpec osp_d(int m, int n) { return {Family::OspD, n, m}; }
    static FamilySpec f4() { return {Family::F4, 0, 0}; }
    static FamilySpec g3() { return {Family::G3, 0, 0}; }
    static FamilySpec simple_a(int n) { return {Family::SimpleA, n, 0}; }
    static FamilySpec simple_b2() { return {Family::SimpleB2, 0, 0}; }
    static FamilySpec simple_g2() { return {Family::SimpleG2, 0, 0}; }

    /// Conventional name, e.g. "sl(3|1)", "osp(5|2)", "F(4)", "g2".
    std::string name() const;
    bool is_super() const;
    /// sl(n|m) and osp(2|2n).
    bool is_type_one() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

enum class Parity { Even, Odd };

/// Exact realization of one algebra with distinguished simple roots. Immutable once built.
class RootSystem {
public:
    FamilySpec spec;
    std::size_t dim = 0;
    std::vector<Rational> basis_signature;
    std::vector<Vector> simple_roots;
    std::vector<Parity> parity;
    Matrix gram;
    std::vector<Vector> even_roots;
    std::vector<Vector> odd_roots;
    std::vector<Vector> positive_roots;  // even positives first, then odd positives
    std::vector<Vector> positive_even;
    std::vector<Vector> positive_odd;
    Vector theta;
    std::vector<int> marks;
    Vector rho;
    Rational h_dual;
    int lacety = 1;
    std::vector<Vector> even_simple;
    /// Named auxiliary roots: "alpha'_n", "theta'", "theta_0", "theta_1" where they apply.
    std::map<std::string, Vector> derived;

    std::size_t rank() const { return simple_roots.size(); }

    Rational inner(const Vector& v, const Vector& w) const;
    /// Coefficients of v in the basis Pi (v is projected onto span Pi through the Gram inverse).
    std::vector<Rational> pi_coords(const Vector& v) const;
    /// Pairings ((v, alpha_1), ..., (v, alpha_r)).
    std::vector<Rational> pairings(const Vector& v) const;
    Vector from_pi_coords(const std::vector<Rational>& c) const;

    bool is_root(const Vector& v) const;
    bool is_even_root(const Vector& v) const;
    bool is_odd_root(const Vector& v) const;
    /// For roots: all Pi-coefficients >= 0. Throws DomainError if v is not a root.
    bool is_positive_root(const Vector& v) const;
    /// All Pi-coefficients nonnegative (membership in Q_+ over the rationals; integrality not checked).
    bool in_positive_cone(const Vector& v) const;
    bool is_derived(const Vector& v) const;

    /// Index of the unique odd simple root, or nullopt for Lie algebras.
    std::optional<std::size_t> odd_node() const;

    friend RootSystem build_root_system(const FamilySpec& spec);

private:
    Matrix gram_inverse_;
};

/// Throws ConstructionError naming the violated constraint.
void validate_family_spec(const FamilySpec& spec);

/// Validates parameters and builds the realization; every invariant is re-checked before returning.
RootSystem build_root_system(const FamilySpec& spec);

/// alpha itself when isotropic, 2 alpha/(alpha, alpha) otherwise.
Vector coroot(const RootSystem& rs, const Vector& alpha);
/// Indecomposable elements of the even positive roots.
std::vector<Vector> even_simple_system(const RootSystem& rs);
Rational inner(const RootSystem& rs, const Vector& v, const Vector& w);

/// Gram-derived Cartan matrix: row i is 2(alpha_i, alpha_j)/(alpha_i, alpha_i), or (alpha_i, alpha_j) on isotropic rows.
Matrix cartan_matrix(const RootSystem& rs);

/// Even simple roots of each factor of the even Weyl group W = W_1 x W_2 (second is empty when W is not split).
struct EvenFactors {
    std::vector<Vector> first;
    std::vector<Vector> second;
};
EvenFactors even_factors(const RootSystem& rs);

/// Orders of W, W_1, W_2 predicted from the classical types of the even part.
struct WeylOrders {
    std::size_t total;
    std::size_t first;
    std::size_t second;
};
WeylOrders expected_weyl_orders(const FamilySpec& spec);

/// Even/odd root counts predicted from the closed formulas.
std::pair<std::size_t, std::size_t> expected_root_counts(const FamilySpec& spec);

/// Closed-form h_dual and lacety per family.
Rational expected_h_dual(const FamilySpec& spec);
int expected_lacety(const FamilySpec& spec);

}  // namespace superaff
