#pragma once

#include "superaff/rational.hpp"
#include "superaff/rootdata.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace superaff {

/// Orthogonal map of the ambient space; `word` lists generator indices, applied right to left.
struct WeylElement {
    Matrix matrix;
    Matrix inverse_matrix;
    std::vector<int> word;

    Vector apply(const Vector& v) const { return matrix * v; }
    Vector apply_inverse(const Vector& v) const { return inverse_matrix * v; }
    bool is_identity() const { return matrix == Matrix::identity(matrix.rows()); }
    WeylElement inverse() const;
};

struct WeylGroup {
    std::vector<Vector> generators;
    /// BFS order from the identity; elements[0] is the identity.
    std::vector<WeylElement> elements;

    std::size_t order() const { return elements.size(); }
    /// Index of the element with this matrix, or npos.
    std::size_t find(const Matrix& m) const;
    bool contains(const WeylElement& y) const { return find(y.matrix) != npos; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::map<Matrix, std::size_t> index;
};

struct AffineWeight {
    Rational level;
    Vector finite;
    Rational delta_coeff;

    friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

inline constexpr std::size_t default_weyl_cap = 1000000;

Vector reflect(const RootSystem& rs, const Vector& alpha, const Vector& v);
Matrix reflection_matrix(const RootSystem& rs, const Vector& alpha);

/// BFS closure of the reflections in the even simple system.
WeylGroup generate_weyl(const RootSystem& rs, std::size_t cap = default_weyl_cap);
/// Same closure for an arbitrary list of non-isotropic generators.
WeylGroup generate_subgroup(const RootSystem& rs, const std::vector<Vector>& generators,
                            std::size_t cap = default_weyl_cap);

AffineWeight translate(const RootSystem& rs, const Vector& beta, const AffineWeight& w);
/// t_beta(y(w + rho_hat)) - rho_hat with rho_hat = (h_dual, rho, 0); y touches the finite part only.
AffineWeight shifted_translate_act(const RootSystem& rs, const WeylElement& y, const Vector& beta,
                                   const AffineWeight& w);
/// r_alpha(w + rho_hat) - rho_hat.
AffineWeight shifted_reflect(const RootSystem& rs, const Vector& alpha, const AffineWeight& w);

/// level * Lambda_0.
AffineWeight level_weight(const RootSystem& rs, const Rational& level);

}  // namespace superaff
