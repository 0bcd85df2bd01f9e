#include "superaff/weyl.hpp"

#include "superaff/errors.hpp"

namespace superaff {

WeylElement WeylElement::inverse() const
{
    return {inverse_matrix, matrix, std::vector<int>(word.rbegin(), word.rend())};
}

std::size_t WeylGroup::find(const Matrix& m) const
{
    auto it = index.find(m);
    return it == index.end() ? npos : it->second;
}

Vector reflect(const RootSystem& rs, const Vector& alpha, const Vector& v)
{
    const Rational aa = rs.inner(alpha, alpha);
    if (aa == 0) throw DomainError("reflection undefined for isotropic root");
    return v - (2 * rs.inner(v, alpha) / aa) * alpha;
}

Matrix reflection_matrix(const RootSystem& rs, const Vector& alpha)
{
    Matrix r(rs.dim, rs.dim);
    for (std::size_t c = 0; c < rs.dim; ++c) {
        Vector col = reflect(rs, alpha, Vector::unit(rs.dim, c));
        for (std::size_t k = 0; k < rs.dim; ++k) r(k, c) = col[k];
    }
    return r;
}

WeylGroup generate_subgroup(const RootSystem& rs, const std::vector<Vector>& generators, std::size_t cap)
{
    WeylGroup g;
    g.generators = generators;
    std::vector<Matrix> refl;
    for (const auto& a : generators) refl.push_back(reflection_matrix(rs, a));

    const Matrix id = Matrix::identity(rs.dim);
    g.elements.push_back({id, id, {}});
    g.index.emplace(id, 0);
    for (std::size_t head = 0; head < g.elements.size(); ++head) {
        for (std::size_t k = 0; k < refl.size(); ++k) {
            // Reflections are involutions, so the inverse of r_k * x is x^{-1} * r_k.
            Matrix m = refl[k] * g.elements[head].matrix;
            if (g.index.count(m)) continue;
            if (g.elements.size() >= cap)
                throw ResourceError("Weyl group of " + rs.spec.name() + " exceeds the cap of " + std::to_string(cap) +
                                    " elements");
            WeylElement y;
            y.inverse_matrix = g.elements[head].inverse_matrix * refl[k];
            y.matrix = std::move(m);
            y.word = g.elements[head].word;
            y.word.insert(y.word.begin(), static_cast<int>(k));
            g.index.emplace(y.matrix, g.elements.size());
            g.elements.push_back(std::move(y));
        }
    }
    return g;
}

WeylGroup generate_weyl(const RootSystem& rs, std::size_t cap)
{
    return generate_subgroup(rs, rs.even_simple, cap);
}

AffineWeight translate(const RootSystem& rs, const Vector& beta, const AffineWeight& w)
{
    AffineWeight out = w;
    out.finite += w.level * beta;
    out.delta_coeff -= rs.inner(w.finite, beta) + Rational(1, 2) * w.level * rs.inner(beta, beta);
    return out;
}

AffineWeight shifted_translate_act(const RootSystem& rs, const WeylElement& y, const Vector& beta,
                                   const AffineWeight& w)
{
    AffineWeight shifted{w.level + rs.h_dual, y.apply(w.finite + rs.rho), w.delta_coeff};
    AffineWeight moved = translate(rs, beta, shifted);
    moved.level -= rs.h_dual;
    moved.finite -= rs.rho;
    return moved;
}

AffineWeight shifted_reflect(const RootSystem& rs, const Vector& alpha, const AffineWeight& w)
{
    return {w.level, reflect(rs, alpha, w.finite + rs.rho) - rs.rho, w.delta_coeff};
}

AffineWeight level_weight(const RootSystem& rs, const Rational& level)
{
    return {level, Vector(rs.dim), 0};
}

}  // namespace superaff
