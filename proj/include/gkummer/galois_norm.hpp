#pragma once

#include <stdexcept>
#include <vector>

#include "gkummer/numberfield.hpp"
#include "gkummer/polynomial.hpp"

namespace gkummer {

/// Norm of a polynomial with number-field coefficients: the product of F over
/// all conjugates of theta, returned with rational coefficients.
///
/// No splitting field is constructed. Writing F = F_0 + F_1 theta + ... with
/// rational-coefficient polynomials F_j, the norm is the determinant of the
/// matrix of multiplication by F acting on the power basis over Q[u_1,...],
/// computed by cofactor expansion (degree <= 3). The result is rational by
/// construction; Galois invariance is covered by the mod-p splitting tests.
inline RatPoly galois_norm_poly(const NFPoly& F) {
    if (F.is_zero())
        throw std::invalid_argument("galois_norm_poly: zero polynomial has no field context");

    const FieldPtr field = F.terms().begin()->second.field();
    for (const auto& [e, c] : F.terms())
        if (!field->same_field(*c.field()))
            throw std::invalid_argument("galois_norm_poly: mixed coefficient fields");

    const int n = field->degree();
    const int m = F.nvars();

    // entry(i, j) = rational part i of F * theta^j.
    std::vector<std::vector<RatPoly>> entry(
        static_cast<std::size_t>(n), std::vector<RatPoly>(static_cast<std::size_t>(n), RatPoly(m)));
    for (int j = 0; j < n; ++j) {
        NFElem theta_j = NFElem::generator_power(field, j);
        NFPoly col = F.scaled(theta_j);
        for (const auto& [e, c] : col.terms())
            for (int i = 0; i < n; ++i)
                entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].add_term(e,
                                                                                         c.coord(i));
    }

    const auto& M = entry;
    if (n == 2) return M[0][0] * M[1][1] - M[0][1] * M[1][0];
    return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
           M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
           M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

}  // namespace gkummer
