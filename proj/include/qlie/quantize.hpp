#ifndef QLIE_QUANTIZE_HPP
#define QLIE_QUANTIZE_HPP

#include <memory>
#include <vector>

#include "qlie/liebialg.hpp"
#include "qlie/pbw.hpp"
#include "qlie/xpoly.hpp"

namespace qlie {

/// BCH polynomials of (V*, gamma): D^mu(X', X'') is the e_mu coefficient of
/// log(exp(X'^rho e_rho) exp(X''^sigma e_sigma)), computed by normal ordering in
/// truncated U(V*). Variables 0..dim_v-1 are X', dim_v..2*dim_v-1 are X''.
/// Throws InternalFault if the logarithm is not primitive.
std::vector<XPoly> bch(const Tensor3 &gamma, std::size_t dim_v, int order);

/// The quantum commutators A(X)_i^mu = [H_i, X^mu], indexed [i][mu].
std::vector<std::vector<XPoly>> eval_structure_series(const LieBialgebraSpec &spec, int order);

/// (alpha.X)^k_i = sum_rho alpha(rho,i,k) X^rho, as a dim_h x dim_h matrix [k][i].
PolyMatrix alpha_matrix(const LieBialgebraSpec &spec, int order);

struct QuantizedAlgebra {
    LieBialgebraSpec spec;
    int order = 0;
    std::vector<XPoly> D;
    std::vector<std::vector<XPoly>> A_series;
    PolyMatrix a_plus;  // exp(alpha.X), [k][i]
    PolyMatrix a_minus; // exp(-alpha.X)
    AlgebraPtr kernel;

    std::size_t dim_h() const { return spec.dim_h; }
    std::size_t dim_v() const { return spec.dim_v; }

    // "[H, X0] = X0 + 1/2 X0^2" lines, one per nonzero commutator.
    std::vector<std::string> relation_lines() const;
};

using QuantizedPtr = std::shared_ptr<const QuantizedAlgebra>;

/// Refuses (ValidationError) unless validate_bialgebra passes.
QuantizedPtr build_algebra(const LieBialgebraSpec &spec, int order);
QuantizedPtr build_algebra(const LieBialgebraSpec &spec, int order, GeneratorNames names);

/// Same tables, no validation; for mutation experiments and for the engine's
/// own inner use. Commutator table may be overridden.
QuantizedPtr build_algebra_unchecked(const LieBialgebraSpec &spec, int order, GeneratorNames names,
                                     const std::vector<std::vector<XPoly>> *commutators = nullptr);

PBWElement normal_order(const QuantizedAlgebra &alg, std::span<const Generator> word);

} // namespace qlie

#endif
