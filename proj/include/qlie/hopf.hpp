#ifndef QLIE_HOPF_HPP
#define QLIE_HOPF_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qlie/liebialg.hpp"
#include "qlie/pbw.hpp"
#include "qlie/quantize.hpp"

namespace qlie {

/// Hopf structure of a quantized algebra.
///
/// The generator tables are plain data so tests can corrupt them. Coproducts
/// and antipodes of PBW monomials are memoised on first use, so mutate the
/// tables before calling anything (or call clear_cache()).
class HopfContext {
public:
    explicit HopfContext(QuantizedPtr q);
    HopfContext(const HopfContext &o);
    HopfContext &operator=(const HopfContext &o);

    QuantizedPtr q;
    AlgebraPtr alg;

    std::vector<TensorElement> delta_x; // Delta(X^mu) = D^mu(X (x) 1, 1 (x) X)
    std::vector<TensorElement> delta_h; // Delta(H_i) = a_plus(k,i) (x) H_k + H_i (x) 1
    std::vector<PBWElement> antipode_x; // S(X^mu) = -X^mu
    std::vector<PBWElement> antipode_h; // S(H_i) = -a_minus(k,i) H_k

    // Right-hand sides the homomorphism checker compares against:
    // [H_i, X^mu] and [H_i, H_j].
    std::vector<std::vector<PBWElement>> expected_hx;
    std::vector<std::vector<PBWElement>> expected_hh;

    int order() const { return alg->order(); }
    std::vector<TensorLeg> legs(std::size_t n) const;

    const TensorElement &coproduct_of(const Monomial &m) const;
    const PBWElement &antipode_of(const Monomial &m) const;
    void clear_cache() const;

private:
    struct Cache {
        std::mutex mutex;
        std::map<Monomial, TensorElement> delta;
        std::map<Monomial, PBWElement> antipode;
    };
    std::unique_ptr<Cache> cache_;
};

TensorElement x_coproduct_from_bch(const AlgebraPtr &alg, const XPoly &D_mu);
TensorElement h_coproduct_from_matrix(const AlgebraPtr &alg, const PolyMatrix &a_plus, std::size_t i);

TensorElement coproduct(const HopfContext &ctx, const PBWElement &e);
// Delta' = flip o Delta
TensorElement opposite_coproduct(const HopfContext &ctx, const PBWElement &e);
Rational counit(const PBWElement &e);
PBWElement antipode(const HopfContext &ctx, const PBWElement &e);

// Delta applied to one leg of a tensor element.
TensorElement coproduct_on_leg(const HopfContext &ctx, const TensorElement &t, std::size_t leg);

/// PBW monomials with X-degree <= x_cap and H-degree <= h_cap, ordered by
/// total degree then lexicographically.
std::vector<Monomial> pbw_basis(const PBWAlgebra &alg, int x_cap, int h_cap);

ValidationReport check_coassociativity(const HopfContext &ctx, int h_cap = 3);
ValidationReport check_coproduct_homomorphism(const HopfContext &ctx, int h_cap = 3);
ValidationReport check_antipode_axiom(const HopfContext &ctx, int h_cap = 3);
ValidationReport check_counit_axiom(const HopfContext &ctx, int h_cap = 3);
ValidationReport check_semiclassical(const HopfContext &ctx);
ValidationReport check_hopf_suite(const HopfContext &ctx, int h_cap = 3);

/// Generator-level extension of a classical morphism. Throws ValidationError
/// if the classical morphism check fails.
ValidationReport check_hopf_morphism(const HopfContext &src, const HopfContext &dst, const MorphismSpec &phi,
                                     int h_cap = 3);

} // namespace qlie

#endif
