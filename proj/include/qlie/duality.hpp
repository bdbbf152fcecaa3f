#ifndef QLIE_DUALITY_HPP
#define QLIE_DUALITY_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qlie/hopf.hpp"

namespace qlie {

/// Pairing between U_q(L) and U_q(L*).
///
/// The dual algebra is the quantization of dualize(L); its H-type generators
/// are z_mu (paired with X^mu) and its X-type generators e^i (paired with H_i).
/// <g f', u> = sum <g, u_(1)> <f', u_(2)> over Delta(u), with z_mu reading the
/// X^mu coefficient and e^i the H_i coefficient of the X-free part of u in the
/// symmetrised basis of U(H).
class PairingContext {
public:
    PairingContext(const LieBialgebraSpec &spec, int order, Rational zeta_scale = 1);

    HopfContext primal;
    HopfContext dual;

    int order() const { return primal.order(); }
    const Rational &zeta_scale() const { return zeta_scale_; }

    // Leg types of T: dual with opposite multiplication, then primal.
    TensorLeg dual_leg() const { return TensorLeg{dual.alg, true}; }
    TensorLeg primal_leg() const { return TensorLeg{primal.alg, false}; }

    Rational pair_monomials(const Monomial &f, const Monomial &u) const;
    // H_i coefficients of a sorted H word in the symmetrised basis.
    const std::vector<Rational> &linear_part(const HWord &w) const;

private:
    Rational base(const Generator &g, const Monomial &u) const;

    Rational zeta_scale_;
    struct Cache {
        std::mutex mutex;
        std::map<std::pair<Monomial, Monomial>, Rational> pairs;
        std::map<HWord, std::vector<Rational>> linear;
    };
    std::shared_ptr<Cache> cache_;
};

Rational pair(const PairingContext &pc, const PBWElement &f, const PBWElement &u);

/// exp(z_mu (x) X^mu) exp(e^i (x) H_i), first leg in the opposite algebra.
TensorElement canonical_element(const PairingContext &pc);

/// Gram reconstruction (bidegree box of size degree_cap) and the two
/// coproduct laws of the canonical element.
ValidationReport verify_canonical(const PairingContext &pc, int degree_cap = 3);

/// <z-word e-word, X-word H-word> = <e-word, H-word> <z-word, X-word> on the
/// basis within caps, the dual product read in the opposite algebra.
ValidationReport check_pairing_factorization(const PairingContext &pc, int degree_cap = 3);

/// <fg, u> = <f (x) g, Delta u> and <f, uv> = <Delta f, u (x) v> on seeded random
/// elements whose products have degree <= degree_cap <= order.
ValidationReport check_pairing_laws(const PairingContext &pc, int degree_cap = 3, int samples = 40,
                                    unsigned seed = 7);

/// Hopf context of the quantized classical double. H-type generators are
/// H_i then z_mu, X-type generators X^mu then e^i.
HopfContext quantum_double(const LieBialgebraSpec &spec, int order);
GeneratorNames double_names(std::size_t dim_h, std::size_t dim_v);

/// Cross commutators inside quantum_double(spec). `double_spec` replaces the
/// classical double for mutation experiments.
ValidationReport verify_double_cross_relations(const LieBialgebraSpec &spec, int order,
                                               const LieBialgebraSpec *double_spec = nullptr);

/// r = z_mu (x) X^mu + e^i (x) H_i in the double's bases.
ClassicalRMatrix double_canonical_r(const LieBialgebraSpec &spec);

/// exp(P H (x) X) exp(Q X (x) H); refuses (ValidationError) if the CYBE fails.
TensorElement build_r_matrix(const HopfContext &ctx, const ClassicalRMatrix &r);
TensorElement build_r_matrix_unchecked(const HopfContext &ctx, const ClassicalRMatrix &r);

ValidationReport check_qybe(const HopfContext &ctx, const TensorElement &R);
ValidationReport check_quasitriangular(const HopfContext &ctx, const TensorElement &R);

/// Compare the canonical R of quantum_double(spec) with the image of T under
/// z, e -> double generators (first leg mapped anti-multiplicatively).
ValidationReport compare_double_r_with_t(const LieBialgebraSpec &spec, int order);

} // namespace qlie

#endif
