#ifndef QLIE_LIEBIALG_HPP
#define QLIE_LIEBIALG_HPP

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qlie/rational.hpp"

namespace qlie {

/// Dense rank-3 tensor of rationals, row-major in (a, b, c).
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2) : dims_{d0, d1, d2}, data_(d0 * d1 * d2) {}

    const std::array<std::size_t, 3> &dims() const { return dims_; }
    std::size_t dim(std::size_t k) const { return dims_[k]; }

    Rational &operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[index(a, b, c)]; }
    const Rational &operator()(std::size_t a, std::size_t b, std::size_t c) const { return data_[index(a, b, c)]; }

    bool is_zero() const;
    bool operator==(const Tensor3 &) const = default;

private:
    std::size_t index(std::size_t a, std::size_t b, std::size_t c) const { return (a * dims_[1] + b) * dims_[2] + c; }

    std::array<std::size_t, 3> dims_{0, 0, 0};
    std::vector<Rational> data_;
};

/// Structure constants of an inhomogeneous Lie bialgebra L = H |x V.
///
///   [H_i, H_k]   = C(i,k,m) H_m
///   [H_i, X^mu]  = A(i,mu,nu) X^nu
///   [X^mu, X^nu] = 0
///   delta(X^mu)  = gamma(mu,rho,sigma) X^rho (x) X^sigma
///   delta(H_i)   = alpha(rho,i,k) (X^rho (x) H_k - H_k (x) X^rho)
struct LieBialgebraSpec {
    std::size_t dim_h = 0;
    std::size_t dim_v = 0;
    Tensor3 C;     // [i][k][m]
    Tensor3 A;     // [i][mu][nu]
    Tensor3 gamma; // [mu][rho][sigma]
    Tensor3 alpha; // [rho][i][k]

    static LieBialgebraSpec zero(std::size_t dim_h, std::size_t dim_v);

    // Throws StructuralError if any tensor disagrees with (dim_h, dim_v).
    void check_shapes() const;

    bool operator==(const LieBialgebraSpec &) const = default;
};

/// r = P[i][mu] H_i (x) X^mu + Q[mu][i] X^mu (x) H_i.
struct ClassicalRMatrix {
    std::vector<std::vector<Rational>> P; // dim_h x dim_v
    std::vector<std::vector<Rational>> Q; // dim_v x dim_h

    static ClassicalRMatrix zero(std::size_t dim_h, std::size_t dim_v);
    bool is_zero() const;
    bool operator==(const ClassicalRMatrix &) const = default;
};

/// A sigma-compatible (block) linear map L -> L'.
struct MorphismSpec {
    std::vector<std::vector<Rational>> phi_H; // dim_h' x dim_h
    std::vector<std::vector<Rational>> phi_V; // dim_v' x dim_v

    static MorphismSpec identity(std::size_t dim_h, std::size_t dim_v);
};

struct Violation {
    std::string axiom;
    std::vector<int> index;
    // Exact residual: a rational for classical checks, the full rendered
    // element for tensor-valued checks.
    std::string residual;
};

struct ValidationReport {
    std::vector<Violation> violations;
    // Names of the checks that ran, in order, so reports can list passes too.
    std::vector<std::string> checks;

    bool pass() const { return violations.empty(); }
    bool failed(const std::string &axiom) const;
    void add_check(const std::string &name);
    void add(std::string axiom, std::vector<int> index, std::string residual);
    void merge(const ValidationReport &other);
};

ValidationReport validate_bialgebra(const LieBialgebraSpec &spec);
void require_valid(const LieBialgebraSpec &spec);

LieBialgebraSpec dualize(const LieBialgebraSpec &spec);
LieBialgebraSpec classical_double(const LieBialgebraSpec &spec);

ValidationReport check_cybe(const LieBialgebraSpec &spec, const ClassicalRMatrix &r);

/// Image subspaces of r: `plus` is the first-leg image r(L*) = <id (x) x, r>,
/// `minus` the second-leg image. Vectors are coordinates in the (H, X) basis,
/// reduced row echelon form.
struct RImages {
    std::vector<std::vector<Rational>> plus;
    std::vector<std::vector<Rational>> minus;
};
RImages r_images(const LieBialgebraSpec &spec, const ClassicalRMatrix &r);

ValidationReport check_classical_morphism(const LieBialgebraSpec &src, const LieBialgebraSpec &dst,
                                          const MorphismSpec &phi);

/// Bracket of L on the combined basis (H_0.., X^0..): [b_a, b_b] = f(a,b,c) b_c.
Tensor3 bracket_constants(const LieBialgebraSpec &spec);
/// Cobracket of L on the same basis: delta(b_c) = g(c,a,b) b_a (x) b_b.
Tensor3 cobracket_constants(const LieBialgebraSpec &spec);

/// Reduced row echelon basis of the span of `rows`.
std::vector<std::vector<Rational>> row_echelon_basis(std::vector<std::vector<Rational>> rows);

} // namespace qlie

#endif
