#ifndef QLIE_PBW_HPP
#define QLIE_PBW_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "qlie/liebialg.hpp"
#include "qlie/rational.hpp"
#include "qlie/xpoly.hpp"

namespace qlie {

/// Nondecreasing sequence of H-generator indices.
using HWord = std::vector<int>;

/// PBW basis element X^x H_{h[0]} H_{h[1]} ...: commuting X's on the left,
/// H's on the right in ascending index order.
struct Monomial {
    Exponents x;
    HWord h;

    int x_degree() const { return total_degree(x); }
    int h_degree() const { return static_cast<int>(h.size()); }
    bool is_unit() const { return h.empty() && x_degree() == 0; }

    auto operator<=>(const Monomial &) const = default;
    bool operator==(const Monomial &) const = default;
};

struct GeneratorNames {
    std::vector<std::string> x; // one per X-type generator
    std::vector<std::string> h; // one per H-type generator

    static GeneratorNames standard(std::size_t dim_h, std::size_t dim_v, const std::string &xp = "X",
                                   const std::string &hp = "H");
};

/// The rewriting kernel of a filtered deformation of a PBW algebra:
///
///   X^mu X^nu = X^nu X^mu
///   H_i f(X)  = f(X) H_i + sum_mu d_mu f(X) * comm(i, mu)(X)
///   H_j H_i   = H_i H_j + C(j, i, m) H_m        (j > i)
///
/// truncated at total X-degree `order`. Commutator polynomials must have no
/// constant term, so rewriting never lowers X-degree and the truncation is an
/// ideal. Products of basis monomials are memoised; the object is otherwise
/// immutable and safe to share between threads.
class PBWAlgebra {
public:
    PBWAlgebra(std::size_t dim_h, std::size_t dim_v, int order, Tensor3 C, std::vector<std::vector<XPoly>> commutators,
               GeneratorNames names);

    std::size_t dim_h() const { return dim_h_; }
    std::size_t dim_v() const { return dim_v_; }
    int order() const { return order_; }
    const Tensor3 &structure_constants() const { return C_; }
    const XPoly &commutator(std::size_t i, std::size_t mu) const { return comm_[i][mu]; }
    const GeneratorNames &names() const { return names_; }

    // [H_i, p(X)] as a polynomial.
    XPoly derive(std::size_t i, const XPoly &p) const;

    // Normal form of the product of two basis monomials.
    const std::map<Monomial, Rational> &monomial_product(const Monomial &a, const Monomial &b) const;

    // Normal form of an arbitrary (unsorted) word in the H generators.
    const std::map<HWord, Rational> &order_h_word(const HWord &w) const;

    std::string monomial_string(const Monomial &m) const;

private:
    using PushResult = std::map<HWord, XPoly>;
    const PushResult &push(const HWord &w, const Exponents &x) const;

    std::size_t dim_h_;
    std::size_t dim_v_;
    int order_;
    Tensor3 C_;
    std::vector<std::vector<XPoly>> comm_;
    GeneratorNames names_;

    mutable std::mutex mutex_;
    mutable std::map<HWord, std::map<HWord, Rational>> hword_cache_;
    mutable std::map<std::pair<HWord, Exponents>, PushResult> push_cache_;
    mutable std::map<std::pair<Monomial, Monomial>, std::map<Monomial, Rational>> product_cache_;
};

using AlgebraPtr = std::shared_ptr<const PBWAlgebra>;

/// Finitely supported rational combination of PBW monomials of one algebra.
class PBWElement {
public:
    using TermMap = std::map<Monomial, Rational>;

    PBWElement() = default;
    explicit PBWElement(AlgebraPtr alg);

    static PBWElement scalar(AlgebraPtr alg, const Rational &c);
    static PBWElement one(AlgebraPtr alg) { return scalar(std::move(alg), 1); }
    static PBWElement x(AlgebraPtr alg, std::size_t mu);
    static PBWElement h(AlgebraPtr alg, std::size_t i);
    static PBWElement monomial(AlgebraPtr alg, Monomial m, const Rational &c = 1);
    // X-only element from a polynomial in the algebra's X variables.
    static PBWElement from_poly(AlgebraPtr alg, const XPoly &p);

    const AlgebraPtr &algebra() const { return alg_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Monomial &m) const;

    void add_term(const Monomial &m, const Rational &c);

    PBWElement &operator+=(const PBWElement &o);
    PBWElement &operator-=(const PBWElement &o);
    PBWElement &operator*=(const Rational &c);
    friend PBWElement operator+(PBWElement a, const PBWElement &b) { return a += b; }
    friend PBWElement operator-(PBWElement a, const PBWElement &b) { return a -= b; }
    friend PBWElement operator*(PBWElement a, const Rational &c) { return a *= c; }
    friend PBWElement operator*(const Rational &c, PBWElement a) { return a *= c; }
    PBWElement operator-() const;
    bool operator==(const PBWElement &o) const;

    // X-part as a polynomial; throws if any term carries H's.
    XPoly to_poly() const;

    // Sorted "coeff * monomial" lines.
    std::vector<std::string> lines() const;
    std::string to_string() const;

private:
    AlgebraPtr alg_;
    TermMap terms_;
};

void require_same_algebra(const PBWElement &a, const PBWElement &b);

PBWElement multiply(const PBWElement &a, const PBWElement &b);
PBWElement operator*(const PBWElement &a, const PBWElement &b);
PBWElement commutator(const PBWElement &a, const PBWElement &b);

struct Generator {
    enum class Kind { X, H };
    Kind kind;
    std::size_t index;
};

PBWElement normal_order(const AlgebraPtr &alg, std::span<const Generator> word);

/// Element of a k-fold tensor product of PBW algebras. Legs may belong to
/// different algebras (all with the same truncation order); a leg flagged
/// `opposite` multiplies in reversed order. Truncation is by the total
/// X-degree across legs, which is the ideal the coproduct respects.
struct TensorLeg {
    AlgebraPtr alg;
    bool opposite = false;

    bool operator==(const TensorLeg &o) const { return alg == o.alg && opposite == o.opposite; }
};

class TensorElement {
public:
    using Key = std::vector<Monomial>;
    using TermMap = std::map<Key, Rational>;

    TensorElement() = default;
    explicit TensorElement(std::vector<TensorLeg> legs);

    static TensorElement one(std::vector<TensorLeg> legs);
    // Tensor product of single-leg elements (legs taken from the elements).
    static TensorElement pure(std::span<const PBWElement> factors);

    std::size_t arity() const { return legs_.size(); }
    const std::vector<TensorLeg> &legs() const { return legs_; }
    int order() const;
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Key &k) const;

    void add_term(const Key &k, const Rational &c);

    TensorElement &operator+=(const TensorElement &o);
    TensorElement &operator-=(const TensorElement &o);
    TensorElement &operator*=(const Rational &c);
    friend TensorElement operator+(TensorElement a, const TensorElement &b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement &b) { return a -= b; }
    friend TensorElement operator*(TensorElement a, const Rational &c) { return a *= c; }
    bool operator==(const TensorElement &o) const;

    std::vector<std::string> lines() const;
    std::string to_string() const;

private:
    void require_compatible(const TensorElement &o) const;

    std::vector<TensorLeg> legs_;
    TermMap terms_;
};

TensorElement tensor_multiply(const TensorElement &a, const TensorElement &b);
TensorElement operator*(const TensorElement &a, const TensorElement &b);

// result leg j carries input leg perm[j].
TensorElement permute_legs(const TensorElement &t, std::span<const std::size_t> perm);
// Swap of a 2-leg element.
TensorElement flip(const TensorElement &t);
// Place t's legs at `positions` inside an arity-`legs.size()` element, unit elsewhere.
TensorElement embed(const TensorElement &t, std::vector<TensorLeg> legs, std::span<const std::size_t> positions);
// Replace leg `leg` by the legs of f(monomial) (linear extension); f must
// return elements over `replacement`.
TensorElement map_leg(const TensorElement &t, std::size_t leg, const std::vector<TensorLeg> &replacement,
                      const std::function<TensorElement(const Monomial &)> &f);
// Apply a linear functional to leg `leg`, removing it.
TensorElement contract_leg(const TensorElement &t, std::size_t leg, const std::function<Rational(const Monomial &)> &f);
// Multiply all legs together in order (legs must share one algebra).
PBWElement collapse(const TensorElement &t);
// The single leg of an arity-1 element as a PBWElement.
PBWElement single_leg(const TensorElement &t);

} // namespace qlie

#endif
