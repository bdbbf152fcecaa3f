#ifndef QLIE_XPOLY_HPP
#define QLIE_XPOLY_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qlie/rational.hpp"

namespace qlie {

using Exponents = std::vector<int>;

int total_degree(const Exponents &e);

/// Commutative polynomial in `nvars` variables with rational coefficients,
/// truncated at total degree `order`.
///
/// Terms iterate in lexicographic exponent order. Zero coefficients and terms
/// above the truncation order are never stored.
class XPoly {
public:
    using TermMap = std::map<Exponents, Rational>;

    XPoly() = default;
    XPoly(std::size_t nvars, int order);

    static XPoly constant(std::size_t nvars, int order, const Rational &c);
    static XPoly variable(std::size_t nvars, int order, std::size_t var, const Rational &c = 1);
    static XPoly monomial(std::size_t nvars, int order, Exponents exps, const Rational &c = 1);

    std::size_t nvars() const { return nvars_; }
    int order() const { return order_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Exponents &e) const;
    Rational constant_term() const;
    // Smallest total degree present; -1 for the zero polynomial.
    int min_degree() const;

    // Adds c * x^e, silently dropping terms above the order.
    void add_term(const Exponents &e, const Rational &c);

    XPoly &operator+=(const XPoly &o);
    XPoly &operator-=(const XPoly &o);
    XPoly &operator*=(const Rational &c);
    friend XPoly operator+(XPoly a, const XPoly &b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly &b) { return a -= b; }
    friend XPoly operator*(XPoly a, const Rational &c) { return a *= c; }
    friend XPoly operator*(const Rational &c, XPoly a) { return a *= c; }
    XPoly operator-() const;

    bool operator==(const XPoly &o) const = default;

    // Homogeneous component of total degree d.
    XPoly homogeneous_part(int d) const;
    // Same coefficients, new truncation order (terms above it dropped).
    XPoly with_order(int order) const;

    // Replace every variable x_v by images[v] (all images share nvars and
    // order); result truncated at the images' order.
    XPoly compose(std::span<const XPoly> images) const;

    // Renders with the given variable names, e.g. "X0 + 1/2 X0^2".
    std::string to_string(const std::function<std::string(std::size_t)> &name) const;
    std::string to_string() const;

private:
    void check_compatible(const XPoly &o) const;

    std::size_t nvars_ = 0;
    int order_ = 0;
    TermMap terms_;
};

XPoly poly_mul(const XPoly &a, const XPoly &b);
XPoly operator*(const XPoly &a, const XPoly &b);
XPoly poly_diff(const XPoly &p, std::size_t var);

/// Univariate series truncated at degree N (coefficients.size() == N + 1).
struct SeriesCoeffs {
    std::vector<Rational> coefficients;

    int order() const { return static_cast<int>(coefficients.size()) - 1; }
    bool operator==(const SeriesCoeffs &) const = default;
};

SeriesCoeffs series_mul(const SeriesCoeffs &a, const SeriesCoeffs &b);
SeriesCoeffs series_reciprocal(const SeriesCoeffs &s);

SeriesCoeffs exp_series(int order);
// (e^t - 1)/t
SeriesCoeffs expm1_over_t_series(int order);
// t/(e^t - 1), obtained as the reciprocal of the previous series.
SeriesCoeffs t_over_expm1_series(int order);

/// Dense matrix of XPoly entries sharing variable count and order.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars, int order);

    static PolyMatrix identity(std::size_t n, std::size_t nvars, int order);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }
    int order() const { return order_; }

    XPoly &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const XPoly &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    PolyMatrix &operator+=(const PolyMatrix &o);
    PolyMatrix &operator*=(const Rational &c);
    bool operator==(const PolyMatrix &o) const = default;

    bool is_identity() const;
    bool is_zero() const;
    PolyMatrix compose(std::span<const XPoly> images) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t nvars_ = 0;
    int order_ = 0;
    std::vector<XPoly> entries_;
};

PolyMatrix operator*(const PolyMatrix &a, const PolyMatrix &b);
PolyMatrix operator+(PolyMatrix a, const PolyMatrix &b);
PolyMatrix operator-(const PolyMatrix &a);

/// sum_k s[k] M^k, truncated. M must be square with no constant entries.
PolyMatrix matrix_series_apply(const SeriesCoeffs &s, const PolyMatrix &m);

} // namespace qlie

#endif
