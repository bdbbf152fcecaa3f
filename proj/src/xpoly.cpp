#include "qlie/xpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qlie/errors.hpp"

namespace qlie {

int total_degree(const Exponents &e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

XPoly::XPoly(std::size_t nvars, int order) : nvars_(nvars), order_(order)
{
    if (order < 0) {
        throw StructuralError("negative truncation order");
    }
}

XPoly XPoly::constant(std::size_t nvars, int order, const Rational &c)
{
    XPoly p(nvars, order);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

XPoly XPoly::variable(std::size_t nvars, int order, std::size_t var, const Rational &c)
{
    if (var >= nvars) {
        throw StructuralError("variable index out of range");
    }
    Exponents e(nvars, 0);
    e[var] = 1;
    XPoly p(nvars, order);
    p.add_term(e, c);
    return p;
}

XPoly XPoly::monomial(std::size_t nvars, int order, Exponents exps, const Rational &c)
{
    if (exps.size() != nvars) {
        throw StructuralError("exponent vector length does not match variable count");
    }
    XPoly p(nvars, order);
    p.add_term(exps, c);
    return p;
}

Rational XPoly::coefficient(const Exponents &e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational XPoly::constant_term() const
{
    return coefficient(Exponents(nvars_, 0));
}

int XPoly::min_degree() const
{
    int best = -1;
    for (const auto &[e, c] : terms_) {
        const int d = total_degree(e);
        if (best < 0 || d < best) {
            best = d;
        }
    }
    return best;
}

void XPoly::add_term(const Exponents &e, const Rational &c)
{
    if (sgn(c) == 0 || total_degree(e) > order_) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

void XPoly::check_compatible(const XPoly &o) const
{
    if (nvars_ != o.nvars_) {
        throw StructuralError("polynomials have different variable counts");
    }
    if (order_ != o.order_) {
        throw StructuralError("polynomials have different truncation orders");
    }
}

XPoly &XPoly::operator+=(const XPoly &o)
{
    check_compatible(o);
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

XPoly &XPoly::operator-=(const XPoly &o)
{
    check_compatible(o);
    for (const auto &[e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

XPoly &XPoly::operator*=(const Rational &c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, v] : terms_) {
        v *= c;
    }
    return *this;
}

XPoly XPoly::operator-() const
{
    XPoly r = *this;
    r *= Rational(-1);
    return r;
}

XPoly XPoly::homogeneous_part(int d) const
{
    XPoly r(nvars_, order_);
    for (const auto &[e, c] : terms_) {
        if (total_degree(e) == d) {
            r.terms_.emplace(e, c);
        }
    }
    return r;
}

XPoly XPoly::with_order(int order) const
{
    XPoly r(nvars_, order);
    for (const auto &[e, c] : terms_) {
        r.add_term(e, c);
    }
    return r;
}

XPoly XPoly::compose(std::span<const XPoly> images) const
{
    if (images.size() != nvars_) {
        throw StructuralError("compose: need one image per variable");
    }
    if (images.empty()) {
        // only a constant can live in zero variables; caller must supply the target shape
        throw StructuralError("compose: empty substitution");
    }
    const std::size_t tv = images[0].nvars();
    const int to = images[0].order();
    for (const auto &im : images) {
        if (im.nvars() != tv || im.order() != to) {
            throw StructuralError("compose: images disagree on shape");
        }
    }
    // powers[v][k] = images[v]^k, filled lazily
    std::vector<std::vector<XPoly>> powers(nvars_);
    auto power = [&](std::size_t v, int k) -> const XPoly & {
        auto &pv = powers[v];
        if (pv.empty()) {
            pv.push_back(XPoly::constant(tv, to, 1));
        }
        while (static_cast<int>(pv.size()) <= k) {
            pv.push_back(pv.back() * images[v]);
        }
        return pv[k];
    };
    XPoly result(tv, to);
    for (const auto &[e, c] : terms_) {
        XPoly term = XPoly::constant(tv, to, c);
        for (std::size_t v = 0; v < nvars_ && !term.is_zero(); ++v) {
            if (e[v] > 0) {
                term = term * power(v, e[v]);
            }
        }
        result += term;
    }
    return result;
}

std::string XPoly::to_string(const std::function<std::string(std::size_t)> &name) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    // Lower degrees first, then lexicographic descending so X0 precedes X1.
    std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto &a, const auto &b) {
        const int da = total_degree(a.first);
        const int db = total_degree(b.first);
        if (da != db) {
            return da < db;
        }
        return a.first > b.first;
    });
    for (const auto &[e, c] : ordered) {
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += ' ';
            }
            mono += name(v);
            if (e[v] > 1) {
                mono += '^' + std::to_string(e[v]);
            }
        }
        Rational mag = abs(c);
        const bool neg = sgn(c) < 0;
        if (first) {
            os << (neg ? "-" : "");
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (mono.empty()) {
            os << qlie::to_string(mag);
        } else if (mag == 1) {
            os << mono;
        } else {
            os << qlie::to_string(mag) << ' ' << mono;
        }
    }
    return os.str();
}

std::string XPoly::to_string() const
{
    return to_string([](std::size_t v) { return "X" + std::to_string(v); });
}

XPoly poly_mul(const XPoly &a, const XPoly &b)
{
    if (a.nvars() != b.nvars()) {
        throw StructuralError("poly_mul: different variable counts");
    }
    if (a.order() != b.order()) {
        throw StructuralError("poly_mul: different truncation orders");
    }
    XPoly r(a.nvars(), a.order());
    Exponents e(a.nvars());
    for (const auto &[ea, ca] : a.terms()) {
        const int da = total_degree(ea);
        for (const auto &[eb, cb] : b.terms()) {
            if (da + total_degree(eb) > a.order()) {
                continue;
            }
            for (std::size_t v = 0; v < e.size(); ++v) {
                e[v] = ea[v] + eb[v];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

XPoly operator*(const XPoly &a, const XPoly &b)
{
    return poly_mul(a, b);
}

XPoly poly_diff(const XPoly &p, std::size_t var)
{
    if (var >= p.nvars()) {
        throw StructuralError("poly_diff: variable index out of range");
    }
    XPoly r(p.nvars(), p.order());
    for (const auto &[e, c] : p.terms()) {
        if (e[var] == 0) {
            continue;
        }
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

SeriesCoeffs series_mul(const SeriesCoeffs &a, const SeriesCoeffs &b)
{
    if (a.coefficients.size() != b.coefficients.size()) {
        throw StructuralError("series_mul: different orders");
    }
    const std::size_t n = a.coefficients.size();
    SeriesCoeffs r{std::vector<Rational>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) {
            r.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
        }
    }
    return r;
}

SeriesCoeffs series_reciprocal(const SeriesCoeffs &s)
{
    if (s.coefficients.empty() || sgn(s.coefficients[0]) == 0) {
        throw SingularSeriesError("series has zero constant term");
    }
    const std::size_t n = s.coefficients.size();
    SeriesCoeffs r{std::vector<Rational>(n)};
    r.coefficients[0] = 1 / s.coefficients[0];
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += s.coefficients[j] * r.coefficients[k - j];
        }
        r.coefficients[k] = -acc / s.coefficients[0];
    }
    return r;
}

SeriesCoeffs exp_series(int order)
{
    SeriesCoeffs s{std::vector<Rational>(order + 1)};
    Rational term = 1;
    for (int k = 0; k <= order; ++k) {
        s.coefficients[k] = term;
        term /= (k + 1);
    }
    return s;
}

SeriesCoeffs expm1_over_t_series(int order)
{
    SeriesCoeffs s{std::vector<Rational>(order + 1)};
    Rational term = 1;
    for (int k = 0; k <= order; ++k) {
        s.coefficients[k] = term; // 1/(k+1)!
        term /= (k + 2);
    }
    return s;
}

SeriesCoeffs t_over_expm1_series(int order)
{
    return series_reciprocal(expm1_over_t_series(order));
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars, int order)
    : rows_(rows), cols_(cols), nvars_(nvars), order_(order), entries_(rows * cols, XPoly(nvars, order))
{
}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars, int order)
{
    PolyMatrix m(n, n, nvars, order);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = XPoly::constant(nvars, order, 1);
    }
    return m;
}

PolyMatrix &PolyMatrix::operator+=(const PolyMatrix &o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw StructuralError("matrix shapes differ");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += o.entries_[k];
    }
    return *this;
}

PolyMatrix &PolyMatrix::operator*=(const Rational &c)
{
    for (auto &e : entries_) {
        e *= c;
    }
    return *this;
}

bool PolyMatrix::is_identity() const
{
    return *this == identity(rows_, nvars_, order_) && rows_ == cols_;
}

bool PolyMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const XPoly &p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::compose(std::span<const XPoly> images) const
{
    if (images.empty()) {
        return *this;
    }
    PolyMatrix r(rows_, cols_, images[0].nvars(), images[0].order());
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        r.entries_[k] = entries_[k].compose(images);
    }
    return r;
}

PolyMatrix operator*(const PolyMatrix &a, const PolyMatrix &b)
{
    if (a.cols() != b.rows()) {
        throw StructuralError("matrix product: inner dimensions differ");
    }
    PolyMatrix r(a.rows(), b.cols(), a.nvars(), a.order());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!b(k, j).is_zero()) {
                    r(i, j) += a(i, k) * b(k, j);
                }
            }
        }
    }
    return r;
}

PolyMatrix operator+(PolyMatrix a, const PolyMatrix &b)
{
    return a += b;
}

PolyMatrix operator-(const PolyMatrix &a)
{
    PolyMatrix r = a;
    r *= Rational(-1);
    return r;
}

PolyMatrix matrix_series_apply(const SeriesCoeffs &s, const PolyMatrix &m)
{
    if (m.rows() != m.cols()) {
        throw StructuralError("matrix_series_apply: matrix is not square");
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (sgn(m(i, j).constant_term()) != 0) {
                throw StructuralError("matrix_series_apply: entry has a constant term, series would not terminate");
            }
        }
    }
    const std::size_t n = m.rows();
    PolyMatrix result(n, n, m.nvars(), m.order());
    PolyMatrix power = PolyMatrix::identity(n, m.nvars(), m.order());
    // M^k has minimal degree >= k, so powers past the order vanish.
    const int kmax = std::min(s.order(), m.order());
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) {
            power = power * m;
            if (power.is_zero()) {
                break;
            }
        }
        if (sgn(s.coefficients[k]) != 0) {
            PolyMatrix term = power;
            term *= s.coefficients[k];
            result += term;
        }
    }
    return result;
}

} // namespace qlie
