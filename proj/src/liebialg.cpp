#include "qlie/liebialg.hpp"

#include <algorithm>

#include "qlie/errors.hpp"

namespace qlie {

bool Tensor3::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational &q) { return sgn(q) == 0; });
}

LieBialgebraSpec LieBialgebraSpec::zero(std::size_t dim_h, std::size_t dim_v)
{
    LieBialgebraSpec s;
    s.dim_h = dim_h;
    s.dim_v = dim_v;
    s.C = Tensor3(dim_h, dim_h, dim_h);
    s.A = Tensor3(dim_h, dim_v, dim_v);
    s.gamma = Tensor3(dim_v, dim_v, dim_v);
    s.alpha = Tensor3(dim_v, dim_h, dim_h);
    return s;
}

void LieBialgebraSpec::check_shapes() const
{
    using D = std::array<std::size_t, 3>;
    const auto expect = [](const Tensor3 &t, const D &d, const char *name) {
        if (t.dims() != d) {
            throw StructuralError(std::string("tensor ") + name + " has the wrong shape");
        }
    };
    expect(C, D{dim_h, dim_h, dim_h}, "C");
    expect(A, D{dim_h, dim_v, dim_v}, "A");
    expect(gamma, D{dim_v, dim_v, dim_v}, "gamma");
    expect(alpha, D{dim_v, dim_h, dim_h}, "alpha");
}

ClassicalRMatrix ClassicalRMatrix::zero(std::size_t dim_h, std::size_t dim_v)
{
    ClassicalRMatrix r;
    r.P.assign(dim_h, std::vector<Rational>(dim_v));
    r.Q.assign(dim_v, std::vector<Rational>(dim_h));
    return r;
}

bool ClassicalRMatrix::is_zero() const
{
    for (const auto *m : {&P, &Q}) {
        for (const auto &row : *m) {
            for (const auto &q : row) {
                if (sgn(q) != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

MorphismSpec MorphismSpec::identity(std::size_t dim_h, std::size_t dim_v)
{
    MorphismSpec m;
    m.phi_H.assign(dim_h, std::vector<Rational>(dim_h));
    m.phi_V.assign(dim_v, std::vector<Rational>(dim_v));
    for (std::size_t i = 0; i < dim_h; ++i) {
        m.phi_H[i][i] = 1;
    }
    for (std::size_t i = 0; i < dim_v; ++i) {
        m.phi_V[i][i] = 1;
    }
    return m;
}

bool ValidationReport::failed(const std::string &axiom) const
{
    return std::any_of(violations.begin(), violations.end(), [&](const Violation &v) { return v.axiom == axiom; });
}

void ValidationReport::add_check(const std::string &name)
{
    if (std::find(checks.begin(), checks.end(), name) == checks.end()) {
        checks.push_back(name);
    }
}

void ValidationReport::add(std::string axiom, std::vector<int> index, std::string residual)
{
    add_check(axiom);
    violations.push_back({std::move(axiom), std::move(index), std::move(residual)});
}

void ValidationReport::merge(const ValidationReport &other)
{
    for (const auto &c : other.checks) {
        add_check(c);
    }
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

Tensor3 bracket_constants(const LieBialgebraSpec &s)
{
    const std::size_t h = s.dim_h;
    const std::size_t n = s.dim_h + s.dim_v;
    Tensor3 f(n, n, n);
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t k = 0; k < h; ++k) {
            for (std::size_t m = 0; m < h; ++m) {
                f(i, k, m) = s.C(i, k, m);
            }
        }
        for (std::size_t mu = 0; mu < s.dim_v; ++mu) {
            for (std::size_t nu = 0; nu < s.dim_v; ++nu) {
                f(i, h + mu, h + nu) = s.A(i, mu, nu);
                f(h + mu, i, h + nu) = -s.A(i, mu, nu);
            }
        }
    }
    return f;
}

Tensor3 cobracket_constants(const LieBialgebraSpec &s)
{
    const std::size_t h = s.dim_h;
    const std::size_t n = s.dim_h + s.dim_v;
    Tensor3 g(n, n, n);
    for (std::size_t mu = 0; mu < s.dim_v; ++mu) {
        for (std::size_t rho = 0; rho < s.dim_v; ++rho) {
            for (std::size_t sigma = 0; sigma < s.dim_v; ++sigma) {
                g(h + mu, h + rho, h + sigma) = s.gamma(mu, rho, sigma);
            }
        }
    }
    for (std::size_t rho = 0; rho < s.dim_v; ++rho) {
        for (std::size_t i = 0; i < h; ++i) {
            for (std::size_t k = 0; k < h; ++k) {
                g(i, h + rho, k) += s.alpha(rho, i, k);
                g(i, k, h + rho) -= s.alpha(rho, i, k);
            }
        }
    }
    return g;
}

namespace {

LieBialgebraSpec dualize_unchecked(const LieBialgebraSpec &s)
{
    LieBialgebraSpec d = LieBialgebraSpec::zero(s.dim_v, s.dim_h);
    for (std::size_t rho = 0; rho < s.dim_v; ++rho) {
        for (std::size_t sigma = 0; sigma < s.dim_v; ++sigma) {
            for (std::size_t tau = 0; tau < s.dim_v; ++tau) {
                d.C(rho, sigma, tau) = s.gamma(tau, rho, sigma);
            }
        }
        for (std::size_t i = 0; i < s.dim_h; ++i) {
            for (std::size_t k = 0; k < s.dim_h; ++k) {
                d.A(rho, k, i) = s.alpha(rho, i, k);
            }
        }
    }
    for (std::size_t i = 0; i < s.dim_h; ++i) {
        for (std::size_t j = 0; j < s.dim_h; ++j) {
            for (std::size_t k = 0; k < s.dim_h; ++k) {
                d.gamma(i, j, k) = s.C(j, k, i);
            }
        }
        for (std::size_t mu = 0; mu < s.dim_v; ++mu) {
            for (std::size_t nu = 0; nu < s.dim_v; ++nu) {
                d.alpha(i, mu, nu) = s.A(i, nu, mu);
            }
        }
    }
    return d;
}

// Jacobi identity of the bracket f on a basis whose first `h` elements are the
// H-type generators. `labels[k]` names a violation with k H-type entries.
void check_jacobi(const Tensor3 &f, std::size_t h, const std::array<const char *, 4> &labels, ValidationReport &rep)
{
    const std::size_t n = f.dim(0);
    for (const char *l : labels) {
        rep.add_check(l);
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                const int hcount = (a < h) + (b < h) + (c < h);
                for (std::size_t d = 0; d < n; ++d) {
                    Rational j = 0;
                    for (std::size_t e = 0; e < n; ++e) {
                        j += f(a, b, e) * f(e, c, d) + f(b, c, e) * f(e, a, d) + f(c, a, e) * f(e, b, d);
                    }
                    if (sgn(j) != 0) {
                        rep.add(labels[hcount], {int(a), int(b), int(c), int(d)}, to_string(j));
                    }
                }
            }
        }
    }
}

} // namespace

ValidationReport validate_bialgebra(const LieBialgebraSpec &s)
{
    s.check_shapes();
    ValidationReport rep;
    const std::size_t h = s.dim_h;
    const std::size_t v = s.dim_v;

    rep.add_check("C-skew");
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t k = i; k < h; ++k) {
            for (std::size_t m = 0; m < h; ++m) {
                const Rational r = s.C(i, k, m) + s.C(k, i, m);
                if (sgn(r) != 0) {
                    rep.add("C-skew", {int(i), int(k), int(m)}, to_string(r));
                }
            }
        }
    }
    rep.add_check("gamma-skew");
    for (std::size_t mu = 0; mu < v; ++mu) {
        for (std::size_t rho = 0; rho < v; ++rho) {
            for (std::size_t sigma = rho; sigma < v; ++sigma) {
                const Rational r = s.gamma(mu, rho, sigma) + s.gamma(mu, sigma, rho);
                if (sgn(r) != 0) {
                    rep.add("gamma-skew", {int(mu), int(rho), int(sigma)}, to_string(r));
                }
            }
        }
    }

    // Jacobi on L covers C-Jacobi and the A-representation identity; Jacobi
    // on L* covers gamma-Jacobi and the alpha-representation identity.
    const Tensor3 f = bracket_constants(s);
    check_jacobi(f, h, {"V-Jacobi", "V-Jacobi", "A-rep", "C-Jacobi"}, rep);
    const Tensor3 fd = bracket_constants(dualize_unchecked(s));
    check_jacobi(fd, v, {"Vstar-Jacobi", "Vstar-Jacobi", "alpha-rep", "gamma-Jacobi"}, rep);

    // 1-cocycle condition delta([a,b]) = ad_a delta(b) - ad_b delta(a).
    // (H,X) pairs are the consistency condition between A, gamma, alpha;
    // (H,H) pairs the one between C, alpha, A.
    const Tensor3 g = cobracket_constants(s);
    const std::size_t n = h + v;
    rep.add_check("cond1");
    rep.add_check("cond2");
    rep.add_check("cocycle-XX");
    const auto ad_delta = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        Rational r = 0;
        for (std::size_t e = 0; e < n; ++e) {
            r += f(a, e, c) * g(b, e, d) + f(a, e, d) * g(b, c, e);
        }
        return r;
    };
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const char *label = (b < h) ? "cond2" : (a < h ? "cond1" : "cocycle-XX");
            for (std::size_t c = 0; c < n; ++c) {
                for (std::size_t d = 0; d < n; ++d) {
                    Rational r = 0;
                    for (std::size_t e = 0; e < n; ++e) {
                        r += f(a, b, e) * g(e, c, d);
                    }
                    r -= ad_delta(a, b, c, d);
                    r += ad_delta(b, a, c, d);
                    if (sgn(r) != 0) {
                        rep.add(label, {int(a), int(b), int(c), int(d)}, to_string(r));
                    }
                }
            }
        }
    }
    return rep;
}

void require_valid(const LieBialgebraSpec &spec)
{
    const auto rep = validate_bialgebra(spec);
    if (!rep.pass()) {
        const auto &v = rep.violations.front();
        throw ValidationError("invalid Lie bialgebra: " + v.axiom + " violated (" + std::to_string(rep.violations.size()) +
                              " violations)");
    }
}

LieBialgebraSpec dualize(const LieBialgebraSpec &spec)
{
    require_valid(spec);
    return dualize_unchecked(spec);
}

namespace {

// Sign of the L*-block cobracket inside the double. With the opposite
// bracket on L* the cobracket is kept as is.
constexpr int kDualCobracketSign = 1;

} // namespace

LieBialgebraSpec classical_double(const LieBialgebraSpec &s)
{
    require_valid(s);
    const std::size_t h = s.dim_h;
    const std::size_t v = s.dim_v;
    // H-type: H_i -> i, zeta_mu -> h + mu.  V-type: X^mu -> mu, eta^i -> v + i.
    LieBialgebraSpec d = LieBialgebraSpec::zero(h + v, v + h);

    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t k = 0; k < h; ++k) {
            for (std::size_t m = 0; m < h; ++m) {
                d.C(i, k, m) = s.C(i, k, m);
            }
        }
    }
    for (std::size_t mu = 0; mu < v; ++mu) {
        for (std::size_t nu = 0; nu < v; ++nu) {
            for (std::size_t sigma = 0; sigma < v; ++sigma) {
                d.C(h + mu, h + nu, h + sigma) = s.gamma(sigma, nu, mu);
            }
        }
    }
    // [H_i, zeta_mu] = -alpha(mu,i,k) H_k - A(i,nu,mu) zeta_nu
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t mu = 0; mu < v; ++mu) {
            for (std::size_t k = 0; k < h; ++k) {
                d.C(i, h + mu, k) = -s.alpha(mu, i, k);
                d.C(h + mu, i, k) = s.alpha(mu, i, k);
            }
            for (std::size_t nu = 0; nu < v; ++nu) {
                d.C(i, h + mu, h + nu) = -s.A(i, nu, mu);
                d.C(h + mu, i, h + nu) = s.A(i, nu, mu);
            }
        }
    }

    for (std::size_t i = 0; i < h; ++i) {
        // [H_i, X^mu] = A(i,mu,nu) X^nu
        for (std::size_t mu = 0; mu < v; ++mu) {
            for (std::size_t nu = 0; nu < v; ++nu) {
                d.A(i, mu, nu) = s.A(i, mu, nu);
            }
        }
        // [H_i, eta^j] = C(k,i,j) eta^k + alpha(mu,i,j) X^mu
        for (std::size_t j = 0; j < h; ++j) {
            for (std::size_t k = 0; k < h; ++k) {
                d.A(i, v + j, v + k) = s.C(k, i, j);
            }
            for (std::size_t mu = 0; mu < v; ++mu) {
                d.A(i, v + j, mu) = s.alpha(mu, i, j);
            }
        }
    }
    for (std::size_t mu = 0; mu < v; ++mu) {
        // [zeta_mu, eta^i] = -alpha(mu,k,i) eta^k
        for (std::size_t i = 0; i < h; ++i) {
            for (std::size_t k = 0; k < h; ++k) {
                d.A(h + mu, v + i, v + k) = -s.alpha(mu, k, i);
            }
        }
        // [zeta_mu, X^nu] = -gamma(nu,sigma,mu) X^sigma - A(i,nu,mu) eta^i
        for (std::size_t nu = 0; nu < v; ++nu) {
            for (std::size_t sigma = 0; sigma < v; ++sigma) {
                d.A(h + mu, nu, sigma) = -s.gamma(nu, sigma, mu);
            }
            for (std::size_t i = 0; i < h; ++i) {
                d.A(h + mu, nu, v + i) = -s.A(i, nu, mu);
            }
        }
    }

    // Cobracket: delta of L on (X, H), delta of L* on (eta, zeta).
    for (std::size_t mu = 0; mu < v; ++mu) {
        for (std::size_t rho = 0; rho < v; ++rho) {
            for (std::size_t sigma = 0; sigma < v; ++sigma) {
                d.gamma(mu, rho, sigma) = s.gamma(mu, rho, sigma);
            }
        }
    }
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = 0; j < h; ++j) {
            for (std::size_t k = 0; k < h; ++k) {
                d.gamma(v + i, v + j, v + k) = kDualCobracketSign * s.C(j, k, i);
            }
        }
    }
    for (std::size_t rho = 0; rho < v; ++rho) {
        for (std::size_t i = 0; i < h; ++i) {
            for (std::size_t k = 0; k < h; ++k) {
                d.alpha(rho, i, k) = s.alpha(rho, i, k);
            }
        }
    }
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t mu = 0; mu < v; ++mu) {
            for (std::size_t nu = 0; nu < v; ++nu) {
                d.alpha(v + i, h + mu, h + nu) = kDualCobracketSign * s.A(i, nu, mu);
            }
        }
    }

    const auto rep = validate_bialgebra(d);
    if (!rep.pass()) {
        throw InternalFault("classical double failed validation: " + rep.violations.front().axiom);
    }
    return d;
}

namespace {

std::vector<std::vector<Rational>> r_coefficients(const LieBialgebraSpec &s, const ClassicalRMatrix &r)
{
    const std::size_t h = s.dim_h;
    const std::size_t v = s.dim_v;
    if (r.P.size() != h || r.Q.size() != v) {
        throw StructuralError("r-matrix shape does not match the bialgebra");
    }
    for (const auto &row : r.P) {
        if (row.size() != v) {
            throw StructuralError("r-matrix P block has the wrong width");
        }
    }
    for (const auto &row : r.Q) {
        if (row.size() != h) {
            throw StructuralError("r-matrix Q block has the wrong width");
        }
    }
    std::vector<std::vector<Rational>> m(h + v, std::vector<Rational>(h + v));
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t mu = 0; mu < v; ++mu) {
            m[i][h + mu] = r.P[i][mu];
            m[h + mu][i] = r.Q[mu][i];
        }
    }
    return m;
}

} // namespace

ValidationReport check_cybe(const LieBialgebraSpec &s, const ClassicalRMatrix &r)
{
    s.check_shapes();
    const auto R = r_coefficients(s, r);
    const Tensor3 f = bracket_constants(s);
    const std::size_t n = s.dim_h + s.dim_v;
    // residual[p][q][t] of [r12,r13] + [r12,r23] + [r13,r23]
    std::vector<Rational> res(n * n * n);
    const auto at = [&](std::size_t p, std::size_t q, std::size_t t) -> Rational & { return res[(p * n + q) * n + t]; };
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (sgn(R[a][b]) == 0) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                for (std::size_t d = 0; d < n; ++d) {
                    if (sgn(R[c][d]) == 0) {
                        continue;
                    }
                    const Rational w = R[a][b] * R[c][d];
                    for (std::size_t e = 0; e < n; ++e) {
                        if (sgn(f(a, c, e)) != 0) {
                            at(e, b, d) += w * f(a, c, e); // [r12, r13]
                        }
                        if (sgn(f(b, c, e)) != 0) {
                            at(a, e, d) += w * f(b, c, e); // [r12, r23]
                        }
                        if (sgn(f(b, d, e)) != 0) {
                            at(a, c, e) += w * f(b, d, e); // [r13, r23]
                        }
                    }
                }
            }
        }
    }
    ValidationReport rep;
    rep.add_check("CYBE");
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t t = 0; t < n; ++t) {
                if (sgn(at(p, q, t)) != 0) {
                    rep.add("CYBE", {int(p), int(q), int(t)}, to_string(at(p, q, t)));
                }
            }
        }
    }
    return rep;
}

std::vector<std::vector<Rational>> row_echelon_basis(std::vector<std::vector<Rational>> rows)
{
    if (rows.empty()) {
        return {};
    }
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && sgn(rows[piv][col]) == 0) {
            ++piv;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[piv]);
        const Rational inv = 1 / rows[rank][col];
        for (auto &x : rows[rank]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || sgn(rows[r][col]) == 0) {
                continue;
            }
            const Rational factor = rows[r][col];
            for (std::size_t c = 0; c < ncols; ++c) {
                rows[r][c] -= factor * rows[rank][c];
            }
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

RImages r_images(const LieBialgebraSpec &s, const ClassicalRMatrix &r)
{
    const auto R = r_coefficients(s, r);
    const std::size_t n = R.size();
    std::vector<std::vector<Rational>> transposed(n, std::vector<Rational>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            transposed[b][a] = R[a][b];
        }
    }
    // r as a map L* -> L is xi |-> (id (x) xi) r, whose image is spanned by the
    // columns of R; the rows span the second-leg image.
    return {row_echelon_basis(transposed), row_echelon_basis(R)};
}

ValidationReport check_classical_morphism(const LieBialgebraSpec &src, const LieBialgebraSpec &dst,
                                          const MorphismSpec &phi)
{
    src.check_shapes();
    dst.check_shapes();
    const std::size_t h = src.dim_h, v = src.dim_v;
    const std::size_t h2 = dst.dim_h, v2 = dst.dim_v;
    const std::size_t n = h + v, n2 = h2 + v2;
    if (phi.phi_H.size() != h2 || phi.phi_V.size() != v2) {
        throw StructuralError("morphism block heights do not match the target");
    }
    for (const auto &row : phi.phi_H) {
        if (row.size() != h) {
            throw StructuralError("morphism phi_H has the wrong width");
        }
    }
    for (const auto &row : phi.phi_V) {
        if (row.size() != v) {
            throw StructuralError("morphism phi_V has the wrong width");
        }
    }
    std::vector<std::vector<Rational>> M(n2, std::vector<Rational>(n));
    for (std::size_t a = 0; a < h2; ++a) {
        for (std::size_t b = 0; b < h; ++b) {
            M[a][b] = phi.phi_H[a][b];
        }
    }
    for (std::size_t a = 0; a < v2; ++a) {
        for (std::size_t b = 0; b < v; ++b) {
            M[h2 + a][h + b] = phi.phi_V[a][b];
        }
    }
    const Tensor3 f = bracket_constants(src), f2 = bracket_constants(dst);
    const Tensor3 g = cobracket_constants(src), g2 = cobracket_constants(dst);
    ValidationReport rep;
    rep.add_check("bracket-C");
    rep.add_check("bracket-A");
    rep.add_check("cobracket-gamma");
    rep.add_check("cobracket-alpha");

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const char *label = (b < h) ? "bracket-C" : "bracket-A";
            for (std::size_t c2 = 0; c2 < n2; ++c2) {
                Rational r = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    r += f(a, b, c) * M[c2][c];
                }
                for (std::size_t a2 = 0; a2 < n2; ++a2) {
                    if (sgn(M[a2][a]) == 0) {
                        continue;
                    }
                    for (std::size_t b2 = 0; b2 < n2; ++b2) {
                        r -= M[a2][a] * M[b2][b] * f2(a2, b2, c2);
                    }
                }
                if (sgn(r) != 0) {
                    rep.add(label, {int(a), int(b), int(c2)}, to_string(r));
                }
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        const char *label = a < h ? "cobracket-alpha" : "cobracket-gamma";
        for (std::size_t c2 = 0; c2 < n2; ++c2) {
            for (std::size_t d2 = 0; d2 < n2; ++d2) {
                Rational r = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    for (std::size_t d = 0; d < n; ++d) {
                        r += g(a, c, d) * M[c2][c] * M[d2][d];
                    }
                }
                for (std::size_t a2 = 0; a2 < n2; ++a2) {
                    r -= M[a2][a] * g2(a2, c2, d2);
                }
                if (sgn(r) != 0) {
                    rep.add(label, {int(a), int(c2), int(d2)}, to_string(r));
                }
            }
        }
    }
    return rep;
}

} // namespace qlie
