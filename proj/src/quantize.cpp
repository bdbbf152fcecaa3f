#include "qlie/quantize.hpp"

#include "qlie/errors.hpp"

namespace qlie {

namespace {

PBWElement exp_element(const PBWElement &y, int order)
{
    PBWElement out = PBWElement::one(y.algebra());
    PBWElement power = out;
    for (int n = 1; n <= order; ++n) {
        power = power * y;
        power *= Rational(1, n);
        if (power.is_zero())
            break;
        out += power;
    }
    return out;
}

// log(1 + w) for w with no constant term.
PBWElement log1p_element(const PBWElement &w, int order)
{
    PBWElement out(w.algebra());
    PBWElement power = PBWElement::one(w.algebra());
    for (int n = 1; n <= order; ++n) {
        power = power * w;
        if (power.is_zero())
            break;
        out += power * Rational(n % 2 ? 1 : -1, n);
    }
    return out;
}

} // namespace

std::vector<XPoly> bch(const Tensor3 &gamma, std::size_t dim_v, int order)
{
    if (gamma.dims() != std::array<std::size_t, 3>{dim_v, dim_v, dim_v})
        throw StructuralError("gamma has the wrong shape");
    const std::size_t nv = 2 * dim_v;
    std::vector<XPoly> D(dim_v, XPoly(nv, order));
    if (dim_v == 0)
        return D;

    // U(V*): [e_rho, e_sigma] = gamma(tau, rho, sigma) e_tau, with 2*dim_v
    // central parameters.
    Tensor3 C(dim_v, dim_v, dim_v);
    for (std::size_t r = 0; r < dim_v; ++r)
        for (std::size_t s = 0; s < dim_v; ++s)
            for (std::size_t t = 0; t < dim_v; ++t)
                C(r, s, t) = gamma(t, r, s);
    std::vector<std::vector<XPoly>> comm(dim_v, std::vector<XPoly>(nv, XPoly(nv, order)));
    GeneratorNames names;
    for (std::size_t v = 0; v < dim_v; ++v) {
        names.h.push_back("e" + std::to_string(v));
        names.x.push_back("a" + std::to_string(v));
    }
    for (std::size_t v = 0; v < dim_v; ++v)
        names.x.push_back("b" + std::to_string(v));
    auto alg = std::make_shared<const PBWAlgebra>(dim_v, nv, order, C, comm, names);

    PBWElement y1(alg), y2(alg);
    for (std::size_t r = 0; r < dim_v; ++r) {
        Exponents e1(nv, 0), e2(nv, 0);
        e1[r] = 1;
        e2[dim_v + r] = 1;
        y1.add_term(Monomial{e1, {static_cast<int>(r)}}, 1);
        y2.add_term(Monomial{e2, {static_cast<int>(r)}}, 1);
    }
    PBWElement z = exp_element(y1, order) * exp_element(y2, order);
    PBWElement w = z - PBWElement::one(alg);
    PBWElement l = log1p_element(w, order);

    for (auto &[m, c] : l.terms()) {
        if (m.h.size() != 1)
            throw InternalFault("BCH logarithm is not primitive: term " + to_string(c) + " * " +
                                alg->monomial_string(m));
        D[static_cast<std::size_t>(m.h[0])].add_term(m.x, c);
    }
    return D;
}

PolyMatrix alpha_matrix(const LieBialgebraSpec &spec, int order)
{
    const std::size_t h = spec.dim_h, v = spec.dim_v;
    PolyMatrix m(h, h, v, order);
    for (std::size_t k = 0; k < h; ++k)
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t r = 0; r < v; ++r)
                if (spec.alpha(r, i, k) != 0)
                    m(k, i) += XPoly::variable(v, order, r, spec.alpha(r, i, k));
    return m;
}

std::vector<std::vector<XPoly>> eval_structure_series(const LieBialgebraSpec &spec, int order)
{
    spec.check_shapes();
    const std::size_t h = spec.dim_h, v = spec.dim_v;
    std::vector<std::vector<XPoly>> out(h, std::vector<XPoly>(v, XPoly(v, order)));
    if (h == 0 || v == 0)
        return out;

    // Pair space H (x) V, index (i, mu) -> i*v + mu.
    const std::size_t n = h * v;
    auto idx = [v](std::size_t i, std::size_t mu) { return i * v + mu; };
    PolyMatrix alpha_op(n, n, v, order), gamma_op(n, n, v, order);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t k = 0; k < h; ++k)
            for (std::size_t r = 0; r < v; ++r) {
                const Rational &a = spec.alpha(r, i, k);
                if (a == 0)
                    continue;
                for (std::size_t mu = 0; mu < v; ++mu)
                    alpha_op(idx(i, mu), idx(k, mu)) += XPoly::variable(v, order, r, a);
            }
    for (std::size_t mu = 0; mu < v; ++mu)
        for (std::size_t nu = 0; nu < v; ++nu)
            for (std::size_t s = 0; s < v; ++s) {
                const Rational &g = spec.gamma(mu, s, nu);
                if (g == 0)
                    continue;
                for (std::size_t i = 0; i < h; ++i)
                    gamma_op(idx(i, mu), idx(i, nu)) += XPoly::variable(v, order, s, g);
            }
    if (!(alpha_op * gamma_op == gamma_op * alpha_op))
        throw InternalFault("alpha and gamma operators on H (x) V do not commute");

    PolyMatrix m = matrix_series_apply(t_over_expm1_series(order), gamma_op) *
                   matrix_series_apply(expm1_over_t_series(order), alpha_op + gamma_op);

    // Classical commutators B_k^nu = A(k, nu, rho) X^rho.
    std::vector<std::vector<XPoly>> B(h, std::vector<XPoly>(v, XPoly(v, order)));
    for (std::size_t k = 0; k < h; ++k)
        for (std::size_t nu = 0; nu < v; ++nu)
            for (std::size_t r = 0; r < v; ++r)
                if (spec.A(k, nu, r) != 0)
                    B[k][nu] += XPoly::variable(v, order, r, spec.A(k, nu, r));

    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t mu = 0; mu < v; ++mu)
            for (std::size_t k = 0; k < h; ++k)
                for (std::size_t nu = 0; nu < v; ++nu) {
                    const XPoly &coef = m(idx(i, mu), idx(k, nu));
                    if (!coef.is_zero() && !B[k][nu].is_zero())
                        out[i][mu] += coef * B[k][nu];
                }
    return out;
}

QuantizedPtr build_algebra_unchecked(const LieBialgebraSpec &spec, int order, GeneratorNames names,
                                     const std::vector<std::vector<XPoly>> *commutators)
{
    spec.check_shapes();
    if (order < 0)
        throw StructuralError("truncation order must be non-negative");
    auto q = std::make_shared<QuantizedAlgebra>();
    q->spec = spec;
    q->order = order;
    q->D = bch(spec.gamma, spec.dim_v, order);
    q->A_series = eval_structure_series(spec, order);
    PolyMatrix am = alpha_matrix(spec, order);
    q->a_plus = matrix_series_apply(exp_series(order), am);
    q->a_minus = matrix_series_apply(exp_series(order), -am);
    q->kernel = std::make_shared<const PBWAlgebra>(spec.dim_h, spec.dim_v, order, spec.C,
                                                   commutators ? *commutators : q->A_series, std::move(names));
    return q;
}

QuantizedPtr build_algebra(const LieBialgebraSpec &spec, int order, GeneratorNames names)
{
    require_valid(spec);
    return build_algebra_unchecked(spec, order, std::move(names));
}

QuantizedPtr build_algebra(const LieBialgebraSpec &spec, int order)
{
    return build_algebra(spec, order, GeneratorNames::standard(spec.dim_h, spec.dim_v));
}

PBWElement normal_order(const QuantizedAlgebra &alg, std::span<const Generator> word)
{
    return normal_order(alg.kernel, word);
}

std::vector<std::string> QuantizedAlgebra::relation_lines() const
{
    const auto &nm = kernel->names();
    // A lone H generator is written without its index.
    auto hname = [&](std::size_t i) { return nm.h.size() == 1 && nm.h[0] == "H0" ? std::string("H") : nm.h[i]; };
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim_h(); ++i)
        for (std::size_t j = i + 1; j < dim_h(); ++j) {
            XPoly lin(dim_h(), 1);
            for (std::size_t m = 0; m < dim_h(); ++m)
                if (spec.C(i, j, m) != 0)
                    lin += XPoly::variable(dim_h(), 1, m, spec.C(i, j, m));
            if (!lin.is_zero())
                out.push_back("[" + hname(i) + ", " + hname(j) + "] = " + lin.to_string(hname));
        }
    for (std::size_t i = 0; i < dim_h(); ++i)
        for (std::size_t mu = 0; mu < dim_v(); ++mu) {
            const XPoly &a = kernel->commutator(i, mu);
            if (!a.is_zero())
                out.push_back("[" + hname(i) + ", " + nm.x[mu] + "] = " +
                              a.to_string([&](std::size_t v) { return nm.x[v]; }));
        }
    return out;
}

} // namespace qlie
