#include "qlie/duality.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "qlie/errors.hpp"

namespace qlie {

namespace {

std::string join_lines(const std::vector<std::string> &lines)
{
    std::string s;
    for (std::size_t k = 0; k < lines.size(); ++k)
        s += (k ? "\n" : "") + lines[k];
    return s;
}

Monomial unit_of(const PBWAlgebra &alg)
{
    return Monomial{Exponents(alg.dim_v(), 0), {}};
}

// Exponential of a nilpotent (under truncation) tensor element.
TensorElement tensor_exp(const TensorElement &y)
{
    TensorElement out = TensorElement::one(y.legs());
    TensorElement power = out;
    for (int n = 1; n <= y.order() + 1; ++n) {
        power = power * y;
        power *= Rational(1, n);
        if (power.is_zero())
            break;
        out += power;
    }
    return out;
}

// Exact inverse over Q; empty result if singular.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a)
{
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            return {};
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                if (a[col][j] != 0)
                    a[r][j] -= f * a[col][j];
                if (inv[col][j] != 0)
                    inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

TensorElement restrict_box(const TensorElement &t, const std::set<Monomial> &left, const std::set<Monomial> &right,
                           int order)
{
    TensorElement out(t.legs());
    for (auto &[k, c] : t.terms())
        if (left.count(k[0]) && right.count(k[1]) && k[0].x_degree() + k[1].x_degree() <= order)
            out.add_term(k, c);
    return out;
}

} // namespace

// ---------------------------------------------------------------- pairing

PairingContext::PairingContext(const LieBialgebraSpec &spec, int order, Rational zeta_scale)
    : primal(build_algebra(spec, order)),
      dual(build_algebra(dualize(spec), order, GeneratorNames::standard(spec.dim_v, spec.dim_h, "e", "z"))),
      zeta_scale_(std::move(zeta_scale)), cache_(std::make_shared<Cache>())
{
}

const std::vector<Rational> &PairingContext::linear_part(const HWord &w) const
{
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->linear.find(w);
        if (it != cache_->linear.end())
            return it->second;
    }
    const std::size_t h = primal.alg->dim_h();
    std::vector<Rational> lin(h);
    if (w.size() == 1) {
        lin[static_cast<std::size_t>(w[0])] = 1;
    } else if (w.size() > 1) {
        // sorted(w) - sym(w) only has shorter words.
        std::map<HWord, Rational> rest;
        rest[w] = 1;
        HWord p = w;
        std::sort(p.begin(), p.end());
        std::vector<HWord> perms;
        do
            perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        Rational weight(1, static_cast<long>(perms.size()));
        for (auto &perm : perms)
            for (auto &[u, c] : primal.alg->order_h_word(perm))
                rest[u] -= weight * c;
        for (auto &[u, c] : rest) {
            if (c == 0)
                continue;
            if (u.size() >= w.size())
                throw InternalFault("symmetrisation left a leading term");
            const auto &l = linear_part(u);
            for (std::size_t i = 0; i < h; ++i)
                lin[i] += c * l[i];
        }
    }
    std::lock_guard lock(cache_->mutex);
    return cache_->linear.try_emplace(w, std::move(lin)).first->second;
}

Rational PairingContext::base(const Generator &g, const Monomial &u) const
{
    if (g.kind == Generator::Kind::H) { // z_mu
        if (!u.h.empty() || u.x_degree() != 1 || u.x[g.index] != 1)
            return 0;
        return zeta_scale_;
    }
    if (u.x_degree() != 0) // e^i
        return 0;
    return linear_part(u.h)[g.index];
}

Rational PairingContext::pair_monomials(const Monomial &f, const Monomial &u) const
{
    if (f.is_unit())
        return u.is_unit() ? 1 : 0;
    auto key = std::make_pair(f, u);
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->pairs.find(key);
        if (it != cache_->pairs.end())
            return it->second;
    }
    // f = g * rest
    Monomial rest = f;
    Generator g{Generator::Kind::X, 0};
    auto first_x = std::find_if(rest.x.begin(), rest.x.end(), [](int e) { return e > 0; });
    if (first_x != rest.x.end()) {
        g = {Generator::Kind::X, static_cast<std::size_t>(first_x - rest.x.begin())};
        --*first_x;
    } else {
        g = {Generator::Kind::H, static_cast<std::size_t>(rest.h.front())};
        rest.h.erase(rest.h.begin());
    }
    Rational r = 0;
    if (rest.is_unit()) {
        r = base(g, u);
    } else {
        for (auto &[k, c] : primal.coproduct_of(u).terms()) {
            Rational b = base(g, k[0]);
            if (b != 0)
                r += c * b * pair_monomials(rest, k[1]);
        }
    }
    std::lock_guard lock(cache_->mutex);
    cache_->pairs.emplace(std::move(key), r);
    return r;
}

Rational pair(const PairingContext &pc, const PBWElement &f, const PBWElement &u)
{
    if (f.algebra() != pc.dual.alg || u.algebra() != pc.primal.alg)
        throw StructuralError("pairing arguments belong to the wrong algebras");
    Rational r = 0;
    for (auto &[mf, cf] : f.terms())
        for (auto &[mu, cu] : u.terms())
            r += cf * cu * pc.pair_monomials(mf, mu);
    return r;
}

TensorElement canonical_element(const PairingContext &pc)
{
    const auto &da = *pc.dual.alg, &pa = *pc.primal.alg;
    std::vector<TensorLeg> legs{pc.dual_leg(), pc.primal_leg()};
    TensorElement y1(legs), y2(legs);
    for (std::size_t mu = 0; mu < pa.dim_v(); ++mu) {
        Monomial z = unit_of(da), x = unit_of(pa);
        z.h.push_back(static_cast<int>(mu));
        x.x[mu] = 1;
        y1.add_term({z, x}, 1);
    }
    for (std::size_t i = 0; i < pa.dim_h(); ++i) {
        Monomial e = unit_of(da), hm = unit_of(pa);
        e.x[i] = 1;
        hm.h.push_back(static_cast<int>(i));
        y2.add_term({e, hm}, 1);
    }
    return tensor_exp(y1) * tensor_exp(y2);
}

ValidationReport verify_canonical(const PairingContext &pc, int degree_cap)
{
    ValidationReport rep;
    const int N = pc.order();
    const TensorElement T = canonical_element(pc);

    rep.add_check("canonical-gram");
    rep.add_check("canonical-nondegenerate");
    auto F = pbw_basis(*pc.dual.alg, degree_cap, degree_cap);
    auto U = pbw_basis(*pc.primal.alg, degree_cap, degree_cap);
    if (F.size() != U.size()) {
        rep.add("canonical-nondegenerate", {static_cast<int>(F.size()), static_cast<int>(U.size())},
                "Gram matrix is not square");
    } else {
        std::vector<std::vector<Rational>> G(F.size(), std::vector<Rational>(U.size()));
        for (std::size_t a = 0; a < F.size(); ++a)
            for (std::size_t b = 0; b < U.size(); ++b)
                G[a][b] = pc.pair_monomials(F[a], U[b]);
        auto M = invert(G); // M[u][f]
        if (M.empty()) {
            rep.add("canonical-nondegenerate", {static_cast<int>(F.size())}, "Gram matrix is singular");
        } else {
            TensorElement gram(T.legs());
            for (std::size_t b = 0; b < U.size(); ++b)
                for (std::size_t a = 0; a < F.size(); ++a)
                    if (M[b][a] != 0)
                        gram.add_term({F[a], U[b]}, M[b][a]);
            std::set<Monomial> fs(F.begin(), F.end()), us(U.begin(), U.end());
            TensorElement diff = restrict_box(gram, fs, us, N) - restrict_box(T, fs, us, N);
            if (!diff.is_zero())
                rep.add("canonical-gram", {degree_cap}, join_lines(diff.lines()));
        }
    }

    // (Delta (x) id) T = T13 T23 with the dual's own coproduct.
    rep.add_check("canonical-coproduct-left");
    {
        std::vector<TensorLeg> legs{pc.dual_leg(), pc.dual_leg(), pc.primal_leg()};
        const std::size_t p13[] = {0, 2}, p23[] = {1, 2};
        TensorElement lhs = coproduct_on_leg(pc.dual, T, 0);
        TensorElement rhs = embed(T, legs, p13) * embed(T, legs, p23);
        TensorElement diff = lhs - rhs;
        if (!diff.is_zero())
            rep.add("canonical-coproduct-left", {}, join_lines(diff.lines()));
    }
    // (id (x) Delta) T = T13 T12, first leg multiplying oppositely.
    rep.add_check("canonical-coproduct-right");
    {
        std::vector<TensorLeg> legs{pc.dual_leg(), pc.primal_leg(), pc.primal_leg()};
        const std::size_t p12[] = {0, 1}, p13[] = {0, 2};
        TensorElement lhs = coproduct_on_leg(pc.primal, T, 1);
        TensorElement rhs = embed(T, legs, p13) * embed(T, legs, p12);
        TensorElement diff = lhs - rhs;
        if (!diff.is_zero())
            rep.add("canonical-coproduct-right", {}, join_lines(diff.lines()));
    }
    return rep;
}

ValidationReport check_pairing_factorization(const PairingContext &pc, int degree_cap)
{
    ValidationReport rep;
    rep.add_check("pairing-factorization");
    const auto &da = pc.dual.alg, &pa = pc.primal.alg;
    auto F = pbw_basis(*da, degree_cap, degree_cap);
    auto U = pbw_basis(*pa, degree_cap, degree_cap);
    for (auto &f : F) {
        Monomial zeta_part{Exponents(da->dim_v(), 0), f.h}, eta_part{f.x, {}};
        // z-word * e-word in the opposite algebra, i.e. e-word z-word.
        PBWElement fe = PBWElement::monomial(da, eta_part) * PBWElement::monomial(da, zeta_part);
        for (auto &u : U) {
            Monomial x_part{u.x, {}}, h_part{Exponents(pa->dim_v(), 0), u.h};
            Rational lhs = pair(pc, fe, PBWElement::monomial(pa, u));
            Rational rhs = pc.pair_monomials(eta_part, h_part) * pc.pair_monomials(zeta_part, x_part);
            if (lhs != rhs)
                rep.add("pairing-factorization", {},
                        "<" + da->monomial_string(zeta_part) + " * " + da->monomial_string(eta_part) + ", " +
                            pa->monomial_string(u) + "> = " + to_string(lhs) + ", expected " + to_string(rhs));
        }
    }
    return rep;
}

ValidationReport check_pairing_laws(const PairingContext &pc, int degree_cap, int samples, unsigned seed)
{
    if (degree_cap > pc.order())
        throw StructuralError("pairing-law degree cap exceeds the truncation order");
    ValidationReport rep;
    rep.add_check("pairing-product");
    rep.add_check("pairing-coproduct");
    const auto &da = pc.dual.alg, &pa = pc.primal.alg;
    std::mt19937 rng(seed);
    auto pick = [&](const AlgebraPtr &alg, int max_degree) {
        std::vector<Monomial> basis;
        for (auto &m : pbw_basis(*alg, max_degree, max_degree))
            if (m.x_degree() + m.h_degree() <= max_degree)
                basis.push_back(m);
        std::uniform_int_distribution<std::size_t> which(0, basis.size() - 1);
        std::uniform_int_distribution<int> coef(-3, 3);
        PBWElement e(alg);
        for (int t = 0; t < 3; ++t)
            e.add_term(basis[which(rng)], coef(rng));
        return e;
    };
    auto pair2 = [&](const TensorElement &left, const TensorElement &right) {
        Rational r = 0;
        for (auto &[kl, cl] : left.terms())
            for (auto &[kr, cr] : right.terms())
                r += cl * cr * pc.pair_monomials(kl[0], kr[0]) * pc.pair_monomials(kl[1], kr[1]);
        return r;
    };
    for (int s = 0; s < samples; ++s) {
        // Products stay within degree_cap so truncation never enters.
        std::uniform_int_distribution<int> split(0, degree_cap);
        const int d1 = split(rng), d2 = split(rng);
        PBWElement f = pick(da, d1), g = pick(da, degree_cap - d1), u = pick(pa, d2), v = pick(pa, degree_cap - d2);
        PBWElement fs[] = {f, g}, us[] = {u, v};
        Rational lhs = pair(pc, f * g, u);
        Rational rhs = pair2(TensorElement::pure(fs), coproduct(pc.primal, u));
        if (lhs != rhs)
            rep.add("pairing-product", {s}, "<fg,u> = " + to_string(lhs) + ", <f(x)g, Delta u> = " + to_string(rhs));
        lhs = pair(pc, f, u * v);
        rhs = pair2(coproduct(pc.dual, f), TensorElement::pure(us));
        if (lhs != rhs)
            rep.add("pairing-coproduct", {s},
                    "<f,uv> = " + to_string(lhs) + ", <Delta f, u(x)v> = " + to_string(rhs));
    }
    return rep;
}

// ---------------------------------------------------------------- double

GeneratorNames double_names(std::size_t dim_h, std::size_t dim_v)
{
    GeneratorNames n;
    for (std::size_t i = 0; i < dim_h; ++i)
        n.h.push_back("H" + std::to_string(i));
    for (std::size_t mu = 0; mu < dim_v; ++mu)
        n.h.push_back("z" + std::to_string(mu));
    for (std::size_t mu = 0; mu < dim_v; ++mu)
        n.x.push_back("X" + std::to_string(mu));
    for (std::size_t i = 0; i < dim_h; ++i)
        n.x.push_back("e" + std::to_string(i));
    return n;
}

HopfContext quantum_double(const LieBialgebraSpec &spec, int order)
{
    return HopfContext(build_algebra(classical_double(spec), order, double_names(spec.dim_h, spec.dim_v)));
}

ValidationReport verify_double_cross_relations(const LieBialgebraSpec &spec, int order,
                                               const LieBialgebraSpec *double_spec)
{
    require_valid(spec);
    const std::size_t h = spec.dim_h, v = spec.dim_v;
    QuantizedPtr q = double_spec
                         ? build_algebra_unchecked(*double_spec, order, double_names(h, v))
                         : build_algebra(classical_double(spec), order, double_names(h, v));
    const AlgebraPtr &alg = q->kernel;
    auto H = [&](std::size_t i) { return PBWElement::h(alg, i); };
    auto Z = [&](std::size_t mu) { return PBWElement::h(alg, h + mu); };
    auto X = [&](std::size_t mu) { return PBWElement::x(alg, mu); };
    auto E = [&](std::size_t i) { return PBWElement::x(alg, v + i); };
    ValidationReport rep;

    // [H_i, z_mu] = -alpha(mu,i,k) H_k - A(i,nu,mu) z_nu, no X corrections.
    rep.add_check("cross-H-z");
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t mu = 0; mu < v; ++mu) {
            PBWElement expected(alg);
            for (std::size_t k = 0; k < h; ++k)
                if (spec.alpha(mu, i, k) != 0)
                    expected -= H(k) * spec.alpha(mu, i, k);
            for (std::size_t nu = 0; nu < v; ++nu)
                if (spec.A(i, nu, mu) != 0)
                    expected -= Z(nu) * spec.A(i, nu, mu);
            PBWElement diff = commutator(H(i), Z(mu)) - expected;
            if (!diff.is_zero())
                rep.add("cross-H-z", {static_cast<int>(i), static_cast<int>(mu)}, join_lines(diff.lines()));
        }

    rep.add_check("cross-X-e");
    for (std::size_t mu = 0; mu < v; ++mu)
        for (std::size_t i = 0; i < h; ++i) {
            PBWElement c = commutator(X(mu), E(i));
            if (!c.is_zero())
                rep.add("cross-X-e", {static_cast<int>(mu), static_cast<int>(i)}, join_lines(c.lines()));
        }

    // Linear parts of [H_i, e^j] and [z_mu, X^nu] against the classical double.
    auto linear_part = [&](const PBWElement &e) {
        PBWElement out(alg);
        for (auto &[m, c] : e.terms())
            if (m.h.empty() && m.x_degree() == 1)
                out.add_term(m, c);
        return out;
    };
    rep.add_check("cross-H-e");
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            PBWElement expected(alg);
            for (std::size_t k = 0; k < h; ++k)
                if (spec.C(k, i, j) != 0)
                    expected += E(k) * spec.C(k, i, j);
            for (std::size_t mu = 0; mu < v; ++mu)
                if (spec.alpha(mu, i, j) != 0)
                    expected += X(mu) * spec.alpha(mu, i, j);
            PBWElement diff = linear_part(commutator(H(i), E(j))) - expected;
            if (!diff.is_zero())
                rep.add("cross-H-e", {static_cast<int>(i), static_cast<int>(j)}, join_lines(diff.lines()));
        }
    rep.add_check("cross-z-X");
    for (std::size_t mu = 0; mu < v; ++mu)
        for (std::size_t nu = 0; nu < v; ++nu) {
            PBWElement expected(alg);
            for (std::size_t s = 0; s < v; ++s)
                if (spec.gamma(nu, s, mu) != 0)
                    expected -= X(s) * spec.gamma(nu, s, mu);
            for (std::size_t i = 0; i < h; ++i)
                if (spec.A(i, nu, mu) != 0)
                    expected -= E(i) * spec.A(i, nu, mu);
            PBWElement diff = linear_part(commutator(Z(mu), X(nu))) - expected;
            if (!diff.is_zero())
                rep.add("cross-z-X", {static_cast<int>(mu), static_cast<int>(nu)}, join_lines(diff.lines()));
        }

    // X, e span a commutative subalgebra stable under ad H, ad z.
    rep.add_check("cross-invariance");
    for (auto &m : pbw_basis(*alg, std::min(order, 2), 0)) {
        PBWElement me = PBWElement::monomial(alg, m);
        for (std::size_t a = 0; a < h + v; ++a) {
            PBWElement c = commutator(PBWElement::h(alg, a), me);
            for (auto &[cm, cc] : c.terms())
                if (!cm.h.empty()) {
                    rep.add("cross-invariance", {static_cast<int>(a)},
                            "[" + alg->names().h[a] + ", " + alg->monomial_string(m) + "] leaves the X,e span");
                    break;
                }
        }
    }
    return rep;
}

ClassicalRMatrix double_canonical_r(const LieBialgebraSpec &spec)
{
    const std::size_t h = spec.dim_h, v = spec.dim_v;
    auto r = ClassicalRMatrix::zero(h + v, v + h);
    for (std::size_t mu = 0; mu < v; ++mu)
        r.P[h + mu][mu] = 1;
    for (std::size_t i = 0; i < h; ++i)
        r.Q[v + i][i] = 1;
    return r;
}

// ---------------------------------------------------------------- R-matrix

TensorElement build_r_matrix_unchecked(const HopfContext &ctx, const ClassicalRMatrix &r)
{
    const auto &alg = *ctx.alg;
    const std::size_t h = alg.dim_h(), v = alg.dim_v();
    if (r.P.size() != h || r.Q.size() != v)
        throw StructuralError("r-matrix has the wrong shape");
    TensorElement y1(ctx.legs(2)), y2(ctx.legs(2));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t mu = 0; mu < v; ++mu) {
            if (r.P[i].size() != v || r.Q[mu].size() != h)
                throw StructuralError("r-matrix has the wrong shape");
            Monomial hm = unit_of(alg), xm = unit_of(alg);
            hm.h.push_back(static_cast<int>(i));
            xm.x[mu] = 1;
            if (r.P[i][mu] != 0)
                y1.add_term({hm, xm}, r.P[i][mu]);
            if (r.Q[mu][i] != 0)
                y2.add_term({xm, hm}, r.Q[mu][i]);
        }
    return tensor_exp(y1) * tensor_exp(y2);
}

TensorElement build_r_matrix(const HopfContext &ctx, const ClassicalRMatrix &r)
{
    ValidationReport cybe = check_cybe(ctx.q->spec, r);
    if (!cybe.pass()) {
        std::string msg = "classical Yang-Baxter equation fails";
        for (auto &vi : cybe.violations)
            msg += "\n  " + vi.axiom + " residual " + vi.residual;
        throw ValidationError(msg);
    }
    return build_r_matrix_unchecked(ctx, r);
}

ValidationReport check_qybe(const HopfContext &ctx, const TensorElement &R)
{
    if (R.arity() != 2)
        throw StructuralError("R must have two legs");
    ValidationReport rep;
    rep.add_check("QYBE");
    auto legs = ctx.legs(3);
    const std::size_t p12[] = {0, 1}, p13[] = {0, 2}, p23[] = {1, 2};
    TensorElement R12 = embed(R, legs, p12), R13 = embed(R, legs, p13), R23 = embed(R, legs, p23);
    TensorElement diff = R12 * R13 * R23 - R23 * R13 * R12;
    if (!diff.is_zero())
        rep.add("QYBE", {}, join_lines(diff.lines()));
    return rep;
}

ValidationReport check_quasitriangular(const HopfContext &ctx, const TensorElement &R)
{
    if (R.arity() != 2)
        throw StructuralError("R must have two legs");
    ValidationReport rep;
    auto legs = ctx.legs(3);
    const std::size_t p12[] = {0, 1}, p13[] = {0, 2}, p23[] = {1, 2};
    TensorElement R12 = embed(R, legs, p12), R13 = embed(R, legs, p13), R23 = embed(R, legs, p23);

    rep.add_check("R-coproduct-left");
    TensorElement d1 = coproduct_on_leg(ctx, R, 0) - R13 * R23;
    if (!d1.is_zero())
        rep.add("R-coproduct-left", {}, join_lines(d1.lines()));
    rep.add_check("R-coproduct-right");
    TensorElement d2 = coproduct_on_leg(ctx, R, 1) - R13 * R12;
    if (!d2.is_zero())
        rep.add("R-coproduct-right", {}, join_lines(d2.lines()));

    rep.add_check("R-intertwines");
    const auto &alg = *ctx.alg;
    for (std::size_t a = 0; a < alg.dim_h() + alg.dim_v(); ++a) {
        const bool is_h = a < alg.dim_h();
        const TensorElement &d = is_h ? ctx.delta_h[a] : ctx.delta_x[a - alg.dim_h()];
        TensorElement diff = R * d - flip(d) * R;
        if (!diff.is_zero())
            rep.add("R-intertwines", {static_cast<int>(a)},
                    (is_h ? alg.names().h[a] : alg.names().x[a - alg.dim_h()]) + ":\n" + join_lines(diff.lines()));
    }
    return rep;
}

ValidationReport compare_double_r_with_t(const LieBialgebraSpec &spec, int order)
{
    const std::size_t h = spec.dim_h, v = spec.dim_v;
    PairingContext pc(spec, order);
    HopfContext dbl = quantum_double(spec, order);
    const AlgebraPtr &D = dbl.alg;
    TensorElement T = canonical_element(pc);

    // Dual monomial e^a z_w -> reversed product of the images in the double.
    auto dual_image = [&](const Monomial &f) {
        std::vector<PBWElement> letters;
        for (std::size_t i = 0; i < f.x.size(); ++i)
            for (int n = 0; n < f.x[i]; ++n)
                letters.push_back(PBWElement::x(D, v + i));
        for (int mu : f.h)
            letters.push_back(PBWElement::h(D, h + static_cast<std::size_t>(mu)));
        PBWElement out = PBWElement::one(D);
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            out = out * *it;
        return out;
    };
    auto primal_image = [&](const Monomial &u) {
        Exponents x(v + h, 0);
        std::copy(u.x.begin(), u.x.end(), x.begin());
        return Monomial{x, u.h};
    };
    TensorElement image(dbl.legs(2));
    for (auto &[k, c] : T.terms()) {
        PBWElement a = dual_image(k[0]);
        Monomial b = primal_image(k[1]);
        for (auto &[ma, ca] : a.terms())
            image.add_term({ma, b}, c * ca);
    }
    TensorElement R = build_r_matrix(dbl, double_canonical_r(spec));
    ValidationReport rep;
    rep.add_check("double-R-equals-T");
    TensorElement diff = R - image;
    if (!diff.is_zero())
        rep.add("double-R-equals-T", {}, join_lines(diff.lines()));
    return rep;
}

} // namespace qlie
