#include "qlie/hopf.hpp"

#include <algorithm>

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

std::vector<int> monomial_index(const Monomial &m)
{
    std::vector<int> idx(m.x.begin(), m.x.end());
    idx.insert(idx.end(), m.h.begin(), m.h.end());
    return idx;
}

// "on X0 H0: <residual>"
template <class T> std::string residual_at(const PBWAlgebra &alg, const Monomial &m, const T &r)
{
    return "on " + alg.monomial_string(m) + ":\n" + join_lines(r.lines());
}

// m = rest * last with both factors PBW monomials.
std::pair<Monomial, Generator> split_last(const Monomial &m)
{
    Monomial rest = m;
    if (!rest.h.empty()) {
        auto i = static_cast<std::size_t>(rest.h.back());
        rest.h.pop_back();
        return {rest, Generator{Generator::Kind::H, i}};
    }
    for (std::size_t mu = rest.x.size(); mu-- > 0;)
        if (rest.x[mu] > 0) {
            --rest.x[mu];
            return {rest, Generator{Generator::Kind::X, mu}};
        }
    throw InternalFault("split_last on the unit monomial");
}

PBWElement generator_element(const AlgebraPtr &alg, const Generator &g)
{
    return g.kind == Generator::Kind::X ? PBWElement::x(alg, g.index) : PBWElement::h(alg, g.index);
}

std::vector<Generator> generators(const PBWAlgebra &alg)
{
    std::vector<Generator> g;
    for (std::size_t mu = 0; mu < alg.dim_v(); ++mu)
        g.push_back({Generator::Kind::X, mu});
    for (std::size_t i = 0; i < alg.dim_h(); ++i)
        g.push_back({Generator::Kind::H, i});
    return g;
}

std::string generator_name(const PBWAlgebra &alg, const Generator &g)
{
    return g.kind == Generator::Kind::X ? alg.names().x[g.index] : alg.names().h[g.index];
}

// m o (f (x) g) for a two-leg element in one algebra.
PBWElement multiply_legs(const TensorElement &t, const std::function<PBWElement(const Monomial &)> &left,
                         const std::function<PBWElement(const Monomial &)> &right)
{
    const auto &alg = t.legs().at(0).alg;
    PBWElement out(alg);
    for (auto &[k, c] : t.terms()) {
        PBWElement a = left(k[0]);
        if (a.is_zero())
            continue;
        out += (a * right(k[1])) * c;
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------- context

TensorElement x_coproduct_from_bch(const AlgebraPtr &alg, const XPoly &D_mu)
{
    const std::size_t v = alg->dim_v();
    if (D_mu.nvars() != 2 * v)
        throw StructuralError("BCH polynomial has the wrong number of variables");
    TensorElement t({TensorLeg{alg}, TensorLeg{alg}});
    for (auto &[e, c] : D_mu.terms()) {
        Exponents a(e.begin(), e.begin() + static_cast<long>(v)), b(e.begin() + static_cast<long>(v), e.end());
        t.add_term({Monomial{a, {}}, Monomial{b, {}}}, c);
    }
    return t;
}

TensorElement h_coproduct_from_matrix(const AlgebraPtr &alg, const PolyMatrix &a_plus, std::size_t i)
{
    const std::size_t v = alg->dim_v();
    TensorElement t({TensorLeg{alg}, TensorLeg{alg}});
    for (std::size_t k = 0; k < alg->dim_h(); ++k)
        for (auto &[e, c] : a_plus(k, i).terms())
            t.add_term({Monomial{e, {}}, Monomial{Exponents(v, 0), {static_cast<int>(k)}}}, c);
    t.add_term({Monomial{Exponents(v, 0), {static_cast<int>(i)}}, Monomial{Exponents(v, 0), {}}}, 1);
    return t;
}

HopfContext::HopfContext(QuantizedPtr qa) : q(std::move(qa)), cache_(std::make_unique<Cache>())
{
    if (!q)
        throw StructuralError("Hopf context needs an algebra");
    alg = q->kernel;
    const std::size_t h = alg->dim_h(), v = alg->dim_v();
    for (std::size_t mu = 0; mu < v; ++mu) {
        delta_x.push_back(x_coproduct_from_bch(alg, q->D[mu]));
        antipode_x.push_back(-PBWElement::x(alg, mu));
    }
    for (std::size_t i = 0; i < h; ++i) {
        delta_h.push_back(h_coproduct_from_matrix(alg, q->a_plus, i));
        PBWElement s(alg);
        for (std::size_t k = 0; k < h; ++k)
            for (auto &[e, c] : q->a_minus(k, i).terms())
                s.add_term(Monomial{e, {static_cast<int>(k)}}, -c);
        antipode_h.push_back(s);
    }
    expected_hx.assign(h, {});
    expected_hh.assign(h, {});
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t mu = 0; mu < v; ++mu)
            expected_hx[i].push_back(PBWElement::from_poly(alg, alg->commutator(i, mu)));
        for (std::size_t j = 0; j < h; ++j) {
            PBWElement e(alg);
            for (std::size_t m = 0; m < h; ++m)
                if (q->spec.C(i, j, m) != 0)
                    e += PBWElement::h(alg, m) * q->spec.C(i, j, m);
            expected_hh[i].push_back(e);
        }
    }
}

HopfContext::HopfContext(const HopfContext &o)
    : q(o.q), alg(o.alg), delta_x(o.delta_x), delta_h(o.delta_h), antipode_x(o.antipode_x),
      antipode_h(o.antipode_h), expected_hx(o.expected_hx), expected_hh(o.expected_hh),
      cache_(std::make_unique<Cache>())
{
}

HopfContext &HopfContext::operator=(const HopfContext &o)
{
    if (this != &o) {
        q = o.q;
        alg = o.alg;
        delta_x = o.delta_x;
        delta_h = o.delta_h;
        antipode_x = o.antipode_x;
        antipode_h = o.antipode_h;
        expected_hx = o.expected_hx;
        expected_hh = o.expected_hh;
        cache_ = std::make_unique<Cache>();
    }
    return *this;
}

std::vector<TensorLeg> HopfContext::legs(std::size_t n) const
{
    return std::vector<TensorLeg>(n, TensorLeg{alg});
}

void HopfContext::clear_cache() const
{
    std::lock_guard lock(cache_->mutex);
    cache_->delta.clear();
    cache_->antipode.clear();
}

const TensorElement &HopfContext::coproduct_of(const Monomial &m) const
{
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->delta.find(m);
        if (it != cache_->delta.end())
            return it->second;
    }
    TensorElement d;
    if (m.is_unit()) {
        d = TensorElement::one(legs(2));
    } else {
        auto [rest, g] = split_last(m);
        const TensorElement &last = g.kind == Generator::Kind::X ? delta_x.at(g.index) : delta_h.at(g.index);
        d = rest.is_unit() ? last : coproduct_of(rest) * last;
    }
    std::lock_guard lock(cache_->mutex);
    return cache_->delta.try_emplace(m, std::move(d)).first->second;
}

const PBWElement &HopfContext::antipode_of(const Monomial &m) const
{
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->antipode.find(m);
        if (it != cache_->antipode.end())
            return it->second;
    }
    PBWElement s;
    if (m.is_unit()) {
        s = PBWElement::one(alg);
    } else {
        auto [rest, g] = split_last(m);
        const PBWElement &last = g.kind == Generator::Kind::X ? antipode_x.at(g.index) : antipode_h.at(g.index);
        s = rest.is_unit() ? last : last * antipode_of(rest);
    }
    std::lock_guard lock(cache_->mutex);
    return cache_->antipode.try_emplace(m, std::move(s)).first->second;
}

// ---------------------------------------------------------------- maps

TensorElement coproduct(const HopfContext &ctx, const PBWElement &e)
{
    if (e.algebra() != ctx.alg)
        throw StructuralError("element does not belong to this Hopf algebra");
    TensorElement out(ctx.legs(2));
    for (auto &[m, c] : e.terms())
        out += ctx.coproduct_of(m) * c;
    return out;
}

TensorElement opposite_coproduct(const HopfContext &ctx, const PBWElement &e)
{
    return flip(coproduct(ctx, e));
}

Rational counit(const PBWElement &e)
{
    Rational r = 0;
    for (auto &[m, c] : e.terms())
        if (m.is_unit())
            r += c;
    return r;
}

PBWElement antipode(const HopfContext &ctx, const PBWElement &e)
{
    if (e.algebra() != ctx.alg)
        throw StructuralError("element does not belong to this Hopf algebra");
    PBWElement out(ctx.alg);
    for (auto &[m, c] : e.terms())
        out += ctx.antipode_of(m) * c;
    return out;
}

TensorElement coproduct_on_leg(const HopfContext &ctx, const TensorElement &t, std::size_t leg)
{
    if (t.legs().at(leg).alg != ctx.alg)
        throw StructuralError("leg does not belong to this Hopf algebra");
    std::vector<TensorLeg> repl(2, t.legs()[leg]);
    const bool op = t.legs()[leg].opposite;
    return map_leg(t, leg, repl, [&](const Monomial &m) {
        const TensorElement &d = ctx.coproduct_of(m);
        if (!op)
            return d;
        TensorElement r(repl);
        for (auto &[k, c] : d.terms())
            r.add_term(k, c);
        return r;
    });
}

std::vector<Monomial> pbw_basis(const PBWAlgebra &alg, int x_cap, int h_cap)
{
    const std::size_t v = alg.dim_v(), h = alg.dim_h();
    std::vector<Exponents> xs;
    Exponents cur(v, 0);
    auto rec_x = [&](auto &&self, std::size_t var, int left) -> void {
        if (var == v) {
            xs.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[var] = e;
            self(self, var + 1, left - e);
        }
        cur[var] = 0;
    };
    rec_x(rec_x, 0, std::min(x_cap, alg.order()));
    std::vector<HWord> hs;
    HWord w;
    auto rec_h = [&](auto &&self, int from) -> void {
        hs.push_back(w);
        if (static_cast<int>(w.size()) == h_cap)
            return;
        for (int i = from; i < static_cast<int>(h); ++i) {
            w.push_back(i);
            self(self, i);
            w.pop_back();
        }
    };
    rec_h(rec_h, 0);
    std::vector<Monomial> out;
    for (auto &x : xs)
        for (auto &hw : hs)
            out.push_back(Monomial{x, hw});
    std::stable_sort(out.begin(), out.end(), [](const Monomial &a, const Monomial &b) {
        int da = a.x_degree() + a.h_degree(), db = b.x_degree() + b.h_degree();
        if (da != db)
            return da < db;
        return a < b;
    });
    return out;
}

// ---------------------------------------------------------------- checkers

ValidationReport check_coassociativity(const HopfContext &ctx, int h_cap)
{
    ValidationReport rep;
    rep.add_check("coassociativity");
    for (auto &m : pbw_basis(*ctx.alg, ctx.order(), h_cap)) {
        const TensorElement &d = ctx.coproduct_of(m);
        TensorElement diff = coproduct_on_leg(ctx, d, 0) - coproduct_on_leg(ctx, d, 1);
        if (!diff.is_zero())
            rep.add("coassociativity", monomial_index(m), residual_at(*ctx.alg, m, diff));
    }
    return rep;
}

ValidationReport check_coproduct_homomorphism(const HopfContext &ctx, int h_cap)
{
    ValidationReport rep;
    const auto &alg = ctx.alg;
    const std::size_t h = alg->dim_h(), v = alg->dim_v();

    rep.add_check("coproduct-relations");
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t mu = 0; mu < v; ++mu) {
            TensorElement lhs = ctx.delta_h[i] * ctx.delta_x[mu] - ctx.delta_x[mu] * ctx.delta_h[i];
            TensorElement diff = lhs - coproduct(ctx, ctx.expected_hx[i][mu]);
            if (!diff.is_zero())
                rep.add("coproduct-relations", {static_cast<int>(i), static_cast<int>(mu)},
                        "[Delta " + alg->names().h[i] + ", Delta " + alg->names().x[mu] + "]:\n" +
                            join_lines(diff.lines()));
        }
        for (std::size_t j = 0; j < h; ++j) {
            if (i == j)
                continue;
            TensorElement lhs = ctx.delta_h[i] * ctx.delta_h[j] - ctx.delta_h[j] * ctx.delta_h[i];
            TensorElement diff = lhs - coproduct(ctx, ctx.expected_hh[i][j]);
            if (!diff.is_zero())
                rep.add("coproduct-relations", {static_cast<int>(i), static_cast<int>(j)},
                        "[Delta " + alg->names().h[i] + ", Delta " + alg->names().h[j] + "]:\n" +
                            join_lines(diff.lines()));
        }
    }

    // Multiplicativity on the basis scan: Delta(g m) = Delta(g) Delta(m).
    rep.add_check("coproduct-multiplicative");
    for (auto &m : pbw_basis(*alg, ctx.order(), h_cap)) {
        PBWElement me = PBWElement::monomial(alg, m);
        for (auto &g : generators(*alg)) {
            PBWElement ge = generator_element(alg, g);
            const TensorElement &dg = g.kind == Generator::Kind::X ? ctx.delta_x[g.index] : ctx.delta_h[g.index];
            TensorElement diff = coproduct(ctx, ge * me) - dg * ctx.coproduct_of(m);
            if (!diff.is_zero()) {
                auto idx = monomial_index(m);
                idx.insert(idx.begin(), static_cast<int>(g.index));
                rep.add("coproduct-multiplicative", idx,
                        generator_name(*alg, g) + " * " + residual_at(*alg, m, diff));
            }
        }
    }
    return rep;
}

ValidationReport check_antipode_axiom(const HopfContext &ctx, int h_cap)
{
    ValidationReport rep;
    const auto &alg = ctx.alg;
    auto S = [&](const Monomial &m) { return ctx.antipode_of(m); };
    auto id = [&](const Monomial &m) { return PBWElement::monomial(alg, m); };
    const auto basis = pbw_basis(*alg, ctx.order(), h_cap);

    rep.add_check("antipode-left");
    rep.add_check("antipode-right");
    for (auto &m : basis) {
        const TensorElement &d = ctx.coproduct_of(m);
        PBWElement unit = PBWElement::scalar(alg, m.is_unit() ? 1 : 0);
        PBWElement l = multiply_legs(d, S, id) - unit;
        if (!l.is_zero())
            rep.add("antipode-left", monomial_index(m), residual_at(*alg, m, l));
        PBWElement r = multiply_legs(d, id, S) - unit;
        if (!r.is_zero())
            rep.add("antipode-right", monomial_index(m), residual_at(*alg, m, r));
    }

    // [S(H_i), S(X^mu)] = S([X^mu, H_i]) and [S(H_i), S(H_j)] = S([H_j, H_i]).
    rep.add_check("antipode-relations");
    const std::size_t h = alg->dim_h(), v = alg->dim_v();
    for (std::size_t i = 0; i < h; ++i) {
        PBWElement Hi = PBWElement::h(alg, i), SHi = antipode(ctx, Hi);
        for (std::size_t mu = 0; mu < v; ++mu) {
            PBWElement X = PBWElement::x(alg, mu);
            PBWElement diff = commutator(SHi, antipode(ctx, X)) - antipode(ctx, commutator(X, Hi));
            if (!diff.is_zero())
                rep.add("antipode-relations", {static_cast<int>(i), static_cast<int>(mu)},
                        join_lines(diff.lines()));
        }
        for (std::size_t j = 0; j < h; ++j) {
            PBWElement Hj = PBWElement::h(alg, j);
            PBWElement diff = commutator(SHi, antipode(ctx, Hj)) - antipode(ctx, commutator(Hj, Hi));
            if (!diff.is_zero())
                rep.add("antipode-relations", {static_cast<int>(i), static_cast<int>(j)}, join_lines(diff.lines()));
        }
    }

    // S anti-multiplicative on the scan, counit and coproduct compatibility.
    rep.add_check("antipode-antimultiplicative");
    rep.add_check("antipode-counit");
    rep.add_check("antipode-coproduct");
    const auto gens = generators(*alg);
    for (auto &m : basis) {
        PBWElement me = id(m);
        for (auto &g : gens) {
            PBWElement ge = generator_element(alg, g);
            PBWElement diff = antipode(ctx, ge * me) - ctx.antipode_of(m) * antipode(ctx, ge);
            if (!diff.is_zero()) {
                auto idx = monomial_index(m);
                idx.insert(idx.begin(), static_cast<int>(g.index));
                rep.add("antipode-antimultiplicative", idx,
                        generator_name(*alg, g) + " * " + residual_at(*alg, m, diff));
            }
        }
        if (counit(ctx.antipode_of(m)) != (m.is_unit() ? 1 : 0))
            rep.add("antipode-counit", monomial_index(m), "epsilon(S(" + alg->monomial_string(m) + ")) != epsilon");
        // Delta S = (S (x) S) Delta'
        TensorElement lhs = coproduct(ctx, ctx.antipode_of(m));
        TensorElement dflip = flip(ctx.coproduct_of(m));
        TensorElement rhs(ctx.legs(2));
        for (auto &[k, c] : dflip.terms()) {
            const PBWElement &a = ctx.antipode_of(k[0]);
            const PBWElement &b = ctx.antipode_of(k[1]);
            for (auto &[ma, ca] : a.terms())
                for (auto &[mb, cb] : b.terms())
                    rhs.add_term({ma, mb}, c * ca * cb);
        }
        TensorElement diff = lhs - rhs;
        if (!diff.is_zero())
            rep.add("antipode-coproduct", monomial_index(m), residual_at(*alg, m, diff));
    }
    return rep;
}

ValidationReport check_counit_axiom(const HopfContext &ctx, int h_cap)
{
    ValidationReport rep;
    const auto &alg = ctx.alg;
    auto eps = [&](const Monomial &m) { return Rational(m.is_unit() ? 1 : 0); };
    rep.add_check("counit-left");
    rep.add_check("counit-right");
    for (auto &m : pbw_basis(*alg, ctx.order(), h_cap)) {
        const TensorElement &d = ctx.coproduct_of(m);
        PBWElement me = PBWElement::monomial(alg, m);
        PBWElement l = single_leg(contract_leg(d, 0, eps)) - me;
        if (!l.is_zero())
            rep.add("counit-left", monomial_index(m), residual_at(*alg, m, l));
        PBWElement r = single_leg(contract_leg(d, 1, eps)) - me;
        if (!r.is_zero())
            rep.add("counit-right", monomial_index(m), residual_at(*alg, m, r));
    }
    return rep;
}

ValidationReport check_semiclassical(const HopfContext &ctx)
{
    ValidationReport rep;
    rep.add_check("semiclassical");
    const auto &alg = ctx.alg;
    const std::size_t h = alg->dim_h(), v = alg->dim_v(), n = h + v;
    if (ctx.order() < 1)
        return rep;
    // Combined basis b_a: H_i -> i, X^mu -> h + mu, as degree-one monomials.
    auto basis_monomial = [&](std::size_t a) {
        Monomial m{Exponents(v, 0), {}};
        if (a < h)
            m.h.push_back(static_cast<int>(a));
        else
            m.x[a - h] = 1;
        return m;
    };
    std::map<Monomial, std::size_t> position;
    for (std::size_t a = 0; a < n; ++a)
        position[basis_monomial(a)] = a;

    const Tensor3 g = cobracket_constants(ctx.q->spec);
    for (std::size_t c = 0; c < n; ++c) {
        PBWElement gen = PBWElement::monomial(alg, basis_monomial(c));
        TensorElement d = coproduct(ctx, gen);
        TensorElement cocomm = d - flip(d);
        TensorElement first(ctx.legs(2)), expected(ctx.legs(2));
        for (auto &[k, coef] : cocomm.terms())
            if (position.count(k[0]) && position.count(k[1]))
                first.add_term(k, coef);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (g(c, a, b) != 0)
                    expected.add_term({basis_monomial(a), basis_monomial(b)}, g(c, a, b));
        TensorElement diff = first - expected;
        if (!diff.is_zero())
            rep.add("semiclassical", {static_cast<int>(c)}, residual_at(*alg, basis_monomial(c), diff));
    }
    return rep;
}

ValidationReport check_hopf_suite(const HopfContext &ctx, int h_cap)
{
    ValidationReport rep;
    rep.merge(check_coassociativity(ctx, h_cap));
    rep.merge(check_coproduct_homomorphism(ctx, h_cap));
    rep.merge(check_antipode_axiom(ctx, h_cap));
    rep.merge(check_counit_axiom(ctx, h_cap));
    rep.merge(check_semiclassical(ctx));
    return rep;
}

ValidationReport check_hopf_morphism(const HopfContext &src, const HopfContext &dst, const MorphismSpec &phi, int h_cap)
{
    ValidationReport classical = check_classical_morphism(src.q->spec, dst.q->spec, phi);
    if (!classical.pass())
        throw ValidationError("classical morphism check failed: " + classical.violations.front().axiom);
    if (src.order() != dst.order())
        throw StructuralError("source and target are truncated at different orders");

    const auto &sa = src.alg, &da = dst.alg;
    std::vector<PBWElement> img_x, img_h;
    for (std::size_t mu = 0; mu < sa->dim_v(); ++mu) {
        PBWElement e(da);
        for (std::size_t nu = 0; nu < da->dim_v(); ++nu)
            if (phi.phi_V[nu][mu] != 0)
                e += PBWElement::x(da, nu) * phi.phi_V[nu][mu];
        img_x.push_back(e);
    }
    for (std::size_t i = 0; i < sa->dim_h(); ++i) {
        PBWElement e(da);
        for (std::size_t k = 0; k < da->dim_h(); ++k)
            if (phi.phi_H[k][i] != 0)
                e += PBWElement::h(da, k) * phi.phi_H[k][i];
        img_h.push_back(e);
    }
    std::map<Monomial, PBWElement> memo;
    std::function<PBWElement(const Monomial &)> Phi = [&](const Monomial &m) -> PBWElement {
        if (m.is_unit())
            return PBWElement::one(da);
        auto it = memo.find(m);
        if (it != memo.end())
            return it->second;
        auto [rest, g] = split_last(m);
        const PBWElement &last = g.kind == Generator::Kind::X ? img_x[g.index] : img_h[g.index];
        PBWElement r = rest.is_unit() ? last : Phi(rest) * last;
        memo.emplace(m, r);
        return r;
    };
    auto Phi_el = [&](const PBWElement &e) {
        PBWElement out(da);
        for (auto &[m, c] : e.terms())
            out += Phi(m) * c;
        return out;
    };

    ValidationReport rep;
    rep.add_check("morphism-multiplicative");
    rep.add_check("morphism-coproduct");
    rep.add_check("morphism-antipode");
    const auto gens = generators(*sa);
    for (auto &m : pbw_basis(*sa, src.order(), h_cap)) {
        PBWElement me = PBWElement::monomial(sa, m);
        for (auto &g : gens) {
            PBWElement ge = generator_element(sa, g);
            PBWElement diff = Phi_el(ge * me) - Phi_el(ge) * Phi(m);
            if (!diff.is_zero()) {
                auto idx = monomial_index(m);
                idx.insert(idx.begin(), static_cast<int>(g.index));
                rep.add("morphism-multiplicative", idx, generator_name(*sa, g) + " * " + residual_at(*sa, m, diff));
            }
        }
        TensorElement lhs = coproduct(dst, Phi(m));
        TensorElement rhs(dst.legs(2));
        for (auto &[k, c] : src.coproduct_of(m).terms()) {
            PBWElement a = Phi(k[0]), b = Phi(k[1]);
            for (auto &[ma, ca] : a.terms())
                for (auto &[mb, cb] : b.terms())
                    rhs.add_term({ma, mb}, c * ca * cb);
        }
        TensorElement dd = lhs - rhs;
        if (!dd.is_zero())
            rep.add("morphism-coproduct", monomial_index(m), residual_at(*sa, m, dd));
        PBWElement ds = antipode(dst, Phi(m)) - Phi_el(src.antipode_of(m));
        if (!ds.is_zero())
            rep.add("morphism-antipode", monomial_index(m), residual_at(*sa, m, ds));
    }
    return rep;
}

} // namespace qlie
