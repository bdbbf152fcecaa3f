#include "qlie/pbw.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "qlie/errors.hpp"

namespace qlie {

namespace {

template <class Map> void add_into(Map &m, const typename Map::key_type &k, const Rational &c)
{
    if (c == 0)
        return;
    auto [it, inserted] = m.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            m.erase(it);
    }
}

bool is_sorted_word(const HWord &w)
{
    return std::is_sorted(w.begin(), w.end());
}

} // namespace

GeneratorNames GeneratorNames::standard(std::size_t dim_h, std::size_t dim_v, const std::string &xp,
                                        const std::string &hp)
{
    GeneratorNames n;
    for (std::size_t mu = 0; mu < dim_v; ++mu)
        n.x.push_back(xp + std::to_string(mu));
    for (std::size_t i = 0; i < dim_h; ++i)
        n.h.push_back(hp + std::to_string(i));
    return n;
}

// ---------------------------------------------------------------- kernel

PBWAlgebra::PBWAlgebra(std::size_t dim_h, std::size_t dim_v, int order, Tensor3 C,
                       std::vector<std::vector<XPoly>> commutators, GeneratorNames names)
    : dim_h_(dim_h), dim_v_(dim_v), order_(order), C_(std::move(C)), comm_(std::move(commutators)),
      names_(std::move(names))
{
    if (order < 0)
        throw StructuralError("truncation order must be non-negative");
    if (C_.dims() != std::array<std::size_t, 3>{dim_h, dim_h, dim_h})
        throw StructuralError("H structure constants have the wrong shape");
    if (comm_.size() != dim_h)
        throw StructuralError("commutator table has the wrong number of rows");
    for (auto &row : comm_) {
        if (row.size() != dim_v)
            throw StructuralError("commutator table has the wrong number of columns");
        for (auto &p : row) {
            if (p.nvars() != dim_v || p.order() != order)
                throw StructuralError("commutator polynomial has the wrong shape");
            if (p.constant_term() != 0)
                throw StructuralError("commutator polynomial has a constant term");
        }
    }
    if (names_.x.size() != dim_v || names_.h.size() != dim_h)
        throw StructuralError("generator name table has the wrong size");
}

XPoly PBWAlgebra::derive(std::size_t i, const XPoly &p) const
{
    XPoly out(dim_v_, order_);
    for (std::size_t mu = 0; mu < dim_v_; ++mu) {
        if (comm_[i][mu].is_zero())
            continue;
        XPoly d = poly_diff(p, mu);
        if (!d.is_zero())
            out += d * comm_[i][mu];
    }
    return out;
}

const std::map<HWord, Rational> &PBWAlgebra::order_h_word(const HWord &w) const
{
    {
        std::lock_guard lock(mutex_);
        auto it = hword_cache_.find(w);
        if (it != hword_cache_.end())
            return it->second;
    }
    std::map<HWord, Rational> out;
    if (is_sorted_word(w)) {
        out.emplace(w, Rational(1));
    } else {
        std::size_t p = 0;
        while (w[p] <= w[p + 1])
            ++p;
        HWord swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        out = order_h_word(swapped);
        // H_j H_i = H_i H_j + [H_j, H_i]
        const auto j = static_cast<std::size_t>(w[p]), i = static_cast<std::size_t>(w[p + 1]);
        for (std::size_t m = 0; m < dim_h_; ++m) {
            const Rational &c = C_(j, i, m);
            if (c == 0)
                continue;
            HWord shorter(w.begin(), w.begin() + static_cast<long>(p));
            shorter.push_back(static_cast<int>(m));
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(p) + 2, w.end());
            for (auto &[u, d] : order_h_word(shorter))
                add_into(out, u, c * d);
        }
    }
    std::lock_guard lock(mutex_);
    return hword_cache_.try_emplace(w, std::move(out)).first->second;
}

// H_w x^e rewritten as sum_u q_u(X) H_u, w sorted.
const PBWAlgebra::PushResult &PBWAlgebra::push(const HWord &w, const Exponents &x) const
{
    auto key = std::make_pair(w, x);
    {
        std::lock_guard lock(mutex_);
        auto it = push_cache_.find(key);
        if (it != push_cache_.end())
            return it->second;
    }
    PushResult cur;
    cur.emplace(HWord{}, XPoly::monomial(dim_v_, order_, x));
    for (auto j = w.size(); j-- > 0;) {
        const auto letter = static_cast<std::size_t>(w[j]);
        PushResult next;
        for (auto &[u, q] : cur) {
            HWord longer;
            longer.reserve(u.size() + 1);
            longer.push_back(w[j]);
            longer.insert(longer.end(), u.begin(), u.end());
            auto [it, ins] = next.try_emplace(longer, q);
            if (!ins)
                it->second += q;
            XPoly d = derive(letter, q);
            if (!d.is_zero()) {
                auto [it2, ins2] = next.try_emplace(u, d);
                if (!ins2)
                    it2->second += d;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        cur = std::move(next);
    }
    std::lock_guard lock(mutex_);
    return push_cache_.try_emplace(std::move(key), std::move(cur)).first->second;
}

const std::map<Monomial, Rational> &PBWAlgebra::monomial_product(const Monomial &a, const Monomial &b) const
{
    auto key = std::make_pair(a, b);
    {
        std::lock_guard lock(mutex_);
        auto it = product_cache_.find(key);
        if (it != product_cache_.end())
            return it->second;
    }
    std::map<Monomial, Rational> out;
    if (a.x_degree() + b.x_degree() <= order_) {
        const int adeg = a.x_degree();
        for (auto &[u, q] : push(a.h, b.x)) {
            HWord full = u;
            full.insert(full.end(), b.h.begin(), b.h.end());
            const auto &hs = order_h_word(full);
            for (auto &[e, qc] : q.terms()) {
                if (total_degree(e) + adeg > order_)
                    continue;
                Exponents ex = e;
                for (std::size_t v = 0; v < dim_v_; ++v)
                    ex[v] += a.x[v];
                for (auto &[hw, c] : hs)
                    add_into(out, Monomial{ex, hw}, qc * c);
            }
        }
    }
    std::lock_guard lock(mutex_);
    return product_cache_.try_emplace(std::move(key), std::move(out)).first->second;
}

std::string PBWAlgebra::monomial_string(const Monomial &m) const
{
    std::vector<std::string> parts;
    for (std::size_t v = 0; v < m.x.size(); ++v) {
        if (m.x[v] == 0)
            continue;
        parts.push_back(m.x[v] == 1 ? names_.x[v] : names_.x[v] + "^" + std::to_string(m.x[v]));
    }
    for (std::size_t k = 0; k < m.h.size();) {
        std::size_t run = k;
        while (run < m.h.size() && m.h[run] == m.h[k])
            ++run;
        const auto &nm = names_.h[static_cast<std::size_t>(m.h[k])];
        parts.push_back(run - k == 1 ? nm : nm + "^" + std::to_string(run - k));
        k = run;
    }
    if (parts.empty())
        return "1";
    std::string s = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k)
        s += " " + parts[k];
    return s;
}

// ---------------------------------------------------------------- elements

PBWElement::PBWElement(AlgebraPtr alg) : alg_(std::move(alg))
{
    if (!alg_)
        throw StructuralError("element needs an algebra");
}

PBWElement PBWElement::scalar(AlgebraPtr alg, const Rational &c)
{
    PBWElement e(alg);
    e.add_term(Monomial{Exponents(alg->dim_v(), 0), {}}, c);
    return e;
}

PBWElement PBWElement::x(AlgebraPtr alg, std::size_t mu)
{
    if (mu >= alg->dim_v())
        throw StructuralError("X index out of range");
    Exponents e(alg->dim_v(), 0);
    e[mu] = 1;
    return monomial(std::move(alg), Monomial{e, {}});
}

PBWElement PBWElement::h(AlgebraPtr alg, std::size_t i)
{
    if (i >= alg->dim_h())
        throw StructuralError("H index out of range");
    return monomial(alg, Monomial{Exponents(alg->dim_v(), 0), {static_cast<int>(i)}});
}

PBWElement PBWElement::monomial(AlgebraPtr alg, Monomial m, const Rational &c)
{
    if (m.x.size() != alg->dim_v())
        throw StructuralError("monomial has the wrong number of X exponents");
    if (!is_sorted_word(m.h))
        throw StructuralError("monomial H word must be sorted");
    for (int k : m.h)
        if (k < 0 || static_cast<std::size_t>(k) >= alg->dim_h())
            throw StructuralError("H index out of range");
    PBWElement e(std::move(alg));
    e.add_term(m, c);
    return e;
}

PBWElement PBWElement::from_poly(AlgebraPtr alg, const XPoly &p)
{
    if (p.nvars() != alg->dim_v())
        throw StructuralError("polynomial has the wrong number of variables");
    PBWElement e(std::move(alg));
    for (auto &[x, c] : p.terms())
        e.add_term(Monomial{x, {}}, c);
    return e;
}

Rational PBWElement::coefficient(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PBWElement::add_term(const Monomial &m, const Rational &c)
{
    if (m.x_degree() > alg_->order())
        return;
    add_into(terms_, m, c);
}

void require_same_algebra(const PBWElement &a, const PBWElement &b)
{
    if (a.algebra() != b.algebra())
        throw StructuralError("elements belong to different algebras");
}

PBWElement &PBWElement::operator+=(const PBWElement &o)
{
    require_same_algebra(*this, o);
    for (auto &[m, c] : o.terms_)
        add_into(terms_, m, c);
    return *this;
}

PBWElement &PBWElement::operator-=(const PBWElement &o)
{
    require_same_algebra(*this, o);
    for (auto &[m, c] : o.terms_)
        add_into(terms_, m, Rational(-c));
    return *this;
}

PBWElement &PBWElement::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_)
        v *= c;
    return *this;
}

PBWElement PBWElement::operator-() const
{
    PBWElement r = *this;
    return r *= Rational(-1);
}

bool PBWElement::operator==(const PBWElement &o) const
{
    return alg_ == o.alg_ && terms_ == o.terms_;
}

XPoly PBWElement::to_poly() const
{
    XPoly p(alg_->dim_v(), alg_->order());
    for (auto &[m, c] : terms_) {
        if (!m.h.empty())
            throw StructuralError("element is not a polynomial in X");
        p.add_term(m.x, c);
    }
    return p;
}

std::vector<std::string> PBWElement::lines() const
{
    std::vector<std::string> out;
    for (auto &[m, c] : terms_)
        out.push_back(qlie::to_string(c) + " * " + alg_->monomial_string(m));
    return out;
}

std::string PBWElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (auto &l : lines())
        s += l + "\n";
    return s;
}

PBWElement multiply(const PBWElement &a, const PBWElement &b)
{
    require_same_algebra(a, b);
    const auto &alg = *a.algebra();
    PBWElement out(a.algebra());
    for (auto &[ma, ca] : a.terms()) {
        for (auto &[mb, cb] : b.terms()) {
            if (ma.x_degree() + mb.x_degree() > alg.order())
                continue;
            Rational cab = ca * cb;
            for (auto &[m, c] : alg.monomial_product(ma, mb))
                out.add_term(m, cab * c);
        }
    }
    return out;
}

PBWElement operator*(const PBWElement &a, const PBWElement &b)
{
    return multiply(a, b);
}

PBWElement commutator(const PBWElement &a, const PBWElement &b)
{
    return multiply(a, b) - multiply(b, a);
}

PBWElement normal_order(const AlgebraPtr &alg, std::span<const Generator> word)
{
    PBWElement out = PBWElement::one(alg);
    for (auto &g : word) {
        if (g.kind == Generator::Kind::X) {
            if (g.index >= alg->dim_v())
                throw StructuralError("unknown generator X" + std::to_string(g.index));
            out = out * PBWElement::x(alg, g.index);
        } else {
            if (g.index >= alg->dim_h())
                throw StructuralError("unknown generator H" + std::to_string(g.index));
            out = out * PBWElement::h(alg, g.index);
        }
    }
    return out;
}

// ---------------------------------------------------------------- tensors

namespace {

int key_degree(const TensorElement::Key &k)
{
    int d = 0;
    for (auto &m : k)
        d += m.x_degree();
    return d;
}

} // namespace

TensorElement::TensorElement(std::vector<TensorLeg> legs) : legs_(std::move(legs))
{
    for (auto &l : legs_) {
        if (!l.alg)
            throw StructuralError("tensor leg needs an algebra");
        if (l.alg->order() != legs_[0].alg->order())
            throw StructuralError("tensor legs have different truncation orders");
    }
}

TensorElement TensorElement::one(std::vector<TensorLeg> legs)
{
    TensorElement t(std::move(legs));
    Key k;
    for (auto &l : t.legs_)
        k.push_back(Monomial{Exponents(l.alg->dim_v(), 0), {}});
    t.add_term(k, 1);
    return t;
}

TensorElement TensorElement::pure(std::span<const PBWElement> factors)
{
    std::vector<TensorLeg> legs;
    for (auto &f : factors)
        legs.push_back(TensorLeg{f.algebra(), false});
    TensorElement t(legs);
    Key key(factors.size());
    auto rec = [&](auto &&self, std::size_t leg, const Rational &c) -> void {
        if (leg == factors.size()) {
            t.add_term(key, c);
            return;
        }
        for (auto &[m, v] : factors[leg].terms()) {
            key[leg] = m;
            self(self, leg + 1, c * v);
        }
    };
    rec(rec, 0, Rational(1));
    return t;
}

int TensorElement::order() const
{
    return legs_.empty() ? INT_MAX : legs_[0].alg->order();
}

Rational TensorElement::coefficient(const Key &k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add_term(const Key &k, const Rational &c)
{
    if (k.size() != legs_.size())
        throw StructuralError("tensor key has the wrong arity");
    if (key_degree(k) > order())
        return;
    add_into(terms_, k, c);
}

void TensorElement::require_compatible(const TensorElement &o) const
{
    if (legs_ != o.legs_)
        throw StructuralError("tensor elements live in different tensor products");
}

TensorElement &TensorElement::operator+=(const TensorElement &o)
{
    require_compatible(o);
    for (auto &[k, c] : o.terms_)
        add_into(terms_, k, c);
    return *this;
}

TensorElement &TensorElement::operator-=(const TensorElement &o)
{
    require_compatible(o);
    for (auto &[k, c] : o.terms_)
        add_into(terms_, k, Rational(-c));
    return *this;
}

TensorElement &TensorElement::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, v] : terms_)
        v *= c;
    return *this;
}

bool TensorElement::operator==(const TensorElement &o) const
{
    return legs_ == o.legs_ && terms_ == o.terms_;
}

std::vector<std::string> TensorElement::lines() const
{
    std::vector<std::string> out;
    for (auto &[k, c] : terms_) {
        std::string s = qlie::to_string(c) + " * (";
        for (std::size_t l = 0; l < k.size(); ++l) {
            if (l)
                s += " ⊗ ";
            s += legs_[l].alg->monomial_string(k[l]);
        }
        out.push_back(s + ")");
    }
    return out;
}

std::string TensorElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (auto &l : lines())
        s += l + "\n";
    return s;
}

TensorElement tensor_multiply(const TensorElement &a, const TensorElement &b)
{
    if (a.legs() != b.legs())
        throw StructuralError("tensor elements live in different tensor products");
    const auto &legs = a.legs();
    const std::size_t n = legs.size();
    const int order = a.order();
    TensorElement out(legs);
    std::vector<const std::map<Monomial, Rational> *> prods(n);
    TensorElement::Key key(n);
    for (auto &[ka, ca] : a.terms()) {
        const int da = key_degree(ka);
        for (auto &[kb, cb] : b.terms()) {
            if (da + key_degree(kb) > order)
                continue;
            bool empty = false;
            for (std::size_t l = 0; l < n && !empty; ++l) {
                prods[l] = legs[l].opposite ? &legs[l].alg->monomial_product(kb[l], ka[l])
                                            : &legs[l].alg->monomial_product(ka[l], kb[l]);
                empty = prods[l]->empty();
            }
            if (empty)
                continue;
            auto rec = [&](auto &&self, std::size_t l, int deg, const Rational &c) -> void {
                if (l == n) {
                    out.add_term(key, c);
                    return;
                }
                for (auto &[m, v] : *prods[l]) {
                    int d = deg + m.x_degree();
                    if (d > order)
                        continue;
                    key[l] = m;
                    self(self, l + 1, d, c * v);
                }
            };
            rec(rec, 0, 0, ca * cb);
        }
    }
    return out;
}

TensorElement operator*(const TensorElement &a, const TensorElement &b)
{
    return tensor_multiply(a, b);
}

TensorElement permute_legs(const TensorElement &t, std::span<const std::size_t> perm)
{
    if (perm.size() != t.arity())
        throw StructuralError("permutation has the wrong length");
    std::vector<TensorLeg> legs;
    for (auto p : perm)
        legs.push_back(t.legs().at(p));
    TensorElement out(legs);
    for (auto &[k, c] : t.terms()) {
        TensorElement::Key nk;
        for (auto p : perm)
            nk.push_back(k[p]);
        out.add_term(nk, c);
    }
    return out;
}

TensorElement flip(const TensorElement &t)
{
    if (t.arity() != 2)
        throw StructuralError("flip needs a two-leg element");
    const std::size_t perm[] = {1, 0};
    return permute_legs(t, perm);
}

TensorElement embed(const TensorElement &t, std::vector<TensorLeg> legs, std::span<const std::size_t> positions)
{
    if (positions.size() != t.arity())
        throw StructuralError("embedding needs one position per leg");
    for (std::size_t l = 0; l < positions.size(); ++l)
        if (positions[l] >= legs.size() || !(legs[positions[l]] == t.legs()[l]))
            throw StructuralError("embedding target leg does not match");
    TensorElement out(legs);
    TensorElement::Key base;
    for (auto &l : legs)
        base.push_back(Monomial{Exponents(l.alg->dim_v(), 0), {}});
    for (auto &[k, c] : t.terms()) {
        auto nk = base;
        for (std::size_t l = 0; l < positions.size(); ++l)
            nk[positions[l]] = k[l];
        out.add_term(nk, c);
    }
    return out;
}

TensorElement map_leg(const TensorElement &t, std::size_t leg, const std::vector<TensorLeg> &replacement,
                      const std::function<TensorElement(const Monomial &)> &f)
{
    if (leg >= t.arity())
        throw StructuralError("leg index out of range");
    std::vector<TensorLeg> legs(t.legs().begin(), t.legs().begin() + static_cast<long>(leg));
    legs.insert(legs.end(), replacement.begin(), replacement.end());
    legs.insert(legs.end(), t.legs().begin() + static_cast<long>(leg) + 1, t.legs().end());
    TensorElement out(legs);
    std::map<Monomial, TensorElement> memo;
    for (auto &[k, c] : t.terms()) {
        auto it = memo.find(k[leg]);
        if (it == memo.end()) {
            TensorElement img = f(k[leg]);
            if (img.legs() != replacement)
                throw StructuralError("leg map returned the wrong tensor shape");
            it = memo.emplace(k[leg], std::move(img)).first;
        }
        for (auto &[ik, ic] : it->second.terms()) {
            TensorElement::Key nk(k.begin(), k.begin() + static_cast<long>(leg));
            nk.insert(nk.end(), ik.begin(), ik.end());
            nk.insert(nk.end(), k.begin() + static_cast<long>(leg) + 1, k.end());
            out.add_term(nk, c * ic);
        }
    }
    return out;
}

TensorElement contract_leg(const TensorElement &t, std::size_t leg, const std::function<Rational(const Monomial &)> &f)
{
    if (leg >= t.arity())
        throw StructuralError("leg index out of range");
    std::vector<TensorLeg> legs = t.legs();
    legs.erase(legs.begin() + static_cast<long>(leg));
    TensorElement out(legs);
    std::map<Monomial, Rational> memo;
    for (auto &[k, c] : t.terms()) {
        auto it = memo.find(k[leg]);
        if (it == memo.end())
            it = memo.emplace(k[leg], f(k[leg])).first;
        if (it->second == 0)
            continue;
        TensorElement::Key nk = k;
        nk.erase(nk.begin() + static_cast<long>(leg));
        out.add_term(nk, c * it->second);
    }
    return out;
}

PBWElement collapse(const TensorElement &t)
{
    if (t.arity() == 0)
        throw StructuralError("cannot collapse an empty tensor product");
    const auto &alg = t.legs()[0].alg;
    for (auto &l : t.legs())
        if (l.alg != alg)
            throw StructuralError("collapse needs all legs in one algebra");
    PBWElement out(alg);
    for (auto &[k, c] : t.terms()) {
        PBWElement prod = PBWElement::monomial(alg, k[0], c);
        for (std::size_t l = 1; l < k.size() && !prod.is_zero(); ++l)
            prod = prod * PBWElement::monomial(alg, k[l]);
        out += prod;
    }
    return out;
}

PBWElement single_leg(const TensorElement &t)
{
    if (t.arity() != 1)
        throw StructuralError("expected a one-leg element");
    PBWElement out(t.legs()[0].alg);
    for (auto &[k, c] : t.terms())
        out.add_term(k[0], c);
    return out;
}

} // namespace qlie
