// Acceptance run: one PASS/FAIL line per criterion, with wall time.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mutations.hpp"
#include "oracles.hpp"
#include "qlie/duality.hpp"
#include "qlie/errors.hpp"
#include "qlie/golden.hpp"
#include "qlie/hopf.hpp"

using namespace qlie;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void expect(bool ok, const std::string &what)
    {
        if (!ok) {
            pass = false;
            note << " [" << what << "]";
        }
    }
};

int failures = 0;

void criterion(const char *id, const char *title, double limit_s, const std::function<void(Outcome &)> &body)
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception &e) {
        o.pass = false;
        o.note << " [exception: " << e.what() << "]";
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && s > limit_s)
        o.expect(false, "over time budget " + std::to_string(limit_s) + " s");
    failures += !o.pass;
    std::printf("%s %-3s %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", id, title, s, o.note.str().c_str());
    std::fflush(stdout);
}

std::vector<std::pair<std::string, LieBialgebraSpec>> golden_specs()
{
    return golden::library();
}

ValidationReport hopf_axioms(const HopfContext &c, int hcap)
{
    ValidationReport r;
    r.merge(check_coassociativity(c, hcap));
    r.merge(check_coproduct_homomorphism(c, hcap));
    r.merge(check_antipode_axiom(c, hcap));
    r.merge(check_counit_axiom(c, hcap));
    return r;
}

int min_x_degree(const TensorElement &t)
{
    int best = -1;
    for (auto &[k, c] : t.terms()) {
        int d = 0;
        for (auto &m : k)
            d += m.x_degree();
        if (best < 0 || d < best)
            best = d;
    }
    return best;
}

TensorElement qybe_residual(const HopfContext &ctx, const TensorElement &R)
{
    auto legs = ctx.legs(3);
    std::size_t p12[] = {0, 1}, p13[] = {0, 2}, p23[] = {1, 2};
    auto R12 = embed(R, legs, p12), R13 = embed(R, legs, p13), R23 = embed(R, legs, p23);
    return R12 * R13 * R23 - R23 * R13 * R12;
}

} // namespace

int main()
{
    criterion("1", "validation suite: 7 valid specs pass, 10 mutations pinpointed", 1.0, [](Outcome &o) {
        auto specs = golden_specs();
        specs.push_back({"double(K)", classical_double(golden::k_example())});
        for (auto &[name, s] : specs)
            o.expect(validate_bialgebra(s).pass(), name + " rejected");
        auto muts = testing::mutation_specs();
        o.expect(muts.size() == 10, "mutation count");
        for (auto &m : muts) {
            auto rep = validate_bialgebra(m.spec);
            o.expect(!rep.pass() && testing::has_violation(rep, m.axiom, m.index), m.name + " not pinpointed");
        }
    });

    criterion("2", "Hopf axioms on the golden library, order 4, H-cap 3", 0, [](Outcome &o) {
        for (auto &[name, s] : golden_specs()) {
            auto t0 = std::chrono::steady_clock::now();
            HopfContext c(build_algebra(s, 4));
            auto rep = hopf_axioms(c, 3);
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            o.expect(rep.pass(), name + " residual");
            o.expect(dt < 30, name + " over 30 s");
            o.note << " " << name << "=" << static_cast<int>(dt * 1000) << "ms";
        }
    });

    criterion("3", "closed form for J, cocycle equation for K, order 4", 0, [](Outcome &o) {
        auto J = build_algebra(golden::jordanian(), 4);
        XPoly e1(1, 4);
        for (int n = 1; n <= 4; ++n)
            e1.add_term({n}, oracle::inv_factorial(n));
        o.expect(J->A_series[0][0] == e1, "J series differs from e^X - 1");
        HopfContext K(build_algebra(golden::k_example(), 4));
        o.expect(check_coproduct_homomorphism(K, 3).pass(), "K coproduct-homomorphism residual");
    });

    criterion("4", "BCH equals free-algebra log(exp exp) for 20 random gamma, order 4", 0, [](Outcome &o) {
        std::mt19937 rng(2024);
        for (int k = 0; k < 20; ++k) {
            std::size_t d = 1 + k % 3;
            Tensor3 g = oracle::random_lie(d, rng);
            o.expect(oracle::jacobi_holds(g, d), "sample " + std::to_string(k) + " not Lie");
            try {
                o.expect(bch(g, d, 4) == oracle::dynkin_bch(g, d, 4), "sample " + std::to_string(k) + " differs");
            } catch (const InternalFault &e) {
                o.expect(false, std::string("primitivity assertion: ") + e.what());
            }
        }
    });

    criterion("5", "quantum doubles of J and K: Hopf suite and cross relations, order 3", 0, [](Outcome &o) {
        for (auto &[name, s] : {std::pair{"J", golden::jordanian()}, std::pair{"K", golden::k_example()}}) {
            HopfContext D = quantum_double(s, 3);
            o.expect(check_hopf_suite(D, 3).pass(), std::string(name) + " hopf suite");
            o.expect(verify_double_cross_relations(s, 3).pass(), std::string(name) + " cross relations");
            // [H_i, z_mu] stays linear in H, z
            for (std::size_t i = 0; i < D.alg->dim_h(); ++i)
                for (std::size_t j = 0; j < D.alg->dim_h(); ++j) {
                    auto hi = PBWElement::h(D.alg, i), hj = PBWElement::h(D.alg, j);
                    auto br = commutator(hi, hj);
                    for (auto &[m, c] : br.terms())
                        o.expect(m.x_degree() == 0 && m.h_degree() == 1, std::string(name) + " X-correction in [H,z]");
                }
            for (std::size_t a = 0; a < D.alg->dim_v(); ++a)
                for (std::size_t b = 0; b < D.alg->dim_v(); ++b)
                    o.expect(commutator(PBWElement::x(D.alg, a), PBWElement::x(D.alg, b)).is_zero(),
                             std::string(name) + " [X,e] nonzero");
        }
    });

    criterion("6", "canonical element: Gram and coproduct laws; factorization", 0, [](Outcome &o) {
        for (auto &s : {golden::jordanian(), golden::abelian(1, 1)}) {
            PairingContext pc(s, 3);
            o.expect(verify_canonical(pc, 3).pass(), "canonical laws");
        }
        for (auto &[name, s] : golden_specs())
            o.expect(check_pairing_factorization(PairingContext(s, 3), 3).pass(), name + " factorization");
    });

    criterion("7", "quasitriangularity at order 3", 120, [](Outcome &o) {
        HopfContext J(build_algebra(golden::jordanian(), 3));
        auto literal = ClassicalRMatrix::zero(1, 1);
        literal.P[0][0] = 1; // r = H (x) X - X (x) H
        literal.Q[0][0] = -1;
        auto Ra = build_r_matrix(J, literal);
        bool a = check_qybe(J, Ra).pass() && check_quasitriangular(J, Ra).pass();
        o.expect(a, "(a) r = H^X as written fails");
        auto Rj = build_r_matrix(J, golden::jordanian_r());
        o.note << " (a') r = X^H: "
               << (check_qybe(J, Rj).pass() && check_quasitriangular(J, Rj).pass() ? "pass" : "fail") << ";";

        auto s = golden::jordanian();
        HopfContext D = quantum_double(s, 3);
        auto R = build_r_matrix(D, double_canonical_r(s));
        o.expect(check_qybe(D, R).pass() && check_quasitriangular(D, R).pass(), "(b) double(J)");

        auto flipped = golden::jordanian_r();
        flipped.Q[0][0] = -flipped.Q[0][0];
        auto Rc = build_r_matrix_unchecked(J, flipped);
        o.expect(!check_cybe(golden::jordanian(), flipped).pass(), "(c) mutation satisfies CYBE");
        o.expect(check_qybe(J, Rc).failed("QYBE") && min_x_degree(qybe_residual(J, Rc)) == 2,
                 "(c) mutation not caught at degree 2");
    });

    criterion("8", "first-order cocommutators reproduce gamma and alpha", 0, [](Outcome &o) {
        auto specs = golden_specs();
        specs.push_back({"double(K)", classical_double(golden::k_example())});
        for (auto &[name, s] : specs)
            o.expect(check_semiclassical(HopfContext(build_algebra(s, 3))).pass(), name);
    });

    criterion("9", "identity morphisms pass, scaled jordanian refused", 0, [](Outcome &o) {
        for (auto &[name, s] : golden_specs()) {
            HopfContext c(build_algebra(s, 3));
            o.expect(check_hopf_morphism(c, c, MorphismSpec::identity(s.dim_h, s.dim_v), 2).pass(), name);
        }
        HopfContext J(build_algebra(golden::jordanian(), 3));
        auto scale = MorphismSpec::identity(1, 1);
        scale.phi_V[0][0] = 2;
        bool refused = false;
        try {
            check_hopf_morphism(J, J, scale, 2);
        } catch (const ValidationError &) {
            refused = true;
        }
        o.expect(refused, "scaled morphism accepted");
    });

    std::printf("%d of 9 criteria failed\n", failures);
    return failures ? 1 : 0;
}
