#include "support.hpp"
#include "wassoc/cohomology.hpp"
#include "wassoc/corpus.hpp"

#include <doctest.h>

#include <algorithm>

using namespace wassoc;
using testing::random_multimap;

namespace {

constexpr std::uint32_t kSeed = 20240611;

MultiMap random_combination(std::mt19937& rng, const std::vector<MultiMap>& basis, int arity, int dim)
{
    MultiMap out(arity, dim);
    for (const auto& b : basis)
        out += testing::small_rational(rng) * b;
    return out;
}

MultiMap element(const Vec& v)
{
    MultiMap m(0, static_cast<int>(v.size()));
    std::copy(v.begin(), v.end(), m.value_at(0).begin());
    return m;
}

std::vector<corpus::Named> commutative_members()
{
    std::vector<corpus::Named> out;
    for (auto& m : corpus::wa_algebras(kSeed))
        if (is_commutative(m.alg))
            out.push_back(m);
    return out;
}

std::vector<FinAlg> associative_members()
{
    return {corpus::matrix_algebra2(), corpus::upper_triangular2(), corpus::truncated_polynomial(4),
            corpus::polynomial_m3()};
}

// K[x,y,z]/(x,y,z)^2, basis 1, x, y, z.
FinAlg dual_numbers3()
{
    FinAlg a(4);
    for (int i = 0; i < 4; ++i) {
        a.set(0, i, i, 1);
        a.set(i, 0, i, 1);
    }
    return a;
}

const Delta3System& cached_delta3()
{
    static const Delta3System sys = delta3_system();
    return sys;
}

CochainContext m3_poisson()
{
    return CochainContext::poisson(corpus::polynomial_m3(), corpus::polynomial_m3_bracket(unit_vec(6, 1)));
}

}  // namespace

TEST_SUITE("cohomology")
{
    TEST_CASE("Hochschild square vanishes on associative algebras")
    {
        std::mt19937 rng(kSeed);
        for (const auto& alg : associative_members()) {
            const CochainContext ctx(alg);
            for (int t = 0; t < 50; ++t) {
                const MultiMap f = random_multimap(rng, 1, alg.dim());
                CHECK(hochschild_delta(ctx, hochschild_delta(ctx, f)).is_zero());
            }
            for (int t = 0; t < 3; ++t) {
                const MultiMap phi = random_multimap(rng, 2, alg.dim());
                CHECK(hochschild_delta(ctx, hochschild_delta(ctx, phi)).is_zero());
            }
            CHECK(hochschild_delta(ctx, alg.product()).is_zero());
        }
        CHECK_THROWS_AS(hochschild_delta(CochainContext(corpus::sl2()), MultiMap(0, 3)), std::invalid_argument);
        CHECK_THROWS_AS(hochschild_delta(CochainContext(corpus::sl2()), MultiMap(1, 2)), std::invalid_argument);
    }

    TEST_CASE("Hochschild coboundary of the product is twice the associator")
    {
        for (const auto& [name, alg] : corpus::wa_algebras(kSeed)) {
            INFO(name);
            const MultiMap assoc = evaluate(alg, associator());
            CHECK(hochschild_delta(CochainContext(alg), alg.product()) == Rational(2) * assoc);
        }
    }

    TEST_CASE("Hochschild coboundary against a direct evaluation")
    {
        // Oracle: the k = 2 formula written out with vector products.
        std::mt19937 rng(kSeed + 1);
        for (const auto& [name, alg] : corpus::wa_algebras(kSeed)) {
            const MultiMap phi = random_multimap(rng, 2, alg.dim());
            const MultiMap d = hochschild_delta(CochainContext(alg), phi);
            for (int trial = 0; trial < 3; ++trial) {
                const Vec a = testing::random_vec(rng, static_cast<std::size_t>(alg.dim()));
                const Vec b = testing::random_vec(rng, static_cast<std::size_t>(alg.dim()));
                const Vec c = testing::random_vec(rng, static_cast<std::size_t>(alg.dim()));
                const Vec expect = alg.mul(a, phi(b, c)) - phi(alg.mul(a, b), c) + phi(a, alg.mul(b, c)) -
                                   alg.mul(phi(a, b), c);
                const Vec args[3] = {a, b, c};
                CHECK(d.apply(args) == expect);
            }
        }
    }

    TEST_CASE("WA complex: low-degree compositions vanish")
    {
        std::mt19937 rng(kSeed + 2);
        const auto members = corpus::wa_algebras(kSeed);
        REQUIRE(members.size() >= 10);
        for (const auto& [name, alg] : members) {
            INFO(name);
            const CochainContext ctx(alg);
            for (int i = 0; i < alg.dim(); ++i)
                CHECK(wa_delta1(ctx, wa_delta0(ctx, alg.basis(i))).is_zero());
            for (int t = 0; t < 100; ++t) {
                const MultiMap f = random_multimap(rng, 1, alg.dim());
                CHECK(wa_delta2(ctx, wa_delta1(ctx, f)).is_zero());
            }
        }
    }

    TEST_CASE("WA complex: delta1 of delta0 detects non-WA algebras")
    {
        const auto members = corpus::non_wa_algebras(kSeed);
        REQUIRE(members.size() >= 5);
        for (const auto& [name, alg] : members) {
            INFO(name);
            const CochainContext ctx(alg);
            bool nonzero = false;
            for (int i = 0; i < alg.dim(); ++i)
                nonzero = nonzero || !wa_delta1(ctx, wa_delta0(ctx, alg.basis(i))).is_zero();
            CHECK(nonzero);
        }
    }

    TEST_CASE("delta1 is the derivation defect")
    {
        std::mt19937 rng(kSeed + 3);
        for (const auto& [name, alg] : corpus::wa_algebras(kSeed)) {
            const CochainContext ctx(alg);
            const MultiMap f = random_multimap(rng, 1, alg.dim());
            CHECK(wa_delta1(ctx, f).is_zero() == is_derivation(alg, f));
            for (int i = 0; i < alg.dim(); ++i)
                CHECK(is_derivation(alg, wa_delta0(ctx, alg.basis(i))));
        }
    }

    TEST_CASE("3-cochain symmetry of delta2")
    {
        CHECK(v_wa() * cochain3_vector() == GroupAlgebraElement(3));
        std::mt19937 rng(kSeed + 4);
        for (const auto& [name, alg] : corpus::wa_algebras(kSeed)) {
            INFO(name);
            const CochainContext ctx(alg);
            for (int t = 0; t < 100; ++t)
                CHECK(operadic_cochain3_check(wa_delta2(ctx, random_multimap(rng, 2, alg.dim()))));
        }
        // A fully symmetric trilinear map passes, a generic one does not.
        MultiMap sym(3, 2);
        for (std::size_t t = 0; t < sym.tuples(); ++t) {
            auto idx = sym.decode(t);
            sym.value_at(t)[0] = idx[0] + idx[1] + idx[2] + 1;
        }
        CHECK(operadic_cochain3_check(sym));
        CHECK_FALSE(operadic_cochain3_check(random_multimap(rng, 3, 2)));
    }

    TEST_CASE("Leibniz defect and the three-way equivalence")
    {
        std::mt19937 rng(kSeed + 5);
        const auto members = commutative_members();
        REQUIRE(members.size() >= 4);
        for (const auto& [name, alg] : members) {
            INFO(name);
            const CochainContext ctx(alg);
            const auto skew = skew_bilinear_basis(alg.dim());
            const auto cocycles = solve_linear(skew, [&](const MultiMap& p) { return leibniz_defect(ctx, p); });
            int zero_defect = 0;
            for (int t = 0; t < 100; ++t) {
                // Alternate generic skew maps with elements of the defect kernel.
                const MultiMap psi = (t % 2 == 0 || cocycles.empty())
                                         ? random_multimap(rng, 2, alg.dim()).skew_part()
                                         : random_combination(rng, cocycles, 2, alg.dim());
                const MultiMap l = leibniz_defect(ctx, psi);
                const MultiMap dh = hochschild_delta(ctx, psi);
                const MultiMap dwa = wa_delta2(ctx, psi);
                CHECK(l.is_zero() == dh.is_zero());
                CHECK(l.is_zero() == dwa.is_zero());
                CHECK(wa_cocycle2(ctx, psi) == l.is_zero());
                CHECK(dh == Rational(-1) * l - l.permuted(s3::c()));
                CHECK(dwa == Rational(-2) * l.permuted(s3::c()));
                zero_defect += l.is_zero();
            }
            if (!cocycles.empty())
                CHECK(zero_defect >= 50);
            CHECK(leibniz_defect(ctx, MultiMap(2, alg.dim())).is_zero());
        }
    }

    TEST_CASE("factor two in front of delta_H is not an identity")
    {
        const CochainContext ctx(corpus::polynomial_m3());
        std::mt19937 rng(kSeed + 6);
        const MultiMap psi = random_multimap(rng, 2, 6).skew_part();
        const MultiMap l = leibniz_defect(ctx, psi);
        REQUIRE_FALSE(l.is_zero());
        CHECK(Rational(2) * hochschild_delta(ctx, psi) != Rational(-1) * l - l.permuted(s3::c()));
    }

    TEST_CASE("symmetric maps are WA 2-cocycles of commutative members")
    {
        std::mt19937 rng(kSeed + 7);
        for (const auto& [name, alg] : commutative_members()) {
            INFO(name);
            const CochainContext ctx(alg);
            for (int t = 0; t < 20; ++t)
                CHECK(wa_cocycle2(ctx, random_multimap(rng, 2, alg.dim()).sym_part()));
        }
    }

    TEST_CASE("Id - t23 annihilates delta2 on commutative members")
    {
        const GroupAlgebraElement w(3, {{s3::id(), 1}, {s3::t23(), -1}});
        std::mt19937 rng(kSeed + 8);
        for (const auto& [name, alg] : corpus::wa_algebras(kSeed)) {
            const CochainContext ctx(alg);
            bool holds = true;
            for (int t = 0; t < 20; ++t)
                holds = holds && wa_delta2(ctx, random_multimap(rng, 2, alg.dim())).permuted(w).is_zero();
            if (is_commutative(alg)) {
                INFO(name);
                CHECK(holds);
            } else {
                MESSAGE(name << ": delta2 o (Id - t23) = 0 for 20 random maps: " << std::string(holds ? "yes" : "no"));
            }
        }
    }

    TEST_CASE("skew cochain bases")
    {
        CHECK(skew_cochain_basis(1, 3).size() == 9);
        CHECK(skew_cochain_basis(2, 3).size() == 9);
        CHECK(skew_cochain_basis(3, 4).size() == 16);
        for (const auto& b : skew_cochain_basis(3, 3))
            CHECK(b.permuted(s3::t12()) == Rational(-1) * b);
    }

    TEST_CASE("multiderivations")
    {
        const FinAlg a = dual_numbers3();
        const CochainContext ctx(a);
        std::mt19937 rng(kSeed + 9);

        // Skew 3-cochains with vanishing Hochschild coboundary are multiderivations.
        const auto cocycles = solve_linear(skew_cochain_basis(3, 4), [&](const MultiMap& p) { return hochschild_delta(ctx, p); });
        REQUIRE_FALSE(cocycles.empty());
        for (const auto& c : cocycles)
            CHECK(is_multiderivation(a, c));

        // Conversely every skew 3-multiderivation is a cocycle.
        const auto md = multiderivation_basis(a, 3);
        REQUIRE_FALSE(md.empty());
        for (int t = 0; t < 10; ++t)
            CHECK(hochschild_delta(ctx, random_combination(rng, md, 3, 4)).is_zero());

        // Corrupting one antisymmetric family of entries breaks the property.
        MultiMap bad = random_combination(rng, md, 3, 4);
        for (const auto& s : all_perms(3)) {
            const int base[3] = {0, 1, 2};
            const int idx[3] = {base[s(1) - 1], base[s(2) - 1], base[s(3) - 1]};
            bad.at(idx, 3) += s.sign();
        }
        REQUIRE(bad.is_skew());
        CHECK_FALSE(is_multiderivation(a, bad));

        CHECK(is_multiderivation(a, element(unit_vec(4, 3))));
        CHECK(is_multiderivation(a, MultiMap(2, 4)));
        CHECK(multiderivation_basis(corpus::polynomial_m3(), 3).empty());
    }

    TEST_CASE("the bracket {x,y} = 1 does not descend to K[x,y]/m^3")
    {
        const FinAlg one = corpus::polynomial_m3_bracket(unit_vec(6, 0));
        CHECK_FALSE(is_nonassociative_poisson(corpus::polynomial_m3(), one));
        CHECK_THROWS_AS(CochainContext::poisson(corpus::polynomial_m3(), one), std::invalid_argument);
        const FinAlg x = corpus::polynomial_m3_bracket(unit_vec(6, 1));
        CHECK(is_nonassociative_poisson(corpus::polynomial_m3(), x));
        // {x, y} = x
        CHECK(x.mul(unit_vec(6, 1), unit_vec(6, 2)) == unit_vec(6, 1));
    }

    TEST_CASE("Lichnerowicz coboundary")
    {
        const CochainContext ctx = m3_poisson();
        const FinAlg& br = ctx.bracket();
        std::mt19937 rng(kSeed + 10);

        const Vec v = testing::random_vec(rng, 6);
        const MultiMap d0 = lichnerowicz_delta(ctx, element(v));
        for (int i = 0; i < 6; ++i)
            CHECK(d0(unit_vec(6, static_cast<std::size_t>(i))) == br.mul(unit_vec(6, static_cast<std::size_t>(i)), v));
        CHECK(lichnerowicz_delta(ctx, lichnerowicz_delta(ctx, element(v))).is_zero());

        const auto derivations = multiderivation_basis(ctx.bullet(), 1);
        REQUIRE_FALSE(derivations.empty());
        for (int t = 0; t < 20; ++t) {
            const MultiMap f = random_combination(rng, derivations, 1, 6);
            const MultiMap d1 = lichnerowicz_delta(ctx, f);
            CHECK(d1.is_skew());
            CHECK(is_multiderivation(ctx.bullet(), d1));
            CHECK(lichnerowicz_delta(ctx, d1).is_zero());
        }
        CHECK(lichnerowicz_delta(ctx, MultiMap(2, 6)).is_zero());

        // The bracket itself is a 2-cocycle.
        CHECK(lichnerowicz_delta(ctx, br.product()).is_zero());
    }

    TEST_CASE("Lichnerowicz input validation")
    {
        const CochainContext ctx = m3_poisson();
        CHECK_THROWS_AS(lichnerowicz_delta(CochainContext(corpus::sl2()), MultiMap(1, 3)), std::invalid_argument);
        MultiMap nonskew(2, 6);
        const int ij[2] = {1, 1};
        nonskew.at(ij, 0) = 1;
        CHECK_THROWS_AS(lichnerowicz_delta(ctx, nonskew), CochainError);

        MultiMap f(1, 6);
        const int one[1] = {0};
        f.at(one, 0) = 1;  // f(1) = 1 is not a derivation
        try {
            (void)lichnerowicz_delta(ctx, f);
            FAIL("expected CochainError");
        } catch (const CochainError& e) {
            CHECK(e.argument() == 1);
        }
    }

    TEST_CASE("Lichnerowicz coboundary preserves multiderivations")
    {
        // Reported, not required: the bullet of a polarized WA algebra need not
        // be associative.
        std::mt19937 rng(kSeed + 11);
        int preserved = 0, total = 0;
        for (const auto& [name, bullet, bracket] : corpus::poisson_pairs(kSeed)) {
            if (bullet.dim() > 4)
                continue;
            const CochainContext ctx = CochainContext::poisson(bullet, bracket);
            const auto derivations = multiderivation_basis(bullet, 1);
            bool ok = true;
            for (int t = 0; t < 5 && !derivations.empty(); ++t)
                ok = ok && is_multiderivation(bullet, lichnerowicz_delta(ctx, random_combination(rng, derivations, 1, bullet.dim())));
            MESSAGE(name << ": delta_L of derivations stays a multiderivation: " << std::string(ok ? "yes" : "no"));
            preserved += ok;
            ++total;
        }
        CHECK(total > 0);
        CHECK(preserved > 0);
    }

    TEST_CASE("operadic 4-cochains")
    {
        const auto vs = cochain4_vectors();
        REQUIRE(vs.size() == 2);
        // The printed terms of the two relations.
        auto one_line = [](std::vector<int> w) { return Perm(std::move(w)); };
        CHECK(vs[0].coeff(one_line({4, 2, 3, 1})) == 1);
        CHECK(vs[0].coeff(one_line({1, 3, 4, 2})) == -1);
        CHECK(vs[0].coeff(one_line({4, 1, 2, 3})) == -1);
        CHECK(vs[1].coeff(one_line({1, 4, 3, 2})) == 1);
        CHECK(vs[1].coeff(one_line({1, 2, 4, 3})) == -1);
        CHECK(vs[1].coeff(one_line({1, 4, 2, 3})) == -1);
        // The dual words of the arity-4 relations are the inverses.
        CHECK(vs[0].coeff(one_line({1, 4, 2, 3}).inverse()) == -1);
        CHECK(vs[0].coeff(one_line({2, 3, 4, 1}).inverse()) == -1);
        CHECK(vs[1].coeff(one_line({1, 3, 4, 2}).inverse()) == -1);

        const auto proj = cochain4_projectors();
        CHECK(proj.size() == 8);
        std::mt19937 rng(kSeed + 12);
        const MultiMap theta = random_multimap(rng, 4, 2);
        CHECK_FALSE(operadic_cochain4_check(theta));
        for (const auto& u : proj) {
            for (const auto& v : vs)
                CHECK((u * v).is_zero());
            CHECK(operadic_cochain4_check(theta.permuted(u)));
        }
        GroupAlgebraElement mix(4);
        for (const auto& u : proj)
            mix += testing::small_rational(rng) * u;
        CHECK(operadic_cochain4_check(theta.permuted(mix)));
        CHECK_THROWS_AS(operadic_cochain4_check(MultiMap(3, 2)), std::invalid_argument);
    }

    TEST_CASE("delta3 system")
    {
        const Delta3System& sys = cached_delta3();
        CHECK(sys.raw.cols() == 120);
        CHECK(sys.raw.rows() == 360);
        CHECK(sys.raw_rows == 360);
        CHECK(sys.unknowns.size() == 120);
        CHECK(sys.unknowns.front() == "a_1234");
        CHECK(sys.unknowns.back() == "e_4321");
        CHECK(sys.matrix.cols() == 120);
        CHECK(sys.matrix.rows() == 360 - sys.ideal_dim);
        CHECK(sys.kernel.size() >= sys.raw_kernel_dim);
        MESSAGE("delta3: distinct rows " << sys.distinct_rows << ", ideal " << sys.ideal_dim << ", kernel "
                                         << sys.kernel.size() << " (" << sys.raw_kernel_dim << " already zero in the free operad)");
        CHECK(sys.kernel.size() == 48);
        CHECK(sys.raw_kernel_dim == 40);

        // Solutions are stable under relabelling the four arguments.
        const auto& perms = all_perms(4);
        for (const auto& s : perms) {
            std::vector<Vec> moved;
            for (const auto& k : sys.kernel) {
                Vec m = zero_vec(120);
                for (std::size_t j = 0; j < 120; ++j) {
                    const std::size_t fam = j / 24;
                    m[fam * 24 + perm_index(compose(s, perms[j % 24]))] = k[j];
                }
                moved.push_back(std::move(m));
            }
            CHECK(same_span(moved, sys.kernel, 120));
        }
    }

    TEST_CASE("delta3 kernel vectors annihilate delta2 on the corpus")
    {
        const Delta3System& sys = cached_delta3();
        std::mt19937 rng(kSeed + 13);
        Vec outside = testing::random_vec(rng, 120);
        REQUIRE_FALSE(in_span(outside, sys.kernel));
        bool outside_fails = false;
        for (const auto& [name, alg] : corpus::wa_algebras(kSeed)) {
            INFO(name);
            const CochainContext ctx(alg);
            const MultiMap phi2 = random_multimap(rng, 2, alg.dim());
            std::vector<Vec> coeffs = sys.kernel;
            coeffs.push_back(outside);
            const auto ok = delta3_annihilates(ctx, phi2, coeffs);
            for (std::size_t i = 0; i < sys.kernel.size(); ++i)
                CHECK(ok[i]);
            outside_fails = outside_fails || !ok.back();
        }
        CHECK(outside_fails);
    }

    TEST_CASE("delta3 terms agree with symbolic evaluation")
    {
        std::mt19937 rng(kSeed + 14);
        for (const FinAlg& alg : {corpus::example7(6), corpus::sl2()}) {
            const CochainContext ctx(alg);
            const MultiMap phi2 = random_multimap(rng, 2, alg.dim());
            const auto terms = delta3_terms(ctx, wa_delta2(ctx, phi2));
            for (int u = 0; u < kDelta3Unknowns; u += 7)
                CHECK(terms[static_cast<std::size_t>(u)] == evaluate(alg, delta3_term(u), &phi2));
        }
        CHECK_THROWS_AS(wa_delta3(CochainContext(corpus::sl2()), MultiMap(3, 3), zero_vec(5)), std::invalid_argument);
        CHECK_THROWS_AS(delta3_unknown_label(120), std::out_of_range);
    }

    TEST_CASE("zero algebra gives zero operators")
    {
        const CochainContext ctx(corpus::zero_algebra(2));
        std::mt19937 rng(kSeed + 15);
        CHECK(wa_delta0(ctx, testing::random_vec(rng, 2)).is_zero());
        CHECK(wa_delta1(ctx, random_multimap(rng, 1, 2)).is_zero());
        CHECK(wa_delta2(ctx, random_multimap(rng, 2, 2)).is_zero());
        CHECK(hochschild_delta(ctx, random_multimap(rng, 3, 2)).is_zero());
        CHECK(leibniz_defect(ctx, random_multimap(rng, 2, 2)).is_zero());
        CHECK(wa_delta3(ctx, random_multimap(rng, 3, 2), testing::random_vec(rng, 120)).is_zero());
    }
}
