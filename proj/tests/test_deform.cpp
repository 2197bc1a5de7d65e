#include "support.hpp"
#include "wassoc/cohomology.hpp"
#include "wassoc/corpus.hpp"
#include "wassoc/deform.hpp"

#include <doctest.h>

using namespace wassoc;
using wassoc::testing::random_multimap;

namespace {

MultiMap random_combination(std::mt19937& rng, const std::vector<MultiMap>& basis, int arity, int dim)
{
    std::uniform_int_distribution<int> c(-2, 2);
    MultiMap m(arity, dim);
    for (const auto& b : basis)
        m += Rational(c(rng)) * b;
    return m;
}

TruncatedDeformation pencil(std::mt19937& rng, int dim, int order)
{
    return leibniz_pencil(rng, dim, order);
}

TruncatedDeformation m3_linear(int order)
{
    return m3_linear_quantization(order);
}

std::vector<TruncatedDeformation> valid_deformations(std::uint32_t seed)
{
    std::mt19937 rng(seed);
    std::vector<TruncatedDeformation> out{m3_linear(2), m3_linear(3)};
    for (int i = 0; i < 4; ++i)
        out.push_back(pencil(rng, 3, 2));
    out.push_back(gauge(m3_linear(2), random_gauge(rng, 6, 2)));
    out.push_back(gauge(pencil(rng, 3, 3), random_gauge(rng, 3, 3)));
    return out;
}

std::vector<MultiMap> skew_wa_cocycles(const FinAlg& alg)
{
    const CochainContext ctx(alg);
    return solve_linear(skew_bilinear_basis(alg.dim()), [&](const MultiMap& phi) { return wa_delta2(ctx, phi); });
}

}  // namespace

TEST_SUITE("deform")
{
    TEST_CASE("order-1 defect is the WA coboundary")
    {
        std::mt19937 rng(11);
        for (const auto& [name, alg] : corpus::wa_algebras(3)) {
            if (alg.dim() > 4)
                continue;
            CAPTURE(name);
            const MultiMap phi = random_multimap(rng, 2, alg.dim());
            const TruncatedDeformation def(alg, {phi, random_multimap(rng, 2, alg.dim())});
            CHECK(wa_defect(def, 1) == wa_delta2(CochainContext(alg), phi));
        }
    }

    TEST_CASE("zero deformation and order bounds")
    {
        const TruncatedDeformation def(corpus::sl2(), {MultiMap(2, 3), MultiMap(2, 3), MultiMap(2, 3)});
        for (int k = 1; k <= 3; ++k)
            CHECK(wa_defect(def, k).is_zero());
        CHECK(is_wa_deformation(def));
        CHECK_THROWS_AS(wa_defect(def, 0), std::out_of_range);
        CHECK_THROWS_AS(wa_defect(def, 4), std::out_of_range);
        CHECK_THROWS_AS(TruncatedDeformation(corpus::sl2(), {MultiMap(2, 2)}), std::invalid_argument);
        CHECK_THROWS_AS(TruncatedDeformation(corpus::sl2(), {MultiMap(3, 3)}), std::invalid_argument);
    }

    TEST_CASE("linear Poisson deformation of K[x,y]/m^3")
    {
        const auto def = m3_linear(3);
        CHECK(wa_defect(def, 1).is_zero());
        CHECK(wa_defect(def, 2).is_zero());
        CHECK(is_wa_deformation(def));
        const auto q = quantization(def);
        CHECK(q.bracket.product() == Rational(2) * def.terms[0]);
        CHECK(q.lie_admissible);
        CHECK(q.jacobi);
        CHECK(q.leibniz);
        CHECK(q.poisson);
        CHECK(is_nonassociative_poisson(q.bullet, q.bracket));
    }

    TEST_CASE("perturbed cocycle fails at order 1")
    {
        std::mt19937 rng(5);
        auto def = m3_linear(2);
        def.terms[0] += random_multimap(rng, 2, 6);
        CHECK(first_wa_failure(def) == 1);
        CHECK_FALSE(is_wa_deformation(def));
        try {
            quantization(def);
            FAIL("expected a DeformationError");
        } catch (const DeformationError& e) {
            CHECK(e.order() == 1);
        }
    }

    TEST_CASE("quantization preconditions")
    {
        auto order_of = [](const TruncatedDeformation& d) {
            try {
                quantization(d);
            } catch (const DeformationError& e) {
                return e.order();
            }
            return -1;
        };
        CHECK(order_of(TruncatedDeformation(corpus::sl2(), {MultiMap(2, 3), MultiMap(2, 3)})) == 0);
        CHECK(order_of(TruncatedDeformation(corpus::non_wa_example(), {MultiMap(2, 2), MultiMap(2, 2)})) == 0);
        CHECK(order_of(m3_linear(1)) == 2);
        // phi_1 = Leibniz bracket + symmetric map: a cocycle whose square
        // breaks weak associativity at order 2.
        std::mt19937 rng(3);
        auto def = m3_linear(2);
        def.terms[0] += random_multimap(rng, 2, 6).sym_part();
        REQUIRE(wa_defect(def, 1).is_zero());
        CHECK(order_of(def) == 2);
    }

    TEST_CASE("skew and symmetric first terms")
    {
        const auto skew = m3_linear(2);
        CHECK(quantization(skew).bracket.product() == Rational(2) * skew.terms[0]);
        // (1 + t) mu: symmetric phi_1, zero bracket, still a valid Poisson pair.
        const FinAlg base = corpus::polynomial_m3();
        const TruncatedDeformation scaled(base, {base.product(), MultiMap(2, 6)});
        CHECK(is_wa_deformation(scaled));
        const auto q = quantization(scaled);
        CHECK(q.bracket.product().is_zero());
        CHECK(q.poisson);
    }

    TEST_CASE("gauge transformations")
    {
        std::mt19937 rng(17);
        SUBCASE("identity gauge")
        {
            const auto def = pencil(rng, 3, 3);
            CHECK(gauge(def, GaugeTransform::identity(3, 3)).terms == def.terms);
        }
        SUBCASE("order-1 coboundary on an associative base")
        {
            const FinAlg m2 = corpus::matrix_algebra2();
            const MultiMap h1 = random_multimap(rng, 1, 4);
            const TruncatedDeformation zero(m2, {MultiMap(2, 4)});
            const auto g = gauge(zero, GaugeTransform({h1}));
            CHECK(g.terms[0] == Rational(-1) * wa_delta1(CochainContext(m2), h1));
        }
        SUBCASE("inverse series")
        {
            const auto g = random_gauge(rng, 3, 4);
            const auto inv = g.inverse_series();
            const GaugeTransform gi(std::vector<MultiMap>(inv.begin() + 1, inv.end()));
            CHECK(GaugeTransform::then(g, gi).h == GaugeTransform::identity(3, 4).h);
            CHECK(GaugeTransform::then(gi, g).h == GaugeTransform::identity(3, 4).h);
        }
        SUBCASE("group action")
        {
            for (int i = 0; i < 5; ++i) {
                const auto def = pencil(rng, 3, 3);
                const auto g = random_gauge(rng, 3, 3);
                const auto h = random_gauge(rng, 3, 3);
                CHECK(gauge(gauge(def, g), h).terms == gauge(def, GaugeTransform::then(g, h)).terms);
            }
        }
        SUBCASE("30 seeded pairs preserve weak associativity")
        {
            int valid = 0;
            for (int i = 0; i < 30; ++i) {
                auto def = pencil(rng, 3, 2);
                if (i % 3 == 2)
                    def.terms[static_cast<std::size_t>(i % 2)] += random_multimap(rng, 2, 3);
                const bool before = is_wa_deformation(def);
                valid += before ? 1 : 0;
                CHECK(is_wa_deformation(gauge(def, random_gauge(rng, 3, 2))) == before);
            }
            CHECK(valid == 20);
        }
        CHECK_THROWS_AS(gauge(pencil(rng, 3, 2), random_gauge(rng, 3, 3)), std::invalid_argument);
    }

    TEST_CASE("polarized deformation and the order-1 mixed Leibniz identity")
    {
        for (const auto& def : valid_deformations(23)) {
            REQUIRE(is_wa_deformation(def));
            CHECK(polarized_leibniz_order1(def).is_zero());
        }
        std::mt19937 rng(29);
        const auto skew = polarized_deformation(m3_linear(3));
        for (const auto& rho : skew.bullet_terms)
            CHECK(rho.is_zero());
        const auto sym = polarized_deformation(pencil(rng, 3, 3));
        for (const auto& b : sym.bracket_terms)
            CHECK(b.is_zero());
        const auto def = gauge(pencil(rng, 3, 2), random_gauge(rng, 3, 2));
        const auto p = polarized_deformation(def);
        for (int k = 0; k < 2; ++k)
            CHECK(p.bracket_terms[static_cast<std::size_t>(k)] + p.bullet_terms[static_cast<std::size_t>(k)] ==
                  Rational(2) * def.terms[static_cast<std::size_t>(k)]);
    }

    TEST_CASE("noncommutative Poisson identity")
    {
        std::mt19937 rng(31);
        for (const FinAlg& base : {corpus::matrix_algebra2(), corpus::upper_triangular2()}) {
            const TruncatedDeformation zero(base, {MultiMap(2, base.dim()), MultiMap(2, base.dim())});
            const auto def = gauge(zero, random_gauge(rng, base.dim(), 2));
            REQUIRE(is_wa_deformation(def));
            const Polarization pol = polarize(base);
            const auto p = polarized_deformation(def);
            const auto r = ncp_report(pol.bullet, pol.bracket, p.bullet_terms[0], p.bracket_terms[0]);
            CHECK(r.identity_holds);
            CHECK_FALSE(r.modulo_coboundary_checked);
        }
        for (const auto& [name, alg] : corpus::wa_algebras(3)) {
            CAPTURE(name);
            const Polarization pol = polarize(alg);
            CHECK(ncp_defect(pol.bullet, pol.bracket, MultiMap(2, alg.dim()), pol.bracket.product()).is_zero());
        }
        const Polarization pol = polarize(corpus::matrix_algebra2());
        const MultiMap rho = random_multimap(rng, 2, 4).sym_part();
        const MultiMap b = random_multimap(rng, 2, 4).skew_part();
        const auto r = ncp_report(pol.bullet, pol.bracket, rho, b);
        CHECK_FALSE(r.identity_holds);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->size() == 3);
        CHECK_THROWS_AS(ncp_defect(pol.bracket, pol.bracket, rho, b), std::invalid_argument);
        CHECK_THROWS_AS(ncp_defect(pol.bullet, pol.bullet, rho, b), std::invalid_argument);
    }

    TEST_CASE("bullet-preserving deformations are Lichnerowicz cocycles")
    {
        std::mt19937 rng(37);
        int tested = 0;
        for (const auto& [name, alg] : corpus::wa_algebras(3)) {
            if (alg.dim() > 4)
                continue;
            CAPTURE(name);
            const auto cocycles = skew_wa_cocycles(alg);
            if (cocycles.empty())
                continue;
            const MultiMap phi1 = random_combination(rng, cocycles, 2, alg.dim());
            const TruncatedDeformation def(alg, {phi1});
            REQUIRE(is_wa_deformation(def));
            const auto r = bullet_preserving_check(def);
            CHECK_FALSE(r.non_derivation_slot.has_value());
            CHECK(r.passes());
            const Polarization pol = polarize(alg);
            CHECK(bullet_preserving_check(TruncatedDeformation(alg, {pol.bracket.product()})).passes());
            ++tested;
        }
        CHECK(tested >= 8);
        CHECK(bullet_preserving_check(TruncatedDeformation(corpus::sl2(), {MultiMap(2, 3)})).passes());
        CHECK(bullet_preserving_check(TruncatedDeformation(corpus::sl2(), {})).passes());
        const auto r = bullet_preserving_check(pencil(rng, 3, 2));
        CHECK_FALSE(r.passes());
        CHECK(r.non_skew_orders.size() <= 2);
    }

    TEST_CASE("first-order brackets of valid deformations satisfy Jacobi")
    {
        std::mt19937 rng(41);
        int checked = 0;
        for (const auto& def : valid_deformations(43)) {
            const FinAlg psi(def.terms[0].skew_part());
            CHECK(satisfies_jacobi(psi));
            if (is_commutative(def.base)) {
                CHECK(quantization(def).jacobi);
                ++checked;
            }
        }
        for (int i = 0; i < 5; ++i) {
            const auto def = gauge(m3_linear(2), random_gauge(rng, 6, 2));
            const auto q = quantization(def);
            CHECK(q.jacobi);
            CHECK(q.leibniz);
            CHECK(q.poisson);
            ++checked;
        }
        CHECK(checked >= 8);
    }

    TEST_CASE("defect is affine in the top term")
    {
        std::mt19937 rng(47);
        const FinAlg base = corpus::polynomial_m3();
        const MultiMap phi1 = random_multimap(rng, 2, 6);
        const MultiMap a = random_multimap(rng, 2, 6);
        const MultiMap b = random_multimap(rng, 2, 6);
        auto d2 = [&](const MultiMap& phi2) { return wa_defect(TruncatedDeformation(base, {phi1, phi2}), 2); };
        CHECK(d2(a + b) == d2(a) + d2(b) - d2(MultiMap(2, 6)));
        CHECK(d2(Rational(3) * a) == Rational(3) * d2(a) - Rational(2) * d2(MultiMap(2, 6)));
    }

    TEST_CASE("json round trip")
    {
        const auto def = m3_linear(2);
        const auto back = deformation_from_json(deformation_to_json(def));
        CHECK(back.base == def.base);
        CHECK(back.terms == def.terms);
        CHECK_THROWS_AS(deformation_from_json(nlohmann::json::object()), std::invalid_argument);
        auto j = deformation_to_json(def);
        j["terms"] = 3;
        CHECK_THROWS_AS(deformation_from_json(j), std::invalid_argument);
    }
}
