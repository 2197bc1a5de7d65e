#include "support.hpp"
#include "wassoc/corpus.hpp"
#include "wassoc/identity.hpp"

#include <doctest.h>

using namespace wassoc;
using namespace wassoc::s3;
using E = MultilinearIdentity;

namespace {

GroupAlgebraElement random_element(std::mt19937& rng, int n)
{
    GroupAlgebraElement v(n);
    std::bernoulli_distribution keep(0.5);
    for (const auto& p : all_perms(n))
        if (keep(rng))
            v.add(p, testing::small_rational(rng));
    return v;
}

}  // namespace

TEST_SUITE("identity")
{
    TEST_CASE("tree shapes are enumerated left comb first")
    {
        REQUIRE(tree_shapes(3).size() == 2);
        CHECK(tree_shapes(3)[0].to_string() == "(..).");
        CHECK(tree_shapes(3)[1].to_string() == ".(..)");
        const auto& s4 = tree_shapes(4);
        REQUIRE(s4.size() == 5);
        CHECK(s4[0].to_string() == "((..).).");
        CHECK(s4[2].to_string() == "(..)(..)");
        CHECK(s4[4].to_string() == ".(.(..))");
        CHECK(tree_shapes(5).size() == 14);
        for (const auto& s : s4)
            CHECK(s.leaves() == 4);
    }

    TEST_CASE("free operad components have Catalan times factorial dimension")
    {
        CHECK(free_basis(3).size() == 12);
        CHECK(free_basis(4).size() == 120);
        CHECK(free_basis(4, 1).size() == 360);
        CHECK(free_basis(5).size() == 14 * 120);
    }

    TEST_CASE("associator")
    {
        const E a = associator();
        CHECK(a.size() == 2);
        CHECK(a.arity() == 3);
        CHECK(a.coeff(Monomial{tree_shapes(3)[0], id()}) == -1);
        CHECK(a.coeff(Monomial{tree_shapes(3)[1], id()}) == 1);
        CHECK(apply_group_vector(a, GroupAlgebraElement(id())) == a);
        CHECK(apply_group_vector(a, GroupAlgebraElement(3)).is_zero());
        CHECK(a.to_string() == "-(x1x2)x3 + x1(x2x3)");
    }

    TEST_CASE("weakly associative expression")
    {
        const E wa = wa_expression();
        CHECK(wa.size() == 6);
        const E x = E::leaf(1), y = E::leaf(2), z = E::leaf(3);
        auto A = [](const E& a, const E& b, const E& c) { return mu(a, mu(b, c)) - mu(mu(a, b), c); };
        CHECK(wa == A(x, y, z) + A(y, z, x) - A(y, x, z));
        CHECK(wa.is_multilinear());
    }

    TEST_CASE("Leibniz expression")
    {
        const E l = leibniz_expression();
        CHECK(l.arity() == 3);
        CHECK(in_orbit_span(lie_admissible_vector() + leibniz_vector(), v_wa()));
        FinAlg comm(2);  // K[x]/(x^2) with unit
        comm.set(0, 0, 0, 1);
        comm.set(0, 1, 1, 1);
        comm.set(1, 0, 1, 1);
        CHECK(evaluate(comm, l).is_zero());
    }

    TEST_CASE("substitution and composition")
    {
        const E x = E::leaf(1), y = E::leaf(2), z = E::leaf(3);
        const E m12 = mu(x, y);
        CHECK(substitute(m12, 2, mu(y, z)) == mu(x, mu(y, z)));
        CHECK(compose(m12, {mu(x, y), z}) == mu(mu(x, y), z));
        CHECK(compose(associator(), {x, y, z}) == associator());
        CHECK_THROWS_AS(substitute(mu(x, x), 1, y), std::invalid_argument);
        CHECK(phi(x, y).to_string() == "f(x1,x2)");
        CHECK(mu(phi(x, y), z).to_string() == "(f(x1,x2))x3");
    }

    TEST_CASE("coordinates round trip")
    {
        const Vec c = coordinates(wa_expression());
        CHECK(c.size() == 12);
        CHECK(from_coordinates(3, c) == wa_expression());
        CHECK_THROWS_AS(coordinates(phi(E::leaf(1), E::leaf(2))), std::invalid_argument);
    }

    TEST_CASE("group action composes with the symmetric group action")
    {
        std::mt19937 rng(31);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = trial % 2 ? 3 : 4;
            const auto& shapes = tree_shapes(n);
            E e;
            for (int t = 0; t < 3; ++t)
                e += E::term(Monomial{shapes[rng() % shapes.size()], all_perms(n)[rng() % all_perms(n).size()]},
                             testing::small_rational(rng));
            const auto v = random_element(rng, n);
            const auto& s = all_perms(n)[rng() % all_perms(n).size()];
            CHECK(apply_group_vector(apply_group_vector(e, v), GroupAlgebraElement(s)) ==
                  apply_group_vector(e, act(v, s)));
        }
    }

    TEST_CASE("identity spans mirror group algebra spans")
    {
        // A o Phi_v lies in the span of the translates of the WA expression
        // exactly when v lies in the orbit span of v_WA.
        std::vector<Vec> rows;
        for (const auto& s : all_perms(3))
            rows.push_back(coordinates(apply_group_vector(wa_expression(), GroupAlgebraElement(s))));
        std::mt19937 rng(32);
        for (int trial = 0; trial < 60; ++trial) {
            GroupAlgebraElement v = random_element(rng, 3);
            if (trial % 3 == 0) {
                v = GroupAlgebraElement(3);
                for (const auto& w : orbit(v_wa()))
                    v += testing::small_rational(rng) * w;
            }
            const E e = apply_group_vector(associator(), v);
            const bool sym = in_orbit_span(v, v_wa());
            const bool ops = e.is_zero() || in_span(coordinates(e), rows);
            CHECK(sym == ops);
        }
        CHECK(in_span(coordinates(lie_admissible_expression()), rows));
        CHECK(in_span(coordinates(leibniz_expression() + lie_admissible_expression()), rows));
    }

    TEST_CASE("Jordan expression is the linearisation of A(x, y, x x)")
    {
        const E j = jordan_expression();
        CHECK(j.arity() == 4);
        CHECK(j.is_multilinear());
        // Setting x1 = x2 = x3 = x collapses the sum to 6 A(x, y, x x).
        const E x = E::leaf(1), y = E::leaf(2);
        const E collapsed = compose(j, {x, x, x, y});
        const E expected = Rational(6) * compose(associator(), {x, y, mu(x, x)});
        CHECK(collapsed == expected);
    }
}
