#pragma once

#include "wassoc/finalg.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace wassoc::corpus {

/// e1e1 = (a/2)e1, e1e2 = ((a+2)/4)e2, e2e1 = ((a-2)/4)e2, e2e2 = 0.
FinAlg example7(const Rational& a);
FinAlg zero_algebra(int dim);
/// Basis h, e, f.
FinAlg sl2();
/// [e1, e2] = e2.
FinAlg affine_lie2();
/// [e1, e2] = e3.
FinAlg heisenberg();
/// [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e1: anticommutative, Jacobi fails.
FinAlg anticommutative_non_lie();
/// K[x]/(x^k), basis 1, x, .., x^{k-1}.
FinAlg truncated_polynomial(int k);
/// K[x,y]/(x,y)^3, basis 1, x, y, x^2, xy, y^2.
FinAlg polynomial_m3();
/// 2x2 matrices, basis E11, E12, E21, E22.
FinAlg matrix_algebra2();
/// Upper triangular 2x2 matrices, basis E11, E12, E22.
FinAlg upper_triangular2();
/// e1e1 = e2, e1e2 = e1, others zero.
FinAlg non_wa_example();
/// Direct product of two algebras.
FinAlg direct_sum(const FinAlg& a, const FinAlg& b);
/// Transported structure P^{-1} mu(P x, P y).
FinAlg change_basis(const FinAlg& alg, const Matrix& p);

Matrix random_invertible(std::mt19937& rng, int dim);
/// Generic structure constants in {-2..2}.
FinAlg random_algebra(std::mt19937& rng, int dim);
FinAlg random_commutative(std::mt19937& rng, int dim);
/// A Lie algebra from a fixed pool, padded with an abelian summand and
/// moved by a random change of basis.
FinAlg random_lie(std::mt19937& rng, int dim);
/// Symmetric bilinear maps b with {b(X,Y),Z} = b(X,{Y,Z}) + b({X,Z},Y).
std::vector<MultiMap> leibniz_products(const FinAlg& bracket);
/// bullet + bracket for a random Leibniz-compatible commutative bullet.
FinAlg random_wa(std::mt19937& rng, int dim);

struct Named {
    std::string name;
    FinAlg alg;
};

/// h (f_x g_y - f_y g_x) on K[x,y]/(x,y)^3, monomial by monomial, with h a
/// coefficient vector in the basis 1, x, y, x^2, xy, y^2. This descends to a
/// bracket on the quotient only when h lies in (x,y); h = 1 does not.
FinAlg polynomial_m3_bracket(const Vec& h);

struct PoissonPair {
    std::string name;
    FinAlg bullet;
    FinAlg bracket;
};

/// Polarizations of the WA members plus K[x,y]/m^3 with {x,y} = x.
std::vector<PoissonPair> poisson_pairs(std::uint32_t seed);

/// Weakly associative members, dims 2..6, at least ten of them.
std::vector<Named> wa_algebras(std::uint32_t seed);
/// Algebras that are not weakly associative.
std::vector<Named> non_wa_algebras(std::uint32_t seed);

}  // namespace wassoc::corpus
