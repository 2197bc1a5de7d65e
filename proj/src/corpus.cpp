#include "wassoc/corpus.hpp"

#include <stdexcept>

namespace wassoc::corpus {

namespace {

Rational random_small(std::mt19937& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

FinAlg example7(const Rational& a)
{
    FinAlg alg(2);
    alg.set(0, 0, 0, a / 2);
    alg.set(0, 1, 1, (a + 2) / 4);
    alg.set(1, 0, 1, (a - 2) / 4);
    return alg;
}

FinAlg zero_algebra(int dim)
{
    return FinAlg(dim);
}

FinAlg sl2()
{
    // h = e1, e = e2, f = e3
    FinAlg alg(3);
    alg.set(0, 1, 1, 2);
    alg.set(1, 0, 1, -2);
    alg.set(0, 2, 2, -2);
    alg.set(2, 0, 2, 2);
    alg.set(1, 2, 0, 1);
    alg.set(2, 1, 0, -1);
    return alg;
}

FinAlg affine_lie2()
{
    FinAlg alg(2);
    alg.set(0, 1, 1, 1);
    alg.set(1, 0, 1, -1);
    return alg;
}

FinAlg heisenberg()
{
    FinAlg alg(3);
    alg.set(0, 1, 2, 1);
    alg.set(1, 0, 2, -1);
    return alg;
}

FinAlg anticommutative_non_lie()
{
    FinAlg alg(3);
    auto skew = [&](int i, int j, int k) {
        alg.set(i, j, k, 1);
        alg.set(j, i, k, -1);
    };
    skew(0, 1, 2);
    skew(1, 2, 0);
    skew(2, 0, 0);
    return alg;
}

FinAlg truncated_polynomial(int k)
{
    if (k < 1)
        throw std::invalid_argument("truncated_polynomial: k must be positive");
    FinAlg alg(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; i + j < k; ++j)
            alg.set(i, j, i + j, 1);
    return alg;
}

FinAlg polynomial_m3()
{
    const int ex[6][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    FinAlg alg(6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const int a = ex[i][0] + ex[j][0], b = ex[i][1] + ex[j][1];
            if (a + b >= 3)
                continue;
            for (int k = 0; k < 6; ++k)
                if (ex[k][0] == a && ex[k][1] == b)
                    alg.set(i, j, k, 1);
        }
    return alg;
}

FinAlg matrix_algebra2()
{
    FinAlg alg(4);
    auto idx = [](int r, int c) { return 2 * r + c; };
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    if (b == c)
                        alg.set(idx(a, b), idx(c, d), idx(a, d), 1);
    return alg;
}

FinAlg upper_triangular2()
{
    // E11 = e1, E12 = e2, E22 = e3
    FinAlg alg(3);
    alg.set(0, 0, 0, 1);
    alg.set(0, 1, 1, 1);
    alg.set(1, 2, 1, 1);
    alg.set(2, 2, 2, 1);
    return alg;
}

FinAlg non_wa_example()
{
    FinAlg alg(2);
    alg.set(0, 0, 1, 1);
    alg.set(0, 1, 0, 1);
    return alg;
}

FinAlg direct_sum(const FinAlg& a, const FinAlg& b)
{
    const int n = a.dim(), m = b.dim();
    FinAlg alg(n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                alg.set(i, j, k, a.coeff(i, j, k));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                alg.set(n + i, n + j, n + k, b.coeff(i, j, k));
    return alg;
}

FinAlg change_basis(const FinAlg& alg, const Matrix& p)
{
    const Matrix q = inverse(p);
    return FinAlg(MultiMap::tabulate(2, alg.dim(), [&](std::span<const int> idx) {
        return q * alg.mul(p.column(static_cast<std::size_t>(idx[0])), p.column(static_cast<std::size_t>(idx[1])));
    }));
}

Matrix random_invertible(std::mt19937& rng, int dim)
{
    const auto n = static_cast<std::size_t>(dim);
    while (true) {
        Matrix p(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                p(r, c) = random_small(rng, -1, 1);
        if (rank(p) == n)
            return p;
    }
}

FinAlg random_algebra(std::mt19937& rng, int dim)
{
    FinAlg alg(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                alg.set(i, j, k, random_small(rng, -2, 2));
    return alg;
}

FinAlg random_commutative(std::mt19937& rng, int dim)
{
    FinAlg alg(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                const Rational c = random_small(rng, -2, 2);
                alg.set(i, j, k, c);
                alg.set(j, i, k, c);
            }
    return alg;
}

FinAlg random_lie(std::mt19937& rng, int dim)
{
    std::vector<FinAlg> pool{zero_algebra(dim)};
    if (dim >= 2)
        pool.push_back(direct_sum(affine_lie2(), zero_algebra(dim - 2)));
    if (dim >= 3) {
        pool.push_back(direct_sum(sl2(), zero_algebra(dim - 3)));
        pool.push_back(direct_sum(heisenberg(), zero_algebra(dim - 3)));
    }
    if (dim >= 4)
        pool.push_back(direct_sum(direct_sum(affine_lie2(), affine_lie2()), zero_algebra(dim - 4)));
    const auto& base = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    return change_basis(base, random_invertible(rng, dim));
}

std::vector<MultiMap> leibniz_products(const FinAlg& bracket)
{
    const MultiMap& L = bracket.product();
    return solve_linear(symmetric_bilinear_basis(bracket.dim()), [&](const MultiMap& b) {
        return MultiMap::tabulate(3, bracket.dim(), [&](std::span<const int> idx) {
            const Vec x = bracket.basis(idx[0]), y = bracket.basis(idx[1]), z = bracket.basis(idx[2]);
            return L(b(x, y), z) - b(x, L(y, z)) - b(L(x, z), y);
        });
    });
}

FinAlg random_wa(std::mt19937& rng, int dim)
{
    const FinAlg bracket = random_lie(rng, dim);
    const auto sols = leibniz_products(bracket);
    MultiMap b(2, dim);
    for (const auto& s : sols)
        b += random_small(rng, -2, 2) * s;
    return depolarize(FinAlg(b), bracket);
}

std::vector<Named> wa_algebras(std::uint32_t seed)
{
    std::mt19937 rng(seed);
    std::vector<Named> out{
        {"example7(a=6)", example7(6)},
        {"example7(a=2)", example7(2)},
        {"example7(a=-1/3)", example7(make_rational(-1, 3))},
        {"zero(2)", zero_algebra(2)},
        {"sl2", sl2()},
        {"aff(1)", affine_lie2()},
        {"heisenberg", heisenberg()},
        {"K[x]/(x^4)", truncated_polynomial(4)},
        {"K[x,y]/m^3", polynomial_m3()},
        {"M2", matrix_algebra2()},
        {"upper-triangular(2)", upper_triangular2()},
        {"example7(a=6)+sl2", direct_sum(example7(6), sl2())},
    };
    out.push_back({"random-commutative(3)", random_commutative(rng, 3)});
    out.push_back({"random-wa(3)", random_wa(rng, 3)});
    out.push_back({"random-wa(4)", random_wa(rng, 4)});
    out.push_back({"random-wa(4)'", random_wa(rng, 4)});
    return out;
}

std::vector<Named> non_wa_algebras(std::uint32_t seed)
{
    std::mt19937 rng(seed);
    std::vector<Named> out{
        {"non-wa(2)", non_wa_example()},
        {"anticommutative-non-lie(3)", anticommutative_non_lie()},
    };
    out.push_back({"random(2)", random_algebra(rng, 2)});
    out.push_back({"random(3)", random_algebra(rng, 3)});
    out.push_back({"random(3)'", random_algebra(rng, 3)});
    out.push_back({"random(4)", random_algebra(rng, 4)});
    return out;
}

FinAlg polynomial_m3_bracket(const Vec& h)
{
    if (h.size() != 6)
        throw std::invalid_argument("polynomial_m3_bracket: h needs 6 coefficients");
    const int ex[6][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    auto index = [&](int a, int b) {
        for (int k = 0; k < 6; ++k)
            if (ex[k][0] == a && ex[k][1] == b)
                return k;
        return -1;
    };
    FinAlg alg(6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const int a = ex[i][0], b = ex[i][1], c = ex[j][0], d = ex[j][1];
            // f_x g_y - f_y g_x for f = x^a y^b, g = x^c y^d
            std::vector<std::pair<Rational, std::pair<int, int>>> jac;
            if (a * d != 0)
                jac.push_back({a * d, {a + c - 1, b + d - 1}});
            if (b * c != 0)
                jac.push_back({-b * c, {a + c - 1, b + d - 1}});
            Vec out = zero_vec(6);
            for (const auto& [coef, mono] : jac)
                for (int m = 0; m < 6; ++m) {
                    if (h[static_cast<std::size_t>(m)] == 0)
                        continue;
                    const int k = index(mono.first + ex[m][0], mono.second + ex[m][1]);
                    if (k >= 0)
                        out[static_cast<std::size_t>(k)] += coef * h[static_cast<std::size_t>(m)];
                }
            alg.set(i, j, out);
        }
    return alg;
}

std::vector<PoissonPair> poisson_pairs(std::uint32_t seed)
{
    std::vector<PoissonPair> out;
    for (const auto& [name, alg] : wa_algebras(seed)) {
        const Polarization p = polarize(alg);
        out.push_back({"polarized " + name, p.bullet, p.bracket});
    }
    out.push_back({"K[x,y]/m^3, {x,y}=x", polynomial_m3(), polynomial_m3_bracket(unit_vec(6, 1))});
    out.push_back({"K[x]/(x^4), zero bracket", truncated_polynomial(4), zero_algebra(4)});
    return out;
}

}  // namespace wassoc::corpus
