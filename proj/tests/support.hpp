#pragma once

#include "wassoc/matrix.hpp"
#include "wassoc/multimap.hpp"
#include "wassoc/rational.hpp"

#include <random>

namespace wassoc::testing {

inline Rational small_rational(std::mt19937& rng, int span = 3)
{
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 2);
    return make_rational(num(rng), den(rng));
}

inline Vec random_vec(std::mt19937& rng, std::size_t n)
{
    Vec v(n);
    for (auto& x : v)
        x = small_rational(rng);
    return v;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.6)
{
    std::bernoulli_distribution keep(density);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (keep(rng))
                m(r, c) = small_rational(rng);
    return m;
}

inline MultiMap random_multimap(std::mt19937& rng, int arity, int dim)
{
    MultiMap m(arity, dim);
    for (std::size_t t = 0; t < m.tuples(); ++t)
        for (auto& x : m.value_at(t))
            x = small_rational(rng);
    return m;
}

}  // namespace wassoc::testing
