#pragma once

#include "wassoc/finalg.hpp"
#include "wassoc/freewa.hpp"
#include "wassoc/identity.hpp"
#include "wassoc/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wassoc {

/// Basis of C_n = A (x) A^{(x)n}: (n+1)-tuples (m, a_1, .., a_n) of basis
/// indices, optionally restricted to one total degree of a graded algebra.
struct ChainSpace {
    int n = 0;
    std::optional<int> degree;
    std::vector<std::vector<int>> basis;
    std::map<std::vector<int>, std::size_t> index;

    std::size_t dim() const { return basis.size(); }
};

/// All (n+1)-tuples of basis indices of an ungraded algebra.
ChainSpace chain_space(const FinAlg& alg, int n);
/// Tuples of free WA labels with degrees summing to k.
ChainSpace chain_space(const FreeWA& f, int n, int k);

enum class BoundaryVariant { plain, wa };

/// Matrix of b_n from `from` (columns) to `to` (rows).
///   b_n(m,a1..an) = (m a1, a2..) + sum_{i=1}^{n-1} (-1)^i (m, .., a_i a_{i+1}, ..) + (-1)^n (a_n m, a1..a_{n-1})
/// WA variant: b_1 unchanged, b_2(t) + b_2(t2,t3,t1) - b_2(t2,t1,t3), and
/// b_3(a1,a2,a3,a4) + b_3(a1,a4,a3,a2). Throws if an image leaves `to`.
Matrix boundary(const FinAlg& alg, const ChainSpace& from, const ChainSpace& to, BoundaryVariant variant);
/// Degree-k block of b_n on the free algebra. Needs k <= max_degree.
Matrix boundary(const FreeWA& f, int n, int k, BoundaryVariant variant);

/// H_0^k = dim C_0^k - rank b_1^k, H_1^k = dim ker b_1^k - rank b_2^k,
/// H_2^k = dim ker b_2^k - rank (b_3^WA)^k. Needs k <= max_degree, n in 0..2.
std::size_t homology_dim(const FreeWA& f, int n, int k);

struct HomologyCell {
    int n = 0;
    int k = 0;
    std::size_t dim_chains = 0;
    std::size_t rank_out = 0;  // rank of the boundary leaving C_n^k
    std::size_t rank_in = 0;   // rank of the boundary arriving in C_n^k
    std::size_t dim_homology = 0;
};
/// Every (n, k) with n <= 2 and k <= max_degree.
std::vector<HomologyCell> homology_table(const FreeWA& f);

struct CompositionReport {
    std::vector<int> degrees;
    bool b1b2_zero = true;
    bool b2b3wa_zero = true;
    bool b2_equals_b2wa = true;
    /// b_1 b_2 (a,b,c) = -(WA(a,b,c) + WA(b,a,c) + WA(c,a,b)) in the free magma.
    bool symbolic_b1b2 = false;
};
CompositionReport composition_vanishing_report(const FreeWA& f);

/// b_1 b_2 (x1,x2,x3) as a magma expression.
MultilinearIdentity b1b2_expression();

}  // namespace wassoc
