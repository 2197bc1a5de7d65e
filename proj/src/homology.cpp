#include "wassoc/homology.hpp"

#include <functional>
#include <stdexcept>

namespace wassoc {

namespace {

using Sparse = std::vector<std::pair<int, Rational>>;
using Product = std::function<Sparse(int, int)>;

Product finalg_product(const FinAlg& alg)
{
    return [&alg](int i, int j) {
        Sparse out;
        auto p = alg.basis_product(i, j);
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k] != 0)
                out.emplace_back(static_cast<int>(k), p[k]);
        return out;
    };
}

Product freewa_product(const FreeWA& f)
{
    return [&f](int u, int v) { return Sparse{{f.multiply(u, v), Rational(1)}}; };
}

void add_chain(Matrix& m, const ChainSpace& to, std::size_t col, const std::vector<int>& t, const Rational& c)
{
    auto it = to.index.find(t);
    if (it == to.index.end())
        throw std::logic_error("boundary: image chain outside the target space");
    m(it->second, col) += c;
}

// Adds sign * b_n(t) to column col.
void add_plain(Matrix& m, const ChainSpace& to, std::size_t col, const std::vector<int>& t, int sign,
               const Product& mul)
{
    const int n = static_cast<int>(t.size()) - 1;
    auto merged = [&](int i, const Sparse& prod, int s) {
        for (const auto& [idx, c] : prod) {
            std::vector<int> u;
            u.reserve(t.size() - 1);
            for (int j = 0; j < i; ++j)
                u.push_back(t[static_cast<std::size_t>(j)]);
            u.push_back(idx);
            for (int j = i + 2; j <= n; ++j)
                u.push_back(t[static_cast<std::size_t>(j)]);
            add_chain(m, to, col, u, s * sign * c);
        }
    };
    for (int i = 0; i < n; ++i)
        merged(i, mul(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i + 1)]), i % 2 == 0 ? 1 : -1);
    const int s = n % 2 == 0 ? 1 : -1;
    for (const auto& [idx, c] : mul(t[static_cast<std::size_t>(n)], t[0])) {
        std::vector<int> u{idx};
        u.insert(u.end(), t.begin() + 1, t.end() - 1);
        add_chain(m, to, col, u, s * sign * c);
    }
}

Matrix boundary_impl(const ChainSpace& from, const ChainSpace& to, BoundaryVariant variant, const Product& mul)
{
    const int n = from.n;
    if (n < 1)
        throw std::invalid_argument("boundary: degree must be at least 1");
    if (to.n != n - 1)
        throw std::invalid_argument("boundary: target must be C_{n-1}");
    if (variant == BoundaryVariant::wa && n > 3)
        throw std::invalid_argument("boundary: the WA variant is defined for n <= 3");
    Matrix m(to.dim(), from.dim());
    for (std::size_t col = 0; col < from.dim(); ++col) {
        const auto& t = from.basis[col];
        add_plain(m, to, col, t, 1, mul);
        if (variant != BoundaryVariant::wa)
            continue;
        if (n == 2) {
            add_plain(m, to, col, {t[1], t[2], t[0]}, 1, mul);
            add_plain(m, to, col, {t[1], t[0], t[2]}, -1, mul);
        } else if (n == 3) {
            add_plain(m, to, col, {t[0], t[3], t[2], t[1]}, 1, mul);
        }
    }
    return m;
}

void finish(ChainSpace& s)
{
    for (std::size_t i = 0; i < s.basis.size(); ++i)
        s.index[s.basis[i]] = i;
}

void check_degree(const FreeWA& f, int k)
{
    if (k < 0 || k > f.max_degree())
        throw std::out_of_range("homology: degree " + std::to_string(k) + " needs truncation at least " +
                                std::to_string(k) + ", have " + std::to_string(f.max_degree()));
}

}  // namespace

ChainSpace chain_space(const FinAlg& alg, int n)
{
    if (n < 0)
        throw std::invalid_argument("chain_space: negative n");
    ChainSpace s;
    s.n = n;
    std::vector<int> t(static_cast<std::size_t>(n) + 1, 0);
    while (true) {
        s.basis.push_back(t);
        std::size_t i = t.size();
        while (i > 0 && ++t[i - 1] == alg.dim())
            t[--i] = 0;
        if (i == 0)
            break;
    }
    if (alg.dim() == 0)
        s.basis.clear();
    finish(s);
    return s;
}

ChainSpace chain_space(const FreeWA& f, int n, int k)
{
    if (n < 0)
        throw std::invalid_argument("chain_space: negative n");
    check_degree(f, k);
    ChainSpace s;
    s.n = n;
    s.degree = k;
    std::vector<int> t;
    std::function<void(int, int)> fill = [&](int pos, int left) {
        if (pos == n) {
            for (int id : f.elements(left)) {
                t.push_back(id);
                s.basis.push_back(t);
                t.pop_back();
            }
            return;
        }
        for (int d = 0; d <= left; ++d)
            for (int id : f.elements(d)) {
                t.push_back(id);
                fill(pos + 1, left - d);
                t.pop_back();
            }
    };
    fill(0, k);
    finish(s);
    return s;
}

Matrix boundary(const FinAlg& alg, const ChainSpace& from, const ChainSpace& to, BoundaryVariant variant)
{
    return boundary_impl(from, to, variant, finalg_product(alg));
}

Matrix boundary(const FreeWA& f, int n, int k, BoundaryVariant variant)
{
    check_degree(f, k);
    return boundary_impl(chain_space(f, n, k), chain_space(f, n - 1, k), variant, freewa_product(f));
}

std::size_t homology_dim(const FreeWA& f, int n, int k)
{
    if (n < 0 || n > 2)
        throw std::invalid_argument("homology_dim: n must be 0, 1 or 2");
    check_degree(f, k);
    const std::size_t dim = chain_space(f, n, k).dim();
    const std::size_t out = n == 0 ? 0 : rank(boundary(f, n, k, BoundaryVariant::plain));
    const auto in_variant = n == 2 ? BoundaryVariant::wa : BoundaryVariant::plain;
    const std::size_t in = rank(boundary(f, n + 1, k, in_variant));
    return dim - out - in;
}

std::vector<HomologyCell> homology_table(const FreeWA& f)
{
    std::vector<HomologyCell> cells;
    for (int k = 0; k <= f.max_degree(); ++k) {
        std::vector<std::size_t> ranks(4, 0);  // ranks[n] = rank b_n^k
        for (int n = 1; n <= 3; ++n)
            ranks[static_cast<std::size_t>(n)] =
                rank(boundary(f, n, k, n == 3 ? BoundaryVariant::wa : BoundaryVariant::plain));
        for (int n = 0; n <= 2; ++n) {
            HomologyCell c;
            c.n = n;
            c.k = k;
            c.dim_chains = chain_space(f, n, k).dim();
            c.rank_out = ranks[static_cast<std::size_t>(n)];
            c.rank_in = ranks[static_cast<std::size_t>(n + 1)];
            c.dim_homology = c.dim_chains - c.rank_out - c.rank_in;
            cells.push_back(c);
        }
    }
    return cells;
}

MultilinearIdentity b1b2_expression()
{
    // b_2(a,b,c) = (ab, c) - (a, bc) + (ca, b); b_1(m, x) = mx - xm.
    const auto a = MultilinearIdentity::leaf(1);
    const auto b = MultilinearIdentity::leaf(2);
    const auto c = MultilinearIdentity::leaf(3);
    auto b1 = [](const MultilinearIdentity& m, const MultilinearIdentity& x) { return mu(m, x) - mu(x, m); };
    return b1(mu(a, b), c) - b1(a, mu(b, c)) + b1(mu(c, a), b);
}

CompositionReport composition_vanishing_report(const FreeWA& f)
{
    CompositionReport r;
    for (int k = 0; k <= f.max_degree(); ++k) {
        r.degrees.push_back(k);
        const Matrix b1 = boundary(f, 1, k, BoundaryVariant::plain);
        const Matrix b2 = boundary(f, 2, k, BoundaryVariant::plain);
        const Matrix b2wa = boundary(f, 2, k, BoundaryVariant::wa);
        const Matrix b3wa = boundary(f, 3, k, BoundaryVariant::wa);
        r.b1b2_zero = r.b1b2_zero && (b1 * b2).is_zero();
        r.b2b3wa_zero = r.b2b3wa_zero && (b2 * b3wa).is_zero();
        r.b2_equals_b2wa = r.b2_equals_b2wa && b2 == b2wa;
    }
    const auto wa = wa_expression();
    const MultilinearIdentity sym = wa + wa.relabel({0, 2, 1, 3}) + wa.relabel({0, 3, 1, 2});
    r.symbolic_b1b2 = b1b2_expression() == Rational(-1) * sym;
    return r;
}

}  // namespace wassoc
