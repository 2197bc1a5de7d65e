#include "wassoc/multimap.hpp"

#include "wassoc/matrix.hpp"

#include <stdexcept>

namespace wassoc {

namespace {

std::size_t power(int base, int exp)
{
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= static_cast<std::size_t>(base);
    return r;
}

Vec basis_image(const MultiMap& f, int i)
{
    const int idx[1] = {i};
    auto v = f.value(idx);
    return Vec(v.begin(), v.end());
}

template <bool Parallel>
MultiMap fill(int arity, int dim, const std::function<Vec(std::span<const int>)>& f)
{
    MultiMap m(arity, dim);
    const auto count = static_cast<std::ptrdiff_t>(m.tuples());
    auto one = [&](std::ptrdiff_t t) {
        const auto idx = m.decode(static_cast<std::size_t>(t));
        const Vec v = f(idx);
        if (v.size() != static_cast<std::size_t>(dim))
            throw std::invalid_argument("tabulate: value has wrong dimension");
        auto out = m.value_at(static_cast<std::size_t>(t));
        for (int k = 0; k < dim; ++k)
            out[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(k)];
    };
    if constexpr (Parallel) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 16)
        for (std::ptrdiff_t t = 0; t < count; ++t) {
            try {
                one(t);
            } catch (...) {
#pragma omp critical
                err = std::current_exception();
            }
        }
        if (err)
            std::rethrow_exception(err);
    } else {
        for (std::ptrdiff_t t = 0; t < count; ++t)
            one(t);
    }
    return m;
}

}  // namespace

MultiMap::MultiMap(int arity, int dim)
    : arity_(arity), dim_(dim), tuples_(power(dim, arity))
{
    if (arity < 0 || dim < 0)
        throw std::invalid_argument("MultiMap: negative arity or dimension");
    t_.assign(tuples_ * static_cast<std::size_t>(dim), Rational(0));
}

MultiMap MultiMap::endomorphism(const std::vector<Vec>& rows)
{
    const int n = static_cast<int>(rows.size());
    MultiMap m(1, n);
    for (int out = 0; out < n; ++out) {
        if (rows[static_cast<std::size_t>(out)].size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("endomorphism: matrix is not square");
        for (int in = 0; in < n; ++in)
            m.value_at(static_cast<std::size_t>(in))[static_cast<std::size_t>(out)] =
                rows[static_cast<std::size_t>(out)][static_cast<std::size_t>(in)];
    }
    return m;
}

MultiMap MultiMap::identity(int dim)
{
    MultiMap m(1, dim);
    for (int i = 0; i < dim; ++i)
        m.value_at(static_cast<std::size_t>(i))[static_cast<std::size_t>(i)] = 1;
    return m;
}

std::span<Rational> MultiMap::value_at(std::size_t tuple)
{
    return {t_.data() + tuple * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
}

std::span<const Rational> MultiMap::value_at(std::size_t tuple) const
{
    return {t_.data() + tuple * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
}

namespace {

std::size_t encode(std::span<const int> idx, int arity, int dim)
{
    if (static_cast<int>(idx.size()) != arity)
        throw std::invalid_argument("MultiMap: wrong number of indices");
    std::size_t t = 0;
    for (int i : idx) {
        if (i < 0 || i >= dim)
            throw std::out_of_range("MultiMap: index out of range");
        t = t * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i);
    }
    return t;
}

}  // namespace

std::span<Rational> MultiMap::value(std::span<const int> idx)
{
    return value_at(encode(idx, arity_, dim_));
}

std::span<const Rational> MultiMap::value(std::span<const int> idx) const
{
    return value_at(encode(idx, arity_, dim_));
}

std::vector<int> MultiMap::decode(std::size_t tuple) const
{
    std::vector<int> idx(static_cast<std::size_t>(arity_));
    for (int p = arity_ - 1; p >= 0; --p) {
        idx[static_cast<std::size_t>(p)] = static_cast<int>(tuple % static_cast<std::size_t>(dim_));
        tuple /= static_cast<std::size_t>(dim_);
    }
    return idx;
}

Vec MultiMap::apply(std::span<const Vec> args) const
{
    if (static_cast<int>(args.size()) != arity_)
        throw std::invalid_argument("MultiMap::apply: wrong number of arguments");
    for (const auto& a : args)
        if (a.size() != static_cast<std::size_t>(dim_))
            throw std::invalid_argument("MultiMap::apply: argument dimension mismatch");
    Vec out = zero_vec(static_cast<std::size_t>(dim_));
    std::vector<int> idx(static_cast<std::size_t>(arity_), 0);
    // Walk only the nonzero coordinates of each argument.
    std::vector<std::vector<int>> support(static_cast<std::size_t>(arity_));
    for (int p = 0; p < arity_; ++p)
        for (int i = 0; i < dim_; ++i)
            if (args[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] != 0)
                support[static_cast<std::size_t>(p)].push_back(i);
    for (const auto& s : support)
        if (s.empty())
            return out;
    std::vector<std::size_t> pos(static_cast<std::size_t>(arity_), 0);
    while (true) {
        Rational w = 1;
        for (int p = 0; p < arity_; ++p) {
            idx[static_cast<std::size_t>(p)] = support[static_cast<std::size_t>(p)][pos[static_cast<std::size_t>(p)]];
            w *= args[static_cast<std::size_t>(p)][static_cast<std::size_t>(idx[static_cast<std::size_t>(p)])];
        }
        auto v = value(idx);
        for (int k = 0; k < dim_; ++k)
            if (v[static_cast<std::size_t>(k)] != 0)
                out[static_cast<std::size_t>(k)] += w * v[static_cast<std::size_t>(k)];
        int p = arity_ - 1;
        while (p >= 0) {
            auto& q = pos[static_cast<std::size_t>(p)];
            if (++q < support[static_cast<std::size_t>(p)].size())
                break;
            q = 0;
            --p;
        }
        if (p < 0)
            break;
    }
    return out;
}

Vec MultiMap::operator()(const Vec& x) const
{
    const Vec args[1] = {x};
    return apply(args);
}

Vec MultiMap::operator()(const Vec& x, const Vec& y) const
{
    const Vec args[2] = {x, y};
    return apply(args);
}

bool MultiMap::is_zero() const
{
    for (const auto& x : t_)
        if (x != 0)
            return false;
    return true;
}

std::optional<std::vector<int>> MultiMap::first_nonzero() const
{
    for (std::size_t t = 0; t < tuples_; ++t)
        for (const auto& x : value_at(t))
            if (x != 0)
                return decode(t);
    return std::nullopt;
}

bool MultiMap::is_skew() const
{
    if (arity_ < 2)
        return true;
    for (int a = 0; a + 1 < arity_; ++a) {
        std::vector<int> im(static_cast<std::size_t>(arity_));
        for (int i = 0; i < arity_; ++i)
            im[static_cast<std::size_t>(i)] = i + 1;
        std::swap(im[static_cast<std::size_t>(a)], im[static_cast<std::size_t>(a + 1)]);
        if (permuted(Perm(im)) != Rational(-1) * *this)
            return false;
    }
    return true;
}

bool MultiMap::is_symmetric() const
{
    if (arity_ < 2)
        return true;
    for (int a = 0; a + 1 < arity_; ++a) {
        std::vector<int> im(static_cast<std::size_t>(arity_));
        for (int i = 0; i < arity_; ++i)
            im[static_cast<std::size_t>(i)] = i + 1;
        std::swap(im[static_cast<std::size_t>(a)], im[static_cast<std::size_t>(a + 1)]);
        if (permuted(Perm(im)) != *this)
            return false;
    }
    return true;
}

MultiMap MultiMap::permuted(const Perm& s) const
{
    if (s.arity() != arity_)
        throw std::invalid_argument("MultiMap::permuted: arity mismatch");
    MultiMap r(arity_, dim_);
    std::vector<int> src(static_cast<std::size_t>(arity_));
    for (std::size_t t = 0; t < tuples_; ++t) {
        const auto idx = decode(t);
        // r(e_{i1},..,e_{ik}) = this(e_{i_s(1)},..,e_{i_s(k)})
        for (int p = 0; p < arity_; ++p)
            src[static_cast<std::size_t>(p)] = idx[static_cast<std::size_t>(s(p + 1) - 1)];
        auto from = value(src);
        auto to = r.value_at(t);
        std::copy(from.begin(), from.end(), to.begin());
    }
    return r;
}

MultiMap MultiMap::permuted(const GroupAlgebraElement& v) const
{
    if (v.arity() != arity_)
        throw std::invalid_argument("MultiMap::permuted: arity mismatch");
    MultiMap r(arity_, dim_);
    for (const auto& [s, c] : v.terms())
        r += c * permuted(s);
    return r;
}

MultiMap MultiMap::skew_part() const
{
    if (arity_ != 2)
        throw std::invalid_argument("skew_part: bilinear maps only");
    return *this - permuted(Perm({2, 1}));
}

MultiMap MultiMap::sym_part() const
{
    if (arity_ != 2)
        throw std::invalid_argument("sym_part: bilinear maps only");
    return *this + permuted(Perm({2, 1}));
}

MultiMap MultiMap::conjugated(const MultiMap& out, std::span<const MultiMap> ins) const
{
    if (static_cast<int>(ins.size()) != arity_)
        throw std::invalid_argument("conjugated: wrong number of endomorphisms");
    std::vector<std::vector<Vec>> images(static_cast<std::size_t>(arity_));
    for (int p = 0; p < arity_; ++p)
        for (int i = 0; i < dim_; ++i)
            images[static_cast<std::size_t>(p)].push_back(basis_image(ins[static_cast<std::size_t>(p)], i));
    return tabulate(arity_, dim_, [&](std::span<const int> idx) {
        std::vector<Vec> args;
        for (int p = 0; p < arity_; ++p)
            args.push_back(images[static_cast<std::size_t>(p)][static_cast<std::size_t>(idx[static_cast<std::size_t>(p)])]);
        return out(apply(args));
    });
}

MultiMap MultiMap::after(const MultiMap& g) const
{
    if (arity_ != 1 || g.arity_ != 1 || g.dim_ != dim_)
        throw std::invalid_argument("after: endomorphisms of equal dimension required");
    MultiMap r(1, dim_);
    for (int i = 0; i < dim_; ++i) {
        const Vec v = (*this)(basis_image(g, i));
        auto to = r.value_at(static_cast<std::size_t>(i));
        std::copy(v.begin(), v.end(), to.begin());
    }
    return r;
}

void MultiMap::check_same_shape(const MultiMap& o) const
{
    if (o.arity_ != arity_ || o.dim_ != dim_)
        throw std::invalid_argument("MultiMap: shape mismatch");
}

MultiMap& MultiMap::operator+=(const MultiMap& o)
{
    check_same_shape(o);
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (o.t_[i] != 0)
            t_[i] += o.t_[i];
    return *this;
}

MultiMap& MultiMap::operator-=(const MultiMap& o)
{
    check_same_shape(o);
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (o.t_[i] != 0)
            t_[i] -= o.t_[i];
    return *this;
}

MultiMap operator*(const Rational& s, MultiMap m)
{
    for (auto& x : m.t_)
        x *= s;
    return m;
}

MultiMap MultiMap::tabulate(int arity, int dim, const std::function<Vec(std::span<const int>)>& f)
{
    return fill<true>(arity, dim, f);
}

std::vector<MultiMap> symmetric_bilinear_basis(int dim)
{
    std::vector<MultiMap> out;
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                MultiMap m(2, dim);
                const int a[2] = {i, j}, b[2] = {j, i};
                m.at(a, k) = 1;
                m.at(b, k) = 1;
                out.push_back(std::move(m));
            }
    return out;
}

std::vector<MultiMap> skew_bilinear_basis(int dim)
{
    std::vector<MultiMap> out;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                MultiMap m(2, dim);
                const int a[2] = {i, j}, b[2] = {j, i};
                m.at(a, k) = 1;
                m.at(b, k) = -1;
                out.push_back(std::move(m));
            }
    return out;
}

std::vector<MultiMap> bilinear_basis(int dim)
{
    std::vector<MultiMap> out;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                MultiMap m(2, dim);
                const int a[2] = {i, j};
                m.at(a, k) = 1;
                out.push_back(std::move(m));
            }
    return out;
}

MultiMap combine(const std::vector<MultiMap>& maps, const Vec& coeffs)
{
    if (maps.empty() || maps.size() != coeffs.size())
        throw std::invalid_argument("combine: need one coefficient per map");
    MultiMap r(maps.front().arity(), maps.front().dim());
    for (std::size_t i = 0; i < maps.size(); ++i)
        if (coeffs[i] != 0)
            r += coeffs[i] * maps[i];
    return r;
}

std::vector<MultiMap> solve_linear(const std::vector<MultiMap>& gens,
                                   const std::function<MultiMap(const MultiMap&)>& f)
{
    if (gens.empty())
        return {};
    std::vector<MultiMap> images(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g)
        images[g] = f(gens[g]);
    const std::size_t entries = images.front().data().size();
    Matrix m(0, gens.size());
    for (std::size_t r = 0; r < entries; ++r) {
        Vec row(gens.size());
        bool nonzero = false;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            row[g] = images[g].data()[r];
            nonzero = nonzero || row[g] != 0;
        }
        if (nonzero)
            m.append_row(row);
    }
    std::vector<MultiMap> out;
    for (const auto& v : kernel_basis(m))
        out.push_back(combine(gens, v));
    return out;
}

namespace reference {

MultiMap tabulate_serial(int arity, int dim, const std::function<Vec(std::span<const int>)>& f)
{
    return fill<false>(arity, dim, f);
}

}  // namespace reference

}  // namespace wassoc
