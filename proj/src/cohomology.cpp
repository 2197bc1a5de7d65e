#include "wassoc/cohomology.hpp"

#include <algorithm>
#include <set>

namespace wassoc {

namespace {

using Id = MultilinearIdentity;

Id x(int i) { return Id::leaf(i); }

void require_dim(const CochainContext& ctx, const MultiMap& m, const char* who)
{
    if (m.dim() != ctx.dim())
        throw std::invalid_argument(std::string(who) + ": cochain dimension " + std::to_string(m.dim()) +
                                    " does not match the algebra dimension " + std::to_string(ctx.dim()));
}

// e_i * v with the product given by structure constants.
Vec left_mul(const FinAlg& a, int i, std::span<const Rational> v)
{
    const int n = a.dim();
    Vec out = zero_vec(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        const Rational& vm = v[static_cast<std::size_t>(m)];
        if (vm == 0)
            continue;
        const auto p = a.basis_product(i, m);
        for (int k = 0; k < n; ++k)
            out[static_cast<std::size_t>(k)] += vm * p[static_cast<std::size_t>(k)];
    }
    return out;
}

// v * e_j.
Vec right_mul(const FinAlg& a, std::span<const Rational> v, int j)
{
    const int n = a.dim();
    Vec out = zero_vec(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        const Rational& vm = v[static_cast<std::size_t>(m)];
        if (vm == 0)
            continue;
        const auto p = a.basis_product(m, j);
        for (int k = 0; k < n; ++k)
            out[static_cast<std::size_t>(k)] += vm * p[static_cast<std::size_t>(k)];
    }
    return out;
}

// phi with argument `slot` replaced by the vector v, the others basis indices.
Vec apply_with(const MultiMap& phi, std::vector<int> idx, std::size_t slot, std::span<const Rational> v)
{
    Vec out = zero_vec(static_cast<std::size_t>(phi.dim()));
    for (std::size_t m = 0; m < v.size(); ++m) {
        if (v[m] == 0)
            continue;
        idx[slot] = static_cast<int>(m);
        const auto val = phi.value(idx);
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] += v[m] * val[k];
    }
    return out;
}

void add_scaled(Vec& out, int sign, const Vec& v)
{
    for (std::size_t k = 0; k < out.size(); ++k)
        if (sign > 0)
            out[k] += v[k];
        else
            out[k] -= v[k];
}

}  // namespace

CochainContext CochainContext::poisson(const FinAlg& bullet, const FinAlg& bracket)
{
    if (bullet.dim() != bracket.dim())
        throw std::invalid_argument("CochainContext: bullet and bracket dimensions differ");
    if (!is_nonassociative_poisson(bullet, bracket))
        throw std::invalid_argument("CochainContext: (bullet, bracket) is not a nonassociative Poisson pair");
    CochainContext ctx(depolarize(bullet, bracket));
    ctx.bullet_ = bullet;
    ctx.bracket_ = bracket;
    return ctx;
}

const FinAlg& CochainContext::bullet() const
{
    if (!bullet_)
        throw std::logic_error("CochainContext: no Poisson structure");
    return *bullet_;
}

const FinAlg& CochainContext::bracket() const
{
    if (!bracket_)
        throw std::logic_error("CochainContext: no Poisson structure");
    return *bracket_;
}

MultiMap hochschild_delta(const CochainContext& ctx, const MultiMap& phi)
{
    const int k = phi.arity();
    if (k < 1)
        throw std::invalid_argument("hochschild_delta: cochain arity must be at least 1");
    require_dim(ctx, phi, "hochschild_delta");
    const FinAlg& a = ctx.alg();
    return MultiMap::tabulate(k + 1, ctx.dim(), [&](std::span<const int> xs) {
        const auto ku = static_cast<std::size_t>(k);
        Vec out = left_mul(a, xs[0], phi.value(xs.subspan(1)));
        std::vector<int> idx(ku);
        for (std::size_t i = 1; i <= ku; ++i) {
            // merge X_i X_{i+1} (positions i-1, i)
            for (std::size_t p = 0; p + 1 < i; ++p)
                idx[p] = xs[p];
            for (std::size_t p = i; p < ku; ++p)
                idx[p] = xs[p + 1];
            add_scaled(out, i % 2 == 0 ? 1 : -1, apply_with(phi, idx, i - 1, a.basis_product(xs[i - 1], xs[i])));
        }
        add_scaled(out, (k + 1) % 2 == 0 ? 1 : -1, right_mul(a, phi.value(xs.first(ku)), xs[ku]));
        return out;
    });
}

MultiMap wa_delta0(const CochainContext& ctx, const Vec& v)
{
    if (v.size() != static_cast<std::size_t>(ctx.dim()))
        throw std::invalid_argument("wa_delta0: element has the wrong dimension");
    return inner_commutator(ctx.alg(), v);
}

MultiMap wa_delta1(const CochainContext& ctx, const MultiMap& f)
{
    if (f.arity() != 1)
        throw std::invalid_argument("wa_delta1: expected an endomorphism");
    return hochschild_delta(ctx, f);
}

MultiMap wa_delta2(const CochainContext& ctx, const MultiMap& phi)
{
    if (phi.arity() != 2)
        throw std::invalid_argument("wa_delta2: expected a bilinear map");
    return hochschild_delta(ctx, phi).permuted(v_wa());
}

MultiMap leibniz_defect(const CochainContext& ctx, const MultiMap& psi)
{
    if (psi.arity() != 2)
        throw std::invalid_argument("leibniz_defect: expected a bilinear map");
    require_dim(ctx, psi, "leibniz_defect");
    const FinAlg& a = ctx.alg();
    return MultiMap::tabulate(3, ctx.dim(), [&](std::span<const int> xs) {
        const int yz[2] = {xs[1], xs[2]};
        const int xz[2] = {xs[0], xs[2]};
        Vec out = apply_with(psi, {0, xs[2]}, 0, a.basis_product(xs[0], xs[1]));
        add_scaled(out, -1, left_mul(a, xs[0], psi.value(yz)));
        add_scaled(out, -1, right_mul(a, psi.value(xz), xs[1]));
        return out;
    });
}

bool wa_cocycle2(const CochainContext& ctx, const MultiMap& phi)
{
    return wa_delta2(ctx, phi).is_zero();
}

std::optional<int> multiderivation_failure(const FinAlg& bullet, const MultiMap& cochain)
{
    const int k = cochain.arity();
    if (cochain.dim() != bullet.dim())
        throw std::invalid_argument("multiderivation_failure: dimension mismatch");
    const int n = bullet.dim();
    // Tuples over all slots; slot s gets the product e_i e_j, compared with
    // e_i Phi(..e_j..) + Phi(..e_i..) e_j.
    for (int s = 0; s < k; ++s) {
        const auto su = static_cast<std::size_t>(s);
        for (std::size_t t = 0; t < cochain.tuples(); ++t) {
            std::vector<int> idx = cochain.decode(t);
            if (idx[su] != 0)
                continue;  // the slot value is overwritten below
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Vec lhs = apply_with(cochain, idx, su, bullet.basis_product(i, j));
                    idx[su] = j;
                    add_scaled(lhs, -1, left_mul(bullet, i, cochain.value(idx)));
                    idx[su] = i;
                    add_scaled(lhs, -1, right_mul(bullet, cochain.value(idx), j));
                    if (!is_zero(lhs))
                        return s + 1;
                }
        }
    }
    return std::nullopt;
}

bool is_multiderivation(const FinAlg& bullet, const MultiMap& cochain)
{
    return !multiderivation_failure(bullet, cochain).has_value();
}

std::vector<MultiMap> skew_cochain_basis(int arity, int dim)
{
    if (arity < 1)
        throw std::invalid_argument("skew_cochain_basis: arity must be positive");
    std::vector<MultiMap> out;
    const MultiMap shape(arity, dim);
    const auto& perms = all_perms(arity);
    for (std::size_t t = 0; t < shape.tuples(); ++t) {
        const std::vector<int> idx = shape.decode(t);
        if (!std::is_sorted(idx.begin(), idx.end()) || std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            continue;
        for (int m = 0; m < dim; ++m) {
            MultiMap b(arity, dim);
            for (const auto& s : perms) {
                std::vector<int> p(idx.size());
                for (int i = 1; i <= arity; ++i)
                    p[static_cast<std::size_t>(i - 1)] = idx[static_cast<std::size_t>(s(i) - 1)];
                b.at(p, m) = s.sign();
            }
            out.push_back(std::move(b));
        }
    }
    return out;
}

std::vector<MultiMap> multiderivation_basis(const FinAlg& bullet, int arity)
{
    const int n = bullet.dim();
    // Skew maps are determined by the first slot.
    return solve_linear(skew_cochain_basis(arity, n), [&](const MultiMap& phi) {
        return MultiMap::tabulate(arity + 1, n, [&](std::span<const int> xs) {
            std::vector<int> idx(xs.begin() + 1, xs.end());
            Vec out = apply_with(phi, idx, 0, bullet.basis_product(xs[0], xs[1]));
            idx[0] = xs[1];
            add_scaled(out, -1, left_mul(bullet, xs[0], phi.value(idx)));
            idx[0] = xs[0];
            add_scaled(out, -1, right_mul(bullet, phi.value(idx), xs[1]));
            return out;
        });
    });
}

MultiMap lichnerowicz_delta(const CochainContext& ctx, const MultiMap& cochain)
{
    if (!ctx.has_poisson())
        throw std::invalid_argument("lichnerowicz_delta: context has no Poisson structure");
    require_dim(ctx, cochain, "lichnerowicz_delta");
    const int k = cochain.arity();
    if (k >= 2 && !cochain.is_skew())
        throw CochainError("lichnerowicz_delta: cochain is not skew-symmetric", 0);
    if (const auto bad = multiderivation_failure(ctx.bullet(), cochain))
        throw CochainError("lichnerowicz_delta: cochain is not a derivation in argument " + std::to_string(*bad), *bad);
    const FinAlg& br = ctx.bracket();
    const auto ku = static_cast<std::size_t>(k);
    return MultiMap::tabulate(k + 1, ctx.dim(), [&](std::span<const int> xs) {
        Vec out = zero_vec(static_cast<std::size_t>(ctx.dim()));
        std::vector<int> rest(ku);
        for (std::size_t i = 0; i <= ku; ++i) {
            for (std::size_t p = 0, q = 0; p <= ku; ++p)
                if (p != i)
                    rest[q++] = xs[p];
            add_scaled(out, i % 2 == 0 ? 1 : -1, left_mul(br, xs[i], cochain.value(rest)));
        }
        for (std::size_t i = 0; i <= ku; ++i)
            for (std::size_t j = i + 1; j <= ku; ++j) {
                std::size_t q = 1;
                for (std::size_t p = 0; p <= ku; ++p)
                    if (p != i && p != j)
                        rest[q++] = xs[p];
                add_scaled(out, (i + j) % 2 == 0 ? 1 : -1, apply_with(cochain, rest, 0, br.basis_product(xs[i], xs[j])));
            }
        return out;
    });
}

GroupAlgebraElement cochain3_vector()
{
    return GroupAlgebraElement(3, {{s3::id(), 1}, {s3::t12(), 1}, {s3::t23(), -1}, {s3::c(), -1}});
}

bool operadic_cochain3_check(const MultiMap& psi)
{
    if (psi.arity() != 3)
        throw std::invalid_argument("operadic_cochain3_check: expected a trilinear map");
    return psi.permuted(cochain3_vector()).is_zero();
}

std::vector<GroupAlgebraElement> cochain4_vectors()
{
    auto p = [](const char* cyc) { return Perm::parse_cycles(cyc, 4); };
    return {
        GroupAlgebraElement(4, {{p("Id"), 1}, {p("(14)"), 1}, {p("(234)"), -1}, {p("(1432)"), -1}}),
        GroupAlgebraElement(4, {{p("Id"), 1}, {p("(24)"), 1}, {p("(34)"), -1}, {p("(243)"), -1}}),
    };
}

bool operadic_cochain4_check(const MultiMap& theta)
{
    if (theta.arity() != 4)
        throw std::invalid_argument("operadic_cochain4_check: expected a 4-linear map");
    for (const auto& v : cochain4_vectors())
        if (!theta.permuted(v).is_zero())
            return false;
    return true;
}

std::vector<GroupAlgebraElement> cochain4_projectors()
{
    const auto& perms = all_perms(4);
    const auto vs = cochain4_vectors();
    Matrix m(2 * perms.size(), perms.size());
    for (std::size_t c = 0; c < perms.size(); ++c)
        for (std::size_t h = 0; h < vs.size(); ++h) {
            const Vec col = (GroupAlgebraElement(perms[c]) * vs[h]).coordinates();
            for (std::size_t r = 0; r < perms.size(); ++r)
                m(h * perms.size() + r, c) = col[r];
        }
    std::vector<GroupAlgebraElement> out;
    for (const auto& v : kernel_basis(m))
        out.push_back(GroupAlgebraElement::from_coordinates(4, v));
    return out;
}

std::string delta3_unknown_label(int index)
{
    if (index < 0 || index >= kDelta3Unknowns)
        throw std::out_of_range("delta3_unknown_label: index out of range");
    const char family = static_cast<char>('a' + index / 24);
    return std::string(1, family) + "_" + all_perms(4)[static_cast<std::size_t>(index % 24)].one_line();
}

namespace {

// delta_WA^2 phi2 as an arity-3 expression with one formal operation.
const Id& wa_delta2_expression()
{
    static const Id e = [] {
        const Id h = mu(x(1), phi(x(2), x(3))) - phi(mu(x(1), x(2)), x(3)) + phi(x(1), mu(x(2), x(3))) -
                     mu(phi(x(1), x(2)), x(3));
        return apply_group_vector(h, v_wa());
    }();
    return e;
}

Vec formal_coordinates(const Id& e)
{
    if (e.is_zero())
        return zero_vec(free_basis(4, 1).size());
    return coordinates(e, 1);
}

}  // namespace

MultilinearIdentity delta3_term(int unknown)
{
    if (unknown < 0 || unknown >= kDelta3Unknowns)
        throw std::out_of_range("delta3_term: unknown index out of range");
    const Perm& s = all_perms(4)[static_cast<std::size_t>(unknown % 24)];
    const Id& t = wa_delta2_expression();
    const Id a = x(s(1)), b = x(s(2)), c = x(s(3)), d = x(s(4));
    switch (unknown / 24) {
    case 0: return mu(a, compose(t, {b, c, d}));
    case 1: return mu(compose(t, {a, b, c}), d);
    case 2: return compose(t, {mu(a, b), c, d});
    case 3: return compose(t, {a, mu(b, c), d});
    default: return compose(t, {a, b, mu(c, d)});
    }
}

std::vector<Vec> delta3_ideal()
{
    const std::vector<Id> rels = {wa_expression()};
    std::vector<Id> gens;
    for (const auto& r : rels) {
        for (int slot = 1; slot <= 3; ++slot) {
            std::vector<Id> args;
            for (int j = 1; j <= 3; ++j) {
                if (j < slot)
                    args.push_back(x(j));
                else if (j == slot)
                    args.push_back(phi(x(j), x(j + 1)));
                else
                    args.push_back(x(j + 1));
            }
            gens.push_back(compose(r, args));
        }
        gens.push_back(phi(r, x(4)));
        gens.push_back(phi(x(4), r));
    }
    std::vector<Vec> rows;
    for (const auto& g : gens)
        for (const auto& s : all_perms(4))
            rows.push_back(formal_coordinates(apply_group_vector(g, GroupAlgebraElement(s))));
    return row_space_basis(rows, free_basis(4, 1).size());
}

Delta3System delta3_system()
{
    const std::size_t rows = free_basis(4, 1).size();
    const auto cols = static_cast<std::size_t>(kDelta3Unknowns);
    Delta3System sys;
    std::vector<Vec> columns(cols);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t j = 0; j < cols; ++j)
        columns[j] = formal_coordinates(delta3_term(static_cast<int>(j)));
    sys.raw = Matrix(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        sys.unknowns.push_back(delta3_unknown_label(static_cast<int>(j)));
        for (std::size_t r = 0; r < rows; ++r)
            sys.raw(r, j) = columns[j][r];
    }
    sys.raw_rows = rows;
    std::set<Vec> distinct;
    for (std::size_t r = 0; r < rows; ++r) {
        Vec v = sys.raw.row_vec(r);
        if (!is_zero(v))
            distinct.insert(std::move(v));
    }
    sys.distinct_rows = distinct.size();
    sys.raw_kernel_dim = kernel_basis(sys.raw).size();

    // M x lies in the ideal iff it is orthogonal to the ideal's orthogonal complement.
    const std::vector<Vec> ideal = delta3_ideal();
    sys.ideal_dim = ideal.size();
    const std::vector<Vec> complement = ideal.empty() ? std::vector<Vec>{} : kernel_basis(Matrix::from_rows(ideal, rows));
    sys.matrix = Matrix(complement.size(), cols);
    for (std::size_t i = 0; i < complement.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Rational s = 0;
            for (std::size_t r = 0; r < rows; ++r)
                if (complement[i][r] != 0 && columns[j][r] != 0)
                    s += complement[i][r] * columns[j][r];
            sys.matrix(i, j) = s;
        }
    if (ideal.empty())
        sys.matrix = sys.raw;
    sys.kernel = kernel_basis(sys.matrix);
    return sys;
}

std::vector<MultiMap> delta3_terms(const CochainContext& ctx, const MultiMap& phi3)
{
    if (phi3.arity() != 3)
        throw std::invalid_argument("delta3_terms: expected a trilinear map");
    require_dim(ctx, phi3, "delta3_terms");
    const FinAlg& a = ctx.alg();
    std::vector<MultiMap> out;
    out.reserve(static_cast<std::size_t>(kDelta3Unknowns));
    for (int u = 0; u < kDelta3Unknowns; ++u) {
        const Perm& s = all_perms(4)[static_cast<std::size_t>(u % 24)];
        const int family = u / 24;
        out.push_back(MultiMap::tabulate(4, ctx.dim(), [&](std::span<const int> xs) {
            auto at = [&](int i) { return xs[static_cast<std::size_t>(s(i) - 1)]; };
            switch (family) {
            case 0: {
                const int args[3] = {at(2), at(3), at(4)};
                return left_mul(a, at(1), phi3.value(args));
            }
            case 1: {
                const int args[3] = {at(1), at(2), at(3)};
                return right_mul(a, phi3.value(args), at(4));
            }
            case 2: return apply_with(phi3, {0, at(3), at(4)}, 0, a.basis_product(at(1), at(2)));
            case 3: return apply_with(phi3, {at(1), 0, at(4)}, 1, a.basis_product(at(2), at(3)));
            default: return apply_with(phi3, {at(1), at(2), 0}, 2, a.basis_product(at(3), at(4)));
            }
        }));
    }
    return out;
}

MultiMap wa_delta3(const CochainContext& ctx, const MultiMap& phi3, const Vec& coeffs)
{
    if (coeffs.size() != static_cast<std::size_t>(kDelta3Unknowns))
        throw std::invalid_argument("wa_delta3: expected " + std::to_string(kDelta3Unknowns) + " coefficients");
    return combine(delta3_terms(ctx, phi3), coeffs);
}

std::vector<bool> delta3_annihilates(const CochainContext& ctx, const MultiMap& phi2, const std::vector<Vec>& coeffs)
{
    const auto terms = delta3_terms(ctx, wa_delta2(ctx, phi2));
    std::vector<bool> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs)
        out.push_back(combine(terms, c).is_zero());
    return out;
}

}  // namespace wassoc
