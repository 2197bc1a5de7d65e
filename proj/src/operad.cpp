#include "wassoc/operad.hpp"

#include <stdexcept>

namespace wassoc {

namespace {

using Id = MultilinearIdentity;

Id x(int i) { return Id::leaf(i); }

std::vector<Vec> coordinate_rows(const std::vector<Id>& gens, int formal_ops = 0)
{
    std::vector<Vec> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens)
        if (!g.is_zero())
            rows.push_back(coordinates(g, formal_ops));
    return rows;
}

std::vector<Id> sigma_translates(const std::vector<Id>& gens, int arity)
{
    std::vector<Id> out;
    out.reserve(gens.size() * all_perms(arity).size());
    for (const auto& g : gens)
        for (const auto& s : all_perms(arity))
            out.push_back(apply_group_vector(g, GroupAlgebraElement(s)));
    return out;
}

}  // namespace

RelationSpace::RelationSpace(int arity, const std::vector<Vec>& spanning)
    : arity_(arity), basis_(row_space_basis(spanning, free_basis(arity).size()))
{
}

RelationSpace RelationSpace::from_identities(int arity, const std::vector<Id>& gens)
{
    for (const auto& g : gens)
        if (!g.is_zero() && g.arity() != arity)
            throw std::invalid_argument("RelationSpace: generator of arity " + std::to_string(g.arity()) +
                                        " in an arity-" + std::to_string(arity) + " space");
    return RelationSpace(arity, coordinate_rows(gens));
}

RelationSpace RelationSpace::sigma_closure(int arity, const std::vector<Id>& gens)
{
    return from_identities(arity, sigma_translates(gens, arity));
}

std::vector<Id> RelationSpace::identities() const
{
    std::vector<Id> out;
    for (const auto& v : basis_)
        out.push_back(from_coordinates(arity_, v));
    return out;
}

bool RelationSpace::contains(const Id& e) const
{
    if (e.is_zero())
        return true;
    if (e.arity() != arity_)
        return false;
    return in_span(coordinates(e), basis_);
}

RelationSpace wa_relation_space()
{
    return RelationSpace::sigma_closure(3, {wa_expression()});
}

RelationSpace associative_relation_space()
{
    return RelationSpace::sigma_closure(3, {associator()});
}

RelationSpace free_relation_space(int arity)
{
    const auto n = free_basis(arity).size();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i)
        rows.push_back(unit_vec(n, i));
    return RelationSpace(arity, rows);
}

RelationSpace consequences(const RelationSpace& r)
{
    if (r.arity() != 3)
        throw std::invalid_argument("consequences: expected an arity-3 relation space");
    std::vector<Id> gens;
    for (const auto& rel : r.identities()) {
        for (int slot = 1; slot <= 3; ++slot) {
            std::vector<Id> args;
            for (int j = 1; j <= 3; ++j) {
                if (j < slot)
                    args.push_back(x(j));
                else if (j == slot)
                    args.push_back(mu(x(j), x(j + 1)));
                else
                    args.push_back(x(j + 1));
            }
            gens.push_back(compose(rel, args));
        }
        gens.push_back(mu(rel, x(4)));
        gens.push_back(mu(x(4), rel));
    }
    return RelationSpace::sigma_closure(4, gens);
}

Rational dual_pairing(const Id& u, const Id& w)
{
    if ((!u.is_zero() && u.arity() != 3) || (!w.is_zero() && w.arity() != 3))
        throw std::invalid_argument("dual_pairing: both arguments must have arity 3");
    Rational total = 0;
    for (const auto& [code, cu] : u.terms()) {
        const Rational cw = w.coeff(code);
        if (cw == 0)
            continue;
        const Monomial m = Monomial::from_code(code);
        const int s = m.word.sign();
        const bool left_comb = m.shape == tree_shapes(3)[0];
        total += cu * cw * (left_comb ? s : -s);
    }
    return total;
}

Matrix pairing_gram()
{
    const auto& basis = free_basis(3);
    Matrix g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            g(i, j) = dual_pairing(Id::term(basis[i]), Id::term(basis[j]));
    return g;
}

RelationSpace annihilator(const RelationSpace& r)
{
    if (r.arity() != 3)
        throw std::invalid_argument("annihilator: expected an arity-3 relation space");
    const Matrix g = pairing_gram();
    // u lies in the annihilator iff (G r_i) . u = 0 for every basis vector r_i.
    Matrix constraints(0, g.cols());
    for (const auto& v : r.basis())
        constraints.append_row(g * v);
    if (r.dim() == 0)
        return free_relation_space(3);
    return RelationSpace(3, kernel_basis(constraints));
}

WordPoly letter(int label)
{
    return {{{label}, Rational(1)}};
}

WordPoly word_product(const WordPoly& a, const WordPoly& b)
{
    WordPoly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            std::vector<int> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out[w] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

WordPoly word_sum(const WordPoly& a, const WordPoly& b, const Rational& s)
{
    WordPoly out = a;
    for (const auto& [w, c] : b)
        out[w] += s * c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

WordPoly r3(const WordPoly& a, const WordPoly& b, const WordPoly& c)
{
    auto p = [](const WordPoly& u, const WordPoly& v, const WordPoly& w) { return word_product(word_product(u, v), w); };
    WordPoly out = word_sum(p(a, b, c), p(c, b, a));
    out = word_sum(out, p(a, c, b), -1);
    return word_sum(out, p(b, c, a), -1);
}

Vec word_coordinates(const WordPoly& p)
{
    Vec v = zero_vec(all_perms(4).size());
    for (const auto& [w, c] : p) {
        if (w.size() != 4)
            throw std::invalid_argument("word_coordinates: word of length " + std::to_string(w.size()));
        v[perm_index(Perm(w))] += c;
    }
    return v;
}

namespace {

// Rows of R3 with a product in one slot (slot 0..2) or multiplied by a
// fourth letter on the left (3) or right (4), over all labellings.
std::vector<Vec> r3_placements(const std::vector<int>& kinds)
{
    std::vector<Vec> rows;
    for (int kind : kinds)
        for (const auto& s : all_perms(4)) {
            const WordPoly a = letter(s(1)), b = letter(s(2)), c = letter(s(3)), d = letter(s(4));
            WordPoly p;
            switch (kind) {
            case 0: p = r3(word_product(a, b), c, d); break;
            case 1: p = r3(a, word_product(b, c), d); break;
            case 2: p = r3(a, b, word_product(c, d)); break;
            case 3: p = word_product(d, r3(a, b, c)); break;
            default: p = word_product(r3(a, b, c), d); break;
            }
            rows.push_back(word_coordinates(p));
        }
    return rows;
}

}  // namespace

DualArity4 wass_dual_arity4()
{
    DualArity4 out;
    const std::size_t n = all_perms(4).size();
    out.relations = Matrix::from_rows(r3_placements({0, 1, 2, 3, 4}), n);
    out.rank = rank(out.relations);
    out.kernel = kernel_basis(out.relations);
    out.kernel_dim = out.kernel.size();
    out.reduced_family = Matrix::from_rows(r3_placements({1, 3}), n);
    out.reduced_rank = rank(out.reduced_family);
    return out;
}

std::size_t wass_dual_arity4_dim()
{
    return wass_dual_arity4().kernel_dim;
}

std::vector<NamedCheck> dual_relation_identities()
{
    const WordPoly a = letter(1), b = letter(2), c = letter(3), d = letter(4);
    auto w = [](const WordPoly& u, const WordPoly& v) { return word_product(u, v); };
    std::vector<NamedCheck> out;
    out.push_back({"R3(a,b,c)+R3(a,c,b)", word_sum(r3(a, b, c), r3(a, c, b)).empty()});
    out.push_back({"R3(a,b,c)+R3(c,a,b)-R3(b,a,c)",
                   word_sum(word_sum(r3(a, b, c), r3(c, a, b)), r3(b, a, c), -1).empty()});
    // Cyclic in the three products; with a minus on the last term the sum is 2 R3(a,b,cd).
    out.push_back({"R3(a,bc,d)+R3(a,db,c)+R3(a,cd,b)",
                   word_sum(word_sum(r3(a, w(b, c), d), r3(a, w(d, b), c)), r3(a, w(c, d), b)).empty()});
    {
        WordPoly p = w(r3(a, b, c), d);
        p = word_sum(p, r3(d, w(b, c), a), -1);
        p = word_sum(p, r3(d, w(c, b), a));
        p = word_sum(p, w(d, r3(a, b, c)), -1);
        out.push_back({"R3(a,b,c)d-R3(d,bc,a)+R3(d,cb,a)-dR3(a,b,c)", p.empty()});
    }
    {
        const WordPoly x1 = a, x2 = b, x3 = c, x4 = d;
        WordPoly p = r3(x1, w(x4, x3), x2);
        p = word_sum(p, r3(x1, w(x3, x4), x2), -1);
        p = word_sum(p, r3(x2, w(x3, x4), x1));
        p = word_sum(p, r3(x2, w(x4, x3), x1), -1);
        p = word_sum(p, r3(x3, w(x2, x1), x4));
        p = word_sum(p, r3(x3, w(x1, x2), x4), -1);
        p = word_sum(p, r3(x4, w(x1, x2), x3));
        p = word_sum(p, r3(x4, w(x2, x1), x3), -1);
        out.push_back({"eight-term R3(x1,x4x3,x2) combination", p.empty()});
    }
    return out;
}

std::vector<Rational> generating_function(const std::vector<long>& dims, int order)
{
    if (dims.empty())
        throw std::invalid_argument("generating_function: empty dimension list");
    if (order < 0)
        throw std::invalid_argument("generating_function: negative order");
    std::vector<Rational> f(static_cast<std::size_t>(order) + 1, Rational(0));
    Rational factorial = 1;
    for (int n = 1; n <= order && n <= static_cast<int>(dims.size()); ++n) {
        factorial *= n;
        const Rational sign = (n % 2 == 0) ? 1 : -1;
        f[static_cast<std::size_t>(n)] = sign * Rational(dims[static_cast<std::size_t>(n - 1)]) / factorial;
    }
    return f;
}

std::vector<Rational> compose_series(const std::vector<Rational>& f, const std::vector<Rational>& g, int order)
{
    if (order < 0)
        throw std::invalid_argument("compose_series: negative order");
    if (!g.empty() && g[0] != 0)
        throw std::invalid_argument("compose_series: inner series must have zero constant term");
    const auto len = static_cast<std::size_t>(order) + 1;
    auto truncate = [&](std::vector<Rational> s) {
        s.resize(len, Rational(0));
        return s;
    };
    const std::vector<Rational> gg = truncate(g);
    std::vector<Rational> result(len, Rational(0));
    std::vector<Rational> power(len, Rational(0));
    power[0] = 1;
    for (std::size_t k = 0; k < f.size() && k < len; ++k) {
        if (k > 0) {
            std::vector<Rational> next(len, Rational(0));
            for (std::size_t i = 0; i < len; ++i)
                if (power[i] != 0)
                    for (std::size_t j = 1; i + j < len; ++j)
                        next[i + j] += power[i] * gg[j];
            power = std::move(next);
        }
        if (f[k] != 0)
            for (std::size_t i = 0; i < len; ++i)
                result[i] += f[k] * power[i];
    }
    return result;
}

std::vector<Rational> koszul_composition_check(const std::vector<Rational>& f, const std::vector<Rational>& g, int order)
{
    std::vector<Rational> r = compose_series(f, g, order);
    if (order >= 1)
        r[1] -= 1;
    return r;
}

}  // namespace wassoc
