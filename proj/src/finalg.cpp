#include "wassoc/finalg.hpp"

#include <set>
#include <stdexcept>

namespace wassoc {

FinAlg::FinAlg(MultiMap product) : c_(std::move(product))
{
    if (c_.arity() != 2)
        throw std::invalid_argument("FinAlg: product must be bilinear");
}

void FinAlg::set(int i, int j, const Vec& value)
{
    if (value.size() != static_cast<std::size_t>(dim()))
        throw std::invalid_argument("FinAlg::set: value dimension mismatch");
    const int idx[2] = {i, j};
    auto v = c_.value(idx);
    std::copy(value.begin(), value.end(), v.begin());
}

void FinAlg::set(int i, int j, int k, const Rational& c)
{
    const int idx[2] = {i, j};
    c_.at(idx, k) = c;
}

Rational FinAlg::coeff(int i, int j, int k) const
{
    const int idx[2] = {i, j};
    return c_.at(idx, k);
}

std::span<const Rational> FinAlg::basis_product(int i, int j) const
{
    const int idx[2] = {i, j};
    return c_.value(idx);
}

FinAlg& FinAlg::operator+=(const FinAlg& o)
{
    c_ += o.c_;
    return *this;
}

namespace {

Vec eval_tree(const FinAlg& alg, const MultiMap* formal, const TreeCode& code, std::size_t& pos,
              std::span<const int> idx)
{
    const int8_t head = code[pos++];
    if (head > 0)
        return alg.basis(idx[static_cast<std::size_t>(head - 1)]);
    Vec a = eval_tree(alg, formal, code, pos, idx);
    Vec b = eval_tree(alg, formal, code, pos, idx);
    if (head == kMu)
        return alg.mul(a, b);
    if (formal == nullptr)
        throw std::invalid_argument("evaluate: identity uses the formal operation but none was given");
    return (*formal)(a, b);
}

}  // namespace

MultiMap evaluate(const FinAlg& alg, const MultilinearIdentity& e, const MultiMap* formal)
{
    const int n = e.arity();
    if (formal != nullptr && (formal->arity() != 2 || formal->dim() != alg.dim()))
        throw std::invalid_argument("evaluate: formal operation has the wrong shape");
    for (const auto& [code, c] : e.terms())
        for (int8_t x : code)
            if (x > n)
                throw std::invalid_argument("evaluate: leaf label exceeds arity");
    return MultiMap::tabulate(n, alg.dim(), [&](std::span<const int> idx) {
        Vec out = zero_vec(static_cast<std::size_t>(alg.dim()));
        for (const auto& [code, c] : e.terms()) {
            std::size_t pos = 0;
            axpy(out, c, eval_tree(alg, formal, code, pos, idx));
        }
        return out;
    });
}

std::string Witness::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < indices.size(); ++i)
        s += (i ? ",e" : "e") + std::to_string(indices[i] + 1);
    s += ") -> (";
    for (std::size_t k = 0; k < value.size(); ++k)
        s += (k ? ", " : "") + pretty_rational(value[k]);
    return s + ")";
}

std::optional<Witness> find_violation(const FinAlg& alg, const MultilinearIdentity& e)
{
    const MultiMap m = evaluate(alg, e);
    auto idx = m.first_nonzero();
    if (!idx)
        return std::nullopt;
    auto v = m.value(*idx);
    return Witness{*idx, Vec(v.begin(), v.end())};
}

bool satisfies(const FinAlg& alg, const MultilinearIdentity& e)
{
    return evaluate(alg, e).is_zero();
}

bool is_weakly_associative(const FinAlg& alg) { return satisfies(alg, wa_expression()); }
bool is_associative(const FinAlg& alg) { return satisfies(alg, associator()); }
bool is_flexible(const FinAlg& alg) { return satisfies(alg, flexible_expression()); }
bool is_lie_admissible(const FinAlg& alg) { return satisfies(alg, lie_admissible_expression()); }

bool is_commutative(const FinAlg& alg)
{
    return alg.product().is_symmetric();
}

bool is_anticommutative(const FinAlg& alg)
{
    return alg.product().is_skew();
}

bool satisfies_jacobi(const FinAlg& alg)
{
    return satisfies(alg, jacobi_expression());
}

bool is_jordan(const FinAlg& alg)
{
    return is_flexible(alg) && satisfies(alg, jordan_expression());
}

Polarization polarize(const FinAlg& alg)
{
    return {FinAlg(alg.product().sym_part()), FinAlg(alg.product().skew_part())};
}

FinAlg depolarize(const FinAlg& bullet, const FinAlg& bracket)
{
    if (bullet.dim() != bracket.dim())
        throw std::invalid_argument("depolarize: dimension mismatch");
    const int n = bullet.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                auto pair = [&] { return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")"; };
                if (bullet.coeff(i, j, k) != bullet.coeff(j, i, k))
                    throw std::invalid_argument("depolarize: bullet not commutative on " + pair());
                if (bracket.coeff(i, j, k) != -bracket.coeff(j, i, k))
                    throw std::invalid_argument("depolarize: bracket not anticommutative on " + pair());
            }
    return bullet + bracket;
}

MultiMap poisson_leibniz_defect(const FinAlg& bullet, const FinAlg& bracket)
{
    if (bullet.dim() != bracket.dim())
        throw std::invalid_argument("poisson_leibniz_defect: dimension mismatch");
    return MultiMap::tabulate(3, bullet.dim(), [&](std::span<const int> idx) {
        const Vec x = bullet.basis(idx[0]), y = bullet.basis(idx[1]), z = bullet.basis(idx[2]);
        return bracket.mul(bullet.mul(x, y), z) - bullet.mul(x, bracket.mul(y, z)) - bullet.mul(bracket.mul(x, z), y);
    });
}

bool is_nonassociative_poisson(const FinAlg& bullet, const FinAlg& bracket)
{
    return is_commutative(bullet) && is_anticommutative(bracket) && satisfies_jacobi(bracket) &&
           poisson_leibniz_defect(bullet, bracket).is_zero();
}

bool is_derivation(const FinAlg& alg, const MultiMap& f)
{
    if (f.arity() != 1 || f.dim() != alg.dim())
        throw std::invalid_argument("is_derivation: f must be an endomorphism of the algebra");
    const int n = alg.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec x = alg.basis(i), y = alg.basis(j);
            if (alg.mul(f(x), y) + alg.mul(x, f(y)) != f(alg.mul(x, y)))
                return false;
        }
    return true;
}

MultiMap inner_commutator(const FinAlg& alg, const Vec& x)
{
    return MultiMap::tabulate(1, alg.dim(), [&](std::span<const int> idx) {
        const Vec y = alg.basis(idx[0]);
        return alg.mul(x, y) - alg.mul(y, x);
    });
}

namespace {

int json_index(const nlohmann::json& v, int dim, const char* what)
{
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("algebra JSON: '") + what + "' must be an integer");
    const auto i = v.get<long long>();
    if (i < 1 || i > dim)
        throw std::invalid_argument(std::string("algebra JSON: '") + what + "' out of range");
    return static_cast<int>(i - 1);
}

Rational json_rational(const nlohmann::json& v)
{
    if (!v.is_string())
        throw std::invalid_argument("JSON: rationals must be \"p/q\" strings");
    return parse_rational(v.get<std::string>());
}

}  // namespace

FinAlg algebra_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw std::invalid_argument("algebra JSON: missing integer 'dim'");
    const auto dim = j["dim"].get<long long>();
    if (dim < 0 || dim > 64)
        throw std::invalid_argument("algebra JSON: 'dim' out of range");
    FinAlg alg(static_cast<int>(dim));
    if (!j.contains("products"))
        return alg;
    if (!j["products"].is_array())
        throw std::invalid_argument("algebra JSON: 'products' must be an array");
    std::set<std::pair<int, int>> seen;
    for (const auto& p : j["products"]) {
        if (!p.is_object() || !p.contains("i") || !p.contains("j") || !p.contains("out"))
            throw std::invalid_argument("algebra JSON: product entries need i, j and out");
        const int i = json_index(p["i"], alg.dim(), "i");
        const int jj = json_index(p["j"], alg.dim(), "j");
        if (!seen.insert({i, jj}).second)
            throw std::invalid_argument("algebra JSON: duplicate product entry");
        if (!p["out"].is_array())
            throw std::invalid_argument("algebra JSON: 'out' must be an array");
        for (const auto& o : p["out"]) {
            if (!o.is_object() || !o.contains("k") || !o.contains("c"))
                throw std::invalid_argument("algebra JSON: out entries need k and c");
            const int k = json_index(o["k"], alg.dim(), "k");
            alg.set(i, jj, k, alg.coeff(i, jj, k) + json_rational(o["c"]));
        }
    }
    return alg;
}

nlohmann::json algebra_to_json(const FinAlg& alg)
{
    nlohmann::json products = nlohmann::json::array();
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j) {
            nlohmann::json out = nlohmann::json::array();
            for (int k = 0; k < alg.dim(); ++k)
                if (alg.coeff(i, j, k) != 0)
                    out.push_back({{"k", k + 1}, {"c", format_rational(alg.coeff(i, j, k))}});
            if (!out.empty())
                products.push_back({{"i", i + 1}, {"j", j + 1}, {"out", out}});
        }
    return {{"dim", alg.dim()}, {"products", products}};
}

namespace {

nlohmann::json nest(const MultiMap& m, std::vector<int>& idx)
{
    nlohmann::json arr = nlohmann::json::array();
    if (static_cast<int>(idx.size()) == m.arity()) {
        for (const auto& x : m.value(idx))
            arr.push_back(format_rational(x));
        return arr;
    }
    for (int i = 0; i < m.dim(); ++i) {
        idx.push_back(i);
        arr.push_back(nest(m, idx));
        idx.pop_back();
    }
    return arr;
}

void unnest(const nlohmann::json& j, MultiMap& m, std::vector<int>& idx)
{
    if (!j.is_array() || j.size() != static_cast<std::size_t>(m.dim()))
        throw std::invalid_argument("tensor JSON: expected an array of length dim");
    if (static_cast<int>(idx.size()) == m.arity()) {
        auto v = m.value(idx);
        for (int k = 0; k < m.dim(); ++k)
            v[static_cast<std::size_t>(k)] = json_rational(j[static_cast<std::size_t>(k)]);
        return;
    }
    for (int i = 0; i < m.dim(); ++i) {
        idx.push_back(i);
        unnest(j[static_cast<std::size_t>(i)], m, idx);
        idx.pop_back();
    }
}

}  // namespace

nlohmann::json multimap_to_json(const MultiMap& m)
{
    std::vector<int> idx;
    return nest(m, idx);
}

MultiMap multimap_from_json(const nlohmann::json& j, int arity, int dim)
{
    MultiMap m(arity, dim);
    std::vector<int> idx;
    unnest(j, m, idx);
    return m;
}

}  // namespace wassoc
