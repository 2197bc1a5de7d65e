#include "wassoc/deform.hpp"

#include "wassoc/cohomology.hpp"
#include "wassoc/corpus.hpp"

namespace wassoc {

namespace {

// (X,Y,Z) -> p(X, q(Y,Z)) - p(q(X,Y), Z)
MultiMap cross_associator(const MultiMap& p, const MultiMap& q)
{
    const int n = p.dim();
    return MultiMap::tabulate(3, n, [&](std::span<const int> xs) {
        const auto d = static_cast<std::size_t>(n);
        const Vec x = unit_vec(d, static_cast<std::size_t>(xs[0]));
        const Vec y = unit_vec(d, static_cast<std::size_t>(xs[1]));
        const Vec z = unit_vec(d, static_cast<std::size_t>(xs[2]));
        Vec out = p(x, q(y, z));
        const Vec s = p(q(x, y), z);
        for (std::size_t i = 0; i < d; ++i)
            out[i] -= s[i];
        return out;
    });
}

MultiMap random_span(std::mt19937& rng, const std::vector<MultiMap>& basis, int dim)
{
    std::uniform_int_distribution<int> c(-2, 2);
    MultiMap m(2, dim);
    for (const auto& b : basis)
        m += Rational(c(rng)) * b;
    return m;
}

void require_bilinear(const MultiMap& m, int dim, const std::string& what)
{
    if (m.arity() != 2 || m.dim() != dim)
        throw std::invalid_argument(what + ": expected a bilinear map on dimension " + std::to_string(dim));
}

}  // namespace

TruncatedDeformation::TruncatedDeformation(FinAlg b, std::vector<MultiMap> t) : base(std::move(b)), terms(std::move(t))
{
    for (const auto& m : terms)
        require_bilinear(m, base.dim(), "TruncatedDeformation");
}

MultiMap TruncatedDeformation::coefficient(int k) const
{
    if (k < 0)
        throw std::out_of_range("TruncatedDeformation: negative order");
    if (k == 0)
        return base.product();
    if (k > order())
        return MultiMap(2, base.dim());
    return terms[static_cast<std::size_t>(k - 1)];
}

GaugeTransform::GaugeTransform(std::vector<MultiMap> hs) : h(std::move(hs))
{
    for (const auto& m : h)
        if (m.arity() != 1 || m.dim() != h.front().dim())
            throw std::invalid_argument("GaugeTransform: expected endomorphisms of one space");
}

GaugeTransform GaugeTransform::identity(int dim, int order)
{
    return GaugeTransform(std::vector<MultiMap>(static_cast<std::size_t>(order), MultiMap(1, dim)));
}

int GaugeTransform::dim() const
{
    if (h.empty())
        throw std::logic_error("GaugeTransform: order 0 carries no dimension");
    return h.front().dim();
}

std::vector<MultiMap> GaugeTransform::series() const
{
    std::vector<MultiMap> f{MultiMap::identity(dim())};
    f.insert(f.end(), h.begin(), h.end());
    return f;
}

std::vector<MultiMap> GaugeTransform::inverse_series() const
{
    std::vector<MultiMap> g{MultiMap::identity(dim())};
    for (int n = 1; n <= order(); ++n) {
        MultiMap s(1, dim());
        for (int i = 1; i <= n; ++i)
            s -= h[static_cast<std::size_t>(i - 1)].after(g[static_cast<std::size_t>(n - i)]);
        g.push_back(s);
    }
    return g;
}

GaugeTransform GaugeTransform::then(const GaugeTransform& first, const GaugeTransform& second)
{
    if (first.order() != second.order() || first.dim() != second.dim())
        throw std::invalid_argument("GaugeTransform::then: orders or dimensions differ");
    const auto a = first.series();
    const auto b = second.series();
    std::vector<MultiMap> out;
    for (int n = 1; n <= first.order(); ++n) {
        MultiMap s(1, first.dim());
        for (int i = 0; i <= n; ++i)
            s += b[static_cast<std::size_t>(i)].after(a[static_cast<std::size_t>(n - i)]);
        out.push_back(s);
    }
    return GaugeTransform(std::move(out));
}

MultiMap wa_defect(const TruncatedDeformation& def, int k)
{
    if (k < 1 || k > def.order())
        throw std::out_of_range("wa_defect: order " + std::to_string(k) + " outside 1.." + std::to_string(def.order()));
    MultiMap a(3, def.base.dim());
    for (int i = 0; i <= k; ++i)
        a += cross_associator(def.coefficient(i), def.coefficient(k - i));
    return a.permuted(v_wa());
}

std::optional<int> first_wa_failure(const TruncatedDeformation& def)
{
    for (int k = 1; k <= def.order(); ++k)
        if (!wa_defect(def, k).is_zero())
            return k;
    return std::nullopt;
}

bool is_wa_deformation(const TruncatedDeformation& def)
{
    return !first_wa_failure(def);
}

TruncatedDeformation gauge(const TruncatedDeformation& def, const GaugeTransform& g)
{
    if (g.order() != def.order())
        throw std::invalid_argument("gauge: gauge order " + std::to_string(g.order()) + " differs from deformation order " +
                                    std::to_string(def.order()));
    if (def.order() == 0)
        return def;
    if (g.dim() != def.base.dim())
        throw std::invalid_argument("gauge: dimensions differ");
    const auto f = g.series();
    const auto inv = g.inverse_series();
    const int n = def.order();
    std::vector<MultiMap> terms;
    for (int k = 1; k <= n; ++k) {
        MultiMap s(2, def.base.dim());
        for (int a = 0; a <= k; ++a)
            for (int b = 0; a + b <= k; ++b)
                for (int c = 0; a + b + c <= k; ++c) {
                    const int d = k - a - b - c;
                    const MultiMap ins[2] = {inv[static_cast<std::size_t>(c)], inv[static_cast<std::size_t>(d)]};
                    s += def.coefficient(b).conjugated(f[static_cast<std::size_t>(a)], ins);
                }
        terms.push_back(s);
    }
    return TruncatedDeformation(def.base, std::move(terms));
}

QuantizationReport quantization(const TruncatedDeformation& def)
{
    if (!is_commutative(def.base))
        throw DeformationError("quantization: the base product is not commutative", 0);
    if (!is_weakly_associative(def.base))
        throw DeformationError("quantization: the base product is not weakly associative", 0);
    if (def.order() < 2)
        throw DeformationError("quantization: needs a deformation of order at least 2", def.order() + 1);
    if (const auto k = first_wa_failure(def))
        throw DeformationError("quantization: not weakly associative at order " + std::to_string(*k), *k);
    QuantizationReport r;
    r.bullet = def.base;
    r.bracket = FinAlg(def.terms[0].skew_part());
    r.lie_admissible = is_lie_admissible(FinAlg(def.terms[0]));
    r.jacobi = satisfies_jacobi(r.bracket);
    r.leibniz = poisson_leibniz_defect(r.bullet, r.bracket).is_zero();
    r.poisson = is_nonassociative_poisson(r.bullet, r.bracket);
    return r;
}

PolarizedDeformation polarized_deformation(const TruncatedDeformation& def)
{
    PolarizedDeformation p;
    for (const auto& phi : def.terms) {
        p.bracket_terms.push_back(phi.skew_part());
        p.bullet_terms.push_back(phi.sym_part());
    }
    return p;
}

MultiMap ncp_defect(const FinAlg& bullet, const FinAlg& bracket, const MultiMap& rho1, const MultiMap& b1)
{
    const int n = bullet.dim();
    if (bracket.dim() != n)
        throw std::invalid_argument("ncp_defect: bullet and bracket dimensions differ");
    require_bilinear(rho1, n, "ncp_defect");
    require_bilinear(b1, n, "ncp_defect");
    if (!is_commutative(bullet))
        throw std::invalid_argument("ncp_defect: the bullet product is not commutative");
    if (!is_anticommutative(bracket) || !satisfies_jacobi(bracket))
        throw std::invalid_argument("ncp_defect: the bracket is not a Lie bracket");
    const MultiMap& dot = bullet.product();
    const MultiMap& br = bracket.product();
    return MultiMap::tabulate(3, n, [&](std::span<const int> xs) {
        const auto d = static_cast<std::size_t>(n);
        const Vec x = unit_vec(d, static_cast<std::size_t>(xs[0]));
        const Vec y = unit_vec(d, static_cast<std::size_t>(xs[1]));
        const Vec z = unit_vec(d, static_cast<std::size_t>(xs[2]));
        const Vec terms[6] = {
            b1(x, dot(y, z)),   dot(b1(x, y), z),   dot(y, b1(x, z)),
            br(x, rho1(y, z)),  rho1(br(x, y), z),  rho1(y, br(x, z)),
        };
        const int sign[6] = {1, -1, -1, 1, -1, -1};
        Vec out = zero_vec(d);
        for (int t = 0; t < 6; ++t)
            for (std::size_t i = 0; i < d; ++i)
                out[i] += sign[t] * terms[t][i];
        return out;
    });
}

NcpReport ncp_report(const FinAlg& bullet, const FinAlg& bracket, const MultiMap& rho1, const MultiMap& b1)
{
    NcpReport r;
    const MultiMap defect = ncp_defect(bullet, bracket, rho1, b1);
    r.witness = defect.first_nonzero();
    r.identity_holds = !r.witness;
    r.b1_lie = b1.is_skew() && satisfies_jacobi(FinAlg(b1));
    r.rho1_jordan = rho1.is_symmetric() && is_jordan(FinAlg(rho1));
    return r;
}

MultiMap polarized_leibniz_order1(const TruncatedDeformation& def)
{
    if (def.order() < 1)
        throw std::invalid_argument("polarized_leibniz_order1: needs a deformation of order at least 1");
    const Polarization p = polarize(def.base);
    const MultiMap& dot = p.bullet.product();
    const MultiMap& br = p.bracket.product();
    const MultiMap b1 = def.terms[0].skew_part();
    const MultiMap rho1 = def.terms[0].sym_part();
    const int n = def.base.dim();
    return MultiMap::tabulate(3, n, [&](std::span<const int> xs) {
        const auto d = static_cast<std::size_t>(n);
        const Vec x = unit_vec(d, static_cast<std::size_t>(xs[0]));
        const Vec y = unit_vec(d, static_cast<std::size_t>(xs[1]));
        const Vec z = unit_vec(d, static_cast<std::size_t>(xs[2]));
        const Vec terms[6] = {
            br(x, rho1(y, z)),  rho1(y, br(x, z)),  rho1(br(x, y), z),
            b1(x, dot(y, z)),   dot(y, b1(x, z)),   dot(b1(x, y), z),
        };
        const int sign[6] = {1, -1, -1, 1, -1, -1};
        Vec out = zero_vec(d);
        for (int t = 0; t < 6; ++t)
            for (std::size_t i = 0; i < d; ++i)
                out[i] += sign[t] * terms[t][i];
        return out;
    });
}

BulletPreservingReport bullet_preserving_check(const TruncatedDeformation& def)
{
    BulletPreservingReport r;
    for (int k = 1; k <= def.order(); ++k)
        if (!def.terms[static_cast<std::size_t>(k - 1)].is_skew())
            r.non_skew_orders.push_back(k);
    if (!r.non_skew_orders.empty())
        return r;
    if (def.order() == 0) {
        r.cocycle = true;
        return r;
    }
    const Polarization p = polarize(def.base);
    const MultiMap& phi1 = def.terms[0];
    r.non_derivation_slot = multiderivation_failure(p.bullet, phi1);
    if (r.non_derivation_slot)
        return r;
    const auto ctx = CochainContext::poisson(p.bullet, p.bracket);
    r.cocycle = lichnerowicz_delta(ctx, phi1).is_zero();
    return r;
}

TruncatedDeformation m3_linear_quantization(int order)
{
    if (order < 1)
        throw std::invalid_argument("m3_linear_quantization: order must be at least 1");
    std::vector<MultiMap> terms{corpus::polynomial_m3_bracket(unit_vec(6, 1)).product()};
    for (int k = 1; k < order; ++k)
        terms.emplace_back(2, 6);
    return TruncatedDeformation(corpus::polynomial_m3(), std::move(terms));
}

TruncatedDeformation leibniz_pencil(std::mt19937& rng, int dim, int order)
{
    const FinAlg bracket = corpus::random_lie(rng, dim);
    const auto sols = corpus::leibniz_products(bracket);
    const FinAlg base = depolarize(FinAlg(random_span(rng, sols, dim)), bracket);
    std::vector<MultiMap> terms;
    for (int k = 0; k < order; ++k)
        terms.push_back(random_span(rng, sols, dim));
    return TruncatedDeformation(base, std::move(terms));
}

GaugeTransform random_gauge(std::mt19937& rng, int dim, int order)
{
    std::uniform_int_distribution<int> c(-2, 2);
    std::vector<MultiMap> h;
    for (int k = 0; k < order; ++k) {
        MultiMap m(1, dim);
        for (std::size_t t = 0; t < m.tuples(); ++t)
            for (auto& x : m.value_at(t))
                x = c(rng);
        h.push_back(m);
    }
    return GaugeTransform(std::move(h));
}

nlohmann::json deformation_to_json(const TruncatedDeformation& def)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& m : def.terms)
        terms.push_back(multimap_to_json(m));
    return {{"base", algebra_to_json(def.base)}, {"terms", terms}};
}

TruncatedDeformation deformation_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("base"))
        throw std::invalid_argument("deformation JSON: missing \"base\"");
    FinAlg base = algebra_from_json(j.at("base"));
    std::vector<MultiMap> terms;
    if (j.contains("terms")) {
        if (!j.at("terms").is_array())
            throw std::invalid_argument("deformation JSON: \"terms\" must be an array");
        for (const auto& t : j.at("terms"))
            terms.push_back(multimap_from_json(t, 2, base.dim()));
    }
    return TruncatedDeformation(std::move(base), std::move(terms));
}

}  // namespace wassoc
