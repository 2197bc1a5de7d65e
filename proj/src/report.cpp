#include "wassoc/report.hpp"

#include "wassoc/cohomology.hpp"
#include "wassoc/corpus.hpp"
#include "wassoc/deform.hpp"
#include "wassoc/freewa.hpp"
#include "wassoc/homology.hpp"
#include "wassoc/operad.hpp"
#include "wassoc/symgroup.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wassoc {

namespace {

using nlohmann::json;

class Collector {
public:
    Collector(std::string group, std::vector<Check>& out) : group_(std::move(group)), out_(out) {}

    void expect(const std::string& id, const std::string& claim, const std::string& ref, const json& value,
                const json& expected)
    {
        add(id, claim, ref, value == expected ? CheckStatus::pass : CheckStatus::fail, value, expected);
    }
    void holds(const std::string& id, const std::string& claim, const std::string& ref, bool ok,
               const json& detail = nullptr)
    {
        add(id, claim, ref, ok ? CheckStatus::pass : CheckStatus::fail, ok, true, detail);
    }
    void computed(const std::string& id, const std::string& claim, const std::string& ref, const json& value)
    {
        add(id, claim, ref, CheckStatus::computed, value, nullptr);
    }

private:
    void add(const std::string& id, const std::string& claim, const std::string& ref, CheckStatus s,
             const json& value, const json& expected, const json& detail = nullptr)
    {
        out_.push_back({id, group_, claim, ref, s, value, expected, detail});
    }

    std::string group_;
    std::vector<Check>& out_;
};

MultiMap random_map(std::mt19937& rng, int arity, int dim)
{
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    MultiMap m(arity, dim);
    for (std::size_t t = 0; t < m.tuples(); ++t)
        for (auto& x : m.value_at(t))
            x = make_rational(num(rng), den(rng));
    return m;
}

MultiMap random_in_span(std::mt19937& rng, const std::vector<MultiMap>& basis, int arity, int dim)
{
    std::uniform_int_distribution<int> c(-2, 2);
    MultiMap m(arity, dim);
    for (const auto& b : basis)
        m += Rational(c(rng)) * b;
    return m;
}

json rationals(const std::vector<Rational>& v)
{
    json out = json::array();
    for (const auto& q : v)
        out.push_back(pretty_rational(q));
    return out;
}

void symgroup_checks(Collector& c, std::uint32_t)
{
    using namespace s3;
    const auto v = v_wa();
    c.expect("c01.orbit-span-dim", "dim K[O(v_WA)] = 4", "orbit of v_WA", orbit_span_dim(v), 4);
    auto ga = [](std::initializer_list<std::pair<Perm, Rational>> t) { return GroupAlgebraElement(3, t); };
    const std::vector<std::pair<Perm, GroupAlgebraElement>> table{
        {id(), ga({{id(), 1}, {s3::c(), 1}, {t12(), -1}})},  {t12(), ga({{t12(), 1}, {t23(), 1}, {id(), -1}})},
        {t13(), ga({{t13(), 1}, {t12(), 1}, {s3::c(), -1}})}, {t23(), ga({{t23(), 1}, {t13(), 1}, {c2(), -1}})},
        {s3::c(), ga({{s3::c(), 1}, {c2(), 1}, {t13(), -1}})}, {c2(), ga({{c2(), 1}, {id(), 1}, {t23(), -1}})},
    };
    json rows = json::object();
    bool match = true;
    for (const auto& [s, want] : table) {
        const auto row = act(v, s);
        rows[s.cycles()] = row.to_string();
        match = match && row == want;
    }
    c.holds("c01.orbit-table", "the six translates v_WA * sigma match the orbit table", "orbit table of v_WA", match,
            rows);
}

void operad_checks(Collector& c, std::uint32_t)
{
    const RelationSpace r = wa_relation_space();
    const RelationSpace dual = annihilator(r);
    c.expect("c02.wass3", "dim Wass(3) = 8", "dimension of Wass(3)", r.quotient_dim(), 8);
    c.expect("c02.wass-dual3", "dim Wass!(3) = 4", "dimension of Wass!(3)", dual.quotient_dim(), 4);
    const DualArity4 d4 = wass_dual_arity4();
    c.expect("c02.wass-dual4-rank", "the arity-4 dual relation matrix has rank 18", "arity-4 dual relation matrix",
             d4.rank, 18);
    c.expect("c02.wass-dual4-kernel", "the arity-4 dual relation matrix has kernel 6, so dim Wass!(4) = 6",
             "dimension of Wass!(4)", d4.kernel_dim, 6);
    c.holds("c02.wass-dual4-reduced", "the reduced relation family spans the same space as all placements",
            "arity-4 dual relation matrix", d4.reduced_rank == d4.rank, d4.reduced_rank);
    bool syzygies = true;
    json names = json::array();
    for (const auto& s : dual_relation_identities()) {
        syzygies = syzygies && s.holds;
        names.push_back(s.name);
    }
    c.holds("c02.dual-syzygies", "the syzygies used in the reduction hold in the free associative algebra",
            "arity-4 dual relation matrix", syzygies, names);
    const std::size_t wa4 = consequences(r).quotient_dim();
    c.computed("c02.wass4", "dim Wass(4)", "dimension of Wass(4)", wa4);
    const auto f = generating_function({1, 2, 8, static_cast<long>(wa4)}, 4);
    const auto g = generating_function({1, 2, 4, static_cast<long>(d4.kernel_dim)}, 4);
    c.computed("c02.koszul-residual", "coefficients of f_Wass(f_Wass!(x)) - x through order 4",
               "Koszul generating series", rationals(koszul_composition_check(f, g, 4)));

    c.holds("c03.annihilator", "the arity-3 relation spaces of Wass and Wass! are mutual annihilators",
            "pairing of relations", annihilator(dual) == r && dual.dim() == 8, dual.dim());
    c.expect("c03.gram-rank", "the pairing Gram matrix has rank 12", "pairing of relations", rank(pairing_gram()), 12);

    c.expect("c04.ass4", "the consequence machinery gives dim Ass(4) = 24", "associative oracle",
             consequences(associative_relation_space()).quotient_dim(), 24);
}

void freewa_checks(Collector& c, std::uint32_t)
{
    const FreeWA f(8);
    json low = json::array();
    for (int d = 1; d <= 5; ++d)
        low.push_back(f.elements(d).size());
    c.expect("c05.dims-1-5", "(d_1..d_5) = (1,1,1,2,3)", "explicit bases up to degree 5", low, json{1, 1, 1, 2, 3});
    const auto rec = free_wa_dimensions(8);
    bool agree = true;
    json dims = json::array();
    for (int d = 1; d <= 8; ++d) {
        const auto n = static_cast<long>(f.elements(d).size());
        agree = agree && n == rec[static_cast<std::size_t>(d)] &&
                n == static_cast<long>(enumerate_unordered_trees(d).size());
        dims.push_back(n);
    }
    c.holds("c05.recursion", "recursion, construction and unordered-tree enumeration agree through degree 8",
            "dimension recursion", agree, dims);
    c.expect("c05.d6-d7", "d_6 = 6 and d_7 = 11 by unordered-tree brute force", "dimension recursion",
             json{enumerate_unordered_trees(6).size(), enumerate_unordered_trees(7).size()}, json{6, 11});
    const FreeWA f5(5);
    const int x = FreeWA::kGenerator;
    const int x2 = f5.multiply(x, x);
    const int x3 = f5.multiply(x2, x);
    const int x41 = f5.multiply(x3, x);
    const int x42 = f5.multiply(x2, x2);
    std::vector<int> deg5{f5.multiply(x41, x), f5.multiply(x42, x), f5.multiply(x3, x2)};
    json names = json::array();
    for (int id : deg5)
        names.push_back(f5.tree(id));
    std::sort(deg5.begin(), deg5.end());
    c.holds("c05.degree5-basis", "X^4_1 X, X^4_2 X and X^3 X^2 form a basis of degree 5",
            "explicit bases up to degree 5",
            std::adjacent_find(deg5.begin(), deg5.end()) == deg5.end() && deg5 == f5.elements(5), names);
    c.expect("c05.truncated-dim", "the algebra truncated at degree 5 has dimension 9", "truncated free algebra",
             f5.as_truncated_algebra().dim(), 9);
}

void homology_checks(Collector& c, std::uint32_t)
{
    const FreeWA f(6);
    const auto d = free_wa_dimensions(6);
    std::map<std::pair<int, int>, std::size_t> h;
    for (const auto& cell : homology_table(f))
        h[{cell.n, cell.k}] = cell.dim_homology;
    json h0 = json::array(), d0 = json::array(), h1 = json::array();
    for (int k = 0; k <= 6; ++k) {
        h0.push_back(h[{0, k}]);
        d0.push_back(d[static_cast<std::size_t>(k)]);
    }
    for (int k = 0; k <= 5; ++k)
        h1.push_back(h[{1, k}]);
    c.expect("c06.h0", "H_0^k = d_k for k <= 6", "H_0 of the free algebra", h0, d0);
    c.expect("c06.h1-0-5", "H_1^k = 0,1,1,1,1,2 for k = 0..5", "H_1 table", h1, json{0, 1, 1, 1, 1, 2});
    c.expect("c06.h1-6", "dim H_1^6 = 5", "H_1 table", h[{1, 6}], 5);
    c.expect("c06.h2", "H_2^1 = 1 and H_2^2 = 2", "H_2 in degrees 1 and 2", json{h[{2, 1}], h[{2, 2}]}, json{1, 2});
    const auto comp = composition_vanishing_report(f);
    c.holds("c06.b1b2", "b_1 b_2 = 0 as matrices in every degree <= 6", "chain complex", comp.b1b2_zero);
    c.holds("c06.b2b3wa", "b_2 b_3^WA = 0 as matrices in every degree <= 6", "chain complex", comp.b2b3wa_zero);
    c.holds("c06.b2-wa", "b_2 = b_2^WA on the commutative free algebra", "chain complex", comp.b2_equals_b2wa);
    c.holds("c06.b1b2-symbolic", "b_1 b_2 (a,b,c) = -(WA(a,b,c) + WA(b,a,c) + WA(c,a,b)) in the free magma",
            "chain complex", comp.symbolic_b1b2);
    const FreeWA f8(8);
    const auto d8 = free_wa_dimensions(8);
    bool closed = true;
    json c1 = json::array();
    for (int k = 2; k <= 8; ++k) {
        const auto dim = static_cast<long>(chain_space(f8, 1, k).dim());
        const auto dk = d8[static_cast<std::size_t>(k)];
        const long want = k % 2 == 1 ? 4 * dk : 4 * dk - d8[static_cast<std::size_t>(k / 2)];
        closed = closed && dim == want;
        c1.push_back(dim);
    }
    c.holds("c06.c1-closed-forms", "dim C_1^{2p+1} = 4 d_{2p+1} and dim C_1^{2p} = 4 d_{2p} - d_p, degrees 2..8",
            "dimension of C_1", closed, c1);
}

void cohomology_checks(Collector& c, std::uint32_t seed)
{
    const Delta3System sys = delta3_system();
    c.expect("c07.delta3-unknowns", "the degree-3 ansatz has 120 unknowns", "delta3 linear system",
             sys.unknowns.size(), 120);
    c.expect("c07.delta3-equations", "360 equations are assembled before deduplication", "delta3 linear system",
             sys.raw_rows, 360);
    c.computed("c07.delta3-kernel", "dimension of the solution space modulo the WA ideal", "delta3 linear system",
               json{{"kernel", sys.kernel.size()},
                    {"distinct_rows", sys.distinct_rows},
                    {"ideal", sys.ideal_dim},
                    {"free_operad_kernel", sys.raw_kernel_dim}});

    const auto wa = corpus::wa_algebras(seed);
    std::mt19937 rng(seed);
    bool annihilates = !sys.kernel.empty();
    for (const auto& [name, alg] : wa) {
        const CochainContext ctx(alg);
        for (bool ok : delta3_annihilates(ctx, random_map(rng, 2, alg.dim()), sys.kernel))
            annihilates = annihilates && ok;
    }
    c.holds("c07.delta3-corpus", "every kernel vector gives delta3 delta2 = 0 on the WA corpus",
            "delta3 linear system", annihilates, json{{"members", wa.size()}, {"kernel", sys.kernel.size()}});

    constexpr int kCochains = 100;
    bool d10 = true, d21 = true, sym3 = true, three_way = true;
    int lo = 1 << 20, hi = 0, commutative = 0, defect_free = 0;
    for (const auto& [name, alg] : wa) {
        const CochainContext ctx(alg);
        lo = std::min(lo, alg.dim());
        hi = std::max(hi, alg.dim());
        for (int i = 0; i < alg.dim(); ++i)
            d10 = d10 && wa_delta1(ctx, wa_delta0(ctx, alg.basis(i))).is_zero();
        for (int t = 0; t < kCochains; ++t) {
            d21 = d21 && wa_delta2(ctx, wa_delta1(ctx, random_map(rng, 1, alg.dim()))).is_zero();
            sym3 = sym3 && operadic_cochain3_check(wa_delta2(ctx, random_map(rng, 2, alg.dim())));
        }
        if (!is_commutative(alg))
            continue;
        ++commutative;
        // Alternate generic skew maps with maps of zero Leibniz defect.
        const auto kernel = solve_linear(skew_bilinear_basis(alg.dim()),
                                         [&](const MultiMap& p) { return leibniz_defect(ctx, p); });
        for (int t = 0; t < kCochains; ++t) {
            const MultiMap psi = (t % 2 == 0 || kernel.empty()) ? random_map(rng, 2, alg.dim()).skew_part()
                                                                : random_in_span(rng, kernel, 2, alg.dim());
            const bool l = leibniz_defect(ctx, psi).is_zero();
            three_way = three_way && l == hochschild_delta(ctx, psi).is_zero() && l == wa_delta2(ctx, psi).is_zero();
            defect_free += l;
        }
    }
    const json corpus_info{{"members", wa.size()}, {"dims", json{lo, hi}}, {"cochains_per_member", kCochains}};
    c.holds("c08.delta1-delta0", "delta1 delta0 = 0 on every WA member", "WA cochain complex",
            d10 && wa.size() >= 10, corpus_info);
    c.holds("c08.delta2-delta1", "delta2 delta1 = 0 on random 1-cochains of every WA member", "WA cochain complex",
            d21 && wa.size() >= 10, corpus_info);
    c.holds("c08.cochain3-symmetry", "delta2 phi satisfies the 3-cochain symmetry on every WA member",
            "WA 3-cochains", sym3 && wa.size() >= 10, corpus_info);
    c.holds("c08.three-way", "for skew psi on commutative members: L(psi) = 0 iff delta_H psi = 0 iff delta_WA psi = 0",
            "Leibniz defect equivalence", three_way && commutative > 0,
            json{{"commutative_members", commutative}, {"defect_free_samples", defect_free}});
    const auto non_wa = corpus::non_wa_algebras(seed);
    int detected = 0;
    for (const auto& [name, alg] : non_wa) {
        const CochainContext ctx(alg);
        bool nonzero = false;
        for (int i = 0; i < alg.dim() && !nonzero; ++i)
            nonzero = !wa_delta1(ctx, wa_delta0(ctx, alg.basis(i))).is_zero();
        detected += nonzero;
    }
    c.holds("c08.non-wa-detected", "delta1 delta0 != 0 for some basis element of every non-WA member",
            "WA cochain complex", detected == static_cast<int>(non_wa.size()) && detected >= 5,
            json{{"members", non_wa.size()}, {"detected", detected}});
}

void polarization_checks(Collector& c, std::uint32_t seed)
{
    const auto pairs = corpus::poisson_pairs(seed);
    bool depol = true;
    for (const auto& p : pairs)
        depol = depol && is_nonassociative_poisson(p.bullet, p.bracket) &&
                is_weakly_associative(depolarize(p.bullet, p.bracket));
    c.holds("c09.depolarize", "depolarizing every nonassociative Poisson pair of the corpus gives a WA algebra",
            "WA and nonassociative Poisson", depol, json{{"pairs", pairs.size()}});
    const auto wa = corpus::wa_algebras(seed);
    bool pol = true;
    int jordan = 0, non_jordan = 0;
    bool biconditional = true;
    for (const auto& [name, alg] : wa) {
        const Polarization p = polarize(alg);
        pol = pol && is_nonassociative_poisson(p.bullet, p.bracket);
        const bool j = is_jordan(alg);
        biconditional = biconditional && j == is_jordan(p.bullet);
        (j ? jordan : non_jordan) += 1;
    }
    c.holds("c09.polarize", "polarizing every WA member gives a nonassociative Poisson algebra",
            "WA and nonassociative Poisson", pol, json{{"members", wa.size()}});
    c.holds("c09.jordan", "the bullet is Jordan iff the WA product is Jordan, both outcomes represented",
            "Jordan criterion", biconditional && jordan > 0 && non_jordan > 0,
            json{{"jordan", jordan}, {"non_jordan", non_jordan}});
}

void deform_checks(Collector& c, std::uint32_t seed)
{
    json orders = json::array();
    bool quantized = true;
    for (int n = 1; n <= 3; ++n) {
        const bool ok = is_wa_deformation(m3_linear_quantization(n));
        quantized = quantized && ok;
        orders.push_back(ok);
    }
    c.holds("c10.m3-wa", "the linear quantization of K[x,y]/m^3 is WA at orders 1, 2 and 3", "quantization example",
            quantized, orders);
    const auto q = quantization(m3_linear_quantization(3));
    c.holds("c10.m3-poisson", "its extracted bracket makes a nonassociative Poisson algebra", "quantization example",
            q.poisson && is_nonassociative_poisson(q.bullet, q.bracket));

    std::mt19937 rng(seed);
    constexpr int kPairs = 30;
    bool preserved = true;
    for (int i = 0; i < kPairs; ++i) {
        const auto def = leibniz_pencil(rng, 3, 2);
        const auto g = random_gauge(rng, 3, 2);
        preserved = preserved && is_wa_deformation(def) && is_wa_deformation(gauge(def, g));
    }
    c.holds("c10.gauge", "gauge transforms preserve weak associativity on 30 seeded pairs", "gauge equivalence",
            preserved, json{{"pairs", kPairs}});

    bool ncp_assoc = true;
    for (const FinAlg& base : {corpus::matrix_algebra2(), corpus::upper_triangular2()}) {
        const TruncatedDeformation zero(base, {MultiMap(2, base.dim()), MultiMap(2, base.dim())});
        const auto def = gauge(zero, random_gauge(rng, base.dim(), 2));
        const Polarization pol = polarize(base);
        const auto p = polarized_deformation(def);
        ncp_assoc = ncp_assoc && ncp_defect(pol.bullet, pol.bracket, p.bullet_terms[0], p.bracket_terms[0]).is_zero();
    }
    c.holds("c10.ncp-associative",
            "order-1 terms of associative deformations of M2 and upper-triangular(2) satisfy the noncommutative "
            "Leibniz identity",
            "noncommutative Poisson identity", ncp_assoc);
    bool ncp0 = true;
    for (const auto& [name, alg] : corpus::wa_algebras(seed)) {
        const Polarization pol = polarize(alg);
        ncp0 = ncp0 && ncp_defect(pol.bullet, pol.bracket, MultiMap(2, alg.dim()), pol.bracket.product()).is_zero();
    }
    c.holds("c10.ncp-order0", "the polarized identity at order 0 holds on every WA member",
            "noncommutative Poisson identity", ncp0);

    int tested = 0;
    bool lich = true;
    for (const auto& [name, alg] : corpus::wa_algebras(seed)) {
        if (alg.dim() > 4)
            continue;
        const CochainContext ctx(alg);
        const auto cocycles = solve_linear(skew_bilinear_basis(alg.dim()),
                                           [&](const MultiMap& phi) { return wa_delta2(ctx, phi); });
        if (cocycles.empty())
            continue;
        const TruncatedDeformation def(alg, {random_in_span(rng, cocycles, 2, alg.dim())});
        lich = lich && is_wa_deformation(def) && bullet_preserving_check(def).passes();
        ++tested;
    }
    c.holds("c10.lichnerowicz", "bullet-preserving skew deformations give delta_L^2 phi_1 = 0",
            "Lichnerowicz cocycle", lich && tested > 0, json{{"members", tested}});
}

using GroupRunner = std::function<void(Collector&, std::uint32_t)>;

const std::vector<std::pair<std::string, GroupRunner>>& runners()
{
    static const std::vector<std::pair<std::string, GroupRunner>> r{
        {"symgroup", symgroup_checks},         {"operad", operad_checks},
        {"freewa", freewa_checks},             {"homology", homology_checks},
        {"cohomology", cohomology_checks},     {"polarization", polarization_checks},
        {"deform", deform_checks},
    };
    return r;
}

}  // namespace

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::computed:
        return "computed";
    }
    throw std::logic_error("unknown status");
}

int Check::criterion() const
{
    if (id.size() < 4 || id[0] != 'c' || id[3] != '.')
        throw std::logic_error("malformed check id " + id);
    return std::stoi(id.substr(1, 2));
}

bool Report::ok() const
{
    return count(CheckStatus::fail) == 0;
}

std::size_t Report::count(CheckStatus s) const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

nlohmann::json Report::to_json() const
{
    json arr = json::array();
    for (const auto& c : checks) {
        json j{{"id", c.id}, {"group", c.group}, {"claim", c.claim}, {"paper_ref", c.paper_ref},
               {"status", to_string(c.status)}, {"value", c.value}};
        if (!c.expected.is_null())
            j["expected"] = c.expected;
        if (!c.detail.is_null())
            j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    return {{"checks", arr},
            {"summary",
             {{"pass", count(CheckStatus::pass)},
              {"fail", count(CheckStatus::fail)},
              {"computed", count(CheckStatus::computed)}}}};
}

std::string Report::to_text() const
{
    std::ostringstream out;
    for (const auto& c : checks) {
        std::string tag = to_string(c.status);
        std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return std::toupper(ch); });
        out << tag << std::string(9 - tag.size(), ' ') << c.id << "  " << c.claim << "\n";
        out << "         value: " << c.value.dump();
        if (!c.expected.is_null())
            out << "  expected: " << c.expected.dump();
        if (!c.detail.is_null())
            out << "  detail: " << c.detail.dump();
        out << "\n";
    }
    out << count(CheckStatus::pass) << " pass, " << count(CheckStatus::fail) << " fail, "
        << count(CheckStatus::computed) << " computed\n";
    return out.str();
}

const std::vector<std::string>& report_groups()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, run] : runners())
            n.push_back(name);
        return n;
    }();
    return names;
}

Report verify_paper(const VerifyOptions& options)
{
    const auto& groups = report_groups();
    for (const auto& g : options.only)
        if (std::find(groups.begin(), groups.end(), g) == groups.end())
            throw std::invalid_argument("unknown check group '" + g + "'");
    Report report;
    for (const auto& [name, run] : runners()) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), name) == options.only.end())
            continue;
        Collector c(name, report.checks);
        run(c, options.seed);
    }
    std::stable_sort(report.checks.begin(), report.checks.end(),
                     [](const Check& a, const Check& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < report.checks.size(); ++i)
        if (report.checks[i].id == report.checks[i - 1].id)
            throw std::logic_error("duplicate check id " + report.checks[i].id);
    return report;
}

}  // namespace wassoc
