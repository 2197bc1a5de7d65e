#include "wassoc/cohomology.hpp"
#include "wassoc/corpus.hpp"
#include "wassoc/deform.hpp"
#include "wassoc/freewa.hpp"
#include "wassoc/homology.hpp"
#include "wassoc/operad.hpp"
#include "wassoc/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace wassoc;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void emit(const json& j, const std::string& text, const std::string& format)
{
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

struct Property {
    MultilinearIdentity (*expression)();
    bool needs_flexible;
};

MultilinearIdentity commutator()
{
    const auto x = MultilinearIdentity::leaf(1);
    const auto y = MultilinearIdentity::leaf(2);
    return mu(x, y) - mu(y, x);
}

const std::map<std::string, Property>& properties()
{
    static const std::map<std::string, Property> p{
        {"weakly-associative", {wa_expression, false}},
        {"associative", {associator, false}},
        {"flexible", {flexible_expression, false}},
        {"lie-admissible", {lie_admissible_expression, false}},
        {"jordan", {jordan_expression, true}},
        {"commutative", {commutator, false}},
    };
    return p;
}

int cmd_verify(const std::vector<std::string>& only, std::optional<std::uint32_t> seed, const std::string& format)
{
    VerifyOptions options;
    options.only = only;
    if (seed)
        options.seed = *seed;
    else if (const char* env = std::getenv("WASSOC_SEED"))
        options.seed = static_cast<std::uint32_t>(std::stoul(env));
    const Report r = verify_paper(options);
    json j = r.to_json();
    j["seed"] = options.seed;
    emit(j, r.to_text(), format);
    return r.ok() ? 0 : kExitFail;
}

int cmd_check(const std::string& file, const std::string& name, const std::string& format)
{
    const auto it = properties().find(name);
    if (it == properties().end())
        throw std::invalid_argument("unknown property '" + name + "'");
    const FinAlg alg = algebra_from_json(read_json(file));
    std::optional<Witness> w;
    if (it->second.needs_flexible)
        w = find_violation(alg, flexible_expression());
    if (!w)
        w = find_violation(alg, it->second.expression());
    json j{{"property", name}, {"holds", !w.has_value()}};
    std::string text = name + (w ? ": fails at " + w->to_string() : ": holds") + "\n";
    if (w) {
        json value = json::array();
        for (const auto& q : w->value)
            value.push_back(pretty_rational(q));
        json idx = json::array();
        for (int i : w->indices)
            idx.push_back(i + 1);
        j["witness"] = {{"basis", idx}, {"value", value}};
    }
    emit(j, text, format);
    return w ? kExitFail : 0;
}

int cmd_deform(const std::string& file, std::optional<int> order, const std::string& format)
{
    TruncatedDeformation def = deformation_from_json(read_json(file));
    if (order) {
        if (*order < 1)
            throw std::invalid_argument("--order must be at least 1");
        def.terms.resize(static_cast<std::size_t>(*order), MultiMap(2, def.base.dim()));
    }
    std::ostringstream text;
    json defects = json::array();
    for (int k = 1; k <= def.order(); ++k) {
        const bool zero = wa_defect(def, k).is_zero();
        defects.push_back(zero);
        text << "order " << k << ": " << (zero ? "weakly associative" : "WA fails") << "\n";
    }
    const auto failure = first_wa_failure(def);
    json j{{"order", def.order()}, {"defect_zero", defects}, {"weakly_associative", !failure.has_value()}};
    if (failure)
        j["first_failure"] = *failure;
    try {
        const auto q = quantization(def);
        j["quantization"] = {{"lie_admissible", q.lie_admissible},
                             {"jacobi", q.jacobi},
                             {"leibniz", q.leibniz},
                             {"poisson", q.poisson}};
        text << "quantization: bracket " << (q.jacobi ? "satisfies" : "violates") << " Jacobi, Leibniz "
             << (q.leibniz ? "holds" : "fails") << ", nonassociative Poisson " << (q.poisson ? "yes" : "no") << "\n";
        if (!q.jacobi)
            text << "warning: WA deformation whose bracket violates Jacobi\n";
    } catch (const DeformationError& e) {
        j["quantization"] = {{"skipped", e.what()}, {"order", e.order()}};
        text << "quantization skipped: " << e.what() << "\n";
    }
    emit(j, text.str(), format);
    return failure ? kExitFail : 0;
}

int cmd_homology(int max_degree, const std::string& format)
{
    if (max_degree < 0)
        throw std::invalid_argument("--max-degree must be nonnegative");
    const FreeWA f(max_degree);
    json cells = json::array();
    std::ostringstream text;
    text << "  k   H_0   H_1   H_2\n";
    std::vector<std::size_t> row;
    for (const auto& c : homology_table(f)) {
        cells.push_back({{"n", c.n},
                         {"k", c.k},
                         {"chains", c.dim_chains},
                         {"rank_out", c.rank_out},
                         {"rank_in", c.rank_in},
                         {"homology", c.dim_homology}});
        row.push_back(c.dim_homology);
        if (c.n == 2) {
            text << std::string(c.k < 10 ? 3 : 2, ' ') << c.k;
            for (auto h : row)
                text << std::string(6 - std::to_string(h).size(), ' ') << h;
            text << "\n";
            row.clear();
        }
    }
    const auto comp = composition_vanishing_report(f);
    text << "b1 b2 = 0: " << (comp.b1b2_zero ? "yes" : "no") << ", b2 b3^WA = 0: " << (comp.b2b3wa_zero ? "yes" : "no")
         << "\n";
    emit({{"max_degree", max_degree},
          {"cells", cells},
          {"b1b2_zero", comp.b1b2_zero},
          {"b2b3wa_zero", comp.b2b3wa_zero},
          {"b1b2_symbolic", comp.symbolic_b1b2}},
         text.str(), format);
    return 0;
}

int cmd_operad(const std::string& format)
{
    const RelationSpace r = wa_relation_space();
    const DualArity4 d4 = wass_dual_arity4();
    const std::size_t wa4 = consequences(r).quotient_dim();
    const std::size_t ass4 = consequences(associative_relation_space()).quotient_dim();
    const json j{{"wass3", r.quotient_dim()},
                 {"wass_dual3", annihilator(r).quotient_dim()},
                 {"wass_dual4_rank", d4.rank},
                 {"wass_dual4_kernel", d4.kernel_dim},
                 {"wass4", wa4},
                 {"ass4", ass4},
                 {"gram_rank", rank(pairing_gram())}};
    std::ostringstream text;
    text << "dim Wass(3) = " << j["wass3"] << "\n"
         << "dim Wass!(3) = " << j["wass_dual3"] << "\n"
         << "arity-4 dual relation matrix: rank " << d4.rank << ", kernel " << d4.kernel_dim << "\n"
         << "dim Wass!(4) = " << d4.kernel_dim << "\n"
         << "dim Wass(4) = " << wa4 << "\n"
         << "dim Ass(4) = " << ass4 << "\n"
         << "pairing Gram rank = " << j["gram_rank"] << "\n";
    emit(j, text.str(), format);
    return 0;
}

int cmd_freewa(int max_degree, const std::string& format)
{
    if (max_degree < 0)
        throw std::invalid_argument("--max-degree must be nonnegative");
    const FreeWA f(max_degree);
    json degrees = json::array();
    std::ostringstream text;
    for (int d = 0; d <= max_degree; ++d) {
        json basis = json::array();
        text << "degree " << d << " (dim " << f.elements(d).size() << "):";
        for (int id : f.elements(d)) {
            basis.push_back({{"name", f.name(id)}, {"tree", f.tree(id)}});
            text << " " << f.name(id) << " = " << f.tree(id) << (id == f.elements(d).back() ? "" : ",");
        }
        text << "\n";
        degrees.push_back({{"degree", d}, {"dim", f.elements(d).size()}, {"basis", basis}});
    }
    emit({{"max_degree", max_degree}, {"degrees", degrees}}, text.str(), format);
    return 0;
}

int cmd_delta3(const std::string& format)
{
    const Delta3System s = delta3_system();
    json kernel = json::array();
    for (const auto& v : s.kernel) {
        json terms = json::object();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0)
                terms[s.unknowns[i]] = pretty_rational(v[i]);
        kernel.push_back(terms);
    }
    std::ostringstream text;
    text << "unknowns: " << s.unknowns.size() << "\n"
         << "equations before deduplication: " << s.raw_rows << "\n"
         << "distinct equations: " << s.distinct_rows << "\n"
         << "WA ideal dimension: " << s.ideal_dim << "\n"
         << "kernel dimension: " << s.kernel.size() << "\n";
    emit({{"unknowns", s.unknowns.size()},
          {"raw_rows", s.raw_rows},
          {"distinct_rows", s.distinct_rows},
          {"ideal_dim", s.ideal_dim},
          {"kernel_dim", s.kernel.size()},
          {"kernel", kernel}},
         text.str(), format);
    return 0;
}

int cmd_example(const std::string& name, int order, const std::string& a)
{
    json j;
    if (name == "example7")
        j = algebra_to_json(corpus::example7(parse_rational(a)));
    else if (name == "m3")
        j = algebra_to_json(corpus::polynomial_m3());
    else if (name == "m3-quantization")
        j = deformation_to_json(m3_linear_quantization(order));
    else if (name == "non-wa")
        j = algebra_to_json(corpus::non_wa_example());
    else
        throw std::invalid_argument("unknown example '" + name + "'");
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Weakly associative algebras: verification suite and algebra checks"};
    app.require_subcommand(1);
    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* verify = app.add_subcommand("verify-paper", "Run every verification check");
    std::vector<std::string> only;
    std::optional<std::uint32_t> seed;
    verify->add_option("--only", only, "Restrict to check groups")->check(CLI::IsMember(report_groups()));
    verify->add_option("--seed", seed, "Seed for randomized checks, overrides WASSOC_SEED");
    add_format(verify);

    auto* check = app.add_subcommand("check", "Test a property of an algebra file");
    std::string algebra_file, property;
    check->add_option("--algebra", algebra_file, "Algebra JSON file")->required();
    check->add_option("--property", property, "weakly-associative, associative, flexible, lie-admissible, jordan, commutative")
        ->required();
    add_format(check);

    auto* deform = app.add_subcommand("deform", "Check a truncated deformation order by order");
    std::string deform_file;
    std::optional<int> order;
    deform->add_option("--file", deform_file, "Deformation JSON file")->required();
    deform->add_option("--order", order, "Truncation order; missing terms are zero");
    add_format(deform);

    auto* homology = app.add_subcommand("homology", "Homology table of the free WA algebra");
    int hom_degree = 6;
    homology->add_option("--max-degree", hom_degree, "Largest degree")->capture_default_str();
    add_format(homology);

    auto* operad = app.add_subcommand("operad", "Operad dimensions in arities 3 and 4");
    add_format(operad);

    auto* freewa = app.add_subcommand("freewa", "Bases of the free WA algebra on one generator");
    int free_degree = 5;
    freewa->add_option("--max-degree", free_degree, "Largest degree")->capture_default_str();
    add_format(freewa);

    auto* delta3 = app.add_subcommand("delta3", "The degree-3 coboundary linear system");
    add_format(delta3);

    auto* example = app.add_subcommand("example", "Print a built-in algebra or deformation as JSON");
    std::string example_name;
    int example_order = 2;
    std::string example_a = "6";
    example->add_option("name", example_name, "example7, m3, m3-quantization, non-wa")->required();
    example->add_option("--order", example_order, "Order of m3-quantization")->capture_default_str();
    example->add_option("--a", example_a, "Parameter of example7")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify)
            return cmd_verify(only, seed, format);
        if (*check)
            return cmd_check(algebra_file, property, format);
        if (*deform)
            return cmd_deform(deform_file, order, format);
        if (*homology)
            return cmd_homology(hom_degree, format);
        if (*operad)
            return cmd_operad(format);
        if (*freewa)
            return cmd_freewa(free_degree, format);
        if (*delta3)
            return cmd_delta3(format);
        if (*example)
            return cmd_example(example_name, example_order, example_a);
    } catch (const std::exception& e) {
        std::cerr << "wassoc: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
