#include "simplicial/adjacency.hpp"
#include "simplicial/centrality.hpp"
#include "simplicial/errors.hpp"
#include "simplicial/generator.hpp"
#include "simplicial/io.hpp"
#include "simplicial/oracle.hpp"
#include "simplicial/spectral.hpp"
#include "simplicial/walks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace simplicial;
using Json = nlohmann::ordered_json;

struct Options
{
    std::string format = "json";
    std::string out;
    std::string file;
    std::optional<int> q;
    std::optional<int> p;
    std::optional<int> h;
    std::optional<int> hp;
    std::optional<int> p1;
    std::optional<int> p2;
    std::string kind;
    std::string part = "total";
    std::string measure;
    std::string variant;
    std::string semantics = "at-least";
    std::uint64_t seed = 0;
    std::string model;
    std::optional<int> dim;
    std::size_t n = 0;
    double prob = 0.0;
};

int exit_code(const Error& e)
{
    const std::string kind = e.kind();
    if (kind == "parse_error" || kind == "empty_complex") {
        return 3;
    }
    if (kind == "guard_refusal") {
        return 4;
    }
    return 2;
}

void report_error(const std::string& kind, const std::string& message)
{
    std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

io::Format format_of(const Options& o)
{
    return o.format == "csv" ? io::Format::csv : io::Format::json;
}

int need(const std::optional<int>& value, const char* flag)
{
    if (!value) {
        throw ArgumentError(std::string("missing ") + flag);
    }
    return *value;
}

void write(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
        throw ArgumentError("cannot write " + o.out);
    }
    file << text;
}

WalkSemantics semantics_of(const Options& o)
{
    return o.semantics == "exact" ? WalkSemantics::exact : WalkSemantics::at_least;
}

std::string semantics_name(WalkSemantics s)
{
    return s == WalkSemantics::exact ? "exact" : "at-least";
}

KeyValues params_of(const Options& o)
{
    KeyValues out;
    const std::pair<const char*, const std::optional<int>*> ints[] = {
        {"q", &o.q}, {"p", &o.p}, {"h", &o.h}, {"hp", &o.hp}, {"p1", &o.p1}, {"p2", &o.p2}};
    for (const auto& [name, value] : ints) {
        if (*value) {
            out.emplace_back(name, std::to_string(**value));
        }
    }
    return out;
}

std::vector<SimplexIndex> basis_indices(const Complex& c, std::optional<int> q)
{
    std::vector<SimplexIndex> out;
    for (SimplexIndex i = 0; i < c.size(); ++i) {
        if (!q || c.dim_of(i) == *q) {
            out.push_back(i);
        }
    }
    if (q && (*q < 0 || *q > c.dim())) {
        throw ArgumentError("q must lie in 0..dim K");
    }
    return out;
}

void run_info(const Options& o)
{
    const Complex c = io::read_complex(o.file);
    const walks::NearnessGraph g(c);
    const auto f = c.f_vector();
    long long euler = 0;
    for (std::size_t d = 0; d < f.size(); ++d) {
        euler += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(f[d]);
    }
    const auto q_star = walks::q_star_vector(g);
    if (format_of(o) == io::Format::csv) {
        std::string text = "key,value\n";
        text += "dimension," + std::to_string(c.dim()) + "\n";
        text += "vertices," + std::to_string(c.count(0)) + "\n";
        text += "simplices," + std::to_string(c.size()) + "\n";
        text += "facets," + std::to_string(c.facets().size()) + "\n";
        text += "euler_characteristic," + std::to_string(euler) + "\n";
        for (std::size_t d = 0; d < f.size(); ++d) {
            text += "f" + std::to_string(d) + "," + std::to_string(f[d]) + "\n";
        }
        for (std::size_t p = 0; p < q_star.size(); ++p) {
            text += "q_star" + std::to_string(p) + "," + std::to_string(q_star[p]) + "\n";
        }
        text += "complex_digest," + io::complex_digest(c) + "\n";
        write(o, text);
        return;
    }
    Json doc;
    doc["dimension"] = c.dim();
    doc["vertices"] = c.count(0);
    doc["simplices"] = c.size();
    doc["facets"] = c.facets().size();
    doc["f_vector"] = f;
    doc["euler_characteristic"] = euler;
    doc["q_star"] = q_star;
    doc["complex_digest"] = io::complex_digest(c);
    write(o, doc.dump(2) + "\n");
}

DegreeQuery degree_query(const Options& o)
{
    const std::string& k = o.kind;
    if (k == "lower") {
        return o.h ? DegreeQuery::lower_step(*o.h, need(o.p, "--p")) : DegreeQuery::lower(need(o.p, "--p"));
    }
    if (k == "strict-lower") {
        return o.h ? DegreeQuery::strict_lower_step(*o.h, need(o.p, "--p"))
                   : DegreeQuery::strict_lower(need(o.p, "--p"));
    }
    if (k == "upper") {
        return o.h ? DegreeQuery::upper_step(*o.h) : DegreeQuery::upper(need(o.p, "--p"));
    }
    if (k == "strict-upper") {
        return o.h ? DegreeQuery::strict_upper_step(*o.h) : DegreeQuery::strict_upper(need(o.p, "--p"));
    }
    if (k == "adjacency") {
        return DegreeQuery::adjacency(need(o.p, "--p"));
    }
    if (k == "maximal-adjacency") {
        return o.p ? DegreeQuery::maximal_adjacency(*o.p) : DegreeQuery::maximal_adjacency_sum();
    }
    if (k == "two-param") {
        return DegreeQuery::two_param(need(o.p1, "--p1"), need(o.p2, "--p2"));
    }
    if (k == "two-param-strict") {
        return DegreeQuery::two_param_strict(need(o.p1, "--p1"), need(o.p2, "--p2"));
    }
    if (k == "strict-upper-sum") {
        return DegreeQuery::strict_upper_sum();
    }
    return DegreeQuery::maximal_simplicial();
}

void run_degrees(const Options& o)
{
    const Complex c = io::read_complex(o.file);
    const int q = need(o.q, "--q");
    const DegreeQuery query = degree_query(o);
    const auto degrees = adjacency::degrees(c, q, query);
    Report report;
    report.measure = "degree";
    report.params = params_of(o);
    report.params.emplace_back("kind", o.kind);
    report.params.emplace_back("query", describe(query));
    for (std::size_t k = 0; k < degrees.values.size(); ++k) {
        report.rows.push_back({c.name(c.offset(q) + k), Value::of(Rational(degrees.values[k]))});
    }
    write(o, io::emit_report(report, c, format_of(o)));
}

void run_laplacian(const Options& o)
{
    const Complex c = io::read_complex(o.file);
    const int q = need(o.q, "--q");
    const auto bundle = spectral::laplacian(c, q, need(o.h, "--h"), need(o.hp, "--hp"));
    const spectral::IntMatrix& m = o.part == "up" ? bundle.up : o.part == "down" ? bundle.down : bundle.total;
    std::vector<std::string> basis;
    for (std::size_t k = 0; k < c.count(q); ++k) {
        basis.push_back(c.name(c.offset(q) + k));
    }
    write(o, io::emit_matrix(basis, spectral::to_dense(m), format_of(o)));
}

walks::WalkFilter walk_filter(const Options& o)
{
    return {need(o.p, "--p"), semantics_of(o), o.q};
}

void run_centrality(const Options& o)
{
    const Complex c = io::read_complex(o.file);
    Report report;
    report.measure = o.measure;
    report.params = params_of(o);
    if (!o.variant.empty()) {
        report.params.emplace_back("variant", o.variant);
    }
    if (o.measure == "eigenvector") {
        report = centrality::eigenvector_centrality(c, need(o.q, "--q"), need(o.p, "--p"));
    } else if (o.measure == "degree") {
        const std::string variant = o.variant.empty() ? "maximal" : o.variant;
        for (SimplexIndex i : basis_indices(c, o.q)) {
            const Simplex& s = c.simplex(i);
            Value v;
            if (variant == "maximal") {
                v = centrality::maximal_simplicial_degree_centrality(c, s);
            } else if (variant == "upper" || variant == "strict-upper") {
                v = centrality::upper_degree_centrality(c, s, need(o.h, "--h"), variant == "strict-upper");
            } else if (variant == "vertex-upper" || variant == "vertex-strict-upper") {
                v = centrality::vertex_upper_degree_centrality(c, s, need(o.h, "--h"), variant == "vertex-strict-upper");
            } else if (variant == "adjacency" || variant == "maximal-adjacency") {
                v = centrality::adjacency_degree_centrality(c, s, need(o.p, "--p"), variant == "maximal-adjacency");
            } else {
                throw ArgumentError("unknown degree variant " + variant);
            }
            report.rows.push_back({c.name(i), v});
        }
    } else if (o.measure == "closeness" || o.measure == "betweenness") {
        const walks::NearnessGraph g(c);
        const walks::WalkFilter filter = walk_filter(o);
        report.params.emplace_back("semantics", semantics_name(filter.semantics));
        const auto variant = o.variant == "reciprocal-sum" ? centrality::ClosenessVariant::reciprocal_sum
                                                           : centrality::ClosenessVariant::harmonic;
        const auto values = o.measure == "closeness" ? centrality::closeness_all(g, filter, variant)
                                                     : centrality::betweenness_all(g, filter);
        for (const auto& [i, v] : values) {
            report.rows.push_back({c.name(i), v});
        }
    } else if (o.measure == "clustering") {
        const walks::NearnessGraph g(c);
        for (SimplexIndex i : basis_indices(c, o.q)) {
            report.rows.push_back({c.name(i), centrality::clustering(g, c.simplex(i))});
        }
    } else if (o.measure == "average") {
        const std::string variant = o.variant.empty() ? "maximal" : o.variant;
        const auto kind = variant == "strict-upper"        ? centrality::AverageKind::strict_upper
                          : variant == "maximal-adjacency" ? centrality::AverageKind::maximal_adjacency
                                                           : centrality::AverageKind::maximal;
        report.rows.push_back({o.q ? "q=" + std::to_string(*o.q) : std::string("all"),
                               centrality::average_degree(c, o.q, kind)});
    } else {
        throw ArgumentError("unknown measure " + o.measure);
    }
    write(o, io::emit_report(report, c, format_of(o)));
}

void run_components(const Options& o)
{
    const Complex c = io::read_complex(o.file);
    const walks::NearnessGraph g(c);
    const walks::WalkFilter filter{need(o.p, "--p"), semantics_of(o), std::nullopt};
    const auto partition = walks::components(g, filter);
    Report report;
    report.measure = "components";
    report.params = params_of(o);
    report.params.emplace_back("semantics", semantics_name(filter.semantics));
    for (SimplexIndex i : walks::admitted_nodes(g, filter)) {
        report.rows.push_back({c.name(i), Value::of(Rational(*partition.class_of(i)))});
    }
    std::string sizes;
    for (std::size_t s : partition.class_sizes()) {
        sizes += (sizes.empty() ? "" : " ") + std::to_string(s);
    }
    report.metadata = {{"q_star", std::to_string(partition.q_star())}, {"class_sizes", sizes}};
    write(o, io::emit_report(report, c, format_of(o)));
}

Json diffs_json(const std::vector<oracle::OracleDiff>& diffs)
{
    Json out = Json::array();
    for (const auto& d : diffs) {
        Json mismatches = Json::array();
        for (const auto& m : d.mismatches) {
            mismatches.push_back({{"where", m.where}, {"expected", m.expected}, {"actual", m.actual}});
        }
        out.push_back({{"quantity", d.quantity}, {"checks", d.checks}, {"mismatches", mismatches}});
    }
    return out;
}

int run_oracle(const Options& o)
{
    const Complex c = io::read_complex(o.file);
    const oracle::DiffReport diff = oracle::diff_all(c, o.seed);
    if (format_of(o) == io::Format::csv) {
        std::string text = "quantity,kind,checks,mismatches\n";
        for (const auto& d : diff.diffs) {
            text += d.quantity + ",check," + std::to_string(d.checks) + "," + std::to_string(d.mismatches.size()) + "\n";
        }
        for (const auto& d : diff.diagnostics) {
            text += d.quantity + ",diagnostic," + std::to_string(d.checks) + "," +
                    std::to_string(d.mismatches.size()) + "\n";
        }
        write(o, text);
    } else {
        Json doc;
        doc["complex_digest"] = io::complex_digest(c);
        doc["seed"] = o.seed;
        doc["clean"] = diff.clean();
        doc["diffs"] = diffs_json(diff.diffs);
        doc["diagnostics"] = diffs_json(diff.diagnostics);
        write(o, doc.dump(2) + "\n");
    }
    return diff.clean() ? 0 : 1;
}

void run_gen(const Options& o)
{
    generator::Config config;
    if (o.model == "pure") {
        config.model = generator::Model::pure;
        config.dim = need(o.dim, "--dim");
    } else if (o.model == "flag") {
        config.model = generator::Model::flag;
    } else {
        throw ArgumentError("unknown model " + o.model);
    }
    config.n = o.n;
    config.prob = o.prob;
    config.seed = o.seed;
    const Complex c = generator::generate(config);
    write(o, io::emit_complex(c, generator::describe(config)));
}

int run(int argc, char** argv)
{
    Options o;
    CLI::App app{"Simplicial complex degrees, Laplacians, walks and centralities"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", o.out, "Write output to this path instead of stdout");

    const auto file_arg = [&](CLI::App* sub) { sub->add_option("FILE", o.file, "Complex file")->required(); };
    const auto global = [&](CLI::App* sub) { sub->fallthrough(); };

    auto* info = app.add_subcommand("info", "Summary of a complex");
    file_arg(info);

    auto* degrees = app.add_subcommand("degrees", "Degree of every q-simplex");
    file_arg(degrees);
    degrees->add_option("--q", o.q)->required();
    degrees->add_option("--p", o.p);
    degrees->add_option("--h", o.h);
    degrees->add_option("--p1", o.p1);
    degrees->add_option("--p2", o.p2);
    degrees->add_option("--kind", o.kind)
        ->required()
        ->check(CLI::IsMember({"lower", "strict-lower", "upper", "strict-upper", "adjacency", "maximal-adjacency",
                               "two-param", "two-param-strict", "strict-upper-sum", "maximal"}));

    auto* laplacian = app.add_subcommand("laplacian", "Multi-parameter Laplacian matrix");
    file_arg(laplacian);
    laplacian->add_option("--q", o.q)->required();
    laplacian->add_option("--h", o.h)->required();
    laplacian->add_option("--hp", o.hp)->required();
    laplacian->add_option("--part", o.part)->check(CLI::IsMember({"up", "down", "total"}));

    auto* centrality = app.add_subcommand("centrality", "Centrality of simplices");
    file_arg(centrality);
    centrality->add_option("--measure", o.measure)
        ->required()
        ->check(CLI::IsMember({"degree", "eigenvector", "closeness", "betweenness", "clustering", "average"}));
    centrality->add_option("--q", o.q);
    centrality->add_option("--p", o.p);
    centrality->add_option("--h", o.h);
    centrality->add_option("--variant", o.variant);
    centrality->add_option("--semantics", o.semantics)->check(CLI::IsMember({"at-least", "exact"}));

    auto* components = app.add_subcommand("components", "Classes of simplices joined by p-walks");
    file_arg(components);
    components->add_option("--p", o.p)->required();
    components->add_option("--semantics", o.semantics)->check(CLI::IsMember({"at-least", "exact"}));

    auto* oracle_cmd = app.add_subcommand("oracle", "Compare every quantity against brute-force enumeration");
    file_arg(oracle_cmd);
    oracle_cmd->add_option("--seed", o.seed);

    auto* gen = app.add_subcommand("gen", "Generate a seeded random complex");
    gen->add_option("--model", o.model)->required()->check(CLI::IsMember({"pure", "flag"}));
    gen->add_option("--dim", o.dim);
    gen->add_option("--n", o.n)->required();
    gen->add_option("--prob", o.prob)->required();
    gen->add_option("--seed", o.seed)->required();
    gen->add_option("-o", o.out, "Output complex file");

    for (auto* sub : {info, degrees, laplacian, centrality, components, oracle_cmd, gen}) {
        global(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error("argument_error", e.what());
        return 2;
    }

    if (info->parsed()) {
        run_info(o);
    } else if (degrees->parsed()) {
        run_degrees(o);
    } else if (laplacian->parsed()) {
        run_laplacian(o);
    } else if (centrality->parsed()) {
        run_centrality(o);
    } else if (components->parsed()) {
        run_components(o);
    } else if (oracle_cmd->parsed()) {
        return run_oracle(o);
    } else if (gen->parsed()) {
        run_gen(o);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const simplicial::Error& e) {
        report_error(e.kind(), e.what());
        return exit_code(e);
    } catch (const std::exception& e) {
        report_error("error", e.what());
        return 2;
    }
}
