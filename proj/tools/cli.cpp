#include "cli.hpp"
#include "report_json.hpp"

#include <homoglab/errors.hpp>
#include <homoglab/graph_io.hpp>
#include <homoglab/homogeneity.hpp>
#include <homoglab/presentation.hpp>
#include <homoglab/rado.hpp>
#include <homoglab/structure.hpp>
#include <homoglab/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

namespace homoglab::cli
{
    namespace
    {
        auto parse_format(const std::string & name) -> std::optional<GraphFormat>
        {
            if (name.empty() || name == "auto")
                return std::nullopt;
            if (name == "graph6" || name == "g6")
                return GraphFormat::graph6;
            if (name == "edges" || name == "edge_list")
                return GraphFormat::edge_list;
            throw InvalidInput("unknown graph format '" + name + "'");
        }

        /// "0,3,5" -> {0, 3, 5}; sorted, without repeats.
        auto parse_naturals(const std::string & text) -> NaturalSet
        {
            NaturalSet result;
            std::stringstream in(text);
            std::string item;
            while (std::getline(in, item, ',')) {
                if (item.empty())
                    continue;
                if (! std::all_of(item.begin(), item.end(), [] (unsigned char c) { return std::isdigit(c); }))
                    throw InvalidInput("'" + item + "' is not a vertex index");
                result.push_back(std::stoull(item));
            }
            std::sort(result.begin(), result.end());
            result.erase(std::unique(result.begin(), result.end()), result.end());
            return result;
        }

        auto parse_vertex_set(const Graph & g, const std::string & text) -> VertexSet
        {
            std::vector<int> members;
            for (auto v : parse_naturals(text)) {
                if (v >= Natural(g.order()))
                    throw InvalidInput("vertex " + std::to_string(v) + " outside the graph");
                members.push_back(int(v));
            }
            return VertexSet::of(g.order(), members);
        }

        struct Options
        {
            std::string file, format, family, suite;
            std::string x = "H", y = "H", method = "direct", strategy = "accelerated", expect;
            std::string cone, cocone, base, output, part_sizes = "2,3";
            int truncate_n = 0, n = 12, max_requirement = 3, threshold = 1;
            int first = 3, last = 8, n_max = 5, count = 1000, max_order = 40, x_cap = 4;
            std::optional<int> age_k;
            std::size_t max_directories = 0;
            Natural budget = 512;
            std::uint64_t seed = 20191;
            bool random = false;
        };

        class Runner
        {
            public:
                Runner(std::vector<std::string> command, std::ostream & out) :
                    _command(std::move(command)), _out(out)
                {
                }

                auto emit(Json payload) -> void
                {
                    _out << envelope(_command, std::move(payload)).dump(2) << '\n';
                }

                auto analyze(const Options & o) -> int
                {
                    auto g = read_graph_file(o.file, parse_format(o.format));
                    auto payload = to_json(analyze_graph(g, o.max_directories));
                    int k = o.age_k.value_or(g.order());
                    if (o.age_k || g.order() <= default_canonical_limit)
                        payload["age"] = to_json(kk_okk(g, k, {.embedding_cap = 1}));
                    else
                        payload["age_note"] = "age partition skipped above " + std::to_string(default_canonical_limit)
                            + " vertices; pass --age-k";
                    emit(payload);
                    return ok;
                }

                auto check(const Options & o) -> int
                {
                    auto g = read_graph_file(o.file, parse_format(o.format));
                    if (o.x.size() != 1 || o.y.size() != 1)
                        throw InvalidInput("--x and --y take a single letter");
                    auto x = parse_local_kind(o.x[0]);
                    auto y = parse_morphism_kind(o.y[0]);

                    HomogReport report;
                    if (o.method == "conditions") {
                        if (x != LocalKind::H || y != MorphismKind::H)
                            throw InvalidInput("the conditions method decides only x=H, y=H");
                        report = decide_hh_conditions(g);
                    }
                    else if (o.method == "direct")
                        report = decide_xy(g, x, y, o.strategy == "full" ? DirectStrategy::full : DirectStrategy::accelerated);
                    else
                        throw InvalidInput("unknown method '" + o.method + "'");

                    auto payload = to_json(report);
                    if (! report.verdict)
                        payload["replays"] = replays(g, report);
                    emit(payload);
                    if (o.expect == "yes" && ! report.verdict)
                        return failed;
                    if (o.expect == "no" && report.verdict)
                        return failed;
                    return ok;
                }

                auto generate(const Options & o) -> int
                {
                    auto p = make_presentation(o.family);
                    auto g = truncate(p, o.truncate_n);
                    auto format = parse_format(o.format).value_or(GraphFormat::graph6);
                    Json payload;
                    payload["family"] = p.name();
                    payload["realisation"] = p.metadata().realisation;
                    payload["order"] = g.order();
                    payload["edge_count"] = g.edge_count();
                    payload["graph6"] = to_graph6(g);
                    if (! o.output.empty()) {
                        write_graph_file(o.output, g, format);
                        payload["file"] = o.output;
                    }
                    emit(payload);
                    return ok;
                }

                auto witness(const Options & o) -> int
                {
                    auto p = make_presentation(o.family);
                    auto result = extension_witness(p, parse_naturals(o.cone), parse_naturals(o.cocone), o.budget);
                    auto payload = to_json(result);
                    payload["family"] = p.name();
                    payload["budget"] = o.budget;
                    emit(payload);
                    return result.status == WitnessStatus::exhausted ? budget_exhausted : ok;
                }

                auto rado_span(const Options & o) -> int
                {
                    auto p = make_presentation(o.family);
                    try {
                        auto c = spanning_rado(p, o.n, o.budget, {.max_requirement_size = o.max_requirement});
                        auto payload = to_json(c);
                        payload["violations"] = verify_construction(p, c);
                        emit(payload);
                        return ok;
                    }
                    catch (const BudgetExhausted & e) {
                        Json payload;
                        payload["exhausted"] = to_json(e.requirement());
                        payload["proven_absent"] = e.proven_absent();
                        payload["message"] = e.what();
                        payload["partial"] = to_json(e.partial());
                        emit(payload);
                        return budget_exhausted;
                    }
                }

                auto classify(const Options & o) -> int
                {
                    auto p = make_presentation(o.family);
                    auto payload = to_json(classify_mb(p, o.budget));
                    payload["family"] = p.name();
                    emit(payload);
                    return ok;
                }

                auto verify(const Options & o) -> int
                {
                    auto finish = [&] (const SuiteReport & r) {
                        emit(to_json(r));
                        return r.passed() ? ok : failed;
                    };
                    auto load = [&] { return read_graph_file(o.file, parse_format(o.format)); };
                    auto base_of = [&] (const Graph & g) {
                        return o.base.empty() ? independence_number(g).witness : parse_vertex_set(g, o.base);
                    };

                    if (o.suite == "directory-lemmas") {
                        if (o.random || o.file.empty())
                            return finish(verify_directory_lemmas_random({o.count, o.max_order, o.seed}));
                        auto g = load();
                        return finish(verify_directory_lemmas(g, base_of(g), o.file, o.x_cap));
                    }
                    if (o.suite == "neighbour-richness" || o.suite == "neighbor-richness") {
                        auto g = load();
                        return finish(verify_neighbour_richness(g, base_of(g), o.threshold, o.file));
                    }
                    if (o.suite == "triangle-dom2") {
                        auto g = load();
                        auto result = find_triangle_dom2(g, base_of(g));
                        Json payload;
                        payload["triangle"] = result.triangle ? Json(*result.triangle) : Json(nullptr);
                        payload["domination_number"] = result.value;
                        if (result.note)
                            payload["note"] = *result.note;
                        emit(payload);
                        return ok;
                    }
                    if (o.suite == "alpha-bound") {
                        std::vector<int> sizes;
                        for (auto m : parse_naturals(o.part_sizes))
                            sizes.push_back(int(m));
                        return finish(verify_alpha_bound_family(o.first, o.last, sizes));
                    }
                    if (o.suite == "cross-validate")
                        return finish(cross_validate_hh(o.n_max));
                    throw InvalidInput("unknown suite '" + o.suite + "'");
                }

            private:
                std::vector<std::string> _command;
                std::ostream & _out;

                static auto analyze_graph(const Graph & g, std::size_t max_directories) -> AnalysisReport
                {
                    return homoglab::analyze(g, max_directories);
                }
        };
    }

    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Homomorphism-homogeneity toolkit", "homoglab"};
        app.require_subcommand(1);
        app.set_version_flag("--version", HOMOGLAB_VERSION);
        Options o;

        auto * analyze = app.add_subcommand("analyze", "Independence and star numbers, directories, age partition");
        analyze->add_option("file", o.file, "Graph file")->required();
        analyze->add_option("--format", o.format, "graph6 | edges (default: detect)");
        analyze->add_option("--max-directories", o.max_directories, "Cap on listed directories (0 = all)");
        analyze->add_option("--age-k", o.age_k, "Largest age class size");

        auto * check = app.add_subcommand("check", "Decide XY-homogeneity");
        check->add_option("file", o.file, "Graph file")->required();
        check->add_option("--format", o.format);
        check->add_option("--x", o.x, "Local morphism class: H, M or I");
        check->add_option("--y", o.y, "Endomorphism class: H, M, E, B, A or I");
        check->add_option("--method", o.method, "direct | conditions");
        check->add_option("--strategy", o.strategy, "accelerated | full");
        check->add_option("--expect", o.expect, "yes | no: exit 1 when the verdict differs")
            ->check(CLI::IsMember({"yes", "no"}));

        auto * generate = app.add_subcommand("generate", "Truncate a family to a finite graph");
        generate->add_option("family", o.family, "Family spec, e.g. rs:3")->required();
        generate->add_option("--truncate", o.truncate_n, "Number of vertices")->required();
        generate->add_option("-o,--output", o.output, "Output file");
        generate->add_option("--format", o.format, "graph6 | edges");

        auto * witness = app.add_subcommand("witness", "Least vertex that is a cone over A and a co-cone over B");
        witness->add_option("family", o.family)->required();
        witness->add_option("--cone", o.cone, "Comma-separated A");
        witness->add_option("--cocone", o.cocone, "Comma-separated B");
        witness->add_option("--budget", o.budget, "Vertices examined");

        auto * span = app.add_subcommand("rado-span", "Greedy spanning subgraph with the extension property");
        span->add_option("family", o.family)->required();
        span->add_option("--n", o.n, "Host vertices that must be placed");
        span->add_option("--budget", o.budget, "Highest host index examined");
        span->add_option("--max-requirement", o.max_requirement, "Largest |A u B| scheduled");

        auto * classify = app.add_subcommand("classify", "Bounded MB-classification probes");
        classify->add_option("family", o.family)->required();
        classify->add_option("--budget", o.budget, "Truncation size");

        auto * verify = app.add_subcommand("verify", "Run a verification suite");
        verify->add_option("suite", o.suite,
                "directory-lemmas | neighbour-richness | triangle-dom2 | alpha-bound | cross-validate")->required();
        verify->add_option("--file", o.file, "Graph file");
        verify->add_option("--format", o.format);
        verify->add_option("--base", o.base, "Directory (default: least maximum independent set)");
        verify->add_option("--threshold", o.threshold, "Richness threshold");
        verify->add_option("--x-cap", o.x_cap, "Largest X in the cone-address check");
        verify->add_flag("--random", o.random, "Seeded random graphs");
        verify->add_option("--count", o.count, "Random graphs");
        verify->add_option("--max-order", o.max_order, "Largest random graph");
        verify->add_option("--seed", o.seed, "Sampler seed");
        verify->add_option("--first", o.first, "First rs(n)");
        verify->add_option("--last", o.last, "Last rs(n)");
        verify->add_option("--part-sizes", o.part_sizes, "Clique part sizes, comma-separated");
        verify->add_option("--n-max", o.n_max, "Largest order for cross-validation");

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::Success & e) {
            return app.exit(e, out, err);
        }
        catch (const CLI::ParseError & e) {
            app.exit(e, out, err);
            return invalid_input;
        }

        std::vector<std::string> command(argv + 1, argv + argc);
        Runner runner(command, out);
        try {
            if (analyze->parsed())
                return runner.analyze(o);
            if (check->parsed())
                return runner.check(o);
            if (generate->parsed())
                return runner.generate(o);
            if (witness->parsed())
                return runner.witness(o);
            if (span->parsed())
                return runner.rado_span(o);
            if (classify->parsed())
                return runner.classify(o);
            return runner.verify(o);
        }
        catch (const BudgetExhausted & e) {
            err << "homoglab: " << e.what() << '\n';
            return budget_exhausted;
        }
        catch (const Error & e) {
            err << "homoglab: " << e.what() << '\n';
            return invalid_input;
        }
    }
}
