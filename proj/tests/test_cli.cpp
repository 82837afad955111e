#include <cli.hpp>

#include <homoglab/graph_io.hpp>
#include <homoglab/structure.hpp>

#include <json.hpp>
#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

namespace
{
    struct Outcome
    {
        int code;
        nlohmann::ordered_json report;
        std::string text;
        std::string errors;
    };

    auto invoke(std::vector<std::string> args) -> Outcome
    {
        args.insert(args.begin(), "homoglab");
        std::vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = homoglab::cli::run(int(argv.size()), argv.data(), out, err);
        Outcome o{code, nullptr, out.str(), err.str()};
        if (! o.text.empty() && o.text.front() == '{')
            o.report = nlohmann::ordered_json::parse(o.text);
        return o;
    }

    auto temp_path(const std::string & name) -> std::string
    {
        return (std::filesystem::temp_directory_path() / ("homoglab_cli_" + name)).string();
    }
}

TEST(Cli, GenerateThenAnalyzeRsThree)
{
    auto file = temp_path("rs3.g6");
    auto gen = invoke({"generate", "rs:3", "--truncate", "9", "-o", file});
    ASSERT_EQ(gen.code, 0) << gen.errors;
    EXPECT_EQ(gen.report["payload"]["order"], 9);

    auto analyzed = invoke({"analyze", file});
    ASSERT_EQ(analyzed.code, 0) << analyzed.errors;
    const auto & p = analyzed.report["payload"];
    EXPECT_EQ(p["independence_number"], 3);
    EXPECT_EQ(p["star_number"], 2);
    EXPECT_EQ(p["directories"], nlohmann::ordered_json::parse("[[0,1,2]]"));
    EXPECT_TRUE(p.contains("age"));
    EXPECT_EQ(analyzed.report["tool"], "homoglab");

    auto again = invoke({"analyze", file});
    EXPECT_EQ(again.text, analyzed.text);

    auto reread = homoglab::read_graph_file(file);
    EXPECT_EQ(homoglab::to_graph6(reread), gen.report["payload"]["graph6"]);
}

TEST(Cli, EdgeListOutput)
{
    auto file = temp_path("path.edges");
    ASSERT_EQ(invoke({"generate", "two_way_path", "--truncate", "5", "--format", "edges", "-o", file}).code, 0);
    auto g = homoglab::read_graph_file(file, homoglab::GraphFormat::edge_list);
    EXPECT_EQ(g.edge_count(), 4);
    EXPECT_TRUE(homoglab::is_connected(g));
}

TEST(Cli, CheckVerdictsAndExpect)
{
    auto k3 = temp_path("k3.g6");
    homoglab::write_graph_file(k3, homoglab::named::complete(3), homoglab::GraphFormat::graph6);
    auto yes = invoke({"check", k3, "--x", "H", "--y", "H"});
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(yes.report["payload"]["verdict"], true);

    auto p5 = temp_path("p5.g6");
    homoglab::write_graph_file(p5, homoglab::named::path(5), homoglab::GraphFormat::graph6);
    auto no = invoke({"check", p5, "--x", "H", "--y", "H", "--expect", "yes"});
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(no.report["payload"]["verdict"], false);
    EXPECT_EQ(no.report["payload"]["replays"], true);

    auto conditions = invoke({"check", p5, "--method", "conditions"});
    EXPECT_EQ(conditions.code, 0);
    EXPECT_EQ(conditions.report["payload"]["method"], "conditions");
    EXPECT_EQ(invoke({"check", p5, "--x", "M", "--method", "conditions"}).code, 2);
    EXPECT_EQ(invoke({"check", p5, "--y", "Q"}).code, 2);
}

TEST(Cli, InvalidInputExitsTwo)
{
    EXPECT_EQ(invoke({"analyze", temp_path("missing.g6")}).code, 2);
    EXPECT_EQ(invoke({"generate", "rs:2", "--truncate", "4"}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"witness", "rado_bit", "--cone", "1", "--cocone", "1"}).code, 2);
}

TEST(Cli, WitnessStatuses)
{
    auto found = invoke({"witness", "rado_bit", "--cone", "0", "--cocone", "1", "--budget", "64"});
    EXPECT_EQ(found.code, 0);
    EXPECT_EQ(found.report["payload"]["vertex"], 5);
    auto absent = invoke({"witness", "rs:3", "--cone", "0,1,2", "--budget", "100"});
    EXPECT_EQ(absent.code, 0);
    EXPECT_EQ(absent.report["payload"]["status"], "proven_absent");
    auto exhausted = invoke({"witness", "rado_bit", "--cone", "0,1,2,3", "--budget", "10"});
    EXPECT_EQ(exhausted.code, 3);
    EXPECT_EQ(exhausted.report["payload"]["status"], "exhausted");
}

TEST(Cli, RadoSpanAndClassify)
{
    auto span = invoke({"rado-span", "rado_bit", "--n", "12", "--budget", "65536"});
    EXPECT_EQ(span.code, 0);
    EXPECT_TRUE(span.report["payload"]["violations"].empty());
    EXPECT_GE(span.report["payload"]["placed"].size(), 12u);

    auto rs = invoke({"rado-span", "rs:3", "--n", "40", "--budget", "4096"});
    EXPECT_EQ(rs.code, 3);
    EXPECT_EQ(rs.report["payload"]["exhausted"]["a"], nlohmann::ordered_json::parse("[0,1,2]"));

    auto classified = invoke({"classify", "rado_bit", "--budget", "512"});
    EXPECT_EQ(classified.code, 0);
    EXPECT_EQ(classified.report["payload"]["verdict"], "Rado");
}

TEST(Cli, VerifySuites)
{
    auto alpha = invoke({"verify", "alpha-bound", "--first", "3", "--last", "5"});
    EXPECT_EQ(alpha.code, 0);
    EXPECT_EQ(alpha.report["payload"]["passed"], true);

    auto cross = invoke({"verify", "cross-validate", "--n-max", "5"});
    EXPECT_EQ(cross.code, 0);
    EXPECT_EQ(cross.report["payload"]["instances"], 52);

    auto lemmas = invoke({"verify", "directory-lemmas", "--random", "--count", "20", "--seed", "5"});
    EXPECT_EQ(lemmas.code, 0);
    EXPECT_EQ(lemmas.report["payload"]["seed"], 5);

    auto file = temp_path("rs3m3.g6");
    ASSERT_EQ(invoke({"generate", "rs:3", "--truncate", "12", "-o", file}).code, 0);
    auto strict = invoke({"verify", "neighbour-richness", "--file", file, "--base", "0,1,2", "--threshold", "3"});
    EXPECT_EQ(strict.code, 1);
    EXPECT_FALSE(strict.report["payload"]["failures"].empty());
    auto triangle = invoke({"verify", "triangle-dom2", "--file", file});
    EXPECT_EQ(triangle.code, 0);
    EXPECT_EQ(triangle.report["payload"]["domination_number"], 2);
    EXPECT_EQ(invoke({"verify", "nonsense"}).code, 2);
}

TEST(Cli, ReportRoundTrips)
{
    auto out = invoke({"classify", "two_way_path", "--budget", "64"});
    auto reparsed = nlohmann::ordered_json::parse(out.report.dump(2));
    EXPECT_EQ(reparsed, out.report);
    EXPECT_EQ(out.report["command"], nlohmann::ordered_json::parse(R"(["classify","two_way_path","--budget","64"])"));
}
