#include "report_json.hpp"

#include <homoglab/graph_io.hpp>

namespace homoglab::cli
{
    auto to_json(const VertexSet & s) -> Json
    {
        return Json(s.members());
    }

    auto to_json(const PartialMap & f) -> Json
    {
        Json pairs = Json::array();
        for (auto [s, t] : f.pairs)
            pairs.push_back({s, t});
        return pairs;
    }

    auto to_json(const AnalysisReport & r) -> Json
    {
        Json j;
        j["order"] = r.order;
        j["edge_count"] = r.edge_count;
        j["connected"] = r.is_connected;
        j["independence_number"] = r.independence_number;
        j["alpha_witness"] = to_json(r.alpha_witness);
        j["star_number"] = r.star_number;
        j["sigma_centre"] = r.sigma_centre ? Json(*r.sigma_centre) : Json(nullptr);
        j["sigma_witness"] = to_json(r.sigma_witness);
        Json dirs = Json::array();
        for (auto & d : r.directories)
            dirs.push_back(to_json(d));
        j["directories"] = dirs;
        if (r.directory_note)
            j["directory_note"] = *r.directory_note;
        return j;
    }

    auto to_json(const AgePartition & p) -> Json
    {
        Json j;
        j["k"] = p.k;
        Json classes = Json::array();
        for (std::size_t c = 0 ; c < p.classes.size() ; ++c) {
            const auto & cls = p.classes[c];
            Json entry;
            entry["size"] = cls.size();
            entry["code"] = cls.code.hex();
            entry["graph6"] = to_graph6(cls.representative);
            entry["example_embedding"] = cls.embeddings.empty() ? Json::array() : to_json(cls.embeddings.front());
            entry["kk"] = p.in_kk(c);
            entry["okk"] = p.in_okk(c);
            classes.push_back(entry);
        }
        j["classes"] = classes;
        Json conflicts = Json::array();
        for (auto & c : p.conflicts)
            conflicts.push_back({{"code", c.code.hex()}, {"coned_embedding", to_json(c.coned_embedding)},
                    {"cone", c.cone}, {"coneless_embedding", to_json(c.coneless_embedding)}});
        j["conflicts"] = conflicts;
        return j;
    }

    auto to_json(const HomogReport & r) -> Json
    {
        Json j;
        j["verdict"] = r.verdict;
        j["x"] = std::string(1, to_char(r.x));
        j["y"] = std::string(1, to_char(r.y));
        j["method"] = r.method == DecisionMethod::direct ? "direct" : "conditions";
        if (r.counterexample) {
            Json c;
            c["local"] = to_json(r.counterexample->local);
            c["vertex"] = r.counterexample->vertex ? Json(*r.counterexample->vertex) : Json(nullptr);
            j["counterexample"] = c;
        }
        else
            j["counterexample"] = nullptr;
        if (r.violation) {
            const auto & v = *r.violation;
            j["violation"] = {{"condition", v.condition}, {"class_a", v.class_a.hex()}, {"class_b", v.class_b.hex()},
                {"coned_embedding", to_json(v.coned_embedding)}, {"cone", v.cone},
                {"coneless_embedding", to_json(v.coneless_embedding)}};
        }
        j["notes"] = r.notes;
        return j;
    }

    auto to_json(const SuiteReport & r) -> Json
    {
        Json j;
        j["suite"] = r.suite;
        j["passed"] = r.passed();
        j["instances"] = r.instances;
        j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
        Json stats = Json::object();
        for (auto & [key, value] : r.stats)
            stats[key] = value;
        j["stats"] = stats;
        Json failures = Json::array();
        for (auto & f : r.failures) {
            Json witness = Json::object();
            for (auto & [key, value] : f.witness)
                witness[key] = value;
            failures.push_back({{"instance", f.instance}, {"graph6", f.graph6}, {"clause", f.clause}, {"witness", witness}});
        }
        j["failures"] = failures;
        j["notes"] = r.notes;
        j["elapsed_ms"] = r.elapsed.count();
        return j;
    }

    auto to_json(const Requirement & r) -> Json
    {
        return {{"a", r.a}, {"b", r.b}};
    }

    auto to_json(const RadoConstruction & c) -> Json
    {
        Json j;
        j["host"] = c.host;
        j["placed"] = c.placed;
        Json edges = Json::array();
        for (auto [u, v] : c.selected_edges)
            edges.push_back({u, v});
        j["selected_edges"] = edges;
        Json schedule = Json::array();
        for (auto & s : c.schedule)
            schedule.push_back({{"requirement", to_json(s.requirement)}, {"witness", s.witness}, {"fresh", s.fresh}});
        j["schedule"] = schedule;
        return j;
    }

    auto to_json(const MbClassification & c) -> Json
    {
        return {{"verdict", to_string(c.verdict)}, {"budget", c.budget}, {"evidence", c.evidence},
            {"note", "evidence at budget, not a proof"}};
    }

    auto to_json(const WitnessResult & w) -> Json
    {
        return {{"status", to_string(w.status)}, {"vertex", w.vertex ? Json(*w.vertex) : Json(nullptr)}};
    }

    auto envelope(const std::vector<std::string> & command, Json payload) -> Json
    {
        Json j;
        j["tool"] = "homoglab";
        j["version"] = HOMOGLAB_VERSION;
        j["command"] = command;
        j["payload"] = std::move(payload);
        return j;
    }
}
