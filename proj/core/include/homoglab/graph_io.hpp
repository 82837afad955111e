#pragma once

#include <homoglab/graph.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homoglab
{
    enum class GraphFormat
    {
        graph6,
        edge_list
    };

    auto to_graph6(const Graph & g) -> std::string;
    /// Parses one graph6 string (an optional ">>graph6<<" header is accepted).
    auto from_graph6(std::string_view text) -> Graph;

    /// "p <n>" header followed by one "u v" pair per line, 0-based.
    auto to_edge_list(const Graph & g) -> std::string;
    auto from_edge_list(std::string_view text) -> Graph;

    /// Guesses the format from content: a leading "p " line means edge list.
    auto detect_format(std::string_view text) -> GraphFormat;

    auto parse_graph(std::string_view text, GraphFormat format) -> Graph;
    auto format_graph(const Graph & g, GraphFormat format) -> std::string;

    auto read_graph_file(const std::string & path, std::optional<GraphFormat> format = std::nullopt) -> Graph;
    auto write_graph_file(const std::string & path, const Graph & g, GraphFormat format) -> void;
}
