#include <homoglab/errors.hpp>
#include <homoglab/graph_io.hpp>

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace homoglab
{
    namespace
    {
        auto trim(std::string_view s) -> std::string_view
        {
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }
    }

    auto to_graph6(const Graph & g) -> std::string
    {
        std::string out;
        long n = g.order();
        if (n <= 62)
            out.push_back(char(63 + n));
        else if (n <= 258047) {
            out.push_back(char(126));
            for (int shift = 12 ; shift >= 0 ; shift -= 6)
                out.push_back(char(63 + ((n >> shift) & 63)));
        }
        else {
            out.push_back(char(126));
            out.push_back(char(126));
            for (int shift = 30 ; shift >= 0 ; shift -= 6)
                out.push_back(char(63 + ((n >> shift) & 63)));
        }

        int value = 0, bits = 0;
        for (int j = 1 ; j < g.order() ; ++j)
            for (int i = 0 ; i < j ; ++i) {
                value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++bits == 6) {
                    out.push_back(char(63 + value));
                    value = bits = 0;
                }
            }
        if (bits > 0)
            out.push_back(char(63 + (value << (6 - bits))));
        return out;
    }

    auto from_graph6(std::string_view text) -> Graph
    {
        text = trim(text);
        constexpr std::string_view header = ">>graph6<<";
        if (text.substr(0, header.size()) == header)
            text.remove_prefix(header.size());
        if (text.empty())
            throw InvalidInput("empty graph6 string");

        for (char c : text)
            if (c < 63 || c > 126)
                throw InvalidInput("graph6 byte out of range");

        std::size_t pos = 0;
        long n = 0;
        auto take = [&] (int count) {
            if (pos + std::size_t(count) > text.size())
                throw InvalidInput("truncated graph6 size field");
            long v = 0;
            for (int k = 0 ; k < count ; ++k)
                v = (v << 6) | (text[pos++] - 63);
            return v;
        };
        if (text[0] != 126)
            n = take(1);
        else if (text.size() > 1 && text[1] != 126) {
            ++pos;
            n = take(3);
        }
        else {
            pos += 2;
            n = take(6);
        }

        long pairs = n * (n - 1) / 2;
        std::size_t needed = std::size_t((pairs + 5) / 6);
        if (text.size() - pos != needed)
            throw InvalidInput("graph6 body has " + std::to_string(text.size() - pos)
                    + " bytes, expected " + std::to_string(needed));

        Graph g{int(n)};
        long bit = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i, ++bit) {
                int byte = text[pos + std::size_t(bit / 6)] - 63;
                if ((byte >> (5 - bit % 6)) & 1)
                    g.add_edge(i, j);
            }
        return g;
    }

    auto to_edge_list(const Graph & g) -> std::string
    {
        std::ostringstream out;
        out << "p " << g.order() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
        return out.str();
    }

    auto from_edge_list(std::string_view text) -> Graph
    {
        std::istringstream in{std::string(text)};
        std::string line;
        std::optional<Graph> g;
        int line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            auto t = trim(std::string_view(line).substr(0, line.find('#')));
            if (t.empty())
                continue;
            std::istringstream fields{std::string(t)};
            if (! g) {
                std::string p;
                long n = -1;
                if (! (fields >> p >> n) || p != "p" || n < 0)
                    throw InvalidInput("edge list must start with a 'p <n>' header");
                g.emplace(int(n));
                continue;
            }
            long u, v;
            std::string extra;
            if (! (fields >> u >> v) || (fields >> extra))
                throw InvalidInput("line " + std::to_string(line_number) + ": expected 'u v'");
            if (u < 0 || v < 0 || u >= g->order() || v >= g->order() || u == v)
                throw InvalidInput("line " + std::to_string(line_number) + ": bad edge " + std::string(t));
            g->add_edge(int(u), int(v));
        }
        if (! g)
            throw InvalidInput("edge list has no 'p <n>' header");
        return *g;
    }

    auto detect_format(std::string_view text) -> GraphFormat
    {
        auto t = trim(text);
        if (t.size() >= 2 && t[0] == 'p' && std::isspace(static_cast<unsigned char>(t[1])))
            return GraphFormat::edge_list;
        if (! t.empty() && t.front() == '#')
            return GraphFormat::edge_list;
        return GraphFormat::graph6;
    }

    auto parse_graph(std::string_view text, GraphFormat format) -> Graph
    {
        if (format == GraphFormat::edge_list)
            return from_edge_list(text);
        // first non-empty line only
        auto t = trim(text);
        auto newline = t.find('\n');
        return from_graph6(t.substr(0, newline));
    }

    auto format_graph(const Graph & g, GraphFormat format) -> std::string
    {
        if (format == GraphFormat::edge_list)
            return to_edge_list(g);
        return to_graph6(g) + "\n";
    }

    auto read_graph_file(const std::string & path, std::optional<GraphFormat> format) -> Graph
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidInput("cannot open " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        auto text = buffer.str();
        return parse_graph(text, format.value_or(detect_format(text)));
    }

    auto write_graph_file(const std::string & path, const Graph & g, GraphFormat format) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw InvalidInput("cannot write " + path);
        out << format_graph(g, format);
    }
}
