#include "torus/graph_io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "torus/errors.hpp"

namespace torus {

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int sextet(char c) {
    if (c < 63 || c > 126) throw InputError(std::string("invalid graph6 character '") + c + "'");
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw InputError("empty graph6 string");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != 126) {
        n = sextet(text[0]);
        pos = 1;
    } else if (text.size() >= 4 && text[1] != 126) {
        n = (long{sextet(text[1])} << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
        pos = 4;
    } else if (text.size() >= 8) {
        for (int i = 2; i < 8; ++i) n = (n << 6) | sextet(text[i]);
        pos = 8;
    } else {
        throw InputError("truncated graph6 size field");
    }
    if (n > (1 << 20)) throw InputError("graph6 order too large");

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (text.size() - pos != need)
        throw InputError("graph6 body has " + std::to_string(text.size() - pos) + " characters, expected " +
                         std::to_string(need));

    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = sextet(text[pos + k / 6]);
            if (byte & (1 << (5 - k % 6))) g.add_edge(i, j);
        }
    // Padding bits must be zero.
    for (; k < need * 6; ++k)
        if (sextet(text[pos + k / 6]) & (1 << (5 - k % 6))) throw InputError("non-zero graph6 padding");
    return g;
}

std::string to_graph6(const Graph& g) {
    const long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out += "~~";
        for (int shift : {30, 24, 18, 12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

namespace {

std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        lines.emplace_back(trim(line));
    }
    return lines;
}

Graph edge_list_from_lines(const std::vector<std::string>& lines, std::size_t& i) {
    std::istringstream header(lines[i]);
    long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0 || !(header >> std::ws).eof())
        throw InputError("bad edge-list header '" + lines[i] + "'");
    ++i;
    Graph g(static_cast<int>(n));
    for (long k = 0; k < m; ++k, ++i) {
        if (i >= lines.size() || lines[i].empty())
            throw InputError("edge list declares " + std::to_string(m) + " edges but has " + std::to_string(k));
        std::istringstream row(lines[i]);
        long u = -1, v = -1;
        if (!(row >> u >> v) || !(row >> std::ws).eof()) throw InputError("bad edge line '" + lines[i] + "'");
        if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range in '" + lines[i] + "'");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

}  // namespace

std::vector<Graph> read_edge_lists(std::istream& in) {
    auto lines = content_lines(in);
    std::vector<Graph> graphs;
    std::size_t i = 0;
    while (i < lines.size()) {
        if (lines[i].empty()) {
            ++i;
            continue;
        }
        graphs.push_back(edge_list_from_lines(lines, i));
        if (i < lines.size() && !lines[i].empty())
            throw InputError("unexpected line after edge list: '" + lines[i] + "'");
    }
    return graphs;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    auto graphs = read_edge_lists(in);
    if (graphs.size() != 1) throw InputError("expected exactly one edge list, found " + std::to_string(graphs.size()));
    return graphs.front();
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> graphs;
    for (const auto& line : content_lines(in))
        if (!line.empty()) graphs.push_back(parse_graph6(line));
    return graphs;
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
    return format == GraphFormat::Graph6 ? read_graph6_lines(in) : read_edge_lists(in);
}

}  // namespace torus
