#include "vcrit/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace vcrit {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("adjacency list: " + what);
}

void skip_spaces(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

int parse_number(std::string_view text, std::size_t& pos) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected a vertex number");
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > kMaxVertices) fail("vertex number too large");
        ++pos;
    }
    return static_cast<int>(value);
}

} // namespace

Graph parse_adjacency_list(std::string_view text) {
    std::size_t pos = 0;
    skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != '{') fail("missing opening brace");
    ++pos;

    // entries[v] = neighbors as listed for vertex v
    std::vector<std::vector<int>> entries;
    for (;;) {
        skip_spaces(text, pos);
        if (pos < text.size() && text[pos] == '}') {
            ++pos;
            break;
        }
        int v = parse_number(text, pos);
        if (v != static_cast<int>(entries.size()))
            fail("vertex entries must be 0..n-1, each exactly once and in order");
        skip_spaces(text, pos);
        if (pos >= text.size() || text[pos] != ':') fail("expected ':' after vertex");
        ++pos;
        std::vector<int> nbrs;
        for (;;) {
            skip_spaces(text, pos);
            if (pos >= text.size()) fail("unterminated entry");
            if (text[pos] == ';' || text[pos] == '}') break;
            nbrs.push_back(parse_number(text, pos));
        }
        entries.push_back(std::move(nbrs));
        if (text[pos] == ';') ++pos;
    }
    skip_spaces(text, pos);
    if (pos != text.size()) fail("trailing characters after closing brace");

    const int n = static_cast<int>(entries.size());
    if (n == 0) fail("no vertex entries");
    if (n > kMaxVertices) fail("too many vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        for (int w : entries[static_cast<std::size_t>(v)]) {
            if (w >= n) fail("neighbor index out of range");
            if (w == v) fail("self-loop");
            g.add_edge(v, w); // symmetric even if listed one-way
        }
    }
    return g;
}

std::string emit_adjacency_list(const Graph& g) {
    std::string out = "{";
    for (int v = 0; v < g.order(); ++v) {
        if (v > 0) out += "; ";
        out += std::to_string(v);
        out += ": ";
        bool first = true;
        for_each_vertex(g.neighbors(v), [&](int w) {
            if (!first) out += ' ';
            out += std::to_string(w);
            first = false;
        });
    }
    out += "}";
    return out;
}

namespace {

[[noreturn]] void fail_g6(const std::string& what) {
    throw std::invalid_argument("graph6: " + what);
}

} // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) fail_g6("empty input");
    const unsigned char header = static_cast<unsigned char>(line[0]);
    if (header == 126) fail_g6("extended-length header not supported (n > 62)");
    if (header < 63 || header > 125) fail_g6("bad header byte");
    const int n = header - 63;
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nchars = (nbits + 5) / 6;
    if (line.size() < 1 + nchars) fail_g6("truncated edge payload");
    if (line.size() > 1 + nchars) fail_g6("trailing characters");

    Graph g(n);
    std::size_t bitidx = 0;
    for (std::size_t ci = 0; ci < nchars; ++ci) {
        const unsigned char ch = static_cast<unsigned char>(line[1 + ci]);
        if (ch < 63 || ch > 126) fail_g6("payload byte out of range");
        const unsigned group = ch - 63;
        for (int b = 5; b >= 0; --b, ++bitidx) {
            const bool bit = (group >> b) & 1u;
            if (bitidx >= nbits) {
                if (bit) fail_g6("nonzero padding bits");
                continue;
            }
            if (bit) {
                // bit k of the column-major upper triangle: column j holds
                // bits for pairs (0,j)..(j-1,j)
                std::size_t k = bitidx;
                int j = 1;
                while (k >= static_cast<std::size_t>(j)) {
                    k -= static_cast<std::size_t>(j);
                    ++j;
                }
                g.add_edge(static_cast<int>(k), j);
            }
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6: short form supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    unsigned group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        group <<= (6 - filled);
        out.push_back(static_cast<char>(63 + group));
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

Graph parse_line(std::string_view line, GraphFormat fmt) {
    return fmt == GraphFormat::adjacency ? parse_adjacency_list(line) : parse_graph6(line);
}

std::vector<Graph> read_graphs_impl(std::istream& in, const GraphFormat* forced) {
    std::vector<Graph> out;
    std::string raw;
    while (std::getline(in, raw)) {
        std::string_view line = trim(raw);
        if (line.empty()) continue;
        GraphFormat fmt = forced ? *forced
                                 : (line.front() == '{' ? GraphFormat::adjacency : GraphFormat::graph6);
        out.push_back(parse_line(line, fmt));
    }
    return out;
}

} // namespace

std::vector<Graph> read_graphs(std::istream& in) { return read_graphs_impl(in, nullptr); }

std::vector<Graph> read_graphs(std::istream& in, GraphFormat fmt) { return read_graphs_impl(in, &fmt); }

std::vector<Graph> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graphs(in);
}

std::vector<Graph> read_graph_file(const std::string& path, GraphFormat fmt) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graphs(in, fmt);
}

} // namespace vcrit
