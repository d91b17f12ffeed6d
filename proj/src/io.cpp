#include "irrsub/io.hpp"

#include <charconv>
#include <sstream>

#include "irrsub/vectors.hpp"

namespace irrsub {

namespace {

struct line_reader {
    std::string_view text;
    size_t off = 0;
    int line_no = 0;

    bool next(std::string_view& line) {
        if (off >= text.size()) return false;
        size_t end = text.find('\n', off);
        if (end == std::string_view::npos) end = text.size();
        line = text.substr(off, end - off);
        off = end + 1;
        ++line_no;
        return true;
    }
};

[[noreturn]] void parse_fail(int line, const std::string& reason) {
    fail(errc::parse_error, "line " + std::to_string(line) + ": " + reason);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

int to_int(std::string_view tok, int line) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
        parse_fail(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

} // namespace

std::string serialize_graph(const multigraph& g) {
    require(g.live_edge_count() == g.edge_count() && g.live_vertex_count() == g.vertex_count(),
            errc::invalid_params, "cannot serialize a graph with tombstones");
    std::ostringstream out;
    out << "p mgraph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int e = 0; e < g.edge_count(); ++e)
        out << "e " << g.edge(e).u << ' ' << g.edge(e).v << '\n';
    return out.str();
}

multigraph parse_graph(std::string_view text) {
    line_reader rd{text};
    std::string_view line;
    require(rd.next(line), errc::parse_error, "empty input");
    auto head = split_ws(line);
    if (head.size() != 4 || head[0] != "p" || head[1] != "mgraph")
        parse_fail(rd.line_no, "expected 'p mgraph <n> <m>'");
    int n = to_int(head[2], rd.line_no);
    int m = to_int(head[3], rd.line_no);
    if (n < 0 || m < 0) parse_fail(rd.line_no, "negative header counts");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    while (rd.next(line)) {
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() != 3 || toks[0] != "e") parse_fail(rd.line_no, "expected 'e <u> <v>'");
        int u = to_int(toks[1], rd.line_no), v = to_int(toks[2], rd.line_no);
        if (u < 0 || u >= n || v < 0 || v >= n) parse_fail(rd.line_no, "vertex id out of range");
        if (u == v) parse_fail(rd.line_no, "loop edge");
        edges.push_back({u, v});
    }
    if ((int)edges.size() != m)
        fail(errc::inconsistent_header, "header says " + std::to_string(m) + " edges, found " +
                                            std::to_string(edges.size()));
    return multigraph::build(n, edges);
}

std::string serialize_subgraph(const spanning_subgraph& h) {
    auto ids = h.member_edges();
    std::ostringstream out;
    out << "s " << ids.size() << '\n';
    for (size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
    out << '\n';
    return out.str();
}

std::vector<int> parse_subgraph(std::string_view text, int edge_count) {
    line_reader rd{text};
    std::string_view line;
    require(rd.next(line), errc::parse_error, "empty input");
    auto head = split_ws(line);
    if (head.size() != 2 || head[0] != "s") parse_fail(rd.line_no, "expected 's <count>'");
    int count = to_int(head[1], rd.line_no);
    if (count < 0) parse_fail(rd.line_no, "negative member count");

    std::vector<int> ids;
    while (rd.next(line))
        for (auto tok : split_ws(line)) {
            int e = to_int(tok, rd.line_no);
            if (e < 0 || e >= edge_count) parse_fail(rd.line_no, "edge id out of range");
            if (!ids.empty() && e <= ids.back()) parse_fail(rd.line_no, "ids must be ascending");
            ids.push_back(e);
        }
    if ((int)ids.size() != count)
        fail(errc::inconsistent_header, "header says " + std::to_string(count) +
                                            " members, found " + std::to_string(ids.size()));
    return ids;
}

std::string degree_report(const spanning_subgraph& h) {
    auto prof = h.profile();
    auto a = a_scaled(h);
    std::ostringstream out;
    for (int k = 0; k < (int)prof.size(); ++k) out << "k " << k << ' ' << prof[k] << '\n';
    out << "anorm " << inf_norm(a) << " scale " << (h.degree_cap() + 1) << '\n';
    return out.str();
}

} // namespace irrsub
