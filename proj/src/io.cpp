#include "subdiv/io.hpp"

#include <fstream>
#include <sstream>

namespace subdiv {

namespace {

bool blank_or_comment(const std::string &line) {
    for (char c : line) {
        if (c == '#')
            return true;
        if (!isspace(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

[[noreturn]] void parse_fail(const std::string &name, std::size_t lineno,
                             const std::string &what) {
    fail(ErrorCode::ParseError,
         name + ":" + std::to_string(lineno) + ": " + what);
}

} // namespace

HostGraph read_host(std::istream &in, const std::string &name) {
    std::string line;
    std::size_t lineno = 0;
    std::string kind;
    std::uint64_t h1 = 0, h2 = 0;
    bool have_header = false;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line))
            continue;
        std::istringstream ls(line);
        if (!have_header) {
            ls >> kind;
            if (kind == "bip") {
                if (!(ls >> h1 >> h2))
                    parse_fail(name, lineno, "expected: bip <nA> <nB>");
            } else if (kind == "graph") {
                if (!(ls >> h1))
                    parse_fail(name, lineno, "expected: graph <n>");
            } else {
                parse_fail(name, lineno, "unknown header '" + kind + "'");
            }
            std::string rest;
            if (ls >> rest)
                parse_fail(name, lineno, "trailing tokens after header");
            have_header = true;
            continue;
        }
        std::uint64_t u, v;
        if (!(ls >> u >> v))
            parse_fail(name, lineno, "expected: <u> <v>");
        std::string rest;
        if (ls >> rest)
            parse_fail(name, lineno, "trailing tokens after edge");
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (!have_header)
        parse_fail(name, lineno, "missing 'bip' or 'graph' header");

    try {
        if (kind == "bip")
            return BipartiteGraph::build(static_cast<VertexId>(h1),
                                         static_cast<VertexId>(h2), edges);
        return GeneralGraph::build(static_cast<VertexId>(h1), edges);
    } catch (const Error &e) {
        fail(ErrorCode::ParseError, name + ": " + e.what());
    }
}

HostGraph read_host_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::IoError, "cannot open " + path);
    return read_host(in, path);
}

void write_host(std::ostream &out, const BipartiteGraph &g) {
    out << "bip " << g.num_a() << " " << g.num_b() << "\n";
    for (const auto &[a, b] : g.edges())
        out << a << " " << b << "\n";
}

void write_host(std::ostream &out, const GeneralGraph &g) {
    out << "graph " << g.num_vertices() << "\n";
    for (const auto &[u, v] : g.edges())
        out << u << " " << v << "\n";
}

namespace {
template <typename G> void write_file(const std::string &path, const G &g) {
    std::ofstream out(path);
    if (!out)
        fail(ErrorCode::IoError, "cannot open " + path + " for writing");
    write_host(out, g);
    if (!out)
        fail(ErrorCode::IoError, "write failed: " + path);
}
} // namespace

void write_host_file(const std::string &path, const BipartiteGraph &g) {
    write_file(path, g);
}

void write_host_file(const std::string &path, const GeneralGraph &g) {
    write_file(path, g);
}

} // namespace subdiv
