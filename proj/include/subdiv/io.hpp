#ifndef SUBDIV_IO_HPP
#define SUBDIV_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "subdiv/graph.hpp"

namespace subdiv {

using HostGraph = std::variant<BipartiteGraph, GeneralGraph>;

// Edge-list text format. First non-comment line is either
//   bip <nA> <nB>     or     graph <n>
// followed by one "<u> <v>" pair per line, 0-based, with B vertices of a
// bipartite graph indexed from nA upward. Blank lines and lines starting
// with '#' are ignored.
HostGraph read_host(std::istream &in, const std::string &name = "<stream>");
HostGraph read_host_file(const std::string &path);

void write_host(std::ostream &out, const BipartiteGraph &g);
void write_host(std::ostream &out, const GeneralGraph &g);
void write_host_file(const std::string &path, const BipartiteGraph &g);
void write_host_file(const std::string &path, const GeneralGraph &g);

} // namespace subdiv

#endif
