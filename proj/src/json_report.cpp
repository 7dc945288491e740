#include "subdiv/json_report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include "subdiv/error.hpp"

namespace subdiv {

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{})
        fail(ErrorCode::InvalidParams, "unformattable double");
    return std::string(buf, end);
}

Json report_envelope(const std::string &command, Json config, Json result) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["config"] = std::move(config);
    j["result"] = std::move(result);
    return j;
}

std::string dump_report(const Json &report) { return report.dump(2) + "\n"; }

Json degree_stats_json(const DegreeStats &st) {
    return Json{{"min", st.min}, {"max", st.max}, {"mean", st.mean}};
}

Json certificate_json(const SubdivisionCertificate &cert, const Pattern &p) {
    Json branch = Json::object();
    for (VertexId i = 0; i < cert.branch.size(); ++i)
        branch[p.vertex_name(i)] = cert.branch[i];
    Json mids = Json::object();
    for (std::size_t j = 0; j < cert.midpoints.size(); ++j) {
        const auto &[x, y] = p.edges[j];
        mids[p.vertex_name(x) + "-" + p.vertex_name(y)] = cert.midpoints[j];
    }
    return Json{{"branch", std::move(branch)},
                {"midpoints", std::move(mids)}};
}

Json trace_json(const EmbedTrace &tr) {
    Json branch = Json::array();
    for (const auto &b : tr.branch)
        branch.push_back(Json{{"u", b.u},
                              {"u0_size", b.u0_size},
                              {"u_size", b.u_size},
                              {"light_degree", b.light_degree},
                              {"next_set", b.next_set},
                              {"demanded", b.demanded}});
    Json sv = Json::array();
    for (const auto &s : tr.s_vertices)
        sv.push_back(
            Json{{"v", s.v}, {"bad_uu", s.bad_uu}, {"bad_uv", s.bad_uv}});
    return Json{{"delta", tr.delta},
                {"k_ratio", tr.k_ratio},
                {"branch", std::move(branch)},
                {"s_vertices", std::move(sv)},
                {"v_set_size", tr.v_set_size},
                {"v_demanded", tr.v_demanded}};
}

Json embed_result_json(const EmbedResult &r, const Pattern &p) {
    if (const auto *s = std::get_if<EmbedSuccess>(&r))
        return Json{{"status", "success"},
                    {"via_heavy_clique", s->via_heavy_clique},
                    {"certificate", certificate_json(s->certificate, p)},
                    {"trace", trace_json(s->trace)}};
    if (const auto *tf = std::get_if<ThresholdFailure>(&r))
        return Json{{"status", "threshold_failure"},
                    {"step", tf->step},
                    {"set_size", tf->set_size},
                    {"demanded", tf->demanded},
                    {"trace", trace_json(tf->trace)}};
    const auto &sf = std::get<SelectionFailure>(r);
    return Json{{"status", "selection_failure"},
                {"accepted", sf.accepted},
                {"rejected_uu", sf.rejected_uu},
                {"rejected_uv", sf.rejected_uv},
                {"v_set_size", sf.v_set_size},
                {"demanded", sf.demanded},
                {"trace", trace_json(sf.trace)}};
}

Json regularize_json(const RegularizeReport &r) {
    return Json{{"m", r.m},
                {"side_a", r.subgraph.num_a()},
                {"side_b", r.subgraph.num_b()},
                {"edges", r.subgraph.edge_count()},
                {"achieved_K", r.achieved_k},
                {"density_ratio", r.density_ratio},
                {"balanced", r.balanced},
                {"rounds", r.rounds}};
}

Json extremal_json(const ExtremalRecord &r) {
    Json edges = Json::array();
    for (const auto &[u, v] : r.witness.edges())
        edges.push_back(Json::array({u, v}));
    return Json{{"n", r.n},
                {"value", r.value},
                {"witness_edges", std::move(edges)},
                {"witness_verified", r.witness_verified},
                {"nodes", r.nodes}};
}

Json lemma_json(const LemmaCheck &c) {
    return Json{{"holds", c.holds}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

Json turan_json(const TuranCheck &c) {
    return Json{{"holds", c.holds},
                {"light", c.light},
                {"bound_weak", c.bound_weak},
                {"bound_strong", c.bound_strong}};
}

Json deletion_json(const DeletionReport &r) {
    return Json{{"n", r.n},
                {"t", r.t},
                {"factor", r.factor},
                {"p", r.p},
                {"initial_edges", r.initial_edges},
                {"edges_deleted", r.edges_deleted},
                {"final_edges", r.final_edges},
                {"target_exponent", r.target_exponent},
                {"reference", r.reference},
                {"ratio", r.ratio},
                {"exact", r.exact},
                {"oracle_verified", r.oracle_verified}};
}

Json bound_row_json(const BoundRow &r) {
    return Json{{"t", r.t},
                {"upper", Json{{"num", r.upper.num},
                               {"den", r.upper.den},
                               {"value", r.upper.value()}}},
                {"lower", Json{{"num", r.lower.num},
                               {"den", r.lower.den},
                               {"value", r.lower.value()}}},
                {"prior", r.prior},
                {"ordered", r.ordered}};
}

CsvWriter::CsvWriter(std::vector<std::string> columns)
    : columns_(std::move(columns)) {
    if (columns_.empty())
        fail(ErrorCode::InvalidParams, "csv needs at least one column");
}

void CsvWriter::comment(const std::string &line) {
    comments_.push_back(line);
}

void CsvWriter::row(std::vector<std::string> cells) {
    if (cells.size() != columns_.size())
        fail(ErrorCode::InvalidParams, "csv row width mismatch");
    rows_.push_back(std::move(cells));
}

namespace {

std::string csv_escape(const std::string &cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos)
        return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string CsvWriter::text() const {
    std::string out;
    for (const auto &c : comments_)
        out += "# " + c + "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i)
        out += (i ? "," : "") + csv_escape(columns_[i]);
    out += '\n';
    for (const auto &r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i)
            out += (i ? "," : "") + csv_escape(r[i]);
        out += '\n';
    }
    return out;
}

void emit_text(const std::string &out_path, const std::string &text) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        fail(ErrorCode::IoError, "cannot open " + out_path + " for writing");
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f)
        fail(ErrorCode::IoError, "short write to " + out_path);
}

} // namespace subdiv
