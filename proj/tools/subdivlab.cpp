// Command-line front end. Every subcommand reads plain edge-list files,
// emits a single JSON report (CSV for the tabular commands) with the full
// config echoed, and keeps output byte-identical for identical configs.
// Exit codes: 0 success/holds, 2 structured mathematical failure, 1 usage
// or I/O error.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subdiv/bounds.hpp"
#include "subdiv/constructions.hpp"
#include "subdiv/embed.hpp"
#include "subdiv/error.hpp"
#include "subdiv/io.hpp"
#include "subdiv/json_report.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/regularize.hpp"

namespace {

using namespace subdiv;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMathFail = 2;

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out;
};

// "1/3" or "0.25"; the slash form keeps alpha exact in the config echo.
double parse_ratio(const std::string &s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return std::stod(s);
        const double num = std::stod(s.substr(0, slash));
        const double den = std::stod(s.substr(slash + 1));
        if (den == 0.0)
            fail(ErrorCode::InvalidParams, "zero denominator in " + s);
        return num / den;
    } catch (const Error &) {
        throw;
    } catch (const std::exception &) {
        fail(ErrorCode::InvalidParams, "cannot parse ratio " + s);
    }
}

// L<s>,<t> | K<t> | K<a>,<b>. The K forms reduce to the L family where
// possible: K_t is the s=1 member; K_{a,b} stays a plain graph.
struct PatternSpec {
    std::string text;
    bool is_biclique = false;
    Pattern pattern;          // valid unless is_biclique
    GeneralGraph base_graph;  // the pattern as a plain graph
};

std::uint32_t parse_u32(const std::string &s, const std::string &what) {
    try {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(s, &pos);
        if (pos != s.size() || v == 0 || v > 0xffffffffUL)
            fail(ErrorCode::InvalidParams, "bad " + what + ": " + s);
        return static_cast<std::uint32_t>(v);
    } catch (const Error &) {
        throw;
    } catch (const std::exception &) {
        fail(ErrorCode::InvalidParams, "bad " + what + ": " + s);
    }
}

PatternSpec parse_pattern(const std::string &text) {
    if (text.size() < 2)
        fail(ErrorCode::InvalidParams, "pattern too short: " + text);
    PatternSpec spec;
    spec.text = text;
    const char kind = text[0];
    const std::string rest = text.substr(1);
    const auto comma = rest.find(',');
    if (kind == 'L') {
        if (comma == std::string::npos)
            fail(ErrorCode::InvalidParams,
                 "L patterns need two parameters: " + text);
        spec.pattern = make_pattern(parse_u32(rest.substr(0, comma), "s"),
                                    parse_u32(rest.substr(comma + 1), "t"));
        spec.base_graph = to_graph(spec.pattern);
        return spec;
    }
    if (kind == 'K') {
        if (comma == std::string::npos) {
            spec.pattern = make_pattern(1, parse_u32(rest, "t"));
            spec.base_graph = to_graph(spec.pattern);
            return spec;
        }
        spec.is_biclique = true;
        spec.base_graph = biclique(parse_u32(rest.substr(0, comma), "a"),
                                   parse_u32(rest.substr(comma + 1), "b"));
        return spec;
    }
    fail(ErrorCode::InvalidParams, "pattern must start with L or K: " + text);
}

BipartiteGraph require_bipartite(HostGraph host, const std::string &path) {
    if (auto *b = std::get_if<BipartiteGraph>(&host))
        return std::move(*b);
    fail(ErrorCode::InvalidParams,
         path + " holds a general graph; this command needs a 'bip' host");
}

GeneralGraph as_general(HostGraph host) {
    if (auto *g = std::get_if<GeneralGraph>(&host))
        return std::move(*g);
    return to_general(std::get<BipartiteGraph>(host));
}

void emit_report(const GlobalOpts &g, const std::string &command, Json config,
                 Json result) {
    config["format"] = g.format;
    config["out"] = g.out;
    emit_text(g.out,
              dump_report(report_envelope(command, std::move(config),
                                          std::move(result))));
}

int exit_code_for(const EmbedResult &r) {
    return std::holds_alternative<EmbedSuccess>(r) ? kExitOk : kExitMathFail;
}

// Freeness of the host is a precondition the lemma checks cannot afford to
// verify on large hosts; do it when the oracle can, and say so either way.
Json freeness_json(const BipartiteGraph &host, const PatternSpec &spec) {
    Json j;
    constexpr VertexId kOracleLimit = 60;
    j["oracle_vertex_limit"] = kOracleLimit;
    if (host.num_vertices() > kOracleLimit) {
        j["checked"] = false;
        return j;
    }
    const GeneralGraph g = to_general(host);
    const SearchResult r =
        spec.is_biclique ? contains_subdivision(g, spec.base_graph)
                         : contains_subdivision(g, spec.pattern);
    if (r.status == SearchStatus::BudgetExceeded) {
        j["checked"] = false;
        return j;
    }
    j["checked"] = true;
    j["free"] = r.status == SearchStatus::No;
    return j;
}

int cmd_gen(const GlobalOpts &g, const std::string &kind, std::uint32_t na,
            std::uint32_t nb, double p, std::uint32_t n, std::uint32_t t,
            double factor, std::uint32_t q, bool verify) {
    if (g.out.empty())
        fail(ErrorCode::InvalidParams, "gen requires --out <file.graph>");
    Json config{{"kind", kind}, {"seed", g.seed}};
    Json result;
    if (kind == "random") {
        config["na"] = na;
        config["nb"] = nb;
        config["p"] = p;
        const auto host = random_bipartite(na, nb, p, g.seed);
        write_host_file(g.out, host);
        result = Json{{"side_a", host.num_a()},
                      {"side_b", host.num_b()},
                      {"edges", host.edge_count()}};
    } else if (kind == "deletion") {
        config["n"] = n;
        config["t"] = t;
        config["factor"] = factor;
        const auto [graph, rep] = deletion_lower_bound(n, t, g.seed, factor);
        write_host_file(g.out, graph);
        result = deletion_json(rep);
    } else if (kind == "gq") {
        config["q"] = q;
        const auto host = gq_incidence(q);
        write_host_file(g.out, host);
        result = Json{{"points_per_side", host.num_a()},
                      {"edges", host.edge_count()},
                      {"degree", q + 1}};
        if (verify) {
            config["verify"] = true;
            result["girth8_verified"] = bipartite_girth_at_least_8(host);
        }
    } else {
        fail(ErrorCode::InvalidParams, "unknown gen kind " + kind);
    }
    // The graph went to --out; the report rides alongside it.
    config["graph_out"] = g.out;
    GlobalOpts sidecar = g;
    sidecar.out = g.out + ".json";
    emit_report(sidecar, "gen", std::move(config), std::move(result));
    return kExitOk;
}

int cmd_regularize(const GlobalOpts &g, const std::string &alpha_text,
                   double c_density, double k_target,
                   const std::string &in_path, const std::string &out_path) {
    RegularizeParams p;
    p.alpha = parse_ratio(alpha_text);
    p.c_density = c_density;
    p.k_target = k_target;
    p.seed = g.seed;
    const GeneralGraph host = as_general(read_host_file(in_path));
    const RegularizeReport rep = regularize(host, p);
    write_host_file(out_path, rep.subgraph);
    Json config{{"alpha", alpha_text}, {"C", c_density},
                {"K", k_target},      {"seed", g.seed},
                {"in", in_path},      {"graph_out", out_path}};
    emit_report(g, "regularize", std::move(config), regularize_json(rep));
    return kExitOk;
}

int cmd_embed(const GlobalOpts &g, const EmbedParams &p,
              const std::string &host_path) {
    const BipartiteGraph host =
        require_bipartite(read_host_file(host_path), host_path);
    const EmbedResult r = embed(host, p);
    Json config{{"s", p.s},         {"t", p.t},       {"c", p.c},
                {"slack", p.slack}, {"seed", g.seed}, {"host", host_path}};
    emit_report(g, "embed", std::move(config),
                embed_result_json(r, make_pattern(p.s, p.t)));
    return exit_code_for(r);
}

int cmd_pipeline(const GlobalOpts &g, const std::string &alpha_text,
                 double c_density, double k_target, const EmbedParams &ep,
                 const std::string &host_path) {
    RegularizeParams rp;
    rp.alpha = parse_ratio(alpha_text);
    rp.c_density = c_density;
    rp.k_target = k_target;
    rp.seed = g.seed;
    const GeneralGraph host = as_general(read_host_file(host_path));
    const PipelineResult r = pipeline_embed(host, rp, ep);
    Json config{{"alpha", alpha_text}, {"C", c_density},
                {"K", k_target},       {"s", ep.s},
                {"t", ep.t},           {"c", ep.c},
                {"slack", ep.slack},   {"seed", g.seed},
                {"host", host_path}};
    Json result{
        {"regularization", regularize_json(r.regularization)},
        {"embedding",
         embed_result_json(r.embedding, make_pattern(ep.s, ep.t))}};
    emit_report(g, "pipeline", std::move(config), std::move(result));
    return exit_code_for(r.embedding);
}

std::vector<VertexId> parse_id_list(const std::string &text) {
    std::vector<VertexId> ids;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        ids.push_back(parse_u32(text.substr(pos, comma - pos), "vertex id"));
        pos = comma + 1;
    }
    return ids;
}

int cmd_verify_lemma(const GlobalOpts &g, const std::string &which,
                     const std::string &host_path, double delta,
                     std::uint32_t s, std::uint32_t t,
                     const std::string &u_text, std::uint32_t b) {
    const BipartiteGraph host =
        require_bipartite(read_host_file(host_path), host_path);
    std::vector<VertexId> u_set;
    if (u_text.empty()) {
        u_set.resize(host.num_a());
        for (VertexId v = 0; v < host.num_a(); ++v)
            u_set[v] = v;
    } else {
        u_set = parse_id_list(u_text);
    }

    Json config{{"which", which}, {"host", host_path}, {"seed", g.seed}};
    Json result;
    bool holds = false;
    if (which == "locallydense") {
        config["delta"] = delta;
        config["u"] = u_text;
        const LemmaCheck c = check_locallydense(host, u_set, delta);
        result = lemma_json(c);
        holds = c.holds;
    } else if (which == "manylight") {
        config["s"] = s;
        config["t"] = t;
        const LemmaCheck c = check_manylight(host, s, t);
        result = lemma_json(c);
        result["freeness"] = freeness_json(host, parse_pattern(
            "L" + std::to_string(s) + "," + std::to_string(t)));
        holds = c.holds;
    } else if (which == "turan") {
        config["s"] = s;
        config["t"] = t;
        config["b"] = b;
        const TuranCheck c = check_turan_step(host, b, s, t);
        result = turan_json(c);
        result["freeness"] = freeness_json(host, parse_pattern(
            "L" + std::to_string(s) + "," + std::to_string(t)));
        holds = c.holds;
    } else if (which == "lightcorollary") {
        config["delta"] = delta;
        config["s"] = s;
        config["t"] = t;
        config["u"] = u_text;
        const LemmaCheck c = check_lightcorollary(host, u_set, s, t, delta);
        result = lemma_json(c);
        result["freeness"] = freeness_json(host, parse_pattern(
            "L" + std::to_string(s) + "," + std::to_string(t)));
        holds = c.holds;
    } else {
        fail(ErrorCode::InvalidParams, "unknown lemma " + which);
    }
    emit_report(g, "verify-lemma", std::move(config), std::move(result));
    return holds ? kExitOk : kExitMathFail;
}

int cmd_extremal(const GlobalOpts &g, std::uint32_t n,
                 const std::string &pattern_text, const std::string &mode) {
    const PatternSpec spec = parse_pattern(pattern_text);
    const ExtremalMode m = mode == "exhaustive" ? ExtremalMode::Exhaustive
                                                : ExtremalMode::Pruned;
    const ExtremalRecord rec =
        spec.is_biclique
            ? extremal_number(n, subdivide(spec.base_graph), m)
            : extremal_number(n, spec.pattern, m);
    Json config{{"n", n}, {"pattern", pattern_text}, {"mode", mode},
                {"seed", g.seed}};
    emit_report(g, "extremal", std::move(config), extremal_json(rec));
    return kExitOk;
}

int cmd_bound_table(const GlobalOpts &g, std::uint32_t t_lo,
                    std::uint32_t t_hi) {
    const auto rows = bound_table(t_lo, t_hi);
    Json config{{"t_lo", t_lo}, {"t_hi", t_hi}, {"seed", g.seed}};
    if (g.format == "csv") {
        CsvWriter w({"t", "upper_num", "upper_den", "upper", "lower_num",
                     "lower_den", "lower", "prior", "ordered"});
        w.comment("tool=subdivlab version=" + std::string(kToolVersion));
        w.comment("command=bound-table t_lo=" + std::to_string(t_lo) +
                  " t_hi=" + std::to_string(t_hi));
        for (const auto &r : rows)
            w.row({std::to_string(r.t), std::to_string(r.upper.num),
                   std::to_string(r.upper.den), format_double(r.upper.value()),
                   std::to_string(r.lower.num), std::to_string(r.lower.den),
                   format_double(r.lower.value()), format_double(r.prior),
                   r.ordered ? "1" : "0"});
        emit_text(g.out, w.text());
        return kExitOk;
    }
    Json result = Json::array();
    for (const auto &r : rows)
        result.push_back(bound_row_json(r));
    emit_report(g, "bound-table", std::move(config), std::move(result));
    return kExitOk;
}

int cmd_experiment(const GlobalOpts &g, std::uint32_t num_seeds,
                   std::uint32_t na, std::uint32_t nb, double p,
                   const EmbedParams &ep, bool timing) {
    Json config{{"num_seeds", num_seeds},
                {"na", na},
                {"nb", nb},
                {"p", p},
                {"s", ep.s},
                {"t", ep.t},
                {"c", ep.c},
                {"slack", ep.slack},
                {"seed", g.seed},
                {"timing", timing}};

    struct Row {
        std::uint64_t seed;
        double mean_degree;
        std::string status;
        std::uint32_t step;         // threshold failures only
        std::uint64_t cert_size;    // midpoints on success
        double wall_ms;
    };
    std::vector<Row> rows;
    rows.reserve(num_seeds);
    std::uint32_t successes = 0;
    for (std::uint32_t i = 0; i < num_seeds; ++i) {
        const std::uint64_t seed = g.seed + i;
        const auto host = random_bipartite(na, nb, p, seed);
        const auto t0 = std::chrono::steady_clock::now();
        const EmbedResult r = embed(host, ep);
        const auto t1 = std::chrono::steady_clock::now();
        Row row{seed, degree_stats(host).mean, "", 0, 0, 0.0};
        if (timing)
            row.wall_ms =
                std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (const auto *s = std::get_if<EmbedSuccess>(&r)) {
            row.status = s->via_heavy_clique ? "success_heavy" : "success";
            row.cert_size = s->certificate.midpoints.size();
            ++successes;
        } else if (const auto *tf = std::get_if<ThresholdFailure>(&r)) {
            row.status = "threshold_failure";
            row.step = tf->step;
        } else {
            row.status = "selection_failure";
        }
        rows.push_back(row);
    }
    const double rate =
        num_seeds == 0 ? 0.0 : static_cast<double>(successes) / num_seeds;

    if (g.format == "csv") {
        CsvWriter w({"seed", "na", "nb", "p", "mean_degree", "status", "step",
                     "cert_midpoints", "wall_ms"});
        w.comment("tool=subdivlab version=" + std::string(kToolVersion));
        w.comment("command=experiment config=" + config.dump());
        for (const auto &r : rows)
            w.row({std::to_string(r.seed), std::to_string(na),
                   std::to_string(nb), format_double(p),
                   format_double(r.mean_degree), r.status,
                   std::to_string(r.step), std::to_string(r.cert_size),
                   format_double(r.wall_ms)});
        std::string text = w.text();
        text += "# success_rate=" + format_double(rate) + "\n";
        emit_text(g.out, text);
        return kExitOk;
    }
    Json jrows = Json::array();
    for (const auto &r : rows)
        jrows.push_back(Json{{"seed", r.seed},
                             {"mean_degree", r.mean_degree},
                             {"status", r.status},
                             {"step", r.step},
                             {"cert_midpoints", r.cert_size},
                             {"wall_ms", r.wall_ms}});
    Json result{{"rows", std::move(jrows)}, {"success_rate", rate}};
    emit_report(g, "experiment", std::move(config), std::move(result));
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"1-subdivision embedding laboratory"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--seed", g.seed, "base seed for anything randomized");
    app.add_option("--format", g.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out, "report path (default stdout)");

    // gen
    auto *gen = app.add_subcommand("gen", "generate a host graph + sidecar");
    std::string gen_kind;
    std::uint32_t gen_na = 100, gen_nb = 100, gen_n = 30, gen_t = 3,
                  gen_q = 3;
    double gen_p = 0.1, gen_factor = 1.0;
    bool gen_verify = false;
    gen->add_option("--kind", gen_kind, "random|deletion|gq")->required();
    gen->add_option("--na", gen_na, "random: side A size");
    gen->add_option("--nb", gen_nb, "random: side B size");
    gen->add_option("--p", gen_p, "random: edge probability");
    gen->add_option("--n", gen_n, "deletion: vertex count");
    gen->add_option("--t", gen_t, "deletion: subdivision parameter");
    gen->add_option("--factor", gen_factor, "deletion: density multiplier");
    gen->add_option("--q", gen_q, "gq: prime order");
    gen->add_flag("--verify", gen_verify, "gq: run the girth-8 certificate");

    // regularize
    auto *reg = app.add_subcommand("regularize",
                                   "extract an almost-regular subgraph");
    std::string reg_alpha = "1/3", reg_in, reg_out;
    double reg_c = 1.0, reg_k = 0.0;
    reg->add_option("--alpha", reg_alpha, "density exponent, q or p/q form");
    reg->add_option("--C", reg_c, "density constant");
    reg->add_option("--K", reg_k, "degree-ratio target (0 = default)");
    reg->add_option("in", reg_in, "input .graph")->required();
    reg->add_option("out", reg_out, "output .graph")->required();

    // embed
    auto *emb = app.add_subcommand("embed", "find a 1-subdivision");
    EmbedParams emb_p;
    std::string emb_host;
    emb->add_option("--s", emb_p.s, "pattern s")->required();
    emb->add_option("--t", emb_p.t, "pattern t")->required();
    emb->add_option("--c", emb_p.c, "density constant");
    emb->add_option("--slack", emb_p.slack, "threshold multiplier");
    emb->add_option("host", emb_host, "bipartite host .graph")->required();

    // pipeline
    auto *pipe = app.add_subcommand("pipeline", "regularize then embed");
    std::string pipe_alpha = "1/3", pipe_host;
    double pipe_c = 1.0, pipe_k = 0.0;
    EmbedParams pipe_p;
    pipe->add_option("--alpha", pipe_alpha, "density exponent");
    pipe->add_option("--C", pipe_c, "density constant");
    pipe->add_option("--K", pipe_k, "degree-ratio target (0 = default)");
    pipe->add_option("--s", pipe_p.s, "pattern s")->required();
    pipe->add_option("--t", pipe_p.t, "pattern t")->required();
    pipe->add_option("--c", pipe_p.c, "embed density constant");
    pipe->add_option("--slack", pipe_p.slack, "threshold multiplier");
    pipe->add_option("host", pipe_host, "host .graph")->required();

    // verify-lemma
    auto *ver = app.add_subcommand("verify-lemma",
                                   "check one counting inequality");
    std::string ver_which, ver_host, ver_u;
    double ver_delta = 0.0;
    std::uint32_t ver_s = 1, ver_t = 3, ver_b = 0;
    ver->add_option("--which", ver_which,
                    "locallydense|manylight|turan|lightcorollary")
        ->required();
    ver->add_option("--delta", ver_delta, "minimum A-degree");
    ver->add_option("--s", ver_s, "pattern s");
    ver->add_option("--t", ver_t, "pattern t");
    ver->add_option("--u", ver_u, "comma-separated A-ids (default: all)");
    ver->add_option("--b", ver_b, "turan B-vertex, global id (B starts at nA)");
    ver->add_option("host", ver_host, "bipartite host .graph")->required();

    // extremal
    auto *ext = app.add_subcommand("extremal",
                                   "exact extremal number at tiny n");
    std::uint32_t ext_n = 0;
    std::string ext_pattern, ext_mode = "pruned";
    ext->add_option("--n", ext_n, "vertex count")->required();
    ext->add_option("--pattern", ext_pattern, "Ls,t | Kt | Ka,b")->required();
    ext->add_option("--mode", ext_mode, "search mode")
        ->check(CLI::IsMember({"exhaustive", "pruned"}));

    // bound-table
    auto *bt = app.add_subcommand("bound-table", "exponent comparison table");
    std::uint32_t bt_lo = 3, bt_hi = 10;
    bt->add_option("--t-lo", bt_lo, "first t");
    bt->add_option("--t-hi", bt_hi, "last t");

    // experiment
    auto *exp = app.add_subcommand("experiment", "seeded embed batch");
    std::uint32_t exp_seeds = 0, exp_na = 1000, exp_nb = 1000;
    double exp_p = 0.126;
    EmbedParams exp_p2;
    bool exp_timing = false;
    exp->add_option("--num-seeds", exp_seeds, "batch size (seed, seed+1, ...)");
    exp->add_option("--na", exp_na, "host side A");
    exp->add_option("--nb", exp_nb, "host side B");
    exp->add_option("--p", exp_p, "host edge probability");
    exp->add_option("--s", exp_p2.s, "pattern s");
    exp->add_option("--t", exp_p2.t, "pattern t");
    exp->add_option("--c", exp_p2.c, "density constant");
    exp->add_option("--slack", exp_p2.slack, "threshold multiplier");
    exp->add_flag("--timing", exp_timing,
                  "record wall time (breaks byte-identical reruns)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(g, gen_kind, gen_na, gen_nb, gen_p, gen_n, gen_t,
                           gen_factor, gen_q, gen_verify);
        if (reg->parsed())
            return cmd_regularize(g, reg_alpha, reg_c, reg_k, reg_in,
                                  reg_out);
        if (emb->parsed())
            return cmd_embed(g, emb_p, emb_host);
        if (pipe->parsed())
            return cmd_pipeline(g, pipe_alpha, pipe_c, pipe_k, pipe_p,
                                pipe_host);
        if (ver->parsed())
            return cmd_verify_lemma(g, ver_which, ver_host, ver_delta, ver_s,
                                    ver_t, ver_u, ver_b);
        if (ext->parsed())
            return cmd_extremal(g, ext_n, ext_pattern, ext_mode);
        if (bt->parsed())
            return cmd_bound_table(g, bt_lo, bt_hi);
        if (exp->parsed())
            return cmd_experiment(g, exp_seeds, exp_na, exp_nb, exp_p, exp_p2,
                                  exp_timing);
    } catch (const Error &e) {
        // Precondition breaches, hosts too sparse for the density lemma,
        // and collapsed regularizations are the structured "math says no
        // here" outcomes; everything else is the caller's problem.
        if (e.code() == ErrorCode::PreconditionFailed ||
            e.code() == ErrorCode::TooSparse ||
            e.code() == ErrorCode::DegenerateOutput) {
            std::fprintf(stderr, "precondition: %s\n", e.what());
            return kExitMathFail;
        }
        std::fprintf(stderr, "error: %s (%s)\n", e.what(),
                     error_code_name(e.code()));
        return kExitUsage;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
