#ifndef SUBDIV_JSON_REPORT_HPP
#define SUBDIV_JSON_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "subdiv/bounds.hpp"
#include "subdiv/constructions.hpp"
#include "subdiv/embed.hpp"
#include "subdiv/oracle.hpp"

namespace subdiv {

// Object keys come out sorted (map-backed), which together with
// format_double makes every report reproducible byte for byte.
using Json = nlohmann::json;

inline constexpr const char *kToolName = "subdivlab";
inline constexpr const char *kToolVersion = "0.1.0";

// Shortest decimal form that round-trips, via std::to_chars. Used for CSV
// cells; JSON doubles go through the library's own shortest-form writer.
std::string format_double(double x);

// Every report is {"tool", "version", "command", "config", "result"} so
// consumers can dispatch on one shape. The config must be the full parsed
// flag set; determinism is only checkable when the config round-trips.
Json report_envelope(const std::string &command, Json config, Json result);

// Serialized as {"tool","version","command","config","result"}; two-space
// indent, trailing newline.
std::string dump_report(const Json &report);

Json degree_stats_json(const DegreeStats &st);
Json certificate_json(const SubdivisionCertificate &cert, const Pattern &p);
Json trace_json(const EmbedTrace &tr);
Json embed_result_json(const EmbedResult &r, const Pattern &p);
Json regularize_json(const RegularizeReport &r);
Json extremal_json(const ExtremalRecord &r);
Json lemma_json(const LemmaCheck &c);
Json turan_json(const TuranCheck &c);
Json deletion_json(const DeletionReport &r);
Json bound_row_json(const BoundRow &r);

// Accumulates '#'-prefixed comment lines, a header row, and data rows;
// text() renders the whole file. Cells containing a comma, quote, or
// newline are quoted with doubled inner quotes.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> columns);

    void comment(const std::string &line);
    void row(std::vector<std::string> cells); // size must match columns

    std::string text() const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::string> comments_;
    std::vector<std::vector<std::string>> rows_;
};

// Write to the path, or to stdout when the path is empty. IoError on any
// filesystem failure.
void emit_text(const std::string &out_path, const std::string &text);

} // namespace subdiv

#endif
