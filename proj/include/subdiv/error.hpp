#ifndef SUBDIV_ERROR_HPP
#define SUBDIV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace subdiv {

enum class ErrorCode {
    InvalidEdge,
    DuplicateEdge,
    InvalidPair,
    InvalidParams,
    InvalidSubset,
    InvalidParameter,
    InvalidBranchSet,
    EmptyGraph,
    TooSparse,
    TooLarge,
    DegenerateOutput,
    PreconditionFailed,
    ParseError,
    IoError,
};

const char *error_code_name(ErrorCode c);

// Single exception type carrying a code so tests and the CLI can discriminate
// failure kinds without string matching.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &msg)
        : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &msg) {
    throw Error(code, msg);
}

} // namespace subdiv

#endif
