#ifndef LCK_ERROR_HPP
#define LCK_ERROR_HPP

// Error hierarchy shared by the whole library.
//
//   error        — base class for everything the engine can throw.
//   domain_error — a well-formed request whose mathematical preconditions
//                  fail (non-closed input, wrong bidegree, invalid model...).
//   parse_error  — malformed text input; carries a line/column location.
//
// The command-line shell maps domain_error/parse_error to exit code 1 and
// reserves exit code 2 for usage mistakes (unknown flags, missing arguments).

#include <stdexcept>
#include <string>

namespace lck {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : error {
    using error::error;
};

struct parse_error : error {
    int line;
    int column;

    parse_error(int line_, int column_, const std::string& message)
        : error("line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": " + message),
          line(line_),
          column(column_) {}
};

}  // namespace lck

#endif  // LCK_ERROR_HPP
