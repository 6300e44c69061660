#pragma once

#include <stdexcept>
#include <string>

namespace litproc {

enum class Errc {
    unbalanced_section,
    already_running,
    not_running,
    spawn_failure,
    lock_held,
    missing_response_file,
    io_error,
    usage_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

// Parse failure with a 1-based source position of the offending begin tag.
class ParseError : public Error {
public:
    ParseError(std::string message, int line, int column)
        : Error(Errc::unbalanced_section,
                message + " at line " + std::to_string(line) + ", column " +
                    std::to_string(column)),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace litproc
