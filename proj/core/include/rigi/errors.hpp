#ifndef RIGI_ERRORS_HPP
#define RIGI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rigi {

// Input document could not be parsed; carries the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// A per-method time budget ran out; callers report a partial result.
class TimeoutError : public std::runtime_error {
public:
    explicit TimeoutError(const std::string &method)
        : std::runtime_error("time limit exceeded in " + method), method_(method) {}

    const std::string &method() const { return method_; }

private:
    std::string method_;
};

// Data reaching a consumer contradicts an invariant certified upstream.
// Signals a bug in the pipeline, not bad user input.
class IntegrityError : public std::logic_error {
public:
    explicit IntegrityError(const std::string &what) : std::logic_error(what) {}
};

} // namespace rigi

#endif // RIGI_ERRORS_HPP
