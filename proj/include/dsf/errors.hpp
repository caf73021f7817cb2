#ifndef DSF_ERRORS_HPP
#define DSF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dsf {

struct EmptyInput : std::invalid_argument {
    EmptyInput() : std::invalid_argument("empty degree sequence") {}
};

struct NonPositiveTerm : std::invalid_argument {
    explicit NonPositiveTerm(long long value)
        : std::invalid_argument("non-positive degree term: " + std::to_string(value)) {}
};

struct NotSubMultiset : std::invalid_argument {
    NotSubMultiset() : std::invalid_argument("not a sub-multiset of the base sequence") {}
};

struct InvalidSelection : std::invalid_argument {
    explicit InvalidSelection(const std::string& what) : std::invalid_argument(what) {}
};

struct NotGraphical : std::invalid_argument {
    NotGraphical() : std::invalid_argument("sequence is not graphical") {}
};

struct OracleBoundExceeded : std::length_error {
    explicit OracleBoundExceeded(int n, int bound)
        : std::length_error("oracle bound exceeded: n=" + std::to_string(n) +
                            " > " + std::to_string(bound)) {}
};

struct OddSum : std::invalid_argument {
    explicit OddSum(long long n)
        : std::invalid_argument("partition parameter must be even, got " + std::to_string(n)) {}
};

struct NoMember : std::runtime_error {
    explicit NoMember(const std::string& what) : std::runtime_error(what) {}
};

struct GenerationFailure : std::runtime_error {
    explicit GenerationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct TimedOut : std::runtime_error {
    TimedOut() : std::runtime_error("search deadline exceeded") {}
};

} // namespace dsf

#endif // DSF_ERRORS_HPP
