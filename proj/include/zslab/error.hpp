#pragma once

#include <stdexcept>
#include <string>

namespace zslab {

/** Malformed textual input (group specs, coefficient lists, sequence files). */
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/** An operation was invoked outside its stated domain. */
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/** A bound of the wrong kind (e.g. a LOWER fed where an UPPER is required). */
struct KindError : std::logic_error {
    explicit KindError(const std::string& what) : std::logic_error(what) {}
};

/** A combination step was not given bounds for every (prime, rank) it needs. */
struct MissingBound : std::invalid_argument {
    explicit MissingBound(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace zslab
