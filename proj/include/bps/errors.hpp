#pragma once

#include <stdexcept>
#include <string>

namespace bps {

/// Malformed input: bad rational literal, schema violation, unparsable file.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside the supported domain (bounds, rank, genus,
/// pole locations, mismatched kinds or rings).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A coefficient was read at or beyond a series' truncation order.
class TruncationError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace bps
