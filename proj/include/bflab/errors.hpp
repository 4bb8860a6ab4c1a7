#pragma once

#include <stdexcept>
#include <string>

namespace bflab {

/// Raised when an exact operation is requested beyond its documented size
/// limit.  The library never falls back to approximation; callers that want
/// larger instances must use sampled modes explicitly.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when the certificates handed to a lemma procedure do not satisfy
/// its hypotheses (invalid certificate, overlap where none is allowed,
/// too many contradictions, ...).
class hypothesis_error : public std::runtime_error {
public:
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bflab
