#ifndef RRMF_ERRORS_HPP
#define RRMF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rrmf {

// Violated input contract (maps to CLI exit code 3).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Two scalars carry different nonzero surd bases.
class SurdMismatch : public PreconditionError {
 public:
  explicit SurdMismatch(const std::string& what) : PreconditionError(what) {}
};

// Malformed textual or JSON input (maps to CLI exit code 2).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Polynomial division left a nonzero remainder where exactness was required.
class InexactDivision : public std::runtime_error {
 public:
  explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

// An identity that holds by theory failed; always a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rrmf

#endif  // RRMF_ERRORS_HPP
