#pragma once

#include <stdexcept>
#include <string>

namespace frontis {

enum class errc {
  parse,         // malformed document or unparsable input
  range,         // table entry or index out of range
  validation,    // a checked law fails on otherwise well-formed data
  precondition,  // argument violates an operation's contract
  guard,         // search-space or resource guard exceeded
  internal,      // the implementation contradicted one of its own invariants
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

struct parse_error : error {
  explicit parse_error(const std::string& w) : error(errc::parse, w) {}
};
struct range_error : error {
  explicit range_error(const std::string& w) : error(errc::range, w) {}
};
struct validation_error : error {
  explicit validation_error(const std::string& w) : error(errc::validation, w) {}
};
struct precondition_error : error {
  explicit precondition_error(const std::string& w) : error(errc::precondition, w) {}
};
struct guard_error : error {
  explicit guard_error(const std::string& w) : error(errc::guard, w) {}
};
struct internal_error : error {
  explicit internal_error(const std::string& w) : error(errc::internal, w) {}
};

}  // namespace frontis
