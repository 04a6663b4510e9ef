#ifndef CURCO_IO_HPP
#define CURCO_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "curco/comm.hpp"
#include "curco/lie.hpp"

namespace curco {

/// Malformed input text or file; the CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct NamedLie {
  std::string name;
  LieAlgebra algebra;
};
struct NamedComm {
  std::string name;
  CommAlgebra algebra;
};

/// "lie" or "commutative"; context names the source in error messages.
std::string detect_kind(const std::string& text, const std::string& context);

NamedLie parse_lie(const std::string& text, const std::string& context);
NamedComm parse_comm(const std::string& text, const std::string& context);

/// Canonical serialization: fixed key order, sparse entries, scalars as
/// "p/q" strings. Export-ingest-export round trips are byte identical.
std::string serialize_lie(const LieAlgebra& l, const std::string& name);
std::string serialize_comm(const CommAlgebra& a, const std::string& name);

uint64_t fnv1a64(const std::string& bytes);
std::string fingerprint(const std::string& bytes);  // 16 hex digits

}  // namespace curco

#endif
