#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cnkit {

enum class Errc {
  field_mismatch,
  division_by_zero,
  not_prime,
  arity_mismatch,
  parse,
  grid_mismatch,
  not_on_grid,
  precondition,
  no_witness,
  not_bipartite,
  infeasible,
  non_injective,
  cone_cap,
  instance_invalid,
  io,
  internal,
};

/// Stable machine-readable token for an error code, as used in the
/// CLI's "ERR <code> <message>" lines.
const char* errc_token(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

/// Syntax error carrying a 0-based character offset into the source text.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(Errc::parse, message), offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Raised by the bipartiteness check; carries an odd cycle as certificate.
class NotBipartiteError : public Error {
public:
  NotBipartiteError(const std::string& message, std::vector<int> odd_cycle)
      : Error(Errc::not_bipartite, message), cycle_(std::move(odd_cycle)) {}

  const std::vector<int>& odd_cycle() const { return cycle_; }

private:
  std::vector<int> cycle_;
};

}  // namespace cnkit
