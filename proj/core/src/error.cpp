#include "cnkit/error.hpp"

namespace cnkit {

const char* errc_token(Errc code) {
  switch (code) {
    case Errc::field_mismatch: return "field-mismatch";
    case Errc::division_by_zero: return "div-zero";
    case Errc::not_prime: return "not-prime";
    case Errc::arity_mismatch: return "arity";
    case Errc::parse: return "parse";
    case Errc::grid_mismatch: return "grid-mismatch";
    case Errc::not_on_grid: return "not-on-grid";
    case Errc::precondition: return "precondition";
    case Errc::no_witness: return "no-witness";
    case Errc::not_bipartite: return "not-bipartite";
    case Errc::infeasible: return "infeasible";
    case Errc::non_injective: return "non-injective";
    case Errc::cone_cap: return "cone-cap";
    case Errc::instance_invalid: return "instance-invalid";
    case Errc::io: return "io";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace cnkit
