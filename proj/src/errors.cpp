#include "peerdeg/errors.hpp"

namespace peerdeg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ok: return "ok";
    case Errc::non_positive_rate: return "non_positive_rate";
    case Errc::invalid_params: return "invalid_params";
    case Errc::overflow: return "overflow";
    case Errc::numerical_instability: return "numerical_instability";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::no_giant_component: return "no_giant_component";
    case Errc::params_too_large: return "params_too_large";
    case Errc::undefined_for_zero_z1: return "undefined_for_zero_z1";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace peerdeg
