#ifndef PEERDEG_ERRORS_HPP
#define PEERDEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace peerdeg {

enum class Errc {
  ok = 0,
  non_positive_rate,
  invalid_params,
  overflow,
  numerical_instability,
  index_out_of_range,
  no_giant_component,
  params_too_large,
  undefined_for_zero_z1,
  io_error,
};

const char* errc_name(Errc c);

/// Exception carrying a stable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace peerdeg

#endif
