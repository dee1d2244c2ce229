#ifndef DIGITLAB_ERROR_HPP
#define DIGITLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace digitlab {

enum class errc {
  precision_exceeded,   // requested index range beyond the computed digits
  range_error,          // bad [a,b] range or index
  layout_unsupported,   // operation defined only for sequences with one integer digit
  invalid_partition,
  empty_pattern,
  radicand_mismatch,
  precondition_violation,
  cache_format,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

} // namespace digitlab

#endif // DIGITLAB_ERROR_HPP
