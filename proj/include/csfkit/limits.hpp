#pragma once

#include <stdexcept>
#include <string>

namespace csfkit {

/// Raised when a request exceeds a configured size cap.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Process-wide size caps. All enumeration is exponential in these.
struct Limits {
  static int max_degree();
  static void set_max_degree(int d);

  static int max_uio_size();
  static void set_max_uio_size(int n);

  static int max_correct_length();
  static void set_max_correct_length(int k);

  /// Reads CSFKIT_MAX_DEGREE if set.
  static void load_environment();
};

inline void require_degree(int d, const char* what) {
  if (d > Limits::max_degree())
    throw LimitError(std::string(what) + ": degree " + std::to_string(d) +
                     " exceeds cap " + std::to_string(Limits::max_degree()));
}

}  // namespace csfkit
