#include "csfkit/limits.hpp"

#include <atomic>
#include <cstdlib>

namespace csfkit {
namespace {
std::atomic<int> g_max_degree{12};
std::atomic<int> g_max_uio{8};
std::atomic<int> g_max_correct{10};
}  // namespace

int Limits::max_degree() { return g_max_degree.load(); }
void Limits::set_max_degree(int d) {
  if (d < 1 || d > 20) throw std::invalid_argument("degree cap must be in [1, 20]");
  g_max_degree = d;
}

int Limits::max_uio_size() { return g_max_uio.load(); }
void Limits::set_max_uio_size(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("UIO size cap must be in [1, 16]");
  g_max_uio = n;
}

int Limits::max_correct_length() { return g_max_correct.load(); }
void Limits::set_max_correct_length(int k) {
  if (k < 1) throw std::invalid_argument("correct-length cap must be positive");
  g_max_correct = k;
}

void Limits::load_environment() {
  if (const char* env = std::getenv("CSFKIT_MAX_DEGREE")) {
    set_max_degree(std::stoi(env));
  }
}

}  // namespace csfkit
