#include "nekrasov/parallel.hpp"

#include <stdexcept>

namespace nekrasov {

namespace {
std::atomic<int> g_threads{1};
}

void set_thread_count(int n) {
  if (n < 1) throw std::invalid_argument("thread count must be positive");
  g_threads.store(n);
}

int thread_count() { return g_threads.load(); }

}  // namespace nekrasov
