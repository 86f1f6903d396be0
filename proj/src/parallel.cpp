#include "czekan/parallel.hpp"

#include <atomic>

namespace czekan {

namespace {
std::atomic<unsigned> g_threads{0};
}

void set_thread_count(unsigned n) { g_threads.store(n); }
unsigned thread_count() { return g_threads.load(); }

}  // namespace czekan
