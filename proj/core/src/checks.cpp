#include "checks.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace iqc {

namespace {

std::atomic<int> g_thread_limit{0};

}  // namespace

void set_thread_limit(int threads) { g_thread_limit = std::max(0, threads); }

int thread_limit() {
  const int limit = g_thread_limit;
  if (limit > 0) return limit;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {


std::vector<CheckResult> run_parallel(std::size_t count, const std::function<CheckResult(std::size_t)>& task) {
  std::vector<CheckResult> out(count);
  const int workers = std::max(1, std::min<int>(thread_limit(), static_cast<int>(count)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < count; t = next++) {
      try {
        out[t] = task(t);
      } catch (const std::exception& e) {
        out[t].label = "task " + std::to_string(t);
        out[t].pass = false;
        out[t].witness = e.what();
      }
    }
  };
  if (workers == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

CheckResult compare(std::string label, const TorusElement& got, const TorusElement& want) {
  CheckResult r{std::move(label), got == want, {}, {}};
  if (!r.pass) {
    r.witness = "difference: " + (got - want).str();
    if (r.witness.size() > 400) r.witness = r.witness.substr(0, 400) + "...";
  }
  return r;
}

CheckResult holds(std::string label, bool ok, std::string witness) {
  return {std::move(label), ok, ok ? std::string() : std::move(witness), {}};
}

}  // namespace detail

}  // namespace iqc
