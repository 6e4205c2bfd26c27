#include "fdw/util.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <thread>
#include <vector>

namespace fdw {

bool parse_fraction(const std::string& s, long long& p, long long& q) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return false;
  const char* b = s.data();
  auto r1 = std::from_chars(b, b + slash, p);
  auto r2 = std::from_chars(b + slash + 1, b + s.size(), q);
  return r1.ec == std::errc{} && r1.ptr == b + slash && r2.ec == std::errc{} &&
         r2.ptr == b + s.size() && q != 0;
}

double parse_ratio(const std::string& s) {
  long long p = 0, q = 1;
  if (parse_fraction(s, p, q)) return static_cast<double>(p) / static_cast<double>(q);
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::size_t thread_budget() {
  std::size_t n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("FDW_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0 && static_cast<std::size_t>(cap) < n)
      n = static_cast<std::size_t>(cap);
  }
  return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(thread_budget(), n);
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace fdw
