#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "traag/atlas.hpp"

// Times the serial reference enumeration against the parallel kernel and
// checks that both produce the same isomorphism classes.
int main(int argc, char** argv) {
  std::size_t n = 4;
  int jobs = 0;
  if (argc > 1) n = static_cast<std::size_t>(std::strtoul(argv[1], nullptr, 10));
  if (argc > 2) jobs = static_cast<int>(std::strtol(argv[2], nullptr, 10));

  using clock = std::chrono::steady_clock;
  auto ms = [](clock::duration d) {
    return std::chrono::duration<double, std::milli>(d).count();
  };

  std::cout << "enumerating mixed graphs on n=" << n << " vertices\n";

  const auto t0 = clock::now();
  const auto serial = traag::enumerate_serial(n);
  const auto t1 = clock::now();
  const auto parallel = traag::enumerate_parallel(n, jobs);
  const auto t2 = clock::now();

  const double serial_ms = ms(t1 - t0);
  const double parallel_ms = ms(t2 - t1);
  std::cout << "serial:   " << serial.size() << " classes in " << serial_ms << " ms\n";
  std::cout << "parallel: " << parallel.size() << " classes in " << parallel_ms << " ms\n";

  bool same = serial.size() == parallel.size();
  if (same) {
    for (std::size_t i = 0; i < serial.size(); ++i) {
      if (serial[i].key != parallel[i].key ||
          serial[i].labeled_index != parallel[i].labeled_index) {
        same = false;
        break;
      }
    }
  }
  if (!same) {
    std::cout << "MISMATCH between serial and parallel results\n";
    return 1;
  }
  std::cout << "results match";
  if (parallel_ms > 0.0)
    std::cout << " (speedup " << serial_ms / parallel_ms << "x)";
  std::cout << "\n";
  return 0;
}
