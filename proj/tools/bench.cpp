// Kernel benchmark: OpenMP-parallel hot loops against their serial
// reference implementations, with a result-equality column.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <omp.h>

#include "apsbench/energy.hpp"
#include "apsbench/fed.hpp"
#include "apsbench/henning_yeo.hpp"
#include "apsbench/statevector.hpp"

using namespace apsbench;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename F>
double time_ms(int reps, F&& f) {
  f();  // warm up
  double t0 = now_ms();
  for (int r = 0; r < reps; ++r) f();
  return (now_ms() - t0) / reps;
}

void report(const char* kernel, const char* size, double serial_ms, double parallel_ms,
            double max_diff) {
  std::printf("%-22s %-18s %10.3f %10.3f %8.2fx %12.3g\n", kernel, size, serial_ms,
              parallel_ms, serial_ms / parallel_ms, max_diff);
}

void bench_rotation(int qubits, int reps) {
  StateVector a(qubits), b(qubits);
  double serial = time_ms(reps, [&] {
    for (int q = 0; q + 1 < qubits; q += 2) b.apply_pp_rotation_serial(q, q + 1, 0.11);
  });
  double parallel = time_ms(reps, [&] {
    for (int q = 0; q + 1 < qubits; q += 2) a.apply_pp_rotation(q, q + 1, 0.11);
  });
  double diff = 0;
  for (size_t i = 0; i < a.amplitudes().size(); ++i)
    diff = std::max(diff, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
  char size[32];
  std::snprintf(size, sizeof size, "n=%d", qubits);
  report("pp-rotation", size, serial, parallel, diff);
}

void bench_hamiltonian(int qubits, int reps) {
  std::vector<GraphEdge> edges;
  for (int u = 0; u < qubits; ++u)
    for (int d = 1; d <= 2; ++d) edges.push_back({u, (u + d) % qubits, 1, 1.0});
  Graph g(qubits, std::move(edges));
  size_t dim = size_t{1} << qubits;
  std::vector<double> in(dim), out1(dim), out2(dim);
  for (size_t i = 0; i < dim; ++i) in[i] = std::sin(0.001 * i);
  double serial = time_ms(reps, [&] { apply_epr_hamiltonian_serial(g, in, out2); });
  double parallel = time_ms(reps, [&] { apply_epr_hamiltonian(g, in, out1); });
  double diff = 0;
  for (size_t i = 0; i < dim; ++i) diff = std::max(diff, std::abs(out1[i] - out2[i]));
  char size[48];
  std::snprintf(size, sizeof size, "n=%d m=%d", qubits, g.edge_count());
  report("hamiltonian-apply", size, serial, parallel, diff);
}

void bench_total_energy(int k, int p, int reps) {
  HYInstance inst = build_henning_yeo({.k = k, .p = p});
  auto a = AngleAssignment::uniform(inst.graph, 0.07);
  EnergyBreakdown b1, b2;
  double serial = time_ms(reps, [&] { b2 = total_energy_serial(inst.graph, a); });
  double parallel = time_ms(reps, [&] { b1 = total_energy(inst.graph, a); });
  double diff = std::abs(b1.total - b2.total);
  char size[48];
  std::snprintf(size, sizeof size, "m=%d", inst.graph.edge_count());
  report("total-energy", size, serial, parallel, diff);
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("APSBENCH_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) omp_set_num_threads(t);
  }
  bool quick = argc > 1 && std::string(argv[1]) == "--quick";
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-22s %-18s %10s %10s %9s %12s\n", "kernel", "size", "serial ms",
              "omp ms", "speedup", "max |diff|");
  if (quick) {
    bench_rotation(12, 20);
    bench_hamiltonian(10, 20);
    bench_total_energy(6, 4, 20);
  } else {
    bench_rotation(20, 5);
    bench_rotation(16, 20);
    bench_hamiltonian(14, 10);
    bench_hamiltonian(12, 40);
    bench_total_energy(10, 40, 10);
    bench_total_energy(8, 40, 10);
  }
  return 0;
}
