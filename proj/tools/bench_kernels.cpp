// Times the OpenMP sweep kernels against the serial reference
// implementations on mid-size instances and checks that both sides agree.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "netrobust/matching.hpp"
#include "netrobust/restricted.hpp"
#include "netrobust/runtime.hpp"
#include "netrobust/topology.hpp"

namespace {

using namespace netrobust;

double time_ms(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

void report(const std::string& kernel, const std::string& instance, double par_ms,
            double ser_ms, bool equal) {
  std::printf("%-18s %-12s parallel %9.1f ms   serial %9.1f ms   x%.2f   %s\n",
              kernel.c_str(), instance.c_str(), par_ms, ser_ms,
              par_ms > 0 ? ser_ms / par_ms : 0.0, equal ? "match" : "MISMATCH");
}

void bench_lambda(const Graph& g, int k, const std::string& instance) {
  LadderResult par, ser;
  const double par_ms = time_ms([&]() { par = lambda_k(g, k); });
  const double ser_ms = time_ms([&]() { ser = lambda_k_serial(g, k); });
  const bool equal = par.defined == ser.defined && par.value == ser.value &&
                     par.witness.cut_edges == ser.witness.cut_edges;
  report("lambda_" + std::to_string(k), instance, par_ms, ser_ms, equal);
}

void bench_preclusion(const Graph& g, bool conditional, const std::string& instance) {
  PreclusionResult par, ser;
  const double par_ms = time_ms([&]() {
    par = conditional ? mp1_number(g) : mp_number(g);
  });
  const double ser_ms = time_ms([&]() {
    ser = conditional ? mp1_number_serial(g) : mp_number_serial(g);
  });
  const bool equal = par.defined == ser.defined && par.number == ser.number;
  report(conditional ? "mp1" : "mp", instance, par_ms, ser_ms, equal);
}

}  // namespace

int main() {
  std::printf("workers: %d (NETROBUST_THREADS overrides)\n\n", worker_count());

  const Graph d22 = gen_dcell(2, 2);
  const Graph d23 = gen_dcell(2, 3);
  const Graph s52 = gen_star(5, 2);
  const Graph s62 = gen_star(6, 2);

  bench_lambda(d22, 2, "D_{2,2}");
  bench_lambda(d22, 3, "D_{2,2}");
  bench_lambda(s62, 2, "S_{6,2}");
  bench_lambda(d23, 2, "D_{2,3}");
  bench_preclusion(d22, false, "D_{2,2}");
  bench_preclusion(d22, true, "D_{2,2}");
  bench_preclusion(s52, false, "S_{5,2}");
  return 0;
}
