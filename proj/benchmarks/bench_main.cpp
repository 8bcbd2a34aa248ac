// Wall-clock comparison of the serial reference path (jobs = 1) against the
// OpenMP pool path (jobs > 1) for every parallel kernel, with an output
// agreement check on each pair.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <thread>
#include <vector>

#include "respoles/evolution.hpp"
#include "respoles/poles.hpp"
#include "respoles/stability.hpp"
#include "respoles/types.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

using respoles::Complex;
using respoles::SystemParams;

double timed(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void report(const char* name, double serial_s, double parallel_s,
            double max_delta) {
  std::printf("%-24s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   "
              "max_delta %.3g\n",
              name, serial_s, parallel_s, serial_s / parallel_s, max_delta);
}

}  // namespace

int main() {
  const unsigned hw = std::thread::hardware_concurrency();
  const int jobs = static_cast<int>(std::max(2u, hw));
  std::printf("hardware threads: %u, parallel pool size: %d\n", hw, jobs);
  if (hw <= 1)
    std::printf("note: single-CPU host; the parallel column measures pool "
                "overhead, not speedup\n");

  const double omega0 = kPi / 2.0;

  {
    // One untimed pass absorbs lazy one-time costs (page faults, tables)
    // so the first timed kernel is not penalized.
    const SystemParams warm{1.0, 2.0, omega0, 50.0};
    const respoles::ContourBox warm_box{-0.15, 0.3, omega0 - 1.0,
                                        omega0 + 1.0};
    respoles::find_poles(warm, warm_box);
  }

  {
    std::vector<double> taus(240), ks(240);
    for (int i = 0; i < 240; ++i) {
      taus[i] = 0.1 + (6.0 - 0.1) * i / 239.0;
      ks[i] = -3.0 + 6.0 * i / 239.0;
    }
    std::vector<respoles::StabilityCell> serial, parallel;
    const double ts = timed([&] {
      serial = respoles::stability_map(taus, ks, omega0,
                                       respoles::StabilityMode::Lambert, 1);
    });
    const double tp = timed([&] {
      parallel = respoles::stability_map(
          taus, ks, omega0, respoles::StabilityMode::Lambert, jobs);
    });
    double delta = 0.0;
    for (std::size_t i = 0; i < serial.size(); ++i) {
      if (serial[i].verdict.stable != parallel[i].verdict.stable) delta = 1.0;
      delta = std::max(delta, std::abs(serial[i].verdict.margin -
                                       parallel[i].verdict.margin));
    }
    report("stability-map/lambert", ts, tp, delta);
  }

  {
    const SystemParams p{1.0, 2.0, omega0, 1e4};
    const respoles::ContourBox region{-2.9, 1.0, omega0 + 3.05,
                                      omega0 + 40.0};
    std::vector<respoles::Pole> serial, parallel;
    respoles::FindPolesOptions opts;
    opts.branch_lo = -16;
    opts.branch_hi = 16;
    const double ts = timed([&] {
      opts.jobs = 1;
      serial = respoles::find_poles(p, region, opts);
    });
    const double tp = timed([&] {
      opts.jobs = jobs;
      parallel = respoles::find_poles(p, region, opts);
    });
    double delta = serial.size() == parallel.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; delta < 1.0 && i < serial.size(); ++i)
      delta = std::max(delta,
                       std::abs(serial[i].lambda - parallel[i].lambda));
    report("find-poles", ts, tp, delta);
  }

  const SystemParams p{0.8 * respoles::critical_coupling(2.0, omega0), 2.0,
                       omega0, 50.0};
  const auto rule = respoles::hermite_rule(400, p);
  const auto init = respoles::InitialData::uniform(65);
  const double dt = p.tau / 64.0;

  respoles::TimeSeries sim_serial;
  {
    respoles::TimeSeries sim_parallel;
    const double ts = timed([&] {
      sim_serial = respoles::simulate_dde(p, rule, init, dt, 200.0, 1);
    });
    const double tp = timed([&] {
      sim_parallel = respoles::simulate_dde(p, rule, init, dt, 200.0, jobs);
    });
    double delta = 0.0;
    for (std::size_t i = 0; i < sim_serial.size(); ++i)
      delta = std::max(delta, std::abs(sim_serial.values[i] -
                                       sim_parallel.values[i]));
    report("simulate-dde", ts, tp, delta);
  }

  {
    std::vector<respoles::Pole> poles;
    for (Complex seed : respoles::lambert_roots(p, -10, 10))
      poles.push_back(respoles::refine_newton(seed, p));
    std::sort(poles.begin(), poles.end(),
              [](const respoles::Pole& a, const respoles::Pole& b) {
                return a.lambda.real() > b.lambda.real();
              });
    poles.resize(8);
    respoles::TimeSeries rec_serial, rec_parallel;
    const std::size_t n = 200000;
    const double ts = timed([&] {
      rec_serial =
          respoles::expansion_reconstruct(poles, init, p, 0.0, dt, n, 1);
    });
    const double tp = timed([&] {
      rec_parallel =
          respoles::expansion_reconstruct(poles, init, p, 0.0, dt, n, jobs);
    });
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      delta = std::max(delta, std::abs(rec_serial.values[i] -
                                       rec_parallel.values[i]));
    report("expansion-reconstruct", ts, tp, delta);
  }

  return 0;
}
