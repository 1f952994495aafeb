// Times the OpenMP kernels against the serial reference implementations on
// a large mesh, plus one end-to-end inequality suite at batch level.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "gridnls/fields.hpp"
#include "gridnls/function_space.hpp"
#include "gridnls/inequalities.hpp"
#include "gridnls/kernels.hpp"
#include "gridnls/parallel.hpp"

using namespace gridnls;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_per_call(const std::function<void()>& fn, int reps) {
    fn();  // warm-up
    const auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const std::chrono::duration<double> dt = Clock::now() - t0;
    return dt.count() / reps;
}

void report(const char* name, double serial_s, double parallel_s) {
    std::printf("%-22s %10.3f ms %10.3f ms %8.2fx\n", name, serial_s * 1e3, parallel_s * 1e3,
                serial_s / parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
    int radius = 6;
    int n = 48;
    int reps = 20;
    if (argc > 1) radius = std::stoi(argv[1]);
    if (argc > 2) n = std::stoi(argv[2]);
    if (argc > 3) reps = std::stoi(argv[3]);

    GridSpec spec{3, 1.0, radius, Boundary::neumann};
    auto grid = std::make_shared<MetricGrid>(build_grid(spec));
    auto mesh = std::make_shared<Mesh>(grid, n);
    std::printf("grid R=%d n=%d: %zu nodes, %zu intervals, %d thread(s)\n", radius, n,
                mesh->node_count(), mesh->interval_count(), par::max_threads());

    std::mt19937_64 rng(7);
    GraphFunction f = fields::random_zero_boundary(mesh, rng);
    const auto& v = f.values();
    std::vector<double> grad;

    std::printf("%-22s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");
    report("lp_pow p=3.5",
           seconds_per_call([&] { kernels::serial::lp_pow(*mesh, v, 3.5); }, reps),
           seconds_per_call([&] { kernels::lp_pow(*mesh, v, 3.5); }, reps));
    report("deriv_l2_sq",
           seconds_per_call([&] { kernels::serial::deriv_l2_sq(*mesh, v); }, reps),
           seconds_per_call([&] { kernels::deriv_l2_sq(*mesh, v); }, reps));
    report("deriv_l1",
           seconds_per_call([&] { kernels::serial::deriv_l1(*mesh, v); }, reps),
           seconds_per_call([&] { kernels::deriv_l1(*mesh, v); }, reps));
    report("l2_inner",
           seconds_per_call([&] { kernels::serial::l2_inner(*mesh, v, v); }, reps),
           seconds_per_call([&] { kernels::l2_inner(*mesh, v, v); }, reps));
    report("energy_gradient",
           seconds_per_call(
               [&] { kernels::serial::energy_gradient_into(*mesh, v, 4.0, spec.boundary, grad); },
               reps),
           seconds_per_call(
               [&] { kernels::energy_gradient_into(*mesh, v, 4.0, spec.boundary, grad); }, reps));

    // Batch level: one sobolev check per random field, serial loop vs
    // parallel_for over fields.
    GridSpec small{3, 1.0, 2, Boundary::neumann};
    auto small_mesh = std::make_shared<Mesh>(std::make_shared<MetricGrid>(build_grid(small)), 8);
    const int fields_n = 256;
    std::vector<GraphFunction> suite;
    suite.reserve(fields_n);
    for (int i = 0; i < fields_n; ++i) {
        std::mt19937_64 r(static_cast<std::uint64_t>(i) + 1);
        suite.push_back(fields::random_zero_boundary(small_mesh, r));
    }
    std::vector<double> ratios(fields_n);
    report("sobolev3d suite x256",
           seconds_per_call(
               [&] {
                   for (int i = 0; i < fields_n; ++i)
                       ratios[static_cast<std::size_t>(i)] =
                           check_sobolev_3d(suite[static_cast<std::size_t>(i)]).ratio;
               },
               5),
           seconds_per_call(
               [&] {
                   par::parallel_for(static_cast<std::size_t>(fields_n), [&](std::size_t i) {
                       ratios[i] = check_sobolev_3d(suite[i]).ratio;
                   });
               },
               5));
    return 0;
}
