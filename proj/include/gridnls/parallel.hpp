#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gridnls::par {

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Sum of term(i) for i in [0, n). Partial sums land in per-thread slots and
// are combined in thread-id order, so the result is identical from run to
// run for a fixed thread count (plain `reduction(+:...)` combines in
// arrival order and is not).
template <typename Term>
double deterministic_sum(std::size_t n, Term&& term) {
    const int nt = max_threads();
    if (nt == 1 || n < 2048) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += term(i);
        return acc;
    }
    std::vector<double> slot(static_cast<std::size_t>(nt), 0.0);
#ifdef _OPENMP
#pragma omp parallel
    {
        const int t = omp_get_thread_num();
        double local = 0.0;
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            local += term(static_cast<std::size_t>(i));
        slot[static_cast<std::size_t>(t)] = local;
    }
#endif
    double acc = 0.0;
    for (double s : slot) acc += s;
    return acc;
}

// Max of term(i) for i in [0, n). Max is order-independent, so a plain
// slotted reduction suffices.
template <typename Term>
double deterministic_max(std::size_t n, Term&& term) {
    const int nt = max_threads();
    if (nt == 1 || n < 4096) {
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i) m = std::max(m, term(i));
        return m;
    }
    std::vector<double> slot(static_cast<std::size_t>(nt), 0.0);
#ifdef _OPENMP
#pragma omp parallel
    {
        const int t = omp_get_thread_num();
        double local = 0.0;
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            local = std::max(local, term(static_cast<std::size_t>(i)));
        slot[static_cast<std::size_t>(t)] = local;
    }
#endif
    double m = 0.0;
    for (double s : slot) m = std::max(m, s);
    return m;
}

// Runs body(i) for i in [0, n); each iteration must write only to its own
// output slot. Results are positionally deterministic regardless of the
// execution order.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        body(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace gridnls::par
