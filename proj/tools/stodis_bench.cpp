// Times each batch kernel against its serial reference and checks that the
// two produce identical output.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stodis/batch.hpp"
#include "stodis/channel.hpp"
#include "stodis/distribution.hpp"
#include "stodis/matrix.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, std::size_t n, double serial_ms, double parallel_ms,
            bool identical) {
    std::printf("%-24s n=%-9zu serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n",
                name, n, serial_ms, parallel_ms, serial_ms / parallel_ms,
                identical ? "outputs identical" : "OUTPUT MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif

    using namespace stodis;

    {
        const std::size_t n = 20000;
        std::vector<double> serial, parallel;
        const double ts = time_ms([&] { serial = batch::pair_discords_serial(n, 8, 7); });
        const double tp = time_ms([&] { parallel = batch::pair_discords(n, 8, 7); });
        report("pair_discords d=8", n, ts, tp, serial == parallel);
    }
    {
        const std::size_t n = 200000;
        const StochasticChannel m = binary_symmetric(0.1);
        std::vector<double> serial, parallel;
        const double ts = time_ms([&] { serial = batch::state_discords_serial(n, 2, m, 7); });
        const double tp = time_ms([&] { parallel = batch::state_discords(n, 2, m, 7); });
        report("state_discords d=2", n, ts, tp, serial == parallel);
    }
    {
        std::vector<double> qs(401), epss(101);
        for (std::size_t i = 0; i < qs.size(); ++i) qs[i] = static_cast<double>(i) / 400.0;
        for (std::size_t i = 0; i < epss.size(); ++i)
            epss[i] = 0.5 * static_cast<double>(i) / 100.0;
        std::vector<batch::MergeRow> serial, parallel;
        const double ts = time_ms([&] { serial = batch::merge_sweep_serial(qs, epss); });
        const double tp = time_ms([&] { parallel = batch::merge_sweep(qs, epss); });
        report("merge_sweep", qs.size() * epss.size(), ts, tp, serial == parallel);
    }
    {
        const JointDistribution p(Matrix{{0.5, 0.0}, {0.0, 0.5}});
        std::vector<double> axis(1501);
        for (std::size_t i = 0; i < axis.size(); ++i)
            axis[i] = static_cast<double>(i) / static_cast<double>(axis.size() - 1);
        std::vector<double> serial, parallel;
        const double ts =
            time_ms([&] { serial = batch::entrywise_discords_serial(p, axis, axis); });
        const double tp = time_ms([&] { parallel = batch::entrywise_discords(p, axis, axis); });
        report("entrywise_discords", axis.size() * axis.size(), ts, tp, serial == parallel);
    }
    {
        const JointDistribution p(Matrix{{0.35, 0.15}, {0.15, 0.35}});
        std::vector<double> axis(1501);
        for (std::size_t i = 0; i < axis.size(); ++i)
            axis[i] = static_cast<double>(i) / static_cast<double>(axis.size() - 1);
        std::vector<double> serial, parallel;
        const double ts =
            time_ms([&] { serial = batch::fixed_point_residuals_serial(p, axis, axis); });
        const double tp =
            time_ms([&] { parallel = batch::fixed_point_residuals(p, axis, axis); });
        report("fixed_point_residuals", axis.size() * axis.size(), ts, tp, serial == parallel);
    }
    return 0;
}
