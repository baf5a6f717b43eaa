// Timing comparison of the OpenMP scan kernels against the serial reference
// on the library's heavy inner loops. The two paths must agree bitwise; the
// checksum column asserts it.

#include <chrono>
#include <cstdio>
#include <functional>

#include "schwarzkit/herglotz.hpp"
#include "schwarzkit/holomap.hpp"
#include "schwarzkit/kernels.hpp"
#include "schwarzkit/rigidity.hpp"
#include "schwarzkit/rng.hpp"

using namespace schwarz;

namespace {

struct Workload {
    const char* name;
    std::function<double(Exec)> run; // returns a checksum
};

double time_ms(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int main() {
    Rng rng(2024);
    std::vector<BoundaryMeasure::Atom> atoms;
    for (int i = 0; i < 32; ++i) atoms.push_back({rng.uniform(0.0, kTwoPi), rng.uniform(0.1, 1.0)});
    const FunctionSpec herglotz_map =
        FunctionSpec::herglotz_induced({BoundaryMeasure(std::move(atoms)), 0.0});

    std::vector<Complex> zeros;
    for (int i = 0; i < 24; ++i) zeros.push_back(rng.in_annulus(0.05, 0.8));
    const FunctionSpec big_blaschke = FunctionSpec::blaschke(0.3, zeros);

    std::vector<Workload> workloads;
    workloads.push_back({"certify herglotz map, 2^17 boundary samples", [&](Exec mode) {
                             CircleScan scan = max_modulus_on_circle(
                                 [&](Complex z) { return herglotz_map(z); }, 1.0 - 1e-6, 1 << 17, mode);
                             return scan.max_modulus;
                         }});
    workloads.push_back({"blaschke24 grid scan, 3*10^5 points", [&](Exec mode) {
                             std::vector<Complex> grid = disc_grid(600, 500, 0.995);
                             std::vector<double> vals = map_indexed<double>(
                                 grid.size(),
                                 [&](std::size_t i) { return std::abs(big_blaschke(grid[i])); }, mode);
                             return max_of(vals).value;
                         }});
    workloads.push_back({"schwarz-pick corpus, 4000 instances", [&](Exec mode) {
                             Rng root(7);
                             struct Inst {
                                 FunctionSpec f;
                                 Complex a, b;
                             };
                             std::vector<Inst> inst;
                             for (int i = 0; i < 4000; ++i) {
                                 Rng r = root.split(static_cast<std::uint64_t>(i));
                                 std::vector<Complex> zs;
                                 int n = r.uniform_int(1, 5);
                                 for (int k = 0; k < n; ++k) zs.push_back(r.in_annulus(0.05, 0.8));
                                 inst.push_back({FunctionSpec::blaschke(r.uniform(0.0, kTwoPi), zs),
                                                 r.in_disc(0.85), r.in_disc(0.85)});
                             }
                             std::vector<double> mins = map_indexed<double>(
                                 inst.size(),
                                 [&](std::size_t i) {
                                     VerificationReport rep = verify_schwarz_pick(
                                         inst[i].f, inst[i].a, inst[i].b);
                                     return rep.min_slack;
                                 },
                                 mode);
                             return min_of(mins).value;
                         }});

    std::printf("%-45s %12s %12s %8s %s\n", "workload", "serial ms", "openmp ms", "speedup",
                "bitwise");
    for (const Workload& w : workloads) {
        double serial_result = 0.0, parallel_result = 0.0;
        double serial_ms = time_ms([&] { serial_result = w.run(Exec::serial); });
        double parallel_ms = time_ms([&] { parallel_result = w.run(Exec::parallel); });
        std::printf("%-45s %12.2f %12.2f %7.2fx %s\n", w.name, serial_ms, parallel_ms,
                    serial_ms / parallel_ms, serial_result == parallel_result ? "ok" : "MISMATCH");
    }
    return 0;
}
