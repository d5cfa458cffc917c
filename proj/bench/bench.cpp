// Compares the serial and parallel paths on the bundled algebras.
// Not a test: prints wall times so regressions are easy to spot.

#include "taucat/algebra.hpp"
#include "taucat/inventory.hpp"
#include "taucat/parallel.hpp"
#include "taucat/tautilt.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Sample {
    const char* name;
    const char* text;
};

const Sample kSamples[] = {
    {"a2",
     "field: Q\nvertices: 1 2\narrows: a: 1 -> 2\n"},
    {"a3",
     "field: Q\nvertices: 1 2 3\narrows: a: 1 -> 2, b: 2 -> 3\n"},
    {"a3rel",
     "field: Q\nvertices: 1 2 3\narrows: a: 1 -> 2, b: 2 -> 3\nrelations: b*a\n"},
    {"loop3",
     "field: Q\nvertices: 1\narrows: x: 1 -> 1\nrelations: x*x*x\n"},
    {"d4",
     "field: Q\nvertices: 1 2 3 4\narrows: a: 1 -> 4, b: 2 -> 4, c: 3 -> 4\n"},
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

}  // namespace

int main() {
    std::printf("threads: %d\n", taucat::thread_count());
    std::printf("%-8s %4s | %12s %12s %7s | %12s %12s %7s\n", "algebra", "inv",
                "tables ser", "tables par", "ratio", "lem2.2 ser", "lem2.2 par",
                "ratio");

    for (const auto& s : kSamples) {
        auto alg = taucat::parse_algebra(s.text);
        auto inv = taucat::build_inventory(alg);

        auto t0 = std::chrono::steady_clock::now();
        auto tser = taucat::build_tables(inv, false);
        double tables_ser = ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        auto tpar = taucat::build_tables(inv, true);
        double tables_par = ms_since(t0);

        if (tser.hom != tpar.hom || tser.ext1 != tpar.ext1 ||
            tser.hom_tau != tpar.hom_tau) {
            std::printf("%-8s serial/parallel tables disagree\n", s.name);
            return 1;
        }

        t0 = std::chrono::steady_clock::now();
        auto rser = taucat::verify_lemma_2_2(tpar, false);
        double sweep_ser = ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        auto rpar = taucat::verify_lemma_2_2(tpar, true);
        double sweep_par = ms_since(t0);

        if (rser.pass != rpar.pass || rser.cases != rpar.cases) {
            std::printf("%-8s serial/parallel sweep disagrees\n", s.name);
            return 1;
        }

        std::printf("%-8s %4d | %9.2f ms %9.2f ms %6.2fx | %9.2f ms %9.2f ms %6.2fx\n",
                    s.name, inv.size(), tables_ser, tables_par,
                    tables_par > 0 ? tables_ser / tables_par : 0.0, sweep_ser,
                    sweep_par, sweep_par > 0 ? sweep_ser / sweep_par : 0.0);
    }
    std::printf("note: ratios near 1.0 are expected on a single-core host\n");
    return 0;
}
