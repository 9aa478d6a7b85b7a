// Acceptance suite: runs every catalog-wide verification at its pinned
// parameters and prints one line per criterion.
#include <chrono>
#include <cstdio>
#include <vector>

#include "epglab/checks.hpp"

int main() {
    using namespace epglab;
    using clock = std::chrono::steady_clock;

    struct Criterion {
        const char* label;
        CheckResult (*run)();
    };
    const std::vector<Criterion> criteria = {
        {"criterion-1 counting formulas (orders <= 100, tolerance 0)",
         [] { return check_counting_formulas(100); }},
        {"criterion-2 abelian reconstruction (orders <= 128, exact)",
         [] { return check_abelian_reconstruction(128); }},
        {"criterion-3 semitree characterization (p^sum <= 256, p in {2,3,5})",
         [] { return check_semitree_characterization(); }},
        {"criterion-4 isomorphism equivalence (orders <= 64)",
         [] { return check_iso_equivalence(64); }},
        {"criterion-5 power isos preserve enhanced adjacency (orders <= 32)",
         [] { return check_power_preserves_enhanced(32); }},
        {"criterion-6 automorphism classifications (orders 2..16)",
         [] { return check_aut_classifications(); }},
        {"criterion-7 p-components and graph-side nilpotency (<= 100 / <= 200)",
         [] { return check_p_component(100, 200); }},
        {"criterion-8 perfectness: pentagon, bounded Berge (len 7), omega-colorings",
         [] { return check_perfectness(200, 7); }},
        {"criterion-9 strong-product law sweep (products <= 144)",
         [] { return check_product_law_sweep(144); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = clock::now();
        CheckResult r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.pass = false;
            r.sub_checked = 0;
            r.sub_failed = 1;
            r.details = e.what();
        }
        const double secs =
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count() /
            1000.0;
        std::printf("%s  %s  [%lld checks, %lld failed, %.1fs]\n", r.pass ? "PASS" : "FAIL",
                    c.label, r.sub_checked, r.sub_failed, secs);
        if (!r.pass) {
            std::printf("      first failure: %s\n", r.details.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
