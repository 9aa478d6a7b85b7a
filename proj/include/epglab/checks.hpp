#ifndef EPGLAB_CHECKS_HPP
#define EPGLAB_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace epglab {

/// One verification check over the generated catalog. `property` names the
/// single structural law the check exercises; `sub_checked`/`sub_failed`
/// count the individual instances.
struct CheckResult {
    std::string id;
    std::string property;
    bool pass = false;
    long long sub_checked = 0;
    long long sub_failed = 0;
    std::string details; // first failure, or a short summary
};

struct CheckOptions {
    int max_order = 100;
    std::uint64_t seed = 0; // carried into reports; all searches are deterministic
};

CheckResult check_counting_formulas(int max_order = 100);
CheckResult check_abelian_reconstruction(int max_order = 128);
CheckResult check_semitree_characterization();
CheckResult check_iso_equivalence(int max_order = 64);
CheckResult check_power_preserves_enhanced(int max_order = 32);
CheckResult check_aut_classifications();
CheckResult check_p_component(int max_order_marking = 100, int max_order_nilpotency = 200);
CheckResult check_pentagon();
CheckResult check_perfectness(int berge_max_order = 200, int berge_length = 7);
CheckResult check_product_law_sweep(int max_product_order = 144);

std::vector<std::string> all_check_ids();

/// Runs the selected checks (empty selection = all) with catalog orders
/// scaled from `opt.max_order` where a check has no spec-pinned bound.
std::vector<CheckResult> run_checks(const std::vector<std::string>& ids,
                                    const CheckOptions& opt = {});

} // namespace epglab

#endif
