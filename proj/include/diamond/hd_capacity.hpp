#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "diamond/masks.hpp"
#include "diamond/network.hpp"
#include "diamond/rational.hpp"
#include "diamond/schedule.hpp"

namespace diamond {

/// Default cap on the scheduling LP (2^n states by 2^n cuts). A dense
/// tableau at n = 12 takes roughly 270 MB; raise the cap knowingly.
inline constexpr std::size_t kDefaultLpCap = 12;

struct LpOptions {
    std::size_t cap = kDefaultLpCap;
};

/// Full solver output: the capacity result plus the adversary's optimal cut
/// mixture (a certificate for the upper bound), the raw simplex objective,
/// and the pivot count.
struct HdLpSolution {
    CapacityResult result;
    std::vector<std::pair<CutMask, double>> cut_mixture;
    double solver_value = 0.0;
    std::size_t pivots = 0;
};

/// Approximate half-duplex capacity: the max over schedules of the minimum
/// schedule-averaged cut value, solved as an LP over the 2^n states. The
/// returned schedule is a vertex optimum and the reported value is re-derived
/// from it (min over all cuts), so the witnesses always reproduce the value.
CapacityResult hd_capacity(const DiamondNetwork& net, const LpOptions& options = {});

HdLpSolution hd_capacity_lp(const DiamondNetwork& net, const LpOptions& options = {});

/// Value of the subnetwork `keep` when it inherits the full network's
/// schedule: the schedule is marginalized onto the kept relays, then the
/// worst cut of the subnetwork is taken under it. The result's cut and
/// schedule witnesses are in the subnetwork's local indexing.
CapacityResult hd_capacity_fixed_schedule(const DiamondNetwork& net, CutMask keep,
                                          const Schedule& lambda_full);

/// Max over states of the mixture-weighted cut values; for a feasible cut
/// mixture this upper-bounds the HD capacity independently of the solver.
double evaluate_cut_mixture(const DiamondNetwork& net,
                            const std::vector<std::pair<CutMask, double>>& mixture);

/// Exact-rational capacity certificate for small networks.
struct ExactCapacity {
    Rational value;
    CutMask min_cut;
    std::vector<std::pair<StateMask, Rational>> schedule;
};

/// hd_capacity with exact rational pivoting; the inputs' double values are
/// taken as exact dyadic rationals.
ExactCapacity hd_capacity_exact(const DiamondNetwork& net, std::size_t cap = 8);

/// Exact full-duplex minimum cut over all subsets.
std::pair<Rational, CutMask> fd_capacity_exact(const DiamondNetwork& net,
                                               std::size_t enum_cap = 20);

}  // namespace diamond
