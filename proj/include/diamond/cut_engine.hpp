#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "diamond/masks.hpp"
#include "diamond/network.hpp"
#include "diamond/schedule.hpp"

namespace diamond {

/// Default cap on full-duplex cut enumeration (2^n cuts).
inline constexpr std::size_t kDefaultFdCap = 20;

/// Value of one cut, optionally taken under a specific listen/transmit state.
struct CutValue {
    double value = 0.0;
    CutMask cut;
    std::optional<StateMask> state;
};

/// Full-duplex value of a cut: max of ell over relays in the cut plus max of
/// r over relays outside it. The max over an empty set is 0.
double fd_cut_value(const DiamondNetwork& net, CutMask cut);

/// Minimum full-duplex cut over all 2^n subsets, with the argmin cut.
/// Ties go to the numerically smallest mask.
CutValue fd_min_cut(const DiamondNetwork& net, std::size_t enum_cap = kDefaultFdCap);

/// Approximate full-duplex capacity by exhaustive cut enumeration.
CapacityResult fd_capacity(const DiamondNetwork& net, std::size_t enum_cap = kDefaultFdCap);

/// Per-state effective links: ell'_i = ell_i while relay i listens, else 0;
/// r'_i = r_i while relay i transmits, else 0.
std::pair<std::vector<double>, std::vector<double>> masked_links(const DiamondNetwork& net,
                                                                 StateMask state);

/// Half-duplex cut value for one state: the fd_cut_value of the state-masked
/// links, i.e. max ell over listening relays in the cut plus max r over
/// transmitting relays outside it.
double hd_state_cut_value(const DiamondNetwork& net, CutMask cut, StateMask state);

/// hd_state_cut_value for every cut of one state, indexed by cut mask.
/// Runs in O(2^n) after an O(n) setup.
std::vector<double> state_cut_values(const DiamondNetwork& net, StateMask state);

/// Fills `out` (size 2^n) with hd_state_cut_value(net, A, state) + shift for
/// every cut mask A. Scratch variant used by the LP builder.
void state_cut_values_into(const DiamondNetwork& net, StateMask state, double shift, double* out);

}  // namespace diamond
