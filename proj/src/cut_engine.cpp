#include "diamond/cut_engine.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace diamond {

double fd_cut_value(const DiamondNetwork& net, CutMask cut) {
    const std::size_t n = net.relay_count();
    if (!fits_mask(cut.bits, n)) throw std::invalid_argument("cut outside the network");
    double best_ell = 0.0, best_r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (cut.contains(i)) {
            best_ell = std::max(best_ell, net.ell(i));
        } else {
            best_r = std::max(best_r, net.r(i));
        }
    }
    return best_ell + best_r;
}

CutValue fd_min_cut(const DiamondNetwork& net, std::size_t enum_cap) {
    const std::size_t n = net.relay_count();
    if (n > enum_cap || n > kMaxMaskRelays) {
        throw std::invalid_argument("relay count exceeds the cut enumeration cap");
    }
    CutValue best{fd_cut_value(net, CutMask{0}), CutMask{0}, std::nullopt};
    const std::uint32_t total = 1u << n;
    for (std::uint32_t a = 1; a < total; ++a) {
        const double v = fd_cut_value(net, CutMask{a});
        if (v < best.value) {
            best.value = v;
            best.cut = CutMask{a};
        }
    }
    return best;
}

CapacityResult fd_capacity(const DiamondNetwork& net, std::size_t enum_cap) {
    const CutValue best = fd_min_cut(net, enum_cap);
    return CapacityResult{best.value, CapacityMode::FullDuplex, best.cut, std::nullopt};
}

std::pair<std::vector<double>, std::vector<double>> masked_links(const DiamondNetwork& net,
                                                                 StateMask state) {
    const std::size_t n = net.relay_count();
    if (!fits_mask(state.bits, n)) throw std::invalid_argument("state outside the network");
    std::vector<double> ell(n), r(n);
    for (std::size_t i = 0; i < n; ++i) {
        ell[i] = state.listens(i) ? net.ell(i) : 0.0;
        r[i] = state.transmits(i) ? net.r(i) : 0.0;
    }
    return {std::move(ell), std::move(r)};
}

double hd_state_cut_value(const DiamondNetwork& net, CutMask cut, StateMask state) {
    const std::size_t n = net.relay_count();
    if (!fits_mask(cut.bits, n) || !fits_mask(state.bits, n)) {
        throw std::invalid_argument("mask outside the network");
    }
    double best_ell = 0.0, best_r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (cut.contains(i)) {
            if (state.listens(i)) best_ell = std::max(best_ell, net.ell(i));
        } else {
            if (state.transmits(i)) best_r = std::max(best_r, net.r(i));
        }
    }
    return best_ell + best_r;
}

std::vector<double> state_cut_values(const DiamondNetwork& net, StateMask state) {
    std::vector<double> out(std::size_t{1} << net.relay_count());
    state_cut_values_into(net, state, 0.0, out.data());
    return out;
}

void state_cut_values_into(const DiamondNetwork& net, StateMask state, double shift, double* out) {
    const std::size_t n = net.relay_count();
    if (!fits_mask(state.bits, n)) throw std::invalid_argument("state outside the network");
    const std::uint32_t total = 1u << n;

    // Subset maxima by peeling the lowest set bit: max_ell[A] over the
    // state-masked source links, max_r[A] over the masked destination links.
    std::vector<double> max_ell(total), max_r(total);
    max_ell[0] = 0.0;
    max_r[0] = 0.0;
    for (std::uint32_t a = 1; a < total; ++a) {
        const unsigned i = std::countr_zero(a);
        const std::uint32_t rest = a & (a - 1);
        max_ell[a] = std::max(state.listens(i) ? net.ell(i) : 0.0, max_ell[rest]);
        max_r[a] = std::max(state.transmits(i) ? net.r(i) : 0.0, max_r[rest]);
    }
    const std::uint32_t full = total - 1;
    for (std::uint32_t a = 0; a < total; ++a) {
        out[a] = max_ell[a] + max_r[full ^ a] + shift;
    }
}

}  // namespace diamond
