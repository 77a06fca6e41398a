#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diamond/masks.hpp"

namespace diamond {

/// An N-relay Gaussian diamond network described by its per-relay link
/// strengths: ell[i] for the source->relay i hop and r[i] for the
/// relay i -> destination hop, both in bits per channel use.
///
/// Relays are 0-based internally; all user-facing I/O is 1-based.
/// Instances are immutable after construction and safe to share across
/// threads.
class DiamondNetwork {
  public:
    DiamondNetwork(std::vector<double> ell, std::vector<double> r);

    std::size_t relay_count() const { return ell_.size(); }

    double ell(std::size_t i) const { return ell_[i]; }
    double r(std::size_t i) const { return r_[i]; }

    std::span<const double> ell() const { return ell_; }
    std::span<const double> r() const { return r_; }

  private:
    std::vector<double> ell_;
    std::vector<double> r_;
};

/// A restriction of a network to a subset of its relays, keeping the
/// original relative order. original[j] is the 0-based index in the parent
/// network of the j-th kept relay.
struct Subnetwork {
    DiamondNetwork net;
    std::vector<std::size_t> original;

    /// Maps a relay subset of the subnetwork back to parent indices.
    CutMask to_parent(CutMask local) const;
};

/// Converts complex channel gains to link strengths:
/// ell_i = log2(1 + |h_i|^2), r_i = log2(1 + |g_i|^2).
DiamondNetwork from_channel_gains(std::span<const std::complex<double>> h,
                                  std::span<const std::complex<double>> g);

/// Real-magnitude convenience overload (phase carries no information here).
DiamondNetwork from_channel_gains(std::span<const double> h, std::span<const double> g);

/// Scale factor of the worst-case selection family:
/// K(n) = ceil((n+2)/2) * floor((n+2)/2) / (n+2).
double worst_case_scale(std::size_t n);

/// The hard family for relay selection: ell_i = K*c/i, r_i = K*c/(n-i+1)
/// (1-based i). Source-side strengths decay, destination-side strengths grow,
/// and r is the reverse of ell; every single relay ends up equally good.
DiamondNetwork worst_case_family(std::size_t n, double c);

/// Seeded network with all strengths uniform in [lo, hi]. Deterministic for
/// a given seed across platforms.
DiamondNetwork random_network(std::size_t n, std::uint64_t seed, double lo, double hi);

/// Small catalogue of named reference networks used by the CLI and the test
/// suites. `big_r` substitutes the one unbounded strength in "best2of3"
/// (the value must be finite for the LP; the claimed capacities hold to
/// tolerance once it is large).
DiamondNetwork named_network(std::string_view name, double big_r = 100.0);

/// Names accepted by named_network, in catalogue order.
std::vector<std::string> named_network_names();

/// Restriction of a network to the relays in `keep` (nonempty). Order is
/// preserved and the result carries the index map back to the parent.
Subnetwork subnetwork(const DiamondNetwork& net, CutMask keep);

}  // namespace diamond
