#include "diamond/network.hpp"

#include <cmath>
#include <stdexcept>

#include "diamond/rng.hpp"

namespace diamond {

namespace {

void check_strengths(const std::vector<double>& ell, const std::vector<double>& r) {
    if (ell.empty() || ell.size() != r.size()) {
        throw std::invalid_argument("network needs matching nonempty ell/r vectors");
    }
    if (ell.size() > 31) {
        throw std::invalid_argument("relay count exceeds the mask width");
    }
    for (std::size_t i = 0; i < ell.size(); ++i) {
        if (!(std::isfinite(ell[i]) && ell[i] >= 0.0) || !(std::isfinite(r[i]) && r[i] >= 0.0)) {
            throw std::invalid_argument("link strengths must be finite and nonnegative");
        }
    }
}

}  // namespace

DiamondNetwork::DiamondNetwork(std::vector<double> ell, std::vector<double> r)
    : ell_(std::move(ell)), r_(std::move(r)) {
    check_strengths(ell_, r_);
}

CutMask Subnetwork::to_parent(CutMask local) const {
    CutMask parent;
    for (std::size_t j = 0; j < original.size(); ++j) {
        if (local.contains(j)) parent.bits |= 1u << original[j];
    }
    return parent;
}

DiamondNetwork from_channel_gains(std::span<const std::complex<double>> h,
                                  std::span<const std::complex<double>> g) {
    if (h.empty() || h.size() != g.size()) {
        throw std::invalid_argument("gain vectors must be nonempty and of equal length");
    }
    std::vector<double> ell(h.size()), r(g.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!std::isfinite(h[i].real()) || !std::isfinite(h[i].imag()) ||
            !std::isfinite(g[i].real()) || !std::isfinite(g[i].imag())) {
            throw std::invalid_argument("channel gains must be finite");
        }
        ell[i] = std::log2(1.0 + std::norm(h[i]));
        r[i] = std::log2(1.0 + std::norm(g[i]));
    }
    return DiamondNetwork(std::move(ell), std::move(r));
}

DiamondNetwork from_channel_gains(std::span<const double> h, std::span<const double> g) {
    std::vector<std::complex<double>> hc(h.begin(), h.end());
    std::vector<std::complex<double>> gc(g.begin(), g.end());
    return from_channel_gains(std::span<const std::complex<double>>(hc),
                              std::span<const std::complex<double>>(gc));
}

double worst_case_scale(std::size_t n) {
    const double hi = std::ceil((static_cast<double>(n) + 2.0) / 2.0);
    const double lo = std::floor((static_cast<double>(n) + 2.0) / 2.0);
    return hi * lo / (hi + lo);
}

DiamondNetwork worst_case_family(std::size_t n, double c) {
    if (n < 1) throw std::invalid_argument("family needs n >= 1");
    if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("family needs c > 0");
    const double k = worst_case_scale(n);
    std::vector<double> ell(n), r(n);
    for (std::size_t i = 1; i <= n; ++i) {
        ell[i - 1] = k * c / static_cast<double>(i);
        r[i - 1] = k * c / static_cast<double>(n - i + 1);
    }
    return DiamondNetwork(std::move(ell), std::move(r));
}

DiamondNetwork random_network(std::size_t n, std::uint64_t seed, double lo, double hi) {
    if (n < 1) throw std::invalid_argument("random network needs n >= 1");
    if (!(lo >= 0.0) || !(hi >= lo)) throw std::invalid_argument("invalid strength range");
    Rng rng(seed);
    std::vector<double> ell(n), r(n);
    for (std::size_t i = 0; i < n; ++i) ell[i] = rng.uniform(lo, hi);
    for (std::size_t i = 0; i < n; ++i) r[i] = rng.uniform(lo, hi);
    return DiamondNetwork(std::move(ell), std::move(r));
}

DiamondNetwork named_network(std::string_view name, double big_r) {
    if (name == "sym2") {
        return DiamondNetwork({1.0, 1.0}, {1.0, 1.0});
    }
    if (name == "hd_vs_fd_best") {
        // 2-relay network whose best single relay differs between HD and FD.
        return DiamondNetwork({1.0, 2.0 / 5.0}, {1.0 / 2.0, 14.0 / 5.0});
    }
    if (name == "thm2_k1n2") {
        // Tight case for the 1-of-2 selection guarantee against the FD
        // capacity; also the n=2, c=1 member of the worst-case family.
        return DiamondNetwork({1.0, 1.0 / 2.0}, {1.0 / 2.0, 1.0});
    }
    if (name == "unit1") {
        return DiamondNetwork({1.0}, {1.0});
    }
    if (name == "sparse3") {
        // One live relay among three; best pair still hits half the FD value.
        return DiamondNetwork({1.0, 0.0, 0.0}, {1.0, 0.0, 0.0});
    }
    if (name == "best2of3") {
        // 3-relay network whose best 2-relay subnetwork achieves 2/3 of the
        // full HD capacity. The first destination link is "infinite"; it is
        // realized as the finite big_r.
        if (!(big_r > 0.0) || !std::isfinite(big_r)) {
            throw std::invalid_argument("best2of3 needs a finite positive big_r");
        }
        return DiamondNetwork({1.0 / 3.0, 1.0, 1.0}, {big_r, 2.0 / 3.0, 2.0 / 3.0});
    }
    throw std::invalid_argument("unknown network name: " + std::string(name));
}

std::vector<std::string> named_network_names() {
    return {"sym2", "hd_vs_fd_best", "thm2_k1n2", "unit1", "sparse3", "best2of3"};
}

Subnetwork subnetwork(const DiamondNetwork& net, CutMask keep) {
    const std::size_t n = net.relay_count();
    if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
    if (!fits_mask(keep.bits, n)) throw std::invalid_argument("keep set outside the network");
    std::vector<double> ell, r;
    std::vector<std::size_t> original;
    for (std::size_t i = 0; i < n; ++i) {
        if (keep.contains(i)) {
            ell.push_back(net.ell(i));
            r.push_back(net.r(i));
            original.push_back(i);
        }
    }
    return Subnetwork{DiamondNetwork(std::move(ell), std::move(r)), std::move(original)};
}

}  // namespace diamond
