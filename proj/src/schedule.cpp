#include "diamond/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "diamond/cut_engine.hpp"

namespace diamond {

Schedule::Schedule(std::vector<std::pair<StateMask, double>> weights) : entries_(std::move(weights)) {
    std::erase_if(entries_, [](const auto& e) { return !(e.second > 0.0); });
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i - 1].first == entries_[i].first) {
            throw std::invalid_argument("duplicate state in schedule");
        }
    }
}

Schedule Schedule::point_mass(StateMask s) { return Schedule({{s, 1.0}}); }

Schedule Schedule::two_state_half(std::size_t n) {
    if (n == 0) throw std::invalid_argument("empty network");
    return Schedule({{StateMask::all_listen(), 0.5}, {StateMask::all_transmit(n), 0.5}});
}

double Schedule::weight(StateMask s) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                               [](const auto& e, StateMask m) { return e.first < m; });
    return (it != entries_.end() && it->first == s) ? it->second : 0.0;
}

double Schedule::total() const {
    double sum = 0.0;
    for (const auto& [s, w] : entries_) sum += w;
    return sum;
}

bool Schedule::valid(std::size_t n, double tol) const {
    for (const auto& [s, w] : entries_) {
        if (!fits_mask(s.bits, n) || !(w >= 0.0) || !std::isfinite(w)) return false;
    }
    return std::abs(total() - 1.0) <= tol;
}

Schedule Schedule::marginalize(std::size_t n, CutMask keep) const {
    if (keep.empty() || !fits_mask(keep.bits, n)) {
        throw std::invalid_argument("keep set must be a nonempty subset of the network");
    }
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n; ++i) {
        if (keep.contains(i)) kept.push_back(i);
    }
    std::vector<double> acc(std::size_t{1} << kept.size(), 0.0);
    for (const auto& [s, w] : entries_) {
        std::uint32_t proj = 0;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (s.transmits(kept[j])) proj |= 1u << j;
        }
        acc[proj] += w;
    }
    std::vector<std::pair<StateMask, double>> out;
    for (std::uint32_t s = 0; s < acc.size(); ++s) {
        if (acc[s] > 0.0) out.push_back({StateMask{s}, acc[s]});
    }
    return Schedule(std::move(out));
}

std::size_t schedule_support(const Schedule& schedule) {
    std::size_t count = 0;
    for (const auto& [s, w] : schedule.entries()) {
        if (w > 1e-9) ++count;
    }
    return count;
}

std::size_t schedule_support(const CapacityResult& result) {
    if (!result.schedule) throw std::invalid_argument("result carries no schedule");
    return schedule_support(*result.schedule);
}

std::pair<double, CutMask> evaluate_schedule(const DiamondNetwork& net, const Schedule& schedule) {
    const std::size_t n = net.relay_count();
    const std::uint32_t total = 1u << n;
    std::vector<double> acc(total, 0.0);
    std::vector<double> row(total);
    for (const auto& [s, w] : schedule.entries()) {
        state_cut_values_into(net, s, 0.0, row.data());
        for (std::uint32_t a = 0; a < total; ++a) acc[a] += w * row[a];
    }
    double best = acc[0];
    CutMask cut{0};
    for (std::uint32_t a = 1; a < total; ++a) {
        if (acc[a] < best) {
            best = acc[a];
            cut = CutMask{a};
        }
    }
    return {best, cut};
}

}  // namespace diamond
