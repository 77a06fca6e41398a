#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "diamond/masks.hpp"
#include "diamond/network.hpp"

namespace diamond {

/// Probability distribution over the 2^n listen/transmit states. Only
/// strictly positive weights are stored, sorted by state mask.
class Schedule {
  public:
    Schedule() = default;
    /// Drops nonpositive weights and keeps entries sorted by mask.
    explicit Schedule(std::vector<std::pair<StateMask, double>> weights);

    static Schedule point_mass(StateMask s);
    /// Half the time all relays listen, half the time all transmit.
    static Schedule two_state_half(std::size_t n);

    const std::vector<std::pair<StateMask, double>>& entries() const { return entries_; }
    double weight(StateMask s) const;
    double total() const;
    bool empty() const { return entries_.empty(); }

    /// Checks that weights sum to 1 within tol and all states fit n relays.
    bool valid(std::size_t n, double tol = 1e-9) const;

    /// Restriction to a kept relay subset: each full state projects onto the
    /// kept bits (order preserved) and the weights of all extensions add up.
    Schedule marginalize(std::size_t n, CutMask keep) const;

  private:
    std::vector<std::pair<StateMask, double>> entries_;
};

enum class CapacityMode { FullDuplex, HalfDuplex, HalfDuplexFixedSchedule };

/// A capacity value together with its certifying witnesses. `min_cut` is an
/// argmin cut when the computation produced one (enumeration and LP paths);
/// closed-form values carry no cut witness. `schedule` is present for
/// half-duplex LP results only.
struct CapacityResult {
    double value = 0.0;
    CapacityMode mode = CapacityMode::FullDuplex;
    std::optional<CutMask> min_cut;
    std::optional<Schedule> schedule;
};

/// Number of states carrying weight above 1e-9.
std::size_t schedule_support(const Schedule& schedule);
std::size_t schedule_support(const CapacityResult& result);

/// Value of a fixed schedule on a network: min over all cuts of the
/// schedule-weighted state cut values, with the argmin cut (ties to the
/// smallest mask). This re-derives an HD CapacityResult from its witnesses.
std::pair<double, CutMask> evaluate_schedule(const DiamondNetwork& net, const Schedule& schedule);

}  // namespace diamond
