#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace evsched {

/// Discrete-time grid. Slots are 1-based: t = 1..horizon_slots.
/// Per-slot series are stored in vectors indexed [t-1].
struct TimeGrid {
    int horizon_slots = 96;
    int slot_minutes = 15;
    std::string origin = "18:00"; // wall-clock label of slot 1, informational

    double slot_hours() const { return slot_minutes / 60.0; }
    bool contains(int t) const { return t >= 1 && t <= horizon_slots; }
    void validate() const;
};

/// One vehicle's charging job.
///
/// The EV is parked during slots [arrival_slot, deadline_slot]; it is picked
/// up at deadline_slot, so the last slot in which power can flow is
/// deadline_slot - 1 and a charge completed during slot t finishes at t+1.
struct EvRequest {
    int id = 0;
    int station = 0; // station index, 0-based
    int arrival_slot = 1;
    int deadline_slot = 2;
    double soc_init = 0.0;
    double soc_target = 1.0;
    double capacity_kwh = 30.0;
    double p_max_kw = 6.6;
    double p_min_kw = 0.0;

    double demand_kwh() const { return (soc_target - soc_init) * capacity_kwh; }
    int chargeable_slots() const { return deadline_slot - arrival_slot; }
    void validate(const TimeGrid& grid) const;
};

/// Station directory: load shares used by the scenario generator.
struct StationInfo {
    double share = 1.0;
};

/// Full simulation input. Immutable after construction.
struct Scenario {
    TimeGrid grid;
    std::vector<StationInfo> stations;
    std::vector<EvRequest> evs;
    std::vector<double> base_load_kw; // length = horizon_slots
    double price_k0 = 1e-4;           // currency per kWh
    double price_k1 = 1.2e-4;         // currency per kWh^2
    std::optional<double> peak_cap_kw;

    double base_at(int t) const { return base_load_kw.at(static_cast<size_t>(t) - 1); }
    void validate() const;
};

/// Mutable per-run EV bookkeeping: SOC trajectory, finish times, membership.
class FleetState {
public:
    FleetState() = default;
    explicit FleetState(const Scenario& scenario);

    double soc(int ev_index) const { return soc_[static_cast<size_t>(ev_index)]; }
    std::optional<int> finished_slot(int ev_index) const { return finished_[static_cast<size_t>(ev_index)]; }
    int size() const { return static_cast<int>(soc_.size()); }

    /// f_{i,t}: EV parked (arrival <= t <= deadline) and charge not yet complete.
    bool available(int ev_index, int t) const;

    /// True once SOC has reached the EV's target (within tolerance).
    bool finished(int ev_index) const { return finished_[static_cast<size_t>(ev_index)].has_value(); }

    /// Treats an EV whose initial SOC already meets the target as finished on arrival.
    void settle_prefilled(int t);

    /// Applies one slot of charging. rates_kw[i] is the power delivered to EV i
    /// during slot t; must be 0 for EVs that are absent or finished.
    /// Throws if an update would push SOC above 1 + tolerance.
    void apply_rates(const std::vector<double>& rates_kw, int t);

    static constexpr double kSocTolerance = 1e-9;

private:
    const Scenario* scenario_ = nullptr;
    std::vector<double> soc_;
    std::vector<std::optional<int>> finished_;
};

/// Active EV sets and sliding windows at slot t.
struct ActiveSets {
    std::vector<std::vector<int>> station_evs; // H_{m,t}: EV indices per station
    std::vector<int> all_evs;                  // H_t = union over stations
    std::vector<std::pair<int, int>> station_windows; // W_{m,t} as [t, end]; {0,0} if empty
    std::pair<int, int> union_window{0, 0};           // W_t; {0,0} if empty

    bool station_window_empty(int m) const { return station_windows[static_cast<size_t>(m)].first == 0; }
    bool empty() const { return all_evs.empty(); }
};

/// Builds H_{m,t}, H_t, W_{m,t}, W_t. An EV is a member when it is available
/// (f=1) and its SOC is still below target.
ActiveSets active_sets(const Scenario& scenario, const FleetState& fleet, int t);

} // namespace evsched
