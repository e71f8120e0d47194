#include "evsched/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evsched {

void TimeGrid::validate() const {
    if (horizon_slots < 1)
        throw std::invalid_argument("TimeGrid: horizon_slots must be >= 1");
    if (slot_minutes < 1 || 1440 % slot_minutes != 0)
        throw std::invalid_argument("TimeGrid: slot_minutes must divide 1440");
}

void EvRequest::validate(const TimeGrid& grid) const {
    if (soc_init < 0.0 || soc_init > soc_target || soc_target > 1.0)
        throw std::invalid_argument("EvRequest " + std::to_string(id) +
                                    ": need 0 <= soc_init <= soc_target <= 1");
    if (arrival_slot >= deadline_slot)
        throw std::invalid_argument("EvRequest " + std::to_string(id) +
                                    ": arrival_slot must precede deadline_slot");
    if (!grid.contains(arrival_slot) || !grid.contains(deadline_slot))
        throw std::invalid_argument("EvRequest " + std::to_string(id) + ": slots outside grid");
    if (p_min_kw < 0.0 || p_min_kw > p_max_kw)
        throw std::invalid_argument("EvRequest " + std::to_string(id) + ": need 0 <= p_min <= p_max");
    if (capacity_kwh <= 0.0)
        throw std::invalid_argument("EvRequest " + std::to_string(id) + ": capacity must be positive");
    const double deliverable = p_max_kw * grid.slot_hours() * chargeable_slots();
    if (demand_kwh() > deliverable + 1e-9)
        throw std::invalid_argument("EvRequest " + std::to_string(id) +
                                    ": demand exceeds deliverable energy before deadline");
}

void Scenario::validate() const {
    grid.validate();
    if (base_load_kw.size() != static_cast<size_t>(grid.horizon_slots))
        throw std::invalid_argument("Scenario: base_load_kw length must equal horizon_slots");
    for (double v : base_load_kw)
        if (v < 0.0)
            throw std::invalid_argument("Scenario: base load must be non-negative");
    if (stations.empty())
        throw std::invalid_argument("Scenario: at least one station required");
    for (const EvRequest& ev : evs) {
        ev.validate(grid);
        if (ev.station < 0 || ev.station >= static_cast<int>(stations.size()))
            throw std::invalid_argument("Scenario: EV " + std::to_string(ev.id) + " station out of range");
    }
    if (peak_cap_kw) {
        const double base_max = base_load_kw.empty()
                                    ? 0.0
                                    : *std::max_element(base_load_kw.begin(), base_load_kw.end());
        if (*peak_cap_kw < base_max)
            throw std::invalid_argument("Scenario: peak_cap_kw below maximum base load");
    }
}

FleetState::FleetState(const Scenario& scenario) : scenario_(&scenario) {
    soc_.reserve(scenario.evs.size());
    finished_.resize(scenario.evs.size());
    for (const EvRequest& ev : scenario.evs)
        soc_.push_back(ev.soc_init);
}

bool FleetState::available(int ev_index, int t) const {
    const EvRequest& ev = scenario_->evs[static_cast<size_t>(ev_index)];
    if (t < ev.arrival_slot || t > ev.deadline_slot)
        return false;
    const auto& fin = finished_[static_cast<size_t>(ev_index)];
    return !fin || t < *fin;
}

void FleetState::settle_prefilled(int t) {
    for (size_t i = 0; i < soc_.size(); ++i) {
        const EvRequest& ev = scenario_->evs[i];
        if (!finished_[i] && ev.arrival_slot <= t && soc_[i] >= ev.soc_target - kSocTolerance)
            finished_[i] = t;
    }
}

void FleetState::apply_rates(const std::vector<double>& rates_kw, int t) {
    if (rates_kw.size() != soc_.size())
        throw std::invalid_argument("FleetState: rate vector size mismatch");
    const double sh = scenario_->grid.slot_hours();
    for (size_t i = 0; i < soc_.size(); ++i) {
        const double rate = rates_kw[i];
        if (rate == 0.0)
            continue;
        if (rate < 0.0)
            throw std::invalid_argument("FleetState: negative charging rate");
        const EvRequest& ev = scenario_->evs[i];
        const double next = soc_[i] + rate * sh / ev.capacity_kwh;
        if (next > 1.0 + kSocTolerance)
            throw std::domain_error("FleetState: update would push EV " + std::to_string(ev.id) +
                                    " SOC above 1");
        soc_[i] = std::min(next, 1.0);
        if (!finished_[i] && soc_[i] >= ev.soc_target - kSocTolerance)
            finished_[i] = t + 1;
    }
}

ActiveSets active_sets(const Scenario& scenario, const FleetState& fleet, int t) {
    ActiveSets sets;
    const int n_stations = static_cast<int>(scenario.stations.size());
    sets.station_evs.resize(static_cast<size_t>(n_stations));
    sets.station_windows.assign(static_cast<size_t>(n_stations), {0, 0});

    for (int i = 0; i < static_cast<int>(scenario.evs.size()); ++i) {
        const EvRequest& ev = scenario.evs[static_cast<size_t>(i)];
        if (!fleet.available(i, t))
            continue;
        if (fleet.soc(i) >= ev.soc_target - FleetState::kSocTolerance)
            continue;
        sets.station_evs[static_cast<size_t>(ev.station)].push_back(i);
        sets.all_evs.push_back(i);
    }
    int union_end = 0;
    for (int m = 0; m < n_stations; ++m) {
        int end = 0;
        for (int i : sets.station_evs[static_cast<size_t>(m)])
            end = std::max(end, scenario.evs[static_cast<size_t>(i)].deadline_slot);
        if (end >= t) {
            sets.station_windows[static_cast<size_t>(m)] = {t, end};
            union_end = std::max(union_end, end);
        }
    }
    if (union_end >= t && !sets.all_evs.empty())
        sets.union_window = {t, union_end};
    return sets;
}

} // namespace evsched
