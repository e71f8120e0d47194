#pragma once

#include "evsched/core.hpp"
#include "evsched/schedule.hpp"

namespace evsched {

/// Marginal electricity price g(z) = k0 + k1*z over per-slot energy z.
/// k1 must be strictly positive; the flat-profile optimality argument and the
/// valley-filling solver both rely on strict convexity of the integrated cost.
struct CostModel {
    double k0 = 1e-4; // currency per kWh
    double k1 = 1.2e-4; // currency per kWh^2

    void validate() const;
};

CostModel cost_model_of(const Scenario& scenario);

/// Charging cost of one slot: the price density integrated from the base load
/// up to the total load, with both expressed in per-slot energy (kW * slot_hours).
/// Rejects z_kw < base_kw.
double slot_cost(const CostModel& model, double z_kw, double base_kw, double slot_hours);

/// J1: sum of slot costs over the whole horizon, with z recomputed per slot
/// from the rate matrix.
double total_cost(const Schedule& schedule, const Scenario& scenario);

/// Convenience ingredients for one EV at one slot.
struct ConvenienceTerms {
    double w_star = 0.0;      // minimum slots still required
    double w_remaining = 0.0; // slots to deadline
    double u = 0.0;           // 1 / (w_star * w_remaining)
};

/// Computes u_{i,t} for an EV present and unfinished at t. Requires
/// t < deadline_slot and SOC below target; a still-unfinished EV at or past
/// its deadline is a missed-deadline event and has no defined u.
ConvenienceTerms convenience(const EvRequest& ev, const FleetState& fleet, int ev_index, int t,
                             const TimeGrid& grid);

/// J2: sum of u over present, unfinished EVs across all slots. EVs that finish
/// early count 1 per slot parked between finish and deadline. Replays the SOC
/// trajectory from the schedule.
double total_convenience(const Schedule& schedule, const Scenario& scenario);

} // namespace evsched
