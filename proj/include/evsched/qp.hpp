#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "evsched/objectives.hpp"

namespace evsched {

/// One EV's data inside a P1 instance. Slots are absolute grid slots; the
/// chargeable span is the slots in which power may actually flow
/// (arrival..deadline-1, clipped to the window).
struct P1Ev {
    int id = 0;
    double demand_kwh = 0.0; // residual energy still owed
    double p_max_kw = 0.0;
    int first_slot = 0;
    int last_slot = 0; // inclusive; last_slot < first_slot means no chargeable slot

    int span() const { return last_slot - first_slot + 1; }
};

/// The per-slot cost-minimization problem over one sliding window:
/// choose total loads z_t (and a supporting rate matrix) minimizing the
/// integrated electricity cost subject to rate bounds, availability,
/// residual demands and an optional cap on z_t.
struct P1Instance {
    int window_start = 1;
    int window_end = 1;              // inclusive
    std::vector<double> base_kw;     // length = width(); forecast for future slots
    std::vector<P1Ev> evs;
    std::optional<double> peak_cap_kw;
    double slot_hours = 0.25;

    int width() const { return window_end - window_start + 1; }
    void validate() const;
};

enum class SolveStatus { optimal, infeasible };

struct P1Solution {
    SolveStatus status = SolveStatus::optimal;
    std::vector<double> z_star_kw;             // per window slot
    std::vector<std::vector<double>> rates_kw; // [instance EV][window slot]
    double objective = 0.0;                    // currency
    double kkt_residual = 0.0;                 // max price spread over feasible moves
    int sweeps = 0;
    std::string diagnostics; // infeasibility: the binding EV/window
};

/// Exact solver for P1. Cyclic per-EV water-filling on the demand-coupled
/// quadratic; the peak cap, when present and binding, is priced in by an
/// augmented-Lagrangian outer loop and satisfied to a relative tolerance.
///
/// `tolerance` controls the relative KKT/price-spread target (default 1e-6
/// relative objective accuracy; internal price tolerance is tighter).
/// Demand constraints are met exactly; rate bounds and availability hold
/// exactly; z >= base by construction.
P1Solution solve_p1(const P1Instance& instance, const CostModel& model, double tolerance = 1e-6,
                    std::ostream* trace = nullptr);

/// L^char_t = z*_t - base_t. Rejects headroom below -1e-9; clamps the rest at 0.
std::vector<double> available_power(const std::vector<double>& z_star_kw,
                                    const std::vector<double>& base_kw);

/// Greedy earliest-deadline max-delivery used for feasibility screening and
/// infeasibility diagnostics. Returns per-EV undelivered energy (kWh).
std::vector<double> edf_shortfall(const P1Instance& instance);

} // namespace evsched
