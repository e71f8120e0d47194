#pragma once

#include <iosfwd>
#include <vector>

#include "evsched/core.hpp"

namespace evsched {

/// Result of a scheduling run: the N x T charging-rate matrix plus the
/// realized per-slot total load.
struct Schedule {
    TimeGrid grid;
    std::vector<std::vector<double>> rates_kw; // [ev_index][t-1]
    std::vector<double> z_kw;                  // realized total load, [t-1]
    std::vector<double> base_kw;               // actual base load, [t-1]

    double rate(int ev_index, int t) const {
        return rates_kw[static_cast<size_t>(ev_index)][static_cast<size_t>(t) - 1];
    }
    double z_at(int t) const { return z_kw[static_cast<size_t>(t) - 1]; }
    double base_at(int t) const { return base_kw[static_cast<size_t>(t) - 1]; }

    static Schedule empty(const Scenario& scenario);
};

/// base_t plus the slot's rates summed in EV-index order. The run loop and the
/// batch cost recomputation both use this, so the two agree bit for bit.
double slot_total_load(const Schedule& schedule, int t);

/// Writes the per-slot CSV export:
///   t,z_kw,base_kw,headroom_kw,ev_<id1>,ev_<id2>,...
/// one row per slot, EV columns ordered by EV id.
void write_schedule_csv(std::ostream& out, const Schedule& schedule, const Scenario& scenario);

} // namespace evsched
