#include "evsched/objectives.hpp"

#include <stdexcept>
#include <string>

namespace evsched {

void CostModel::validate() const {
    if (k0 < 0.0)
        throw std::invalid_argument("CostModel: k0 must be non-negative");
    if (k1 <= 0.0)
        throw std::invalid_argument("CostModel: k1 must be strictly positive");
}

CostModel cost_model_of(const Scenario& scenario) {
    CostModel m{scenario.price_k0, scenario.price_k1};
    m.validate();
    return m;
}

double slot_cost(const CostModel& model, double z_kw, double base_kw, double slot_hours) {
    if (z_kw < base_kw - 1e-9)
        throw std::invalid_argument("slot_cost: total load below base load");
    const double z = std::max(z_kw, base_kw) * slot_hours;
    const double b = base_kw * slot_hours;
    return model.k0 * (z - b) + 0.5 * model.k1 * (z * z - b * b);
}

double total_cost(const Schedule& schedule, const Scenario& scenario) {
    const CostModel model = cost_model_of(scenario);
    const double sh = scenario.grid.slot_hours();
    double j1 = 0.0;
    for (int t = 1; t <= scenario.grid.horizon_slots; ++t)
        j1 += slot_cost(model, slot_total_load(schedule, t), schedule.base_at(t), sh);
    return j1;
}

ConvenienceTerms convenience(const EvRequest& ev, const FleetState& fleet, int ev_index, int t,
                             const TimeGrid& grid) {
    if (t >= ev.deadline_slot)
        throw std::invalid_argument("convenience: EV " + std::to_string(ev.id) +
                                    " at or past deadline; missed-deadline event");
    const double soc = fleet.soc(ev_index);
    if (soc >= ev.soc_target - FleetState::kSocTolerance)
        throw std::invalid_argument("convenience: EV " + std::to_string(ev.id) + " already at target");
    ConvenienceTerms terms;
    terms.w_star = (ev.soc_target - soc) * ev.capacity_kwh / (ev.p_max_kw * grid.slot_hours());
    terms.w_remaining = static_cast<double>(ev.deadline_slot - t);
    terms.u = 1.0 / (terms.w_star * terms.w_remaining);
    return terms;
}

double total_convenience(const Schedule& schedule, const Scenario& scenario) {
    FleetState fleet(scenario);
    const TimeGrid& grid = scenario.grid;
    double j2 = 0.0;
    std::vector<double> rates(scenario.evs.size(), 0.0);
    for (int t = 1; t <= grid.horizon_slots; ++t) {
        fleet.settle_prefilled(t);
        for (size_t i = 0; i < scenario.evs.size(); ++i) {
            const EvRequest& ev = scenario.evs[i];
            const int idx = static_cast<int>(i);
            if (t < ev.arrival_slot || t >= ev.deadline_slot)
                continue;
            if (fleet.finished(idx)) {
                if (t >= *fleet.finished_slot(idx))
                    j2 += 1.0; // parked, fully charged: maximum convenience
            } else {
                j2 += convenience(ev, fleet, idx, t, grid).u;
            }
        }
        for (size_t i = 0; i < scenario.evs.size(); ++i)
            rates[i] = schedule.rate(static_cast<int>(i), t);
        fleet.apply_rates(rates, t);
    }
    return j2;
}

} // namespace evsched
