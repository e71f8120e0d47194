#include "evsched/schedule.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace evsched {

Schedule Schedule::empty(const Scenario& scenario) {
    Schedule s;
    s.grid = scenario.grid;
    s.rates_kw.assign(scenario.evs.size(),
                      std::vector<double>(static_cast<size_t>(scenario.grid.horizon_slots), 0.0));
    s.base_kw = scenario.base_load_kw;
    s.z_kw = scenario.base_load_kw;
    return s;
}

double slot_total_load(const Schedule& schedule, int t) {
    double z = schedule.base_at(t);
    for (const auto& row : schedule.rates_kw)
        z += row[static_cast<size_t>(t) - 1];
    return z;
}

void write_schedule_csv(std::ostream& out, const Schedule& schedule, const Scenario& scenario) {
    std::vector<int> order(scenario.evs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return scenario.evs[static_cast<size_t>(a)].id < scenario.evs[static_cast<size_t>(b)].id;
    });

    out << "t,z_kw,base_kw,headroom_kw";
    for (int i : order)
        out << ",ev_" << scenario.evs[static_cast<size_t>(i)].id;
    out << '\n';
    out.precision(17);
    for (int t = 1; t <= schedule.grid.horizon_slots; ++t) {
        const double z = schedule.z_at(t);
        const double base = schedule.base_at(t);
        out << t << ',' << z << ',' << base << ',' << (z - base);
        for (int i : order)
            out << ',' << schedule.rate(i, t);
        out << '\n';
    }
}

} // namespace evsched
