#include "gsaudit/energy_table.hpp"

#include <cmath>
#include <sstream>

#include "gsaudit/errors.hpp"

namespace gsaudit {

void EnergyTable::insert(int n, double energy, std::string label) {
  if (n < 2) throw ValidationError("table rows need N >= 2, got " + std::to_string(n));
  if (std::isnan(energy)) throw ValidationError("table energy for N=" + std::to_string(n) + " is NaN");

  auto [it, fresh] = rows_.try_emplace(n, TableEntry{energy, std::move(label)});
  if (fresh) return;

  std::ostringstream msg;
  msg.precision(15);
  if (energy < it->second.energy) {
    msg << "duplicate N=" << n << ": kept " << energy << ", discarded " << it->second.energy;
    it->second = TableEntry{energy, std::move(label)};
  } else {
    msg << "duplicate N=" << n << ": kept " << it->second.energy << ", discarded " << energy;
  }
  warnings_.push_back(msg.str());
}

const TableEntry& EnergyTable::at(int n) const {
  auto it = rows_.find(n);
  if (it == rows_.end()) throw LookupError("N=" + std::to_string(n) + " is not in the table");
  return it->second;
}

}  // namespace gsaudit
