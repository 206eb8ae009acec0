#pragma once

#include <string>

#include "elab/series.hpp"

namespace elab {

struct EquilibriumPanel;  // market.hpp

// Series text format: either a two-column table "timestamp,value" (header
// required, ISO-8601 hour timestamps) or a single "value" column (header
// optional). Parse failures carry the 1-based row number.
TimeSeries read_series(const std::string& path, const std::string& label = "");
void write_series(const TimeSeries& series, const std::string& path);

// Panel table with header "timestamp,wind_ms,price_eur_mwh,demand_mwh".
EquilibriumPanel read_panel(const std::string& path);
void write_panel(const EquilibriumPanel& panel, const std::string& path);

}  // namespace elab
