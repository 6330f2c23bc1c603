/**
 * @file io.hpp
 * @brief CSV and JSON export of scenario tables.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "memtp/cones.hpp"
#include "memtp/experiments.hpp"

namespace memtp {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// 17 significant digits; NaN and infinities as nan / inf / -inf.
std::string format_double(double v);

/// Header row then one line per row, comma separated.
void write_csv(std::ostream& os, const Table& table);

/// {"config": config, "rows": [{column: value, ...}, ...]}. Non-finite
/// values become null.
nlohmann::json table_json(const Table& table, const nlohmann::json& config);

Table sweep_table(const SweepResult& r);
Table work_table(const WorkExtractionResult& r);
Table cooling_table(const CoolingReport& r);
Table inaccessible_table(const InaccessibleResult& r);
/// Columns step, D_S, D_M, D_SM, I_SM.
Table trajectory_table(const Trajectory& t);

/// [{"order": [...], "state": [...]}, ...] for the Lemma-5 vertices of p.
nlohmann::json cone_export(const Distribution& p, const Distribution& gamma);

} // namespace memtp
