#include "memtp/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace memtp {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_double(row[c]);
        os << '\n';
    }
}

nlohmann::json table_json(const Table& table, const nlohmann::json& config) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
            obj[table.columns[c]] = std::isfinite(row[c]) ? nlohmann::json(row[c]) : nlohmann::json(nullptr);
        }
        rows.push_back(std::move(obj));
    }
    return {{"config", config}, {"rows", rows}};
}

Table sweep_table(const SweepResult& r) {
    Table t{{"N", "delta_truncated", "delta_full", "delta_predicted"}, {}};
    for (const SweepRow& row : r.rows)
        t.rows.push_back({static_cast<double>(row.n), row.delta_truncated, row.delta_full, row.delta_predicted});
    return t;
}

Table work_table(const WorkExtractionResult& r) {
    Table t{{"W", "N", "epsilon_N", "epsilon_TO"}, {}};
    for (const WorkRow& row : r.rows()) t.rows.push_back({row.w, static_cast<double>(row.n), row.epsilon, row.epsilon_to});
    return t;
}

Table cooling_table(const CoolingReport& r) {
    return {{"q0_engine", "q1_engine", "q0_closed_form", "q1_closed_form", "distance_engine", "distance_closed_form"},
            {{r.q_engine[0], r.q_engine[1], r.q_closed_form[0], r.q_closed_form[1], r.distance_engine,
              r.distance_closed_form}}};
}

Table inaccessible_table(const InaccessibleResult& r) {
    Table t{{"N", "delta", "bound"}, {}};
    for (const InaccessibleRow& row : r.rows) t.rows.push_back({static_cast<double>(row.n), row.delta, row.bound});
    return t;
}

Table trajectory_table(const Trajectory& tr) {
    Table t{{"step", "D_S", "D_M", "D_SM", "I_SM"}, {}};
    for (const TrajectoryRecord& rec : tr.records)
        t.rows.push_back({static_cast<double>(rec.step), rec.d_system, rec.d_memory, rec.d_joint, rec.mutual_info});
    return t;
}

nlohmann::json cone_export(const Distribution& p, const Distribution& gamma) {
    nlohmann::json out = nlohmann::json::array();
    for (const ExtremePoint& v : future_cone_vertices(p, gamma)) {
        out.push_back({{"order", v.order.order}, {"state", v.state.probs()}});
    }
    return out;
}

} // namespace memtp
