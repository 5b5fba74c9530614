#pragma once

// JSON documents for instances, schedules, reduction traces and solve reports.

#include <string>
#include <string_view>

#include <json.hpp>

#include "rosh/classify.hpp"
#include "rosh/schedulers.hpp"

namespace rosh {

using Json = nlohmann::ordered_json;

// {"depot", "nodes": [...], "edges": [{"u","v","tau"}], "jobs": [{"id","node","p":[a,b]}]}
Instance instance_from_json(const Json& doc);
Json instance_to_json(const Instance& inst);
Instance parse_instance(std::string_view text);
std::string write_instance(const Instance& inst);

// {"makespan", "lower_bound", "status", "operations": [{"job","machine","start","end","node"}]}
Json schedule_to_json(const Instance& inst, const Schedule& sched);
// Reads the operations; makespan and release times are recomputed.
Schedule schedule_from_json(const Instance& inst, const Json& doc);
Schedule parse_schedule(const Instance& inst, std::string_view text);

Json trace_to_json(const ReductionTrace& trace);
ReductionTrace trace_from_json(const Instance& original, const Json& doc);

Json report_to_json(const Instance& inst, const SolveReport& report);
Json verdict_to_json(const Verdict& verdict);
Json theorem5_to_json(const Theorem5Verdict& verdict);

Json error_to_json(const std::string& kind, const std::string& message);

// Parses JSON text; syntax errors become InputError.
Json parse_json(std::string_view text);
std::string read_file(const std::string& path);

}  // namespace rosh
