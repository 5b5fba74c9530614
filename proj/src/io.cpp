#include "rosh/io.hpp"

#include <fstream>
#include <sstream>

namespace rosh {

namespace {

const Json& field(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) throw InputError(path + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError(path + (path.empty() ? "" : ".") + key + ": missing field");
    return *it;
}

std::string sub(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }
std::string sub(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

Time integer(const Json& v, const std::string& path, bool nonnegative = true) {
    if (!v.is_number_integer()) throw InputError(path + ": expected an integer");
    const Time x = v.get<Time>();
    if (nonnegative && x < 0) throw InputError(path + ": must be nonnegative");
    return x;
}

std::string text(const Json& v, const std::string& path) {
    if (!v.is_string()) throw InputError(path + ": expected a string");
    return v.get<std::string>();
}

const Json& array(const Json& v, const std::string& path) {
    if (!v.is_array()) throw InputError(path + ": expected an array");
    return v;
}

Durations pair_of(const Json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) throw InputError(path + ": expected [a, b]");
    return {integer(v[0], path + "[0]"), integer(v[1], path + "[1]")};
}

Json durations(const Durations& p) { return Json::array({p[0], p[1]}); }

Json operations_json(const Instance& inst, const Schedule& sched) {
    Json ops = Json::array();
    for (const auto& op : sched.operations) {
        const JobIndex j = inst.job_index(op.job);
        ops.push_back({{"job", op.job},
                       {"machine", static_cast<int>(op.machine)},
                       {"start", op.start},
                       {"end", op.end},
                       {"node", inst.network().name(inst.job(j).node)}});
    }
    return ops;
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Instance instance_from_json(const Json& doc) {
    const std::string depot = text(field(doc, "depot", ""), "depot");
    std::vector<std::string> nodes;
    const auto& node_list = array(field(doc, "nodes", ""), "nodes");
    for (std::size_t k = 0; k < node_list.size(); ++k) nodes.push_back(text(node_list[k], sub("nodes", k)));

    std::vector<EdgeSpec> edges;
    const auto& edge_list = array(field(doc, "edges", ""), "edges");
    for (std::size_t k = 0; k < edge_list.size(); ++k) {
        const std::string path = sub("edges", k);
        const auto& e = edge_list[k];
        edges.push_back({text(field(e, "u", path), sub(path, "u")), text(field(e, "v", path), sub(path, "v")),
                         integer(field(e, "tau", path), sub(path, "tau"))});
    }
    TreeNetwork net(std::move(nodes), std::move(edges), depot);

    std::vector<Job> jobs;
    const auto& job_list = array(field(doc, "jobs", ""), "jobs");
    for (std::size_t k = 0; k < job_list.size(); ++k) {
        const std::string path = sub("jobs", k);
        const auto& j = job_list[k];
        const std::string node = text(field(j, "node", path), sub(path, "node"));
        const auto v = net.find(node);
        if (!v) throw InputError(sub(path, "node") + ": unknown node '" + node + "'");
        jobs.push_back(Job{text(field(j, "id", path), sub(path, "id")), *v, pair_of(field(j, "p", path), sub(path, "p"))});
    }
    return Instance(std::move(net), std::move(jobs));
}

Json instance_to_json(const Instance& inst) {
    const auto& net = inst.network();
    Json doc;
    doc["depot"] = net.name(net.depot());
    doc["nodes"] = net.node_names();
    doc["edges"] = Json::array();
    for (const auto& link : net.links())
        doc["edges"].push_back({{"u", net.name(link.u)}, {"v", net.name(link.v)}, {"tau", link.tau}});
    doc["jobs"] = Json::array();
    for (const auto& job : inst.jobs())
        doc["jobs"].push_back({{"id", job.id}, {"node", net.name(job.node)}, {"p", durations(job.p)}});
    return doc;
}

Instance parse_instance(std::string_view text) { return instance_from_json(parse_json(text)); }

std::string write_instance(const Instance& inst) { return instance_to_json(inst).dump(2) + "\n"; }

Json schedule_to_json(const Instance& inst, const Schedule& sched) {
    const Time R = lower_bound(inst);
    Json doc;
    doc["makespan"] = sched.makespan;
    doc["lower_bound"] = R;
    doc["status"] = sched.makespan == R ? "Normal" : "Abnormal";
    doc["release"] = durations(sched.release);
    doc["operations"] = operations_json(inst, sched);
    return doc;
}

Schedule schedule_from_json(const Instance& inst, const Json& doc) {
    Schedule sched;
    const auto& ops = array(field(doc, "operations", ""), "operations");
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const std::string path = sub("operations", k);
        const auto& op = ops[k];
        const Time machine = integer(field(op, "machine", path), sub(path, "machine"));
        if (machine != 1 && machine != 2) throw InputError(sub(path, "machine") + ": must be 1 or 2");
        sched.operations.push_back({text(field(op, "job", path), sub(path, "job")),
                                    machine == 1 ? Machine::first : Machine::second,
                                    integer(field(op, "start", path), sub(path, "start"), false),
                                    integer(field(op, "end", path), sub(path, "end"), false)});
        if (!inst.find_job(sched.operations.back().job))
            throw InputError(sub(path, "job") + ": unknown job '" + sched.operations.back().job + "'");
    }
    update_release(inst, sched);
    return sched;
}

Schedule parse_schedule(const Instance& inst, std::string_view text) {
    return schedule_from_json(inst, parse_json(text));
}

Json trace_to_json(const ReductionTrace& trace) {
    Json steps = Json::array();
    for (const auto& rec : trace.records()) {
        if (const auto* agg = std::get_if<AggregateRecord>(&rec)) {
            Json parts = Json::array();
            for (std::size_t i = 0; i < agg->parts.size(); ++i)
                parts.push_back({{"id", agg->parts[i]}, {"p", durations(agg->part_p[i])}});
            steps.push_back({{"op", "aggregate"},
                             {"node", agg->node},
                             {"parts", std::move(parts)},
                             {"new_id", agg->result},
                             {"p", durations(agg->p)}});
        } else {
            const auto& con = std::get<ContractRecord>(rec);
            steps.push_back({{"op", "contract"},
                             {"from", con.from},
                             {"to", con.to},
                             {"tau", con.tau},
                             {"job", con.job},
                             {"p_before", durations(con.before)},
                             {"p_after", durations(con.after)}});
        }
    }
    return {{"steps", std::move(steps)}, {"final", trace.final_ids()}};
}

ReductionTrace trace_from_json(const Instance& original, const Json& doc) {
    std::vector<StepRecord> records;
    const auto& steps = array(field(doc, "steps", "trace"), "trace.steps");
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const std::string path = sub("trace.steps", k);
        const auto& s = steps[k];
        const std::string op = text(field(s, "op", path), sub(path, "op"));
        if (op == "aggregate") {
            AggregateRecord rec;
            rec.node = text(field(s, "node", path), sub(path, "node"));
            const auto& parts = array(field(s, "parts", path), sub(path, "parts"));
            for (std::size_t i = 0; i < parts.size(); ++i) {
                const std::string pp = sub(sub(path, "parts"), i);
                rec.parts.push_back(text(field(parts[i], "id", pp), sub(pp, "id")));
                rec.part_p.push_back(pair_of(field(parts[i], "p", pp), sub(pp, "p")));
            }
            rec.result = text(field(s, "new_id", path), sub(path, "new_id"));
            rec.p = pair_of(field(s, "p", path), sub(path, "p"));
            records.emplace_back(std::move(rec));
        } else if (op == "contract") {
            ContractRecord rec;
            rec.from = text(field(s, "from", path), sub(path, "from"));
            rec.to = text(field(s, "to", path), sub(path, "to"));
            rec.tau = integer(field(s, "tau", path), sub(path, "tau"));
            rec.job = text(field(s, "job", path), sub(path, "job"));
            rec.before = pair_of(field(s, "p_before", path), sub(path, "p_before"));
            rec.after = pair_of(field(s, "p_after", path), sub(path, "p_after"));
            records.emplace_back(std::move(rec));
        } else {
            throw InputError(sub(path, "op") + ": unknown step '" + op + "'");
        }
    }
    std::vector<std::string> final_ids;
    const auto& fin = array(field(doc, "final", "trace"), "trace.final");
    for (std::size_t k = 0; k < fin.size(); ++k) final_ids.push_back(text(fin[k], sub("trace.final", k)));
    return ReductionTrace::from_records(original, records, final_ids);
}

Json report_to_json(const Instance& inst, const SolveReport& report) {
    Json doc;
    doc["makespan"] = report.makespan;
    doc["lower_bound"] = report.lower_bound;
    doc["status"] = to_string(report.status);
    doc["outcome"] = to_string(report.outcome);
    doc["scheduler"] = report.scheduler_used;
    doc["gap"] = report.gap;
    doc["release"] = durations(report.schedule.release);
    doc["operations"] = operations_json(inst, report.schedule);
    return doc;
}

Json verdict_to_json(const Verdict& verdict) {
    Json violations = Json::array();
    for (const auto& v : verdict.violations)
        violations.push_back({{"kind", to_string(v.kind)}, {"message", v.message}});
    return {{"feasible", verdict.feasible},
            {"makespan", verdict.makespan},
            {"lower_bound", verdict.lower_bound},
            {"normal", verdict.normal},
            {"release", durations(verdict.release)},
            {"violations", std::move(violations)}};
}

Json theorem5_to_json(const Theorem5Verdict& verdict) {
    Json doc;
    doc["condition1"] = verdict.condition1;
    doc["condition2"] = verdict.condition2;
    doc["condition3"] = verdict.condition3 ? Json::array({verdict.condition3->first, verdict.condition3->second})
                                           : Json(nullptr);
    doc["condition4"] = verdict.condition4 ? Json(*verdict.condition4) : Json(nullptr);
    doc["any"] = verdict.any;
    doc["partition_deviation"] = verdict.partition_deviation;
    return doc;
}

Json error_to_json(const std::string& kind, const std::string& message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace rosh
