#include "rosh/trace.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace rosh {

ReductionTrace::ReductionTrace(const Instance& original) {
    original_ids_.reserve(original.job_count());
    for (const auto& job : original.jobs()) original_ids_.push_back(job.id);
    node_names_ = original.network().node_names();
    children_.resize(original.job_count());
    key_.resize(original.job_count());
    for (std::size_t j = 0; j < key_.size(); ++j) key_[j] = j;
    final_ = key_;
}

JobHandle ReductionTrace::add_aggregate(NodeIndex node, std::vector<JobHandle> parts,
                                        std::vector<Durations> part_p) {
    if (parts.size() < 2 || parts.size() != part_p.size())
        throw TraceError("aggregation needs at least two parts with durations");
    const JobHandle h = children_.size();
    std::size_t k = key_.at(parts.front());
    for (JobHandle c : parts) k = std::min(k, key_.at(c));
    children_.push_back(std::move(parts));
    key_.push_back(k);
    steps_.emplace_back(Aggregate{node, h, std::move(part_p)});
    return h;
}

void ReductionTrace::add_contract(JobHandle job, NodeIndex from, NodeIndex to, Time tau,
                                  Durations before) {
    steps_.emplace_back(Contract{job, from, to, tau, before});
}

std::string ReductionTrace::job_id(JobHandle h) const {
    std::string out;
    std::vector<JobHandle> stack{h};
    while (!stack.empty()) {
        const JobHandle cur = stack.back();
        stack.pop_back();
        const auto& kids = children_.at(cur);
        if (kids.empty()) {
            if (!out.empty()) out += ',';
            out += original_ids_.at(cur);
            continue;
        }
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return out;
}

std::vector<std::string> ReductionTrace::final_ids() const {
    std::vector<std::string> out;
    out.reserve(final_.size());
    for (JobHandle h : final_) out.push_back(job_id(h));
    return out;
}

StepRecord ReductionTrace::record(std::size_t step) const {
    const auto& s = steps_.at(step);
    if (const auto* agg = std::get_if<Aggregate>(&s)) {
        AggregateRecord rec;
        rec.node = node_names_.at(agg->node);
        for (JobHandle c : children_.at(agg->result)) rec.parts.push_back(job_id(c));
        rec.part_p = agg->part_p;
        rec.result = job_id(agg->result);
        for (const auto& p : agg->part_p) {
            rec.p[0] += p[0];
            rec.p[1] += p[1];
        }
        return rec;
    }
    const auto& con = std::get<Contract>(s);
    ContractRecord rec;
    rec.from = node_names_.at(con.from);
    rec.to = node_names_.at(con.to);
    rec.tau = con.tau;
    rec.job = job_id(con.job);
    rec.before = con.before;
    rec.after = {con.before[0] + 2 * con.tau, con.before[1] + 2 * con.tau};
    return rec;
}

std::vector<StepRecord> ReductionTrace::records() const {
    std::vector<StepRecord> out;
    out.reserve(steps_.size());
    for (std::size_t k = 0; k < steps_.size(); ++k) out.push_back(record(k));
    return out;
}

ReductionTrace ReductionTrace::from_records(const Instance& original,
                                            const std::vector<StepRecord>& records,
                                            const std::vector<std::string>& final_ids) {
    ReductionTrace trace(original);
    const auto& net = original.network();
    std::unordered_map<std::string, JobHandle> live;
    for (JobHandle h = 0; h < original.job_count(); ++h) live.emplace(original.job(h).id, h);

    auto take = [&](const std::string& id, std::size_t step) {
        auto it = live.find(id);
        if (it == live.end())
            throw TraceError("step " + std::to_string(step) + ": unknown job '" + id + "'");
        return it->second;
    };
    auto node = [&](const std::string& name, std::size_t step) {
        auto v = net.find(name);
        if (!v) throw TraceError("step " + std::to_string(step) + ": unknown node '" + name + "'");
        return *v;
    };

    for (std::size_t k = 0; k < records.size(); ++k) {
        if (const auto* agg = std::get_if<AggregateRecord>(&records[k])) {
            std::vector<JobHandle> parts;
            for (const auto& id : agg->parts) {
                parts.push_back(take(id, k));
                live.erase(id);
            }
            const JobHandle h = trace.add_aggregate(node(agg->node, k), parts, agg->part_p);
            const std::string id = trace.job_id(h);
            if (id != agg->result)
                throw TraceError("step " + std::to_string(k) + ": aggregated id '" + agg->result +
                                 "' does not match its parts");
            live.emplace(id, h);
        } else {
            const auto& con = std::get<ContractRecord>(records[k]);
            trace.add_contract(take(con.job, k), node(con.from, k), node(con.to, k), con.tau,
                               con.before);
        }
    }
    std::vector<JobHandle> fin;
    for (const auto& id : final_ids) fin.push_back(take(id, records.size()));
    trace.set_final(std::move(fin));
    return trace;
}

std::vector<ScheduledOperation> ReductionTrace::expand_operations(
    const std::vector<ScheduledOperation>& ops) const {
    const std::size_t handles = children_.size();
    struct Interval {
        Time start = 0;
        Time end = 0;
        bool set = false;
    };
    std::vector<std::array<Interval, 2>> iv(handles);

    std::unordered_map<std::string, JobHandle> by_id;
    for (JobHandle h : final_) by_id.emplace(job_id(h), h);
    for (const auto& op : ops) {
        auto it = by_id.find(op.job);
        if (it == by_id.end()) throw TraceError("schedule mentions job '" + op.job + "' unknown to the trace");
        auto& cell = iv[it->second][slot(op.machine)];
        if (cell.set) throw TraceError("job '" + op.job + "' is scheduled twice on one machine");
        cell = {op.start, op.end, true};
    }

    for (auto step = steps_.rbegin(); step != steps_.rend(); ++step) {
        if (const auto* agg = std::get_if<Aggregate>(&*step)) {
            const auto& parts = children_[agg->result];
            for (std::size_t s = 0; s < 2; ++s) {
                auto& whole = iv[agg->result][s];
                if (!whole.set) throw TraceError("aggregated job '" + job_id(agg->result) + "' is not scheduled");
                Time cursor = whole.start;
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    iv[parts[i]][s] = {cursor, cursor + agg->part_p[i][s], true};
                    cursor += agg->part_p[i][s];
                }
                if (cursor != whole.end)
                    throw TraceError("interval of '" + job_id(agg->result) + "' has the wrong length");
                whole.set = false;
            }
        } else {
            const auto& con = std::get<Contract>(*step);
            for (std::size_t s = 0; s < 2; ++s) {
                auto& cell = iv[con.job][s];
                if (!cell.set) throw TraceError("contracted job '" + job_id(con.job) + "' is not scheduled");
                cell.start += con.tau;
                cell.end -= con.tau;
                if (cell.end - cell.start != con.before[s])
                    throw TraceError("interval of '" + job_id(con.job) + "' has the wrong length");
            }
        }
    }

    std::vector<ScheduledOperation> out;
    out.reserve(2 * original_ids_.size());
    for (JobHandle h = 0; h < original_ids_.size(); ++h) {
        for (std::size_t s = 0; s < 2; ++s) {
            const auto& cell = iv[h][s];
            if (!cell.set) throw TraceError("original job '" + original_ids_[h] + "' is not covered");
            out.push_back({original_ids_[h], machine_of_slot(s), cell.start, cell.end});
        }
    }
    return out;
}

}  // namespace rosh
