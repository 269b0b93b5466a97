#include "ppflow/model.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace ppflow {

Instance::Instance(std::vector<Job> jobs, TimeValue omega)
    : jobs_(std::move(jobs)), omega_(std::move(omega)) {
    index_.reserve(jobs_.size());
    for (std::size_t i = 0; i < jobs_.size(); ++i) {
        const Job& j = jobs_[i];
        if (j.a.is_negative() || j.b.is_negative()) {
            throw PreconditionError("job " + std::to_string(j.id) + " has a negative duration");
        }
        if (!index_.emplace(j.id, i).second) {
            throw PreconditionError("duplicate job id " + std::to_string(j.id));
        }
        if (j.a > a_max_) a_max_ = j.a;
        if (j.b > b_max_) b_max_ = j.b;
        total_a_ += j.a;
        total_b_ += j.b;
    }
    if (a_max_ > omega_) {
        throw CapacityError("job storage requirement " + a_max_.str() +
                            " exceeds capacity " + omega_.str());
    }
}

const Job* Instance::find(JobId id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &jobs_[it->second];
}

const Job& Instance::job(JobId id) const {
    const Job* j = find(id);
    if (!j) throw PreconditionError("unknown job id " + std::to_string(id));
    return *j;
}

const char* violation_kind_name(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::machine_overlap: return "machine-overlap";
    case ViolationKind::precedence: return "precedence";
    case ViolationKind::buffer_capacity: return "buffer-capacity";
    }
    return "?";
}

TimeValue BufferProfile::peak() const {
    TimeValue p;
    for (const auto& [t, v] : breakpoints) {
        if (v > p) p = v;
    }
    return p;
}

TimeValue BufferProfile::integral() const {
    TimeValue total;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        total += breakpoints[i].second * (breakpoints[i + 1].first - breakpoints[i].first);
    }
    return total;
}

namespace {

struct TimedJob {
    const Job* job;
    TimeValue s1, c1, s2, c2;
};

std::vector<TimedJob> resolve(const Instance& instance, const Schedule& schedule) {
    if (schedule.starts.size() != instance.size()) {
        throw PreconditionError("schedule covers " + std::to_string(schedule.starts.size()) +
                                " jobs, instance has " + std::to_string(instance.size()));
    }
    std::vector<TimedJob> out;
    out.reserve(schedule.starts.size());
    std::unordered_map<JobId, bool> seen;
    for (const JobTiming& t : schedule.starts) {
        const Job* j = instance.find(t.id);
        if (!j) throw PreconditionError("schedule references unknown job id " + std::to_string(t.id));
        if (!seen.emplace(t.id, true).second) {
            throw PreconditionError("schedule assigns job id " + std::to_string(t.id) + " twice");
        }
        if (t.s1.is_negative() || t.s2.is_negative()) {
            throw PreconditionError("negative start time for job id " + std::to_string(t.id));
        }
        out.push_back({j, t.s1, t.s1 + j->a, t.s2, t.s2 + j->b});
    }
    return out;
}

// Adjacent-pair overlap scan over half-open intervals sorted by (start, end).
// Zero-length intervals occupy no time and never overlap anything.
void check_machine(const std::vector<TimedJob>& jobs, int machine,
                   std::vector<Violation>& violations) {
    struct Interval {
        TimeValue start, end;
        JobId id;
    };
    std::vector<Interval> iv;
    iv.reserve(jobs.size());
    for (const TimedJob& t : jobs) {
        const TimeValue& s = machine == 1 ? t.s1 : t.s2;
        const TimeValue& e = machine == 1 ? t.c1 : t.c2;
        if (s < e) iv.push_back({s, e, t.job->id});
    }
    std::sort(iv.begin(), iv.end(), [](const Interval& x, const Interval& y) {
        if (x.start != y.start) return x.start < y.start;
        if (x.end != y.end) return x.end < y.end;
        return x.id < y.id;
    });
    TimeValue max_end;
    JobId max_end_id = 0;
    bool have_prev = false;
    for (const Interval& cur : iv) {
        if (have_prev && cur.start < max_end) {
            violations.push_back({ViolationKind::machine_overlap,
                                  {max_end_id, cur.id},
                                  cur.start,
                                  ppflow::min(max_end, cur.end) - cur.start,
                                  machine});
        }
        if (!have_prev || cur.end > max_end) {
            max_end = cur.end;
            max_end_id = cur.id;
        }
        have_prev = true;
    }
}

struct BufferEvent {
    TimeValue time;
    bool release; // releases sort before seizures at the same instant
    const TimedJob* job;
};

std::vector<BufferEvent> buffer_events(const std::vector<TimedJob>& jobs) {
    std::vector<BufferEvent> ev;
    ev.reserve(jobs.size() * 2);
    for (const TimedJob& t : jobs) {
        if (t.job->a.is_zero()) continue; // occupies nothing
        ev.push_back({t.s1, false, &t});
        ev.push_back({t.c2, true, &t});
    }
    std::sort(ev.begin(), ev.end(), [](const BufferEvent& x, const BufferEvent& y) {
        if (x.time != y.time) return x.time < y.time;
        if (x.release != y.release) return x.release;
        return x.job->job->id < y.job->job->id;
    });
    return ev;
}

} // namespace

ValidationReport validate_schedule(const Instance& instance, const Schedule& schedule) {
    std::vector<TimedJob> jobs = resolve(instance, schedule);
    ValidationReport report;

    check_machine(jobs, 1, report.violations);
    check_machine(jobs, 2, report.violations);

    for (const TimedJob& t : jobs) {
        if (t.c1 > t.s2) {
            report.violations.push_back({ViolationKind::precedence,
                                         {t.job->id},
                                         t.s2,
                                         t.c1 - t.s2,
                                         0});
        }
    }

    // Buffer sweep; occupancy is evaluated once per distinct instant, after
    // all releases and seizures at that instant have been applied.
    std::vector<BufferEvent> events = buffer_events(jobs);
    TimeValue occupancy;
    bool violating = false;
    std::size_t i = 0;
    while (i < events.size()) {
        const TimeValue now = events[i].time;
        while (i < events.size() && events[i].time == now) {
            const BufferEvent& e = events[i];
            if (e.release) {
                occupancy -= e.job->job->a;
            } else {
                occupancy += e.job->job->a;
            }
            ++i;
        }
        if (occupancy > report.peak_occupancy) report.peak_occupancy = occupancy;
        if (occupancy > instance.omega()) {
            if (!violating) {
                Violation v{ViolationKind::buffer_capacity, {}, now,
                            occupancy - instance.omega(), 0};
                for (const TimedJob& t : jobs) {
                    if (!t.job->a.is_zero() && t.s1 <= now && now < t.c2) {
                        v.jobs.push_back(t.job->id);
                    }
                }
                std::sort(v.jobs.begin(), v.jobs.end());
                report.violations.push_back(std::move(v));
            }
            violating = true;
        } else {
            violating = false;
        }
    }

    report.feasible = report.violations.empty();
    return report;
}

BufferProfile buffer_profile(const Instance& instance, const Schedule& schedule) {
    std::vector<TimedJob> jobs = resolve(instance, schedule);
    std::vector<BufferEvent> events = buffer_events(jobs);

    BufferProfile profile;
    TimeValue occupancy;
    std::size_t i = 0;
    while (i < events.size()) {
        const TimeValue now = events[i].time;
        while (i < events.size() && events[i].time == now) {
            if (events[i].release) {
                occupancy -= events[i].job->job->a;
            } else {
                occupancy += events[i].job->job->a;
            }
            ++i;
        }
        if (profile.breakpoints.empty() || profile.breakpoints.back().second != occupancy) {
            profile.breakpoints.emplace_back(now, occupancy);
        }
    }
    return profile;
}

Schedule earliest_start_timing(const Instance& instance, const std::vector<JobId>& order) {
    if (order.size() != instance.size()) {
        throw PreconditionError("order must be a permutation of all jobs");
    }
    struct Release {
        TimeValue c2;
        TimeValue a;
        bool operator>(const Release& o) const { return c2 > o.c2; }
    };
    std::priority_queue<Release, std::vector<Release>, std::greater<Release>> active;

    Schedule schedule;
    schedule.starts.reserve(order.size());
    std::unordered_map<JobId, bool> seen;
    TimeValue prev_c1, prev_c2;
    TimeValue occupancy; // of jobs in `active` not yet released at the cursor

    for (JobId id : order) {
        const Job& j = instance.job(id);
        if (!seen.emplace(id, true).second) {
            throw PreconditionError("order repeats job id " + std::to_string(id));
        }

        TimeValue t = prev_c1;
        auto drop_released = [&](const TimeValue& at) {
            while (!active.empty() && active.top().c2 <= at) {
                occupancy -= active.top().a;
                active.pop();
            }
        };
        drop_released(t);
        while (occupancy + j.a > instance.omega()) {
            if (active.empty()) {
                throw DefectError("job cannot fit an empty buffer"); // a <= omega is guaranteed
            }
            t = active.top().c2;
            drop_released(t);
        }

        TimeValue s1 = t;
        TimeValue c1 = s1 + j.a;
        TimeValue s2 = ppflow::max(c1, prev_c2);
        TimeValue c2 = s2 + j.b;
        if (!j.a.is_zero()) {
            occupancy += j.a;
            active.push({c2, j.a});
        }
        schedule.starts.push_back({id, s1, s2});
        prev_c1 = c1;
        prev_c2 = c2;
    }
    return schedule;
}

TimeValue makespan(const Instance& instance, const Schedule& schedule) {
    TimeValue best;
    for (const JobTiming& t : schedule.starts) {
        TimeValue c2 = t.s2 + instance.job(t.id).b;
        if (c2 > best) best = c2;
    }
    return best;
}

} // namespace ppflow
