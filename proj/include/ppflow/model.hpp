#pragma once

#include "ppflow/errors.hpp"
#include "ppflow/rational.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace ppflow {

using JobId = std::int64_t;

/// A job is processed first on machine M1 for `a` time units, then on M2 for
/// `b` units. It seizes `a` units of storage when it starts on M1 and releases
/// them when it completes on M2; the storage requirement is the first-stage
/// duration by definition and is never stored separately.
struct Job {
    JobId id = 0;
    TimeValue a;
    TimeValue b;
};

/// An immutable problem instance: jobs plus the storage capacity omega.
///
/// Construction rejects instances where some job alone exceeds the capacity
/// (no feasible schedule exists) with a CapacityError, and malformed job
/// lists (duplicate ids, negative durations) with a PreconditionError.
class Instance {
public:
    Instance() = default;
    Instance(std::vector<Job> jobs, TimeValue omega);

    const std::vector<Job>& jobs() const { return jobs_; }
    const TimeValue& omega() const { return omega_; }
    std::size_t size() const { return jobs_.size(); }
    bool empty() const { return jobs_.empty(); }

    const Job* find(JobId id) const;
    const Job& job(JobId id) const; // throws PreconditionError on unknown id

    const TimeValue& a_max() const { return a_max_; }
    const TimeValue& b_max() const { return b_max_; }
    const TimeValue& total_a() const { return total_a_; }
    const TimeValue& total_b() const { return total_b_; }

private:
    std::vector<Job> jobs_;
    TimeValue omega_;
    std::unordered_map<JobId, std::size_t> index_;
    TimeValue a_max_, b_max_, total_a_, total_b_;
};

/// Start times of one job on both machines. Completion times are derived:
/// c1 = s1 + a, c2 = s2 + b.
struct JobTiming {
    JobId id = 0;
    TimeValue s1;
    TimeValue s2;
};

/// A (permutation or not) schedule: start times per job, in placement order.
struct Schedule {
    std::vector<JobTiming> starts;

    std::size_t size() const { return starts.size(); }
    bool empty() const { return starts.empty(); }
};

enum class ViolationKind { machine_overlap, precedence, buffer_capacity };

struct Violation {
    ViolationKind kind;
    std::vector<JobId> jobs;
    TimeValue at;     // time at which the violation occurs
    TimeValue amount; // overlap length, precedence gap, or buffer excess
    int machine = 0;  // 1 or 2 for machine_overlap, 0 otherwise
};

struct ValidationReport {
    bool feasible = true;
    std::vector<Violation> violations;
    TimeValue peak_occupancy;
};

const char* violation_kind_name(ViolationKind kind);

/// Right-continuous step function of buffer occupancy over time.
/// breakpoints[i] = (t, v) means occupancy is v on [t, next breakpoint);
/// occupancy is 0 before the first breakpoint. The last breakpoint always
/// returns to 0.
struct BufferProfile {
    std::vector<std::pair<TimeValue, TimeValue>> breakpoints;

    TimeValue peak() const;
    /// Exact integral of occupancy over time; equals sum of a_j*(c2_j - s1_j).
    TimeValue integral() const;
};

/// Checks (a) no overlap on either machine, (b) per-job precedence
/// c1 <= s2, and (c) buffer occupancy <= omega at every point, in a single
/// O(n log n) event sweep. A job occupies a_j units on the half-open
/// interval [s1_j, c2_j): at a shared instant releases take effect before
/// seizures. Throws PreconditionError when the schedule does not assign
/// starts to exactly the instance's jobs or contains a negative start.
ValidationReport validate_schedule(const Instance& instance, const Schedule& schedule);

/// Exact occupancy step function for a well-formed schedule. Its maximum
/// equals the peak reported by validate_schedule.
BufferProfile buffer_profile(const Instance& instance, const Schedule& schedule);

/// Greedy left-shifted timing for a fixed processing order shared by both
/// machines: each job starts on M1 at the earliest time >= its predecessor's
/// completion at which it fits in the buffer given the already-fixed earlier
/// completions, and on M2 at max(own c1, predecessor's c2). Deterministic;
/// the result always passes validate_schedule.
Schedule earliest_start_timing(const Instance& instance, const std::vector<JobId>& order);

/// Max over jobs of s2 + b; 0 for an empty schedule.
TimeValue makespan(const Instance& instance, const Schedule& schedule);

} // namespace ppflow
