#pragma once

#include "ppflow/extend.hpp"

#include <vector>

namespace ppflow {

/// Three-way split of the extended job set, each class ordered as induced by
/// the extended Johnson order:
///   pi0: X jobs plus the L1 jobs with a <= a_max/2,
///   pi1: the L1 jobs with a > a_max/2,
///   pi2: the L2 jobs plus Y jobs.
/// Every job in pi0/pi1 has delta = b - a >= 0 and every job in pi2 has
/// delta <= 0.
struct ClassPartition {
    std::vector<Job> pi0, pi1, pi2;
    /// mu[k] = sum of delta over pi0[k..]; mu[pi0.size()] = 0.
    std::vector<TimeValue> mu;
    std::size_t x_count = 0; // pi0[0..x_count) are the X jobs
    std::size_t y_start = 0; // pi2[y_start..] are the Y jobs
};

/// Exact test of 3.5*a_max + max{0.5*a_max, b_max} <= omega.
bool condition5_holds(const TimeValue& a_max, const TimeValue& b_max, const TimeValue& omega);
bool check_condition5(const Instance& instance);

/// Exact test of omega >= 4.5*max{a_max, b_max}; implies condition 5.
bool corollary_holds(const TimeValue& a_max, const TimeValue& b_max, const TimeValue& omega);
bool check_corollary(const Instance& instance);

ClassPartition classify(const ExtendedInstance& extended);

/// One interleaving run over the extended job set: the produced permutation,
/// the start times of every extended job, and the trace of the running
/// balance R_k = (placed second-stage work) - (placed first-stage work)
/// after each placement (r_trace[0] = 0, r_trace[n'] = 0).
struct InterleaveRun {
    std::vector<JobId> pi;
    Schedule schedule;
    std::vector<TimeValue> r_trace;
    /// Batch placeholders emitted by the aggregated variant (a = 0,
    /// b = batch length * per-X duration, negative ids); empty for the
    /// reference variant. They stand in for runs of consecutive X jobs and
    /// never appear in user-facing output.
    std::vector<Job> synthetic_jobs;
};

/// Literal two-loop interleaving: while unplaced pi0 jobs remain, place
/// pi0's next job when (R < 2*a_max and R + delta(next pi2) + mu(next pi0)
/// < a_max) or R < 1.5*a_max, else place pi2's next job; afterwards place
/// pi1's next job while R < 2*a_max and pi1 is not exhausted, else pi2's.
/// Every placed job starts exactly at the accumulated loads (zero idle on
/// both machines), so the makespan equals the Johnson bound.
InterleaveRun run_reference(const ExtendedInstance& extended, const ClassPartition& partition);

/// Same placement decisions as run_reference, but runs of consecutive X
/// placements collapse into one synthetic job each (closed-form batch
/// length) and runs of consecutive Y placements update the accumulated
/// loads in bulk without emitting per-job start times. After extract_real
/// the result is identical, start time for start time, to the reference
/// run's. O(n) placements after the O(n log n) Johnson sort.
InterleaveRun run_aggregated(const ExtendedInstance& extended, const ClassPartition& partition);

/// Drops auxiliary and synthetic entries; the surviving start times are
/// unchanged and form a schedule of the original instance.
Schedule extract_real(const ExtendedInstance& extended, const Schedule& schedule);

enum class SolveVariant { aggregated, reference };
enum class SolvePath { aggregated, reference, all_a_zero, all_b_zero };

const char* solve_path_name(SolvePath path);

struct SolveResult {
    Schedule schedule; // over the original jobs
    TimeValue makespan;
    TimeValue johnson_bound;
    SolvePath path;
    /// R trace of the interleaving run; empty on the degenerate paths.
    std::vector<TimeValue> r_trace;
};

/// End-to-end solver: johnson -> build_extension -> classify -> interleave
/// -> extract_real. Requires condition 5 (PreconditionError otherwise),
/// except on degenerate instances (a_max = 0 or b_max = 0) where a trivial
/// schedule is optimal for any capacity. The returned schedule is feasible
/// and its makespan equals the Johnson bound, hence optimal.
SolveResult solve(const Instance& instance, SolveVariant variant = SolveVariant::aggregated);

} // namespace ppflow
