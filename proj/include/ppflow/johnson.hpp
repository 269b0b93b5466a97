#pragma once

#include "ppflow/model.hpp"

#include <vector>

namespace ppflow {

/// Johnson's rule applied to an instance, together with the classic
/// two-machine makespan formula and the machines' idle times.
struct JohnsonResult {
    /// All L1 jobs by non-decreasing a, then all L2 jobs by non-increasing b;
    /// ties broken by ascending job id.
    std::vector<JobId> order;
    std::vector<JobId> l1_set; // a < b, in order
    std::vector<JobId> l2_set; // a >= b, in order
    TimeValue cmax;            // max_k (sum_{i<=k} a_i + sum_{i>=k} b_i)
    TimeValue idle1;           // cmax - sum a
    TimeValue idle2;           // cmax - sum b
    std::size_t argmax_k = 0;  // first 1-based k attaining the max; 0 if empty
};

/// O(n log n): sort per Johnson's rule, then a single left-to-right scan of
/// the makespan formula. The makespan is a lower bound on any schedule of
/// the instance, with or without a storage constraint.
JohnsonResult johnson(const Instance& instance);

/// Materializes the Johnson order as a left-shifted schedule that ignores
/// the storage capacity. Its makespan equals JohnsonResult::cmax; it is a
/// lower-bound witness, not necessarily storage-feasible.
Schedule johnson_schedule(const Instance& instance);

} // namespace ppflow
