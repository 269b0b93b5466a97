#pragma once

#include "ppflow/johnson.hpp"
#include "ppflow/model.hpp"

#include <vector>

namespace ppflow {

/// The original jobs plus two sets of auxiliary jobs that absorb the Johnson
/// schedule's idle time: X jobs (a = 0, b = idle2/|X|) soak up second-machine
/// idle and Y jobs (a = idle1/|Y|, b = 0) first-machine idle. The extended
/// job set has equal total load on both machines and the same Johnson
/// makespan as the original.
struct ExtendedInstance {
    Instance original;
    JohnsonResult johnson_result; // of the original instance
    std::vector<Job> x_jobs;      // |X| = ceil(idle2 / b_max), each (0, idle2/|X|)
    std::vector<Job> y_jobs;      // |Y| = ceil(idle1 / a_max), each (idle1/|Y|, 0)
    /// X jobs (ascending fresh id), then the Johnson order of the original
    /// jobs, then Y jobs (ascending fresh id).
    std::vector<Job> sigma_prime;
    TimeValue a_max, b_max; // over the extended job set
    JobId aux_id_base = 0;  // ids >= this are auxiliary

    std::size_t n_prime() const { return sigma_prime.size(); }
    bool is_auxiliary(JobId id) const { return id >= aux_id_base; }

    /// All extended jobs, in sigma_prime order, with the original capacity.
    Instance full_instance() const;
};

/// Throws DegenerateInstanceError when the instance is empty or when
/// a_max = 0 or b_max = 0; those instances bypass the extension entirely
/// (the auxiliary durations would be undefined) and are handled by the
/// trivial solver paths.
ExtendedInstance build_extension(const Instance& instance);

} // namespace ppflow
