#include "ppflow/extend.hpp"

#include <algorithm>

namespace ppflow {

Instance ExtendedInstance::full_instance() const {
    return Instance(sigma_prime, original.omega());
}

ExtendedInstance build_extension(const Instance& instance) {
    if (instance.empty()) {
        throw DegenerateInstanceError("cannot extend an empty instance");
    }
    if (instance.a_max().is_zero() || instance.b_max().is_zero()) {
        throw DegenerateInstanceError(
            "extension undefined when a_max or b_max is zero; use the trivial path");
    }

    ExtendedInstance ext;
    ext.original = instance;
    ext.johnson_result = johnson(instance);
    ext.a_max = instance.a_max();
    ext.b_max = instance.b_max();

    JobId max_id = 0;
    for (const Job& j : instance.jobs()) max_id = std::max(max_id, j.id);
    ext.aux_id_base = max_id + 1;
    JobId next_id = ext.aux_id_base;

    const TimeValue& idle1 = ext.johnson_result.idle1;
    const TimeValue& idle2 = ext.johnson_result.idle2;
    if (idle2 > TimeValue(0)) {
        BigInt count = (idle2 / instance.b_max()).ceil_int();
        TimeValue per = idle2 / TimeValue(count);
        for (BigInt i = 0; i < count; ++i) {
            ext.x_jobs.push_back({next_id++, TimeValue(0), per});
        }
    }
    if (idle1 > TimeValue(0)) {
        BigInt count = (idle1 / instance.a_max()).ceil_int();
        TimeValue per = idle1 / TimeValue(count);
        for (BigInt i = 0; i < count; ++i) {
            ext.y_jobs.push_back({next_id++, per, TimeValue(0)});
        }
    }

    ext.sigma_prime.reserve(instance.size() + ext.x_jobs.size() + ext.y_jobs.size());
    for (const Job& j : ext.x_jobs) ext.sigma_prime.push_back(j);
    for (JobId id : ext.johnson_result.order) ext.sigma_prime.push_back(instance.job(id));
    for (const Job& j : ext.y_jobs) ext.sigma_prime.push_back(j);
    return ext;
}

} // namespace ppflow
