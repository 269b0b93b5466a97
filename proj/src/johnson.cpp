#include "ppflow/johnson.hpp"

#include <algorithm>

namespace ppflow {

JohnsonResult johnson(const Instance& instance) {
    JohnsonResult result;
    std::vector<const Job*> l1, l2;
    for (const Job& j : instance.jobs()) {
        (j.a < j.b ? l1 : l2).push_back(&j);
    }
    std::sort(l1.begin(), l1.end(), [](const Job* x, const Job* y) {
        if (x->a != y->a) return x->a < y->a;
        return x->id < y->id;
    });
    std::sort(l2.begin(), l2.end(), [](const Job* x, const Job* y) {
        if (x->b != y->b) return x->b > y->b;
        return x->id < y->id;
    });

    std::vector<const Job*> ordered;
    ordered.reserve(instance.size());
    for (const Job* j : l1) {
        ordered.push_back(j);
        result.l1_set.push_back(j->id);
    }
    for (const Job* j : l2) {
        ordered.push_back(j);
        result.l2_set.push_back(j->id);
    }
    result.order.reserve(ordered.size());
    for (const Job* j : ordered) result.order.push_back(j->id);

    // cmax = max_k (prefix-a up to k + suffix-b from k), scanned left to
    // right with the suffix peeled off incrementally.
    TimeValue prefix_a;
    TimeValue suffix_b = instance.total_b();
    for (std::size_t k = 0; k < ordered.size(); ++k) {
        prefix_a += ordered[k]->a;
        TimeValue value = prefix_a + suffix_b;
        if (result.argmax_k == 0 || value > result.cmax) {
            result.cmax = value;
            result.argmax_k = k + 1;
        }
        suffix_b -= ordered[k]->b;
    }
    result.idle1 = result.cmax - instance.total_a();
    result.idle2 = result.cmax - instance.total_b();
    return result;
}

Schedule johnson_schedule(const Instance& instance) {
    JohnsonResult r = johnson(instance);
    Schedule schedule;
    schedule.starts.reserve(r.order.size());
    TimeValue cur1, prev_c2;
    for (JobId id : r.order) {
        const Job& j = instance.job(id);
        TimeValue s1 = cur1;
        cur1 += j.a;
        TimeValue s2 = ppflow::max(cur1, prev_c2);
        prev_c2 = s2 + j.b;
        schedule.starts.push_back({id, s1, s2});
    }
    return schedule;
}

} // namespace ppflow
