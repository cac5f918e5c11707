#pragma once

#include "capelli/algebra_kind.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace capelli {

struct Failure {
    std::string monomial;
    std::string lhs;
    std::string rhs;

    friend bool operator==(const Failure&, const Failure&) = default;
};

// Outcome of a verification sweep. Failures are kept in the order of the
// swept grid, so merged reports do not depend on how the work was split.
struct Report {
    std::string identity;
    std::string kind;
    std::optional<int> n;
    std::optional<std::string> variant;
    int dmax = 0;
    long checked_count = 0;
    std::vector<Failure> failures;

    bool passed() const { return failures.empty(); }

    void merge(const Report& other) {
        checked_count += other.checked_count;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

inline nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["identity"] = r.identity;
    j["kind"] = r.kind;
    j["n"] = r.n ? nlohmann::json(*r.n) : nlohmann::json(nullptr);
    j["variant"] = r.variant ? nlohmann::json(*r.variant) : nlohmann::json(nullptr);
    j["dmax"] = r.dmax;
    j["checked_count"] = r.checked_count;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : r.failures)
        j["failures"].push_back({{"monomial", f.monomial}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return j;
}

// Default worker count: CAPELLI_JOBS if set and positive, else 1.
inline int default_jobs() {
    if (const char* env = std::getenv("CAPELLI_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

// Run `check(i)` for i in [0, count) on up to `jobs` threads. Results land in
// per-index slots, so the returned sequence is identical for any job count.
template <class Result, class Fn>
std::vector<Result> sharded_map(std::size_t count, int jobs, Fn check) {
    std::vector<Result> out(count);
    int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = check(i);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = static_cast<std::size_t>(w); i < count; i += static_cast<std::size_t>(workers))
                out[i] = check(i);
        });
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace capelli
