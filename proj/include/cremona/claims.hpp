#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cremona/error.hpp"
#include "cremona/rng.hpp"
#include "cremona/root_system.hpp"
#include "cremona/weyl.hpp"

namespace cremona {

using Json = nlohmann::ordered_json;

inline const char* kVersion = "0.1.0";

class Params {
  public:
    Params() = default;
    explicit Params(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

    bool has(const std::string& key) const { return kv_.count(key) > 0; }

    long long get_int(const std::string& key, long long dflt) const {
        auto it = kv_.find(key);
        if (it == kv_.end()) return dflt;
        try {
            std::size_t pos = 0;
            long long v = std::stoll(it->second, &pos);
            if (pos != it->second.size()) throw std::invalid_argument("trailing");
            return v;
        } catch (const std::exception&) {
            throw BadParameterError("parameter '" + key + "' must be an integer, got '" +
                                    it->second + "'");
        }
    }

    std::string get_str(const std::string& key, const std::string& dflt) const {
        auto it = kv_.find(key);
        return it == kv_.end() ? dflt : it->second;
    }

    const std::map<std::string, std::string>& raw() const { return kv_; }

  private:
    std::map<std::string, std::string> kv_;
};

enum class Status { Verified, Refuted, Skipped, Exceeded };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Verified: return "verified";
        case Status::Refuted: return "refuted";
        case Status::Skipped: return "skipped";
        case Status::Exceeded: return "exceeded";
    }
    return "?";
}

struct Verdict {
    Status status = Status::Skipped;
    std::string note;
    Json witness; // required for refutations; optional data payload otherwise

    static Verdict verified(std::string note, Json witness = Json()) {
        return {Status::Verified, std::move(note), std::move(witness)};
    }
    static Verdict refuted(std::string note, Json witness) {
        return {Status::Refuted, std::move(note), std::move(witness)};
    }
    static Verdict exceeded(std::string note) { return {Status::Exceeded, std::move(note), {}}; }
    static Verdict skipped(std::string note) { return {Status::Skipped, std::move(note), {}}; }
};

// Execution context shared by the claims of one run: global seed, budgets,
// and a compute-once cache for the Weyl group scans.
class Context {
  public:
    std::uint64_t seed = 0;
    std::uint64_t budget = 5000000;
    unsigned jobs = 1;

    Rng rng_for(const std::string& tag) const { return derive_rng(seed, tag); }

    const GroupScan& scan(RootSystemType t) {
        std::lock_guard<std::mutex> lock(scan_mutex_);
        auto it = scans_.find(t);
        if (it != scans_.end()) return *it->second;
        auto rs = root_system(t);
        auto scan = std::make_shared<GroupScan>(scan_group(*rs, budget));
        return *scans_.emplace(t, std::move(scan)).first->second;
    }

  private:
    std::map<RootSystemType, std::shared_ptr<const GroupScan>> scans_;
    std::mutex scan_mutex_;
};

struct Claim {
    std::string id;
    std::string anchor;      // content slug locating the source assertion
    std::string statement;   // the checkable statement, in plain words
    std::string expectation; // set when the source text expects a different outcome
    std::map<std::string, std::string> defaults;
    std::function<Verdict(Context&, const Params&)> run;
};

const std::vector<Claim>& claim_registry(); // defined in registry.hpp

inline const Claim& find_claim(const std::string& id) {
    for (const auto& c : claim_registry())
        if (c.id == id) return c;
    throw UnknownClaimError("no claim with id '" + id + "'");
}

inline std::vector<const Claim*> claims_with_prefix(const std::string& prefix) {
    std::vector<const Claim*> out;
    for (const auto& c : claim_registry())
        if (c.id.rfind(prefix, 0) == 0) out.push_back(&c);
    return out;
}

struct RunResult {
    const Claim* claim = nullptr;
    Params params;
    Verdict verdict;
    long long millis = 0;
};

inline RunResult run_claim(Context& ctx, const Claim& claim,
                           const std::map<std::string, std::string>& overrides = {}) {
    for (const auto& [k, v] : overrides)
        if (!claim.defaults.count(k))
            throw BadParameterError("claim " + claim.id + " takes no parameter '" + k + "'");
    std::map<std::string, std::string> merged = claim.defaults;
    for (const auto& [k, v] : overrides) merged[k] = v;
    Params params(std::move(merged));

    RunResult res;
    res.claim = &claim;
    res.params = params;
    auto t0 = std::chrono::steady_clock::now();
    try {
        res.verdict = claim.run(ctx, params);
    } catch (const BudgetExceededError& e) {
        res.verdict = Verdict::exceeded(e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return res;
}

struct RunConfig {
    std::vector<std::string> exclude;        // id prefixes to skip
    std::vector<std::string> expect_refuted; // id prefixes whose refutation is expected
};

struct Report {
    std::string version = kVersion;
    std::uint64_t seed = 0;
    Json config;
    std::vector<RunResult> results; // ordered by claim id
    std::map<std::string, unsigned> summary;
};

inline Report run_all(Context& ctx, const RunConfig& cfg = {}) {
    const auto& registry = claim_registry();
    Report report;
    report.seed = ctx.seed;
    report.config = Json{{"budget", ctx.budget},
                         {"jobs", ctx.jobs},
                         {"exclude", cfg.exclude},
                         {"expect_refuted", cfg.expect_refuted}};
    report.results.resize(registry.size());

    auto excluded = [&](const std::string& id) {
        for (const auto& p : cfg.exclude)
            if (id.rfind(p, 0) == 0) return true;
        return false;
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= registry.size()) return;
            const Claim& c = registry[i];
            if (excluded(c.id)) {
                RunResult r;
                r.claim = &c;
                r.params = Params(c.defaults);
                r.verdict = Verdict::skipped("excluded by configuration");
                report.results[i] = std::move(r);
            } else {
                report.results[i] = run_claim(ctx, c);
            }
        }
    };
    unsigned jobs = std::max(1u, ctx.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    report.summary = {{"verified", 0}, {"refuted", 0}, {"skipped", 0}, {"exceeded", 0}};
    for (const auto& r : report.results) report.summary[status_name(r.verdict.status)]++;
    return report;
}

inline Json result_to_json(const RunResult& r) {
    Json j;
    j["id"] = r.claim->id;
    j["anchor"] = r.claim->anchor;
    Json params = Json::object();
    for (const auto& [k, v] : r.params.raw()) params[k] = v;
    j["params"] = params;
    j["verdict"] = status_name(r.verdict.status);
    j["note"] = r.verdict.note;
    if (!r.verdict.witness.is_null()) j["witness"] = r.verdict.witness;
    j["millis"] = r.millis;
    return j;
}

inline Json report_to_json(const Report& report) {
    Json j;
    j["version"] = report.version;
    j["seed"] = report.seed;
    j["config"] = report.config;
    Json claims = Json::array();
    for (const auto& r : report.results) claims.push_back(result_to_json(r));
    j["claims"] = claims;
    j["summary"] = Json{{"verified", report.summary.at("verified")},
                        {"refuted", report.summary.at("refuted")},
                        {"skipped", report.summary.at("skipped")},
                        {"exceeded", report.summary.at("exceeded")}};
    return j;
}

// 0 when every refutation was declared expected; 1 otherwise
inline int report_exit_code(const Report& report, const RunConfig& cfg) {
    for (const auto& r : report.results) {
        if (r.verdict.status != Status::Refuted) continue;
        bool expected = false;
        for (const auto& p : cfg.expect_refuted)
            if (r.claim->id.rfind(p, 0) == 0) expected = true;
        if (!expected) return 1;
    }
    return 0;
}

} // namespace cremona
