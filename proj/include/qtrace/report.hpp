#pragma once

// Check records and deterministic report assembly. A report collects named
// checks, each either hard (contributes to the exit status) or exploratory
// (informational only). Serialization is sorted by check name so that two
// runs with the same seed produce byte-identical reports apart from the
// elapsed-time fields.

#include <qtrace/io.hpp>

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtrace {

struct CheckRecord {
    std::string name;       // unique, dotted, e.g. "bigon.trace_frobenius.remark.n3"
    std::string statement;  // the claim being verified, in words
    bool exploratory = false;
    bool passed = false;
    Json witness;  // free-form evidence: counts, witnesses, first failure
    long long elapsed_ms = 0;
};

// Runs the body of a check, capturing exceptions as failures and timing it.
// The body receives the record and must set `passed` (and usually `witness`).
template <typename Fn>
CheckRecord run_check(std::string name, std::string statement, bool exploratory, Fn&& body) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.statement = std::move(statement);
    rec.exploratory = exploratory;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(rec);
    } catch (const std::exception& e) {
        rec.passed = false;
        rec.witness = Json{{"error", e.what()}};
    }
    rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rec;
}

class Report {
  public:
    Report(std::string suite, unsigned n, std::uint64_t seed)
        : suite_(std::move(suite)), n_(n), seed_(seed) {}

    void add(CheckRecord rec) {
        if (!names_.insert(rec.name).second)
            throw std::logic_error("duplicate check name in report: " + rec.name);
        checks_.push_back(std::move(rec));
    }
    void extend(std::vector<CheckRecord> recs) {
        for (auto& r : recs) add(std::move(r));
    }

    const std::vector<CheckRecord>& checks() const { return checks_; }

    std::size_t hard_total() const {
        std::size_t k = 0;
        for (const auto& r : checks_)
            if (!r.exploratory) ++k;
        return k;
    }
    std::size_t hard_failures() const {
        std::size_t k = 0;
        for (const auto& r : checks_)
            if (!r.exploratory && !r.passed) ++k;
        return k;
    }
    bool hard_pass() const { return hard_failures() == 0; }
    int exit_code() const { return hard_pass() ? 0 : 1; }

    Json to_json(bool include_elapsed = true) const {
        std::vector<const CheckRecord*> order;
        for (const auto& r : checks_) order.push_back(&r);
        std::sort(order.begin(), order.end(),
                  [](const CheckRecord* a, const CheckRecord* b) { return a->name < b->name; });
        Json checks = Json::array();
        for (const CheckRecord* r : order) {
            Json rec{{"name", r->name},
                     {"statement", r->statement},
                     {"mode", r->exploratory ? "exploratory" : "hard"},
                     {"status", r->passed ? "pass" : "fail"},
                     {"witness", r->witness}};
            if (include_elapsed) rec["elapsed_ms"] = r->elapsed_ms;
            checks.push_back(std::move(rec));
        }
        return Json{{"suite", suite_},
                    {"n", n_},
                    {"seed", seed_},
                    {"summary",
                     Json{{"hard_total", hard_total()},
                          {"hard_failed", hard_failures()},
                          {"exploratory_total", checks_.size() - hard_total()},
                          {"status", hard_pass() ? "pass" : "fail"}}},
                    {"checks", std::move(checks)}};
    }

    std::string to_string(bool include_elapsed = true) const {
        return to_json(include_elapsed).dump(2) + "\n";
    }

  private:
    std::string suite_;
    unsigned n_;
    std::uint64_t seed_;
    std::vector<CheckRecord> checks_;
    std::set<std::string> names_;
};

}  // namespace qtrace
