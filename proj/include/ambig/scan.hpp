#pragma once

// Range scans over fundamental discriminants: parallel verification with
// output written in a fixed order, as CSV or JSON lines.

#include "ambig/ambiguity.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace ambig {

enum class SignFilter { Negative, Positive, Both };
enum class Format { Csv, Jsonl };

struct ScanConfig {
    std::int64_t min_delta = -10000;
    std::int64_t max_delta = 5000;
    SignFilter sign = SignFilter::Both;
    Format format = Format::Csv;
    unsigned jobs = 1;
    bool fail_fast = false;
    bool timing = true;
    VerifyOptions verify;
};

inline bool is_fundamental_discriminant(std::int64_t n) {
    try {
        validate_discriminant(n);
        return true;
    } catch (const NotFundamental&) {
        return false;
    }
}

/// Fundamental discriminants in [min, max] passing the sign filter, in
/// ascending (|D|, D) order.
inline std::vector<std::int64_t> scan_discriminants(const ScanConfig& cfg) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = cfg.min_delta; n <= cfg.max_delta; ++n) {
        if (cfg.sign == SignFilter::Negative && n >= 0) continue;
        if (cfg.sign == SignFilter::Positive && n <= 0) continue;
        if (is_fundamental_discriminant(n)) out.push_back(n);
    }
    std::sort(out.begin(), out.end(), [](std::int64_t x, std::int64_t y) {
        std::int64_t ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
        return ax != ay ? ax < ay : x < y;
    });
    return out;
}

inline const char* csv_header() {
    return "delta,h,h_narrow,t,ramified_primes,norm_eps,idx_Q,idx_E,idx_coh,am_actual,am_predicted,"
           "amst_actual,amst_predicted,all_checks_pass,ms_elapsed";
}

inline std::string format_ms(double ms, bool timing) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << (timing ? ms : 0.0);
    return s.str();
}

inline std::string csv_row(const VerificationReport& r, bool timing = true) {
    std::ostringstream s;
    s << r.delta << ',' << r.h << ',' << r.h_narrow << ',' << r.t << ',';
    for (std::size_t i = 0; i < r.ramified.size(); ++i) s << (i ? ";" : "") << r.ramified[i];
    s << ',' << r.norm_eps << ',' << r.idx_Q << ',' << r.idx_E << ',' << r.idx_coh << ',' << r.am_actual << ','
      << r.am_predicted << ',' << r.amst_actual << ',' << r.amst_predicted << ','
      << (r.checks.all() ? "true" : "false") << ',' << format_ms(r.elapsed_ms, timing);
    return s.str();
}

inline nlohmann::ordered_json to_json(const VerificationReport& r, bool timing = true) {
    nlohmann::ordered_json j;
    j["delta"] = r.delta;
    j["h"] = r.h;
    j["h_narrow"] = r.h_narrow;
    j["t"] = r.t;
    j["ramified_primes"] = r.ramified;
    j["norm_eps"] = r.norm_eps;
    j["idx_Q"] = r.idx_Q;
    j["idx_E"] = r.idx_E;
    j["idx_coh"] = r.idx_coh;
    j["am_actual"] = r.am_actual;
    j["am_predicted"] = r.am_predicted;
    j["amst_actual"] = r.amst_actual;
    j["amst_predicted"] = r.amst_predicted;
    j["all_checks_pass"] = r.checks.all();
    nlohmann::ordered_json checks;
    for (const auto& [name, ok] : r.checks.named()) checks[name] = ok;
    j["checks"] = checks;
    j["ms_elapsed"] = std::stod(format_ms(r.elapsed_ms, timing));
    return j;
}

inline std::string jsonl_row(const VerificationReport& r, bool timing = true) { return to_json(r, timing).dump(); }

struct ScanSummary {
    std::size_t total = 0;      // discriminants in range
    std::size_t written = 0;    // records emitted
    std::size_t failures = 0;   // records with a failing check
    std::size_t errors = 0;     // discriminants whose verification threw
    double elapsed_ms = 0;

    bool ok() const { return failures == 0 && errors == 0; }
};

/// Runs verify_discriminant over the range on cfg.jobs threads. Records go
/// to `out` in scan order; progress and errors go to `log`.
inline ScanSummary run_scan(const ScanConfig& cfg, std::ostream& out, std::ostream* log = nullptr) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::int64_t> discs = scan_discriminants(cfg);
    const std::size_t n = discs.size();

    struct Slot {
        std::optional<VerificationReport> report;
        std::string error;
        bool done = false;
    };
    std::vector<Slot> slots(n);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto worker = [&] {
        for (;;) {
            if (stop.load()) return;
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            Slot s;
            try {
                s.report = verify_discriminant(discs[i], cfg.verify);
            } catch (const std::exception& e) {
                s.error = e.what();
            }
            s.done = true;
            {
                std::lock_guard<std::mutex> lock(mu);
                slots[i] = std::move(s);
            }
            cv.notify_all();
        }
    };
    const unsigned jobs = std::max(1u, cfg.jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);

    ScanSummary sum;
    sum.total = n;
    if (cfg.format == Format::Csv) out << csv_header() << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        Slot s;
        {
            std::unique_lock<std::mutex> lock(mu);
            cv.wait(lock, [&] { return slots[i].done; });
            s = std::move(slots[i]);
        }
        if (s.report) {
            out << (cfg.format == Format::Csv ? csv_row(*s.report, cfg.timing) : jsonl_row(*s.report, cfg.timing))
                << '\n';
            ++sum.written;
            if (!s.report->checks.all()) {
                ++sum.failures;
                if (log) *log << "FAIL " << discs[i] << '\n';
            }
        } else {
            ++sum.errors;
            if (log) *log << "ERROR " << discs[i] << ": " << s.error << '\n';
        }
        if (log && ((i + 1) % 500 == 0 || i + 1 == n)) *log << "progress " << i + 1 << "/" << n << '\n';
        if (cfg.fail_fast && !sum.ok()) {
            stop.store(true);
            break;
        }
    }
    for (auto& t : pool) t.join();
    out.flush();
    sum.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return sum;
}

}  // namespace ambig
