// Text and JSON rendering of verification reports.

#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrr/binomial.hpp"
#include "qrr/identity.hpp"
#include "qrr/telescoping.hpp"

namespace qrr {

inline constexpr const char *artifact_version = "1.0.0";

using Json = nlohmann::ordered_json;

/// Always "num/den", also for integers.
inline std::string rat_string(const BigRat &r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

inline Json params_json(const Params &p)
{
    Json j = Json::object();
    for (const auto &[k, v] : p.items()) {
        j[k] = v;
    }
    return j;
}

/// One entry of "reports". millis is written as 0 unless timing is asked
/// for, so that identical runs give identical bytes.
inline Json report_json(const VerificationReport &r, bool timing)
{
    Json j;
    j["id"] = r.id;
    j["params"] = params_json(r.params);
    j["trunc"] = r.trunc;
    j["verdict"] = to_string(r.verdict);
    if (r.mismatch_index) {
        j["mismatch_index"] = *r.mismatch_index;
        Json lw = Json::array();
        Json rw = Json::array();
        for (const auto &c : r.lhs_window) {
            lw.push_back(rat_string(c));
        }
        for (const auto &c : r.rhs_window) {
            rw.push_back(rat_string(c));
        }
        j["window_start"] = r.window_start;
        j["lhs_window"] = lw;
        j["rhs_window"] = rw;
    }
    if (!r.error.empty()) {
        j["error"] = r.error;
    }
    j["millis"] = timing ? r.millis : 0.0;
    return j;
}

inline Json document_json(const std::string &command, const Json &config, const std::vector<VerificationReport> &rs,
                          bool timing)
{
    Json doc;
    doc["artifact_version"] = artifact_version;
    doc["command"] = command;
    doc["config"] = config;
    Json arr = Json::array();
    std::size_t passed = 0;
    for (const auto &r : rs) {
        arr.push_back(report_json(r, timing));
        passed += r.passed() ? 1 : 0;
    }
    doc["reports"] = arr;
    doc["summary"] = {{"total", rs.size()}, {"passed", passed}, {"failed", rs.size() - passed}};
    return doc;
}

inline std::string report_line(const VerificationReport &r, bool timing)
{
    std::ostringstream os;
    os << r.id;
    if (!r.params.items().empty()) {
        os << " " << r.params.str();
    }
    if (r.trunc > 0) {
        os << " T=" << r.trunc;
    }
    os << " " << to_string(r.verdict);
    if (r.mismatch_index) {
        os << " at q^" << *r.mismatch_index << " lhs=[";
        for (std::size_t i = 0; i < r.lhs_window.size(); ++i) {
            os << (i ? " " : "") << r.lhs_window[i].get_str();
        }
        os << "] rhs=[";
        for (std::size_t i = 0; i < r.rhs_window.size(); ++i) {
            os << (i ? " " : "") << r.rhs_window[i].get_str();
        }
        os << "] from q^" << r.window_start;
    }
    if (!r.error.empty()) {
        os << " (" << r.error << ")";
    }
    if (timing) {
        os << " " << r.millis << "ms";
    }
    return os.str();
}

// ---- adapters ----------------------------------------------------------------

inline VerificationReport as_report(const BinomialCheck &c)
{
    VerificationReport r;
    r.id = c.name;
    r.params = c.params;
    r.verdict = c.passed() ? VerificationReport::Verdict::equal : VerificationReport::Verdict::mismatch;
    if (!c.passed()) {
        r.mismatch_index = 0;
        if (!c.values.empty()) {
            r.lhs_window = {c.values.front()};
            r.rhs_window.assign(c.values.begin() + 1, c.values.end());
        }
    }
    return r;
}

inline VerificationReport as_report(const CertificateCheck &c)
{
    VerificationReport r;
    r.id = "TELESCOPE";
    r.params = c.params.params();
    r.trunc = c.trunc;
    r.millis = c.millis;
    r.verdict = c.passed() ? VerificationReport::Verdict::equal : VerificationReport::Verdict::mismatch;
    if (!c.passed()) {
        r.error = c.failure;
        for (std::size_t k = 0; k < c.residuals.size() && r.error.empty(); ++k) {
            if (!c.residuals[k].is_zero()) {
                r.error = "f_k - g_k != F(k+1) - F(k) at k = " + std::to_string(k);
            }
        }
        for (std::size_t k = 0; k < c.partial_sums.size() && r.error.empty(); ++k) {
            if (!c.partial_sums[k].is_zero()) {
                r.error = "partial sum differs from F(k+1) - F(0) at k = " + std::to_string(k);
            }
        }
    }
    return r;
}

} // namespace qrr
