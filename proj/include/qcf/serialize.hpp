#pragma once

#include "qcf/identities.hpp"
#include "qcf/qseries.hpp"

#include <json.hpp>

#include <string>

namespace qcf {

/* QSeries as a JSON array of {power, terms:[{ea,eb,ec,num,den}]}; exact
 * coefficients are carried as "num"/"den" decimal strings. */
inline nlohmann::json series_to_json(const QSeries& s)
{
    nlohmann::json arr = nlohmann::json::array();
    for (int n = 0; n <= s.order(); ++n) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, c] : s[n].terms()) {
            terms.push_back({{"ea", e.ea},
                             {"eb", e.eb},
                             {"ec", e.ec},
                             {"num", numerator(c).str()},
                             {"den", denominator(c).str()}});
        }
        arr.push_back({{"power", n}, {"terms", std::move(terms)}});
    }
    return arr;
}

/* Report schema: {"id","status","order","depth","first_mismatch","elapsed_ms"}
 * with coefficients as exact "num/den" strings; randomized entries also carry
 * their seed. Timings are zeroed unless requested, keeping output bytes
 * reproducible run to run. */
inline nlohmann::json report_to_json(const identities::IdentityReport& r, bool with_timings = false)
{
    nlohmann::json j;
    j["id"] = r.id;
    j["status"] = identities::status_name(r.status);
    j["order"] = r.order;
    j["depth"] = r.depth;
    if (r.first_mismatch) {
        const auto& m = *r.first_mismatch;
        j["first_mismatch"] = {{"q", m.q},
                               {"ea", m.exps.ea},
                               {"eb", m.exps.eb},
                               {"lhs", fraction_string(m.lhs)},
                               {"rhs", fraction_string(m.rhs)}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["elapsed_ms"] = with_timings ? r.elapsed_ms : 0;
    if (r.seed) j["seed"] = *r.seed;
    if (!r.message.empty()) j["message"] = r.message;
    return j;
}

} // namespace qcf
