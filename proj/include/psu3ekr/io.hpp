#pragma once

// JSON, CSV and Markdown renderings. Field order is fixed; every number is an
// integer or a decimal string.

#include "psu3ekr/claims.hpp"
#include "psu3ekr/spectra.hpp"
#include "psu3ekr/unitary.hpp"
#include "psu3ekr/verify.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace psu3ekr {

using ojson = nlohmann::ordered_json;

inline ojson fraction_json(const Rational& r) {
    ojson j;
    j["num"] = numerator_of(r).str();
    j["den"] = denominator_of(r).str();
    return j;
}

inline ojson row_json(const EigenRow& r) {
    ojson j;
    j["family"] = r.family;
    j["param"] = r.param ? ojson(*r.param) : ojson(nullptr);
    j["count"] = r.count;
    j["dim"] = r.dim.str();
    j["lambda"] = fraction_json(r.lambda);
    j["lambda_over_order"] = fraction_json(r.lambda_over_order);
    j["provenance"] = r.provenance;
    return j;
}

inline ojson rows_json(const std::vector<EigenRow>& rows) {
    ojson a = ojson::array();
    for (const EigenRow& r : rows) a.push_back(row_json(r));
    return a;
}

inline ojson weighted_json(const WeightedSpec& w) {
    ojson j;
    j["a"] = fraction_json(w.a);
    j["b"] = fraction_json(w.b);
    j["rows"] = rows_json(w.rows);
    return j;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

inline std::string rows_csv(const std::vector<EigenRow>& rows) {
    std::ostringstream os;
    os << "family,param,count,dim,lambda_num,lambda_den,lambda_over_order_num,lambda_over_order_den,provenance\n";
    for (const EigenRow& r : rows) {
        os << detail::csv_field(r.family) << ',' << detail::csv_field(r.param.value_or("")) << ',' << r.count << ','
           << r.dim.str() << ',' << numerator_of(r.lambda).str() << ',' << denominator_of(r.lambda).str() << ','
           << numerator_of(r.lambda_over_order).str() << ',' << denominator_of(r.lambda_over_order).str() << ','
           << r.provenance << '\n';
    }
    return os.str();
}

inline std::string rows_markdown(const std::vector<EigenRow>& rows) {
    std::ostringstream os;
    os << "| family | param | count | dim | lambda | lambda/\\|G\\| | provenance |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const EigenRow& r : rows) {
        os << "| " << r.family << " | " << r.param.value_or("") << " | " << r.count << " | " << r.dim.str() << " | "
           << to_decimal(r.lambda) << " | " << to_decimal(r.lambda_over_order) << " | " << r.provenance << " |\n";
    }
    return os.str();
}

inline ojson group_json(const GroupData& g) {
    ojson j;
    j["q"] = g.q;
    j["n"] = g.n;
    j["order"] = g.order;
    ojson classes = ojson::array();
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
        ojson e;
        e["size"] = g.class_sizes[c];
        e["fix"] = g.fix_counts[c];
        e["derangement"] = static_cast<bool>(g.derangement[c]);
        classes.push_back(e);
    }
    j["classes"] = classes;
    return j;
}

inline ojson cover_json(const CoverReport& r) {
    ojson j;
    j["components"] = r.components;
    j["component_sizes"] = r.component_sizes;
    j["all_complete"] = r.all_complete;
    j["max_coclique_size"] = r.max_coclique_size;
    j["max_coclique_count"] = r.max_coclique_count.str();
    return j;
}

inline ojson claims_json(const ClaimsReport& rep, const std::vector<int>& qs) {
    ojson j;
    j["q_values"] = qs;
    j["ok"] = rep.ok();
    ojson checks = ojson::array();
    for (const ClaimCheck& c : rep.checks) {
        ojson e;
        e["q"] = c.q == 0 ? ojson(nullptr) : ojson(c.q);
        e["claim"] = c.claim;
        e["status"] = c.status;
        e["enumerated"] = c.enumerated;
        e["expected"] = c.expected;
        e["note"] = c.note;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["chi6_distinct_forms"] = rep.chi6_distinct_forms;
    return j;
}

inline ojson verify_json(const VerifyReport& rep) {
    ojson j;
    j["q"] = rep.q;
    j["oracle"] = rep.oracle;
    j["ok"] = rep.ok();
    ojson checks = ojson::array();
    for (const VerifyCheck& c : rep.checks) {
        ojson e;
        e["name"] = c.name;
        e["status"] = c.status;
        e["detail"] = c.detail;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j;
}

}  // namespace psu3ekr
