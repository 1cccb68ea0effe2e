#pragma once

// Table-level checks for one q, optionally cross-checked against the
// explicitly built group.

#include "psu3ekr/linalg.hpp"
#include "psu3ekr/spectra.hpp"
#include "psu3ekr/unitary.hpp"

#include <map>
#include <string>
#include <vector>

namespace psu3ekr {

struct VerifyCheck {
    std::string name;
    std::string status;  // pass, fail, info
    std::string detail;
};

struct VerifyReport {
    int q = 0;
    bool oracle = false;
    std::vector<VerifyCheck> checks;

    bool ok() const {
        for (const VerifyCheck& c : checks)
            if (c.status == "fail") return false;
        return true;
    }
};

namespace detail {

inline std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
    return out;
}

inline const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

/// Characters per distinct eigenvalue, over the nonempty rows.
inline std::map<Rational, std::int64_t> eigenvalue_counts(const std::vector<EigenRow>& rows) {
    std::map<Rational, std::int64_t> m;
    for (const EigenRow& r : rows)
        if (r.count > 0) m[r.lambda] += r.count;
    return m;
}

inline void oracle_checks(int q, const std::vector<EigenRow>& rows, VerifyReport& rep) {
    const GroupData g = build_psu3(q);
    const BigInt G = group_order(q);
    rep.checks.push_back({"group-order", verdict(BigInt(g.order) == G), std::to_string(g.order)});
    rep.checks.push_back({"two-transitive", verdict(is_two_transitive(g)), "orbit of (0,1)"});

    const DerangementSet ds = derangement_set(g);
    const Rational d = trivial_row(rows).lambda;
    rep.checks.push_back({"derangement-count", verdict(Rational(static_cast<std::int64_t>(ds.total)) == d),
                          std::to_string(ds.total) + " derangements"});

    const QuotientMatrix N = quotient_matrix(g);
    bool rows_ok = true;
    for (const auto& row : N) {
        std::int64_t s = 0;
        for (std::int64_t v : row) s += v;
        if (s != static_cast<std::int64_t>(ds.total)) rows_ok = false;
    }
    rep.checks.push_back({"quotient-row-sums", verdict(rows_ok), "each row sums to |D|"});

    const RatMatrix RN = to_rational(N);
    std::size_t total = 0;
    bool mult_ok = true;
    std::string mult_detail;
    for (const auto& [lambda, count] : eigenvalue_counts(rows)) {
        const std::size_t nul = eigen_nullity(RN, lambda);
        total += nul;
        if (static_cast<std::int64_t>(nul) != count) mult_ok = false;
        mult_detail += (mult_detail.empty() ? "" : " ") + to_decimal(lambda) + ":" + std::to_string(nul) + "/" +
                       std::to_string(count);
    }
    rep.checks.push_back({"table-eigenvalues-are-roots", verdict(mult_ok), mult_detail});
    rep.checks.push_back({"quotient-spectrum-complete", verdict(total == g.num_classes()),
                          std::to_string(total) + " of " + std::to_string(g.num_classes()) + " classes"});

    const FixCheck fc = fix_character_eigencheck(g, N);
    rep.checks.push_back({"fix-character", verdict(fc.holds), "eigenvalue " + to_decimal(fc.eigenvalue)});

    if (q == 2) {
        const CoverReport cr = max_cocliques_q2(g);
        bool nine = true;
        for (std::size_t s : cr.component_sizes)
            if (s != 9) nine = false;
        rep.checks.push_back({"components", verdict(cr.components == 8 && nine && cr.all_complete),
                              std::to_string(cr.components) + " complete components of size 9"});
        const RatMatrix A = derangement_adjacency(g);
        std::string spec;
        std::size_t covered = 0;
        bool spec_ok = true;
        for (const auto& [lambda, count] : eigenvalue_counts(rows)) {
            const std::size_t mult = eigen_nullity(A, lambda);
            covered += mult;
            BigInt want = 0;
            for (const EigenRow& r : rows)
                if (r.count > 0 && r.lambda == lambda) want += BigInt(r.count) * r.dim * r.dim;
            if (BigInt(mult) != want) spec_ok = false;
            spec += (spec.empty() ? "" : " ") + to_decimal(lambda) + "x" + std::to_string(mult);
        }
        rep.checks.push_back({"adjacency-spectrum", verdict(spec_ok && covered == g.order), spec});
    }
}

}  // namespace detail

inline VerifyReport run_verify(int q, bool oracle) {
    require_prime_power(q);
    if (oracle) require_group_q(q);
    VerifyReport rep;
    rep.q = q;
    rep.oracle = oracle;
    const std::vector<EigenRow> rows = table_union(q);

    const SanityReport s = sanity(rows, q);
    rep.checks.push_back({"degree-sum", detail::verdict(s.degrees_ok), s.degree_sum.str() + " = |G| " + s.order.str()});
    rep.checks.push_back({"trace-zero", detail::verdict(s.trace_ok), "trace " + to_decimal(s.trace)});

    const BoundReport h = hoffman(q, rows);
    const Rational canonical(group_order(q), num_points(q));
    rep.checks.push_back({"hoffman", detail::verdict(h.bound >= canonical),
                          "bound " + to_decimal(h.bound) + ", canonical size " + to_decimal(canonical) +
                              (h.tight ? ", tight" : ", not tight")});

    if (q == 2) {
        rep.checks.push_back({"weighted-bound", "info", "weights undefined at q=2"});
    } else {
        const BoundReport w = weighted_bound(q);
        rep.checks.push_back({"weighted-bound", detail::verdict(w.tight && w.degree == BigInt(q) * q * q && w.tau == -1),
                              "bound " + to_decimal(w.bound) + ", max " + to_decimal(w.degree) + ", min " +
                                  to_decimal(w.tau)});
    }

    const Condition2Report c2 = check_condition2(q);
    rep.checks.push_back({"condition-2", detail::verdict(c2.holds == (q != 5)),
                          std::string(c2.holds ? "holds" : "fails") + "; target " + to_decimal(c2.target) +
                              "; attaining " + detail::join(c2.attaining)});

    const VerdictReport v = ekr_module_verdict(q);
    rep.checks.push_back({"ekr-module-verdict", "info", v.status});

    if (oracle) detail::oracle_checks(q, rows, rep);
    return rep;
}

}  // namespace psu3ekr
