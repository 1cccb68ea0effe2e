// psu3ekr: eigenvalue tables, lemma suites and group-oracle checks for the
// derangement graph of PSU(3,q).
//
// Exit codes: 0 all checks pass, 1 a verified claim failed, 2 usage or domain error.

#include "psu3ekr/claims.hpp"
#include "psu3ekr/io.hpp"
#include "psu3ekr/spectra.hpp"
#include "psu3ekr/unitary.hpp"
#include "psu3ekr/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>

using namespace psu3ekr;

namespace {

constexpr int kMaxSymbolicQ = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::optional<int> q;
    std::string q_range;
    std::string format = "json";
    std::string graph = "union";
    std::string out;
    bool oracle = false;
};

int checked_q(const std::optional<int>& q, int cap = kMaxSymbolicQ) {
    if (!q) throw UsageError("--q is required");
    if (!is_prime_power(*q)) throw UsageError("not a prime power");
    if (*q > cap) throw UsageError("q exceeds " + std::to_string(cap));
    return *q;
}

std::vector<int> q_values(const RunConfig& cfg) {
    if (cfg.q_range.empty()) return {checked_q(cfg.q)};
    static const std::regex range(R"((\d+)\.\.(\d+))");
    std::smatch m;
    if (!std::regex_match(cfg.q_range, m, range)) throw UsageError("--q-range must look like a..b");
    const int lo = std::stoi(m[1]);
    const int hi = std::stoi(m[2]);
    if (lo < 2 || hi < lo || hi > kMaxSymbolicQ) throw UsageError("--q-range must satisfy 2 <= a <= b <= 64");
    return prime_powers_in(lo, hi);
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot open " + cfg.out);
    f << text;
}

void require_json(const RunConfig& cfg) {
    if (cfg.format != "json") throw UsageError("only --format json is supported for this command");
}

int cmd_table(const RunConfig& cfg) {
    const int q = checked_q(cfg.q);
    std::vector<EigenRow> rows;
    std::optional<WeightedSpec> weighted;
    if (cfg.graph == "union") {
        rows = table_union(q);
    } else if (cfg.graph == "gamma1" || cfg.graph == "gamma2" || cfg.graph == "gamma3") {
        const Graph g = cfg.graph == "gamma1" ? Graph::gamma1 : cfg.graph == "gamma2" ? Graph::gamma2 : Graph::gamma3;
        rows = table_gamma(q, g);
    } else {
        weighted = table_weighted(q);
        rows = weighted->rows;
    }
    if (cfg.format == "csv")
        emit(cfg, rows_csv(rows));
    else if (cfg.format == "md")
        emit(cfg, rows_markdown(rows));
    else
        emit(cfg, (weighted ? weighted_json(*weighted) : rows_json(rows)).dump(2) + "\n");
    return 0;
}

int cmd_claims(const RunConfig& cfg) {
    require_json(cfg);
    const std::vector<int> qs = q_values(cfg);
    const ClaimsReport rep = run_claims(qs);
    emit(cfg, claims_json(rep, qs).dump(2) + "\n");
    return rep.ok() ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
    require_json(cfg);
    const int q = checked_q(cfg.q);
    if (cfg.oracle && q > kMaxGroupQ) throw UsageError("group too large for explicit enumeration");
    const VerifyReport rep = run_verify(q, cfg.oracle);
    emit(cfg, verify_json(rep).dump(2) + "\n");
    return rep.ok() ? 0 : 1;
}

int cmd_group(const RunConfig& cfg) {
    require_json(cfg);
    const int q = checked_q(cfg.q, kMaxGroupQ);
    emit(cfg, group_json(build_psu3(q)).dump(2) + "\n");
    return 0;
}

int cmd_coclique(const RunConfig& cfg) {
    require_json(cfg);
    const int q = checked_q(cfg.q);
    if (q != 2) throw UsageError("exhaustive structure check is q=2 only");
    const CoverReport r = max_cocliques_q2(build_psu3(2));
    ojson j;
    j["q"] = 2;
    j["report"] = cover_json(r);
    emit(cfg, j.dump(2) + "\n");
    return r.all_complete && r.components == 8 ? 0 : 1;
}

int cmd_module_check(const RunConfig& cfg) {
    require_json(cfg);
    const int q = checked_q(cfg.q);
    if (q != 2 && q != 3) throw UsageError("module-check supports q=2 and q=3 only");
    const GroupData g = build_psu3(q);
    const std::size_t expected = 1 + (g.n - 1) * (g.n - 1);
    const ModuleRank mr = module_rank(g);
    ojson j;
    j["q"] = q;
    j["n"] = g.n;
    j["order"] = g.order;
    j["module_rank"] = mr.lower == mr.upper ? ojson(mr.lower) : ojson(nullptr);
    j["rank_lower_bound"] = mr.lower;
    j["rank_upper_bound"] = mr.upper;
    j["relations"] = mr.relations;
    j["relations_verified"] = mr.relations_verified;
    j["expected_rank"] = expected;
    bool ok = mr.certified() && mr.lower == expected;
    if (q == 2) {
        const std::vector<std::size_t> s = noncanonical_max_coclique_q2(g);
        const bool cocl = is_coclique(g, s);
        const bool canon = is_canonical(g, s);
        const std::size_t span = max_coclique_span_rank_q2(g);
        ojson c;
        c["elements"] = s;
        c["size"] = s.size();
        c["is_coclique"] = cocl;
        c["canonical"] = canon;
        c["membership"] = perm_module_membership(g, indicator(g, s));
        c["max_coclique_span_rank"] = span;
        j["noncanonical_coclique"] = c;
        ok = ok && cocl && !canon && s.size() == g.order / g.n;
    }
    j["ok"] = ok;
    emit(cfg, j.dump(2) + "\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectra of the derangement graph of PSU(3,q)"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--q", cfg.q, "prime power q");
    app.add_option("--q-range", cfg.q_range, "inclusive range a..b of q values");
    app.add_option("--format", cfg.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    app.add_option("--out", cfg.out, "write output to this path");
    app.add_flag("--oracle", cfg.oracle, "cross-check against the explicitly built group");

    auto* table = app.add_subcommand("table", "emit an eigenvalue table");
    table->add_option("--graph", cfg.graph, "gamma1, gamma2, gamma3, union or weighted")
        ->check(CLI::IsMember({"gamma1", "gamma2", "gamma3", "union", "weighted"}));
    auto* claims = app.add_subcommand("claims", "enumerative character-sum checks");
    auto* verify = app.add_subcommand("verify", "table identities, bounds and optional group oracle");
    auto* group = app.add_subcommand("group", "emit the conjugacy class data of the built group");
    auto* coclique = app.add_subcommand("coclique", "structure of the q=2 derangement graph");
    auto* module = app.add_subcommand("module-check", "permutation module rank and membership");
    for (auto* sub : {table, claims, verify, group, coclique, module}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*table) return cmd_table(cfg);
        if (*claims) return cmd_claims(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*group) return cmd_group(cfg);
        if (*coclique) return cmd_coclique(cfg);
        return cmd_module_check(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
