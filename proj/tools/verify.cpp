// command-line front end: claim listing, claim execution, Weyl profiles, and
// file-driven map/surface reports
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cremona/registry.hpp"
#include "cremona/surfaces.hpp"

using namespace cremona;

namespace {

const char* marker(Status s) {
    switch (s) {
        case Status::Verified: return "✓";
        case Status::Refuted: return "✗";
        default: return "–";
    }
}

void print_result_line(const RunResult& r) {
    std::cout << marker(r.verdict.status) << " " << r.claim->id << " [" << status_name(r.verdict.status)
              << "] " << r.verdict.note << " (" << r.millis << " ms)\n";
}

std::map<std::string, std::string> parse_param_list(const std::vector<std::string>& raw) {
    std::map<std::string, std::string> out;
    for (const auto& kv : raw) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw BadParameterError("--param expects key=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

Field field_from_json(const Json& j) {
    code_t p = j.at("p").get<code_t>();
    unsigned k = j.value("k", 1u);
    if (j.contains("modulus")) {
        std::vector<code_t> m = j.at("modulus").get<std::vector<code_t>>();
        return field_make(p, k, m);
    }
    return field_make(p, k);
}

FieldElement parse_element(const Field& f, const VarSetPtr& vs, const std::string& text) {
    Polynomial p = parse_polynomial(f, vs, text);
    if (!p.is_constant()) throw ParseError("expected a constant coordinate, got '" + text + "'");
    return f.element(p.constant_value());
}

int cmd_map_order(const std::string& path, unsigned cutoff) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    Json input = Json::parse(in);
    Field f = field_from_json(input.at("field"));
    VarSetPtr vs = parse_vars(input.at("vars").get<std::vector<std::string>>());
    std::vector<Polynomial> comps;
    for (const auto& c : input.at("components")) comps.push_back(parse_polynomial(f, vs, c.get<std::string>()));
    WeightedSelfMap g(std::move(comps));
    auto order = g.order(cutoff);
    Json out{{"map", g.str()},
             {"cutoff", cutoff},
             {"order", order ? Json(*order) : Json()}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    Json input = Json::parse(in);
    Field f = field_from_json(input.at("field"));
    Json out;
    if (input.contains("b") && input.contains("a6")) {
        auto vs = dp1_vars();
        DP1Surface S = dp1_make(parse_polynomial(f, vs, input.at("b").get<std::string>()),
                                parse_polynomial(f, vs, input.at("a6").get<std::string>()));
        auto witness = dp1_singular_witness(S);
        WeightedSelfMap tau = dp1_tau(S);
        WeierstrassFibration W = dp1_to_fibration(S);
        FiberReport fr = fiber_analysis(W, f.zero(), f.one());
        out["model"] = S.F.str();
        out["smooth"] = witness.smooth;
        if (!witness.smooth) {
            Json pt = Json::array();
            for (const auto& c : witness.point) pt.push_back(c.str());
            out["singular_point"] = pt;
        }
        out["tau"] = tau.str();
        auto ord = tau.order();
        out["tau_order"] = ord ? Json(*ord) : Json();
        out["discriminant"] = discriminant(W).str();
        out["fibre_at_0_1"] =
            Json{{"smooth", fr.smooth}, {"cuspidal_normal_form", fr.cuspidal_normal_form}};
    } else {
        VarSetPtr vs = parse_vars(input.at("vars").get<std::vector<std::string>>());
        Polynomial F = parse_polynomial(f, vs, input.at("F").get<std::string>());
        WeightedHypersurface X(F);
        out["F"] = F.str();
        out["degree"] = F.degree();
        if (input.contains("point")) {
            std::vector<FieldElement> pt;
            for (const auto& c : input.at("point"))
                pt.push_back(parse_element(f, vs, c.get<std::string>()));
            out["singular_at_point"] = is_singular_at(X, pt);
        }
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_classes(unsigned N, bool with_table) {
    PicLattice L(N);
    auto classes = exceptional_classes(L);
    Json list = Json::array();
    for (const auto& E : classes) {
        Json v = Json::array();
        for (long long c : E) v.push_back(c);
        list.push_back(v);
    }
    Json out{{"N", N}, {"count", classes.size()}, {"classes", list}};
    if (with_table) {
        Json table = Json::array();
        for (const auto& a : classes) {
            Json row = Json::array();
            for (const auto& b : classes) row.push_back(L.dot(a, b));
            table.push_back(row);
        }
        out["intersections"] = table;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_profile(Context& ctx, const std::string& type, const std::string& orders_csv, bool json) {
    RootSystemType t = type_from_name(type);
    const GroupScan& scan = ctx.scan(t);
    std::set<unsigned> orders;
    std::string token;
    for (char c : orders_csv + ",") {
        if (c == ',') {
            if (!token.empty()) orders.insert(static_cast<unsigned>(std::stoul(token)));
            token.clear();
        } else {
            token += c;
        }
    }
    auto prof = orders.empty() ? scan.profile : order_profile(scan, orders);
    Json out{{"type", type_name(t)},
             {"count", scan.count},
             {"profile", registry_detail::profile_json(prof)}};
    if (json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "W(" << type_name(t) << "): " << scan.count << " elements\n";
        for (const auto& [o, st] : prof) {
            std::cout << "  order " << o << ": " << st.count << " elements, traces {";
            bool first = true;
            for (const auto& [tr, c] : st.traces) {
                std::cout << (first ? "" : ", ") << tr << " x" << c;
                first = false;
            }
            std::cout << "}, fixed ranks {";
            first = true;
            for (const auto& [rk, c] : st.fixed_ranks) {
                std::cout << (first ? "" : ", ") << rk << " x" << c;
                first = false;
            }
            std::cout << "}\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verify: exact checks for finite-order plane Cremona computations"};
    app.require_subcommand(1);

    // list
    auto* list_cmd = app.add_subcommand("list", "list registered claims");
    std::string prefix;
    list_cmd->add_option("--prefix", prefix, "only claims whose id starts with this prefix");

    // run
    auto* run_cmd = app.add_subcommand("run", "run one claim or the whole registry");
    std::string claim_id;
    bool run_everything = false;
    bool as_json = false;
    std::vector<std::string> params_raw, exclude, expect_refuted;
    std::uint64_t budget = 5000000;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    run_cmd->add_option("--claim", claim_id, "claim id");
    run_cmd->add_flag("--all", run_everything, "run every registered claim");
    run_cmd->add_option("--param", params_raw, "claim parameter override, key=value");
    run_cmd->add_flag("--json", as_json, "emit the JSON report");
    run_cmd->add_option("--budget", budget, "element budget for enumerations");
    run_cmd->add_option("--jobs", jobs, "claims run concurrently");
    run_cmd->add_option("--seed", seed, "global seed for randomized checks");
    run_cmd->add_option("--exclude", exclude, "skip claims with this id prefix");
    run_cmd->add_option("--expect-refuted", expect_refuted,
                        "treat refutations under this prefix as expected");

    // profile
    auto* profile_cmd = app.add_subcommand("profile", "order profile of a Weyl group");
    std::string type = "A4", orders_csv;
    bool profile_json_flag = false;
    std::uint64_t profile_budget = 5000000;
    profile_cmd->add_option("--type", type, "A4, D5, E6, E7 or E8");
    profile_cmd->add_option("--orders", orders_csv, "comma-separated orders (default all)");
    profile_cmd->add_flag("--json", profile_json_flag, "emit JSON");
    profile_cmd->add_option("--budget", profile_budget, "element budget");

    // map
    auto* map_cmd = app.add_subcommand("map", "order of a weighted-projective self-map");
    std::string map_file;
    unsigned cutoff = 64;
    map_cmd->add_option("--map-file", map_file, "JSON file with field, vars, components")
        ->required();
    map_cmd->add_option("--cutoff", cutoff, "iteration cutoff");

    // surface
    auto* surface_cmd = app.add_subcommand("surface", "report on a surface input file");
    std::string surface_file;
    surface_cmd->add_option("--file", surface_file, "JSON file describing the surface")
        ->required();

    // classes
    auto* classes_cmd =
        app.add_subcommand("classes", "exceptional classes of the blown-up plane, as JSON");
    unsigned class_n = 8;
    bool with_table = false;
    classes_cmd->add_option("--n", class_n, "number of blown-up points (<= 8)");
    classes_cmd->add_flag("--table", with_table, "include the pairwise intersection table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list_cmd) {
            for (const Claim* c : claims_with_prefix(prefix))
                std::cout << c->id << "  [" << c->anchor << "]  " << c->statement << "\n";
            return 0;
        }
        if (*run_cmd) {
            Context ctx;
            ctx.seed = seed;
            ctx.budget = budget;
            ctx.jobs = jobs;
            RunConfig cfg;
            cfg.exclude = exclude;
            cfg.expect_refuted = expect_refuted;
            if (run_everything ? !claim_id.empty() : claim_id.empty())
                throw BadParameterError("pass exactly one of --claim or --all");
            if (run_everything) {
                Report report = run_all(ctx, cfg);
                if (as_json) {
                    std::cout << report_to_json(report).dump(2) << "\n";
                } else {
                    for (const auto& r : report.results) print_result_line(r);
                    std::cout << "verified " << report.summary.at("verified") << ", refuted "
                              << report.summary.at("refuted") << ", skipped "
                              << report.summary.at("skipped") << ", exceeded "
                              << report.summary.at("exceeded") << "\n";
                }
                return report_exit_code(report, cfg);
            }
            const Claim& claim = find_claim(claim_id);
            RunResult r = run_claim(ctx, claim, parse_param_list(params_raw));
            if (as_json) {
                std::cout << result_to_json(r).dump(2) << "\n";
            } else {
                print_result_line(r);
            }
            if (r.verdict.status != Status::Refuted) return 0;
            for (const auto& p : expect_refuted)
                if (claim_id.rfind(p, 0) == 0) return 0;
            return 1;
        }
        if (*profile_cmd) {
            Context ctx;
            ctx.budget = profile_budget;
            return cmd_profile(ctx, type, orders_csv, profile_json_flag);
        }
        if (*map_cmd) return cmd_map_order(map_file, cutoff);
        if (*surface_cmd) return cmd_surface(surface_file);
        if (*classes_cmd) return cmd_classes(class_n, with_table);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
