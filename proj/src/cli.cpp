#include "fixig/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fixig/claims.hpp"
#include "fixig/enumerate.hpp"
#include "fixig/fixing.hpp"
#include "fixig/functigraph.hpp"
#include "fixig/graph.hpp"
#include "fixig/group.hpp"
#include "fixig/io.hpp"
#include "fixig/predictors.hpp"
#include "fixig/resolving.hpp"

namespace fixig {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // claim FAIL or computation error
constexpr int kExitUsage = 2;    // malformed input or bad arguments

struct GraphSourceOpts {
    std::string graph_file;   // "-" = stdin
    std::string family_spec;
    std::string function_arg;  // file or inline image list
    std::string catalog_arg;   // TAG:p1,p2,...
};

void add_graph_source(CLI::App* cmd, GraphSourceOpts& opts, bool with_function) {
    cmd->add_option("--graph", opts.graph_file, "graph file in 'n m / u v' format ('-' = stdin)");
    cmd->add_option("--family", opts.family_spec,
                    "family spec, e.g. path:5, complete:4, complete_minus_matching:6,2, "
                    "join(path:2,star:3)");
    if (with_function) {
        cmd->add_option("--function", opts.function_arg,
                        "vertex function: file or inline image list like \"0 0 2\"");
        cmd->add_option("--catalog", opts.catalog_arg,
                        "catalog function TAG:PARAMS, e.g. kn_from_profile:5,3,2");
    }
}

std::pair<std::string, std::vector<int>> parse_catalog_arg(const std::string& arg) {
    auto colon = arg.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("catalog argument must look like TAG:p1,p2,...");
    std::string tag = arg.substr(0, colon);
    std::vector<int> params;
    std::istringstream in(arg.substr(colon + 1));
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        params.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument("bad catalog parameter '" + item + "'");
    }
    return {tag, params};
}

bool looks_inline(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)) && !std::isspace(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::optional<VertexFunction> resolve_function(const GraphSourceOpts& opts) {
    if (!opts.function_arg.empty() && !opts.catalog_arg.empty())
        throw std::invalid_argument("give either --function or --catalog, not both");
    if (!opts.function_arg.empty()) {
        std::string text =
            looks_inline(opts.function_arg) ? opts.function_arg : slurp_file(opts.function_arg);
        return io::parse_function(text);
    }
    if (!opts.catalog_arg.empty()) {
        auto [tag, params] = parse_catalog_arg(opts.catalog_arg);
        return catalog_function(tag, params);
    }
    return std::nullopt;
}

Graph resolve_base_graph(const GraphSourceOpts& opts, std::istream& in) {
    if (!opts.graph_file.empty() && !opts.family_spec.empty())
        throw std::invalid_argument("give either --graph or --family, not both");
    if (!opts.graph_file.empty()) {
        if (opts.graph_file == "-") return io::read_graph(in);
        return io::parse_graph(slurp_file(opts.graph_file));
    }
    if (!opts.family_spec.empty()) return generate(FamilySpec::parse(opts.family_spec));
    if (!opts.catalog_arg.empty()) {
        auto [tag, params] = parse_catalog_arg(opts.catalog_arg);
        return catalog_base_graph(tag, params);
    }
    return io::read_graph(in);  // default source: stdin (supports piping)
}

// Base graph, and the functigraph over it when a function was supplied.
Graph resolve_target_graph(const GraphSourceOpts& opts, std::istream& in, std::ostream& err) {
    Graph base = resolve_base_graph(opts, in);
    auto fn = resolve_function(opts);
    if (!fn) {
        if (!is_connected(base)) err << "note: input graph is disconnected\n";
        return base;
    }
    return build_functigraph(base, *fn);
}

void print_id_list(std::ostream& out, const std::vector<int>& ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out << ' ';
        out << ids[i];
    }
}

int run_verify(const std::string& suite, const claims::CheckParams& params, bool as_json,
               std::ostream& out) {
    auto ids = claims::suite_claims(suite);
    int pass = 0, fail = 0, skip = 0;
    for (const auto& id : ids) {
        for (const auto& rep : claims::check_claim(id, params)) {
            switch (rep.verdict) {
                case claims::Verdict::pass: ++pass; break;
                case claims::Verdict::fail: ++fail; break;
                case claims::Verdict::skip: ++skip; break;
            }
            if (as_json) {
                out << claims::report_json(rep).dump() << '\n';
            } else {
                out << '[' << (rep.verdict == claims::Verdict::pass
                                   ? "PASS"
                                   : rep.verdict == claims::Verdict::fail ? "FAIL" : "SKIP")
                    << "] " << rep.claim << " | " << rep.instance;
                if (!rep.predicted.is_null()) out << " | predicted=" << rep.predicted.dump();
                out << " | computed=" << rep.computed.dump();
                if (!rep.reason.empty()) out << " | " << rep.reason;
                out << '\n';
            }
        }
    }
    json summary = {{"pass", pass}, {"fail", fail}, {"skip", skip}};
    if (as_json)
        out << json{{"summary", summary}}.dump() << '\n';
    else
        out << "summary: pass=" << pass << " fail=" << fail << " skip=" << skip << '\n';
    return fail == 0 ? kExitOk : kExitFailure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"graph symmetry toolkit: fixing numbers, metric dimension and "
                 "functigraph claim verification"};
    app.require_subcommand(1);

    GraphSourceOpts fix_opts, aut_opts, mdim_opts, build_opts, enum_fn_opts;
    bool as_json = false;
    bool with_elements = false;
    int max_n = 0;
    std::uint64_t max_elements = 0;
    std::string suite = "all";
    claims::CheckParams verify_params;
    int pred_n = 0, pred_i = 0, pred_s = 0;
    std::string pred_profile, pred_image = "n.a.", predictor;
    int enum_n = 0;

    auto* fix_cmd = app.add_subcommand("fix", "fixing number of a graph or functigraph");
    add_graph_source(fix_cmd, fix_opts, true);
    fix_cmd->add_flag("--json", as_json, "JSON output");
    fix_cmd->add_option("--max-n", max_n, "override automorphism size cap");
    fix_cmd->add_option("--max-elements", max_elements, "override group element cap");

    auto* aut_cmd = app.add_subcommand("aut", "automorphism group of a graph or functigraph");
    add_graph_source(aut_cmd, aut_opts, true);
    aut_cmd->add_flag("--json", as_json, "JSON output");
    aut_cmd->add_flag("--elements", with_elements, "include the full element list");
    aut_cmd->add_option("--max-n", max_n, "override automorphism size cap");
    aut_cmd->add_option("--max-elements", max_elements, "override group element cap");

    auto* mdim_cmd = app.add_subcommand("mdim", "metric dimension of a graph or functigraph");
    add_graph_source(mdim_cmd, mdim_opts, true);
    mdim_cmd->add_flag("--json", as_json, "JSON output");
    mdim_cmd->add_option("--max-n", max_n, "override metric dimension size cap");

    auto* build_cmd = app.add_subcommand("build", "emit a graph or functigraph in text format");
    add_graph_source(build_cmd, build_opts, true);

    auto* predict_cmd = app.add_subcommand("predict", "closed-form predictors");
    predict_cmd->add_option("--predictor", predictor, "kn | matching | equality")->required();
    predict_cmd->add_option("--n", pred_n, "graph order");
    predict_cmd->add_option("--profile", pred_profile, "preimage profile, e.g. 3,2");
    predict_cmd->add_option("--i", pred_i, "number of deleted matching edges");
    predict_cmd->add_option("--image", pred_image, "twin | saturated (odd final case)");
    predict_cmd->add_option("--s", pred_s, "image size for the equality characterization");
    predict_cmd->add_flag("--json", as_json, "JSON output");

    auto* verify_cmd = app.add_subcommand("verify", "run claim verification suites");
    verify_cmd->add_option("--suite", suite, "suite alias or claim id (default: all)");
    verify_cmd->add_option("--max-n", verify_params.max_n, "cap the sweep dimension");
    verify_cmd->add_option("--seed", verify_params.seed, "seed for sampled instances");
    verify_cmd->add_option("--jobs", verify_params.jobs, "worker cap (output is order-stable)");
    verify_cmd->add_flag("--json", as_json, "JSON-lines reports");

    auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive generators");
    auto* enum_graphs = enum_cmd->add_subcommand("graphs", "all labeled connected graphs");
    enum_graphs->add_option("--n", enum_n, "vertex count")->required();
    auto* enum_fns =
        enum_cmd->add_subcommand("functions", "sweep all functions over a base graph");
    add_graph_source(enum_fns, enum_fn_opts, false);
    enum_fns->add_flag("--json", as_json, "JSON output");
    enum_cmd->require_subcommand(1);

    std::vector<std::string> argv_storage;
    argv_storage.push_back("fixig");
    for (const auto& a : args) argv_storage.push_back(a);
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    Caps caps = Caps::defaults();
    try {
        if (app.got_subcommand(fix_cmd)) {
            if (max_n > 0) caps.aut_max_n = max_n;
            if (max_elements > 0) caps.aut_max_elements = max_elements;
            Graph g = resolve_target_graph(fix_opts, in, err);
            FixingResult r = fixing_number(g, caps);
            if (as_json) {
                out << io::fixing_json(r).dump() << '\n';
            } else {
                out << "fix=" << r.fix << '\n' << "witness=";
                print_id_list(out, r.witness);
                out << '\n'
                    << "aut_order=" << r.aut_order << '\n'
                    << "lower_bound=" << r.lower_bound_used << '\n';
            }
        } else if (app.got_subcommand(aut_cmd)) {
            if (max_n > 0) caps.aut_max_n = max_n;
            if (max_elements > 0) caps.aut_max_elements = max_elements;
            Graph g = resolve_target_graph(aut_opts, in, err);
            PermGroup grp = automorphism_group(g, caps);
            if (as_json) {
                out << io::group_json(grp, with_elements).dump() << '\n';
            } else {
                out << "order=" << grp.order() << '\n' << "generators:" << '\n';
                for (const Perm& p : grp.generators()) out << p.to_line() << '\n';
                if (with_elements) {
                    out << "elements:" << '\n';
                    for (std::uint64_t i = 0; i < grp.order(); ++i)
                        out << grp.element_perm(i).to_line() << '\n';
                }
            }
        } else if (app.got_subcommand(mdim_cmd)) {
            if (max_n > 0) caps.mdim_max_n = max_n;
            Graph g = resolve_target_graph(mdim_opts, in, err);
            ResolvingResult r = metric_dimension(g, caps);
            if (as_json) {
                out << io::resolving_json(r).dump() << '\n';
            } else {
                out << "beta=" << r.beta << '\n' << "witness=";
                print_id_list(out, r.witness);
                out << '\n';
            }
        } else if (app.got_subcommand(build_cmd)) {
            Graph g = resolve_target_graph(build_opts, in, err);
            out << io::write_graph(g);
        } else if (app.got_subcommand(predict_cmd)) {
            json result;
            if (predictor == "kn") {
                if (pred_n <= 0 || pred_profile.empty())
                    throw std::invalid_argument("predict kn needs --n and --profile");
                std::vector<int> counts;
                std::istringstream ps(pred_profile);
                std::string item;
                while (std::getline(ps, item, ',')) counts.push_back(std::stoi(item));
                int fix = predicted_fix_complete(pred_n, PreimageProfile{counts});
                result = {{"predictor", "kn"}, {"n", pred_n}, {"profile", counts}, {"predicted", fix}};
            } else if (predictor == "matching") {
                if (pred_n <= 0 || pred_i <= 0)
                    throw std::invalid_argument("predict matching needs --n and --i");
                ImageKind kind = pred_image == "twin"
                                     ? ImageKind::twin
                                     : pred_image == "saturated" ? ImageKind::saturated
                                                                 : ImageKind::unspecified;
                int fix = predicted_fix_complete_minus_matching(pred_n, pred_i, kind);
                result = {{"predictor", "matching"},
                          {"n", pred_n},
                          {"i", pred_i},
                          {"image", pred_image},
                          {"predicted", fix}};
            } else if (predictor == "equality") {
                if (pred_s < 2) throw std::invalid_argument("predict equality needs --s >= 2");
                result = {{"predictor", "equality"},
                          {"s", pred_s},
                          {"orders", equality_complete_orders(pred_s)}};
            } else {
                throw std::invalid_argument("unknown predictor '" + predictor +
                                            "' (kn | matching | equality)");
            }
            if (as_json) {
                out << result.dump() << '\n';
            } else if (result.contains("predicted")) {
                out << "predicted=" << result["predicted"].get<int>() << '\n';
            } else {
                out << "orders=";
                auto orders = result["orders"].get<std::vector<int>>();
                print_id_list(out, orders);
                out << '\n';
            }
        } else if (app.got_subcommand(verify_cmd)) {
            return run_verify(suite, verify_params, as_json, out);
        } else if (app.got_subcommand(enum_cmd)) {
            if (enum_cmd->got_subcommand(enum_graphs)) {
                auto graphs = connected_graphs(enum_n, caps);
                for (std::size_t i = 0; i < graphs.size(); ++i) {
                    out << "# " << i + 1 << "/" << graphs.size() << '\n'
                        << io::write_graph(graphs[i]);
                }
            } else {
                Graph base = resolve_base_graph(enum_fn_opts, in);
                FunctionSweep sweep = sweep_all_functions(base, caps);
                json hist = json::object();
                for (const auto& [fix, count] : sweep.fix_histogram)
                    hist[std::to_string(fix)] = count;
                json result = {{"n", sweep.base_order},
                               {"functions", sweep.functions},
                               {"fix_histogram", hist},
                               {"min_fix", sweep.min_fix},
                               {"max_fix", sweep.max_fix},
                               {"min_fix_function", sweep.min_fix_function.images},
                               {"max_fix_function", sweep.max_fix_function.images},
                               {"beta_range", {sweep.min_beta, sweep.max_beta}},
                               {"bound_violations",
                                sweep.fix_bound_violations + sweep.beta_bound_violations +
                                    sweep.fix_le_beta_violations}};
                if (as_json) {
                    out << result.dump() << '\n';
                } else {
                    out << "functions=" << sweep.functions << '\n'
                        << "fix_histogram=" << hist.dump() << '\n'
                        << "fix_range=[" << sweep.min_fix << "," << sweep.max_fix << "]" << '\n'
                        << "beta_range=[" << sweep.min_beta << "," << sweep.max_beta << "]"
                        << '\n'
                        << "bound_violations="
                        << sweep.fix_bound_violations + sweep.beta_bound_violations +
                               sweep.fix_le_beta_violations
                        << '\n';
                }
            }
        }
    } catch (const io::ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

} // namespace fixig
