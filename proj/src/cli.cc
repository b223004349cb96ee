// Copyright 2026 The stabopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabopt/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "stabopt/channel.h"
#include "stabopt/cyclic.h"
#include "stabopt/errors.h"
#include "stabopt/fer.h"
#include "stabopt/pauli.h"
#include "stabopt/search.h"

namespace stabopt {

namespace {

using nlohmann::json;

json bound_json(double bound) { return std::isfinite(bound) ? json(bound) : json("unbounded"); }

json structure_json(const StructureReport &r) {
    return json{{"css", r.is_css},
                {"cssy", r.is_cssy},
                {"dual_containing_css", r.is_dual_containing_css},
                {"linear", r.is_linear},
                {"weight4", r.has_weight4_rep},
                {"full_support", r.full_support}};
}

std::string trim(std::string s) {
    auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && issp(static_cast<unsigned char>(s.back()))) {
        s.pop_back();
    }
    std::size_t i = 0;
    while (i < s.size() && issp(static_cast<unsigned char>(s[i]))) {
        i++;
    }
    return s.substr(i);
}

std::vector<Stabilizer> read_code_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open code file '" + path + "'");
    }
    std::vector<Stabilizer> codes;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        codes.push_back(Stabilizer::parse(line));
    }
    return codes;
}

/// Shared state of one invocation.
struct Run {
    std::ostream &out;
    std::ostream &err;
    std::vector<std::string> argv;
    json results = json::array();
    std::optional<std::uint64_t> seed;
};

struct CodeSources {
    std::vector<std::string> inline_codes;
    std::vector<std::string> cyclic_words;
    std::string code_file;

    void add_options(CLI::App *app) {
        app->add_option("--code", inline_codes, "Stabilizer generators, e.g. \"XZZXI,IXZZX,XIXZZ,ZXIXZ\"");
        app->add_option("--cyclic", cyclic_words, "Single cyclic generator word, e.g. XZIZXII");
        app->add_option("--code-file", code_file, "File with one comma-separated code per line");
    }

    std::vector<Stabilizer> load() const {
        std::vector<Stabilizer> codes;
        for (const auto &c : inline_codes) {
            codes.push_back(Stabilizer::parse(c));
        }
        for (const auto &w : cyclic_words) {
            codes.push_back(Stabilizer::from_cyclic_word(w));
        }
        if (!code_file.empty()) {
            auto more = read_code_file(code_file);
            codes.insert(codes.end(), more.begin(), more.end());
        }
        if (codes.empty()) {
            throw std::invalid_argument("no code given (use --code, --cyclic or --code-file)");
        }
        return codes;
    }
};

std::vector<ChannelSpec> collect_channels(const std::vector<std::string> &items) {
    std::vector<ChannelSpec> specs;
    for (const auto &item : items) {
        auto more = parse_channel_list(item);
        specs.insert(specs.end(), more.begin(), more.end());
    }
    if (specs.empty()) {
        throw std::invalid_argument("no channel given");
    }
    return specs;
}

json channel_estimate_json(const ChannelSpec &spec, const FerEstimate &e) {
    return json{{"channel", spec.str()},   {"value", e.value},         {"bound", bound_json(e.bound)},
                {"residual", e.residual},  {"syndromes", e.syndromes}, {"errors", e.error_count},
                {"complete", e.complete}};
}

void cmd_enumerate(Run &run, int n, int k, bool classify, bool dedupe) {
    auto specs = enumerate_cyclic(n, k);
    std::vector<Stabilizer> codes;
    for (const auto &c : specs) {
        codes.push_back(to_stabilizer(c));
    }
    std::vector<int> cls(codes.size());
    std::vector<int> class_size;
    if (dedupe) {
        if (n > 8) {
            run.err << "warning: equivalence classification for n > 8 may take a long time\n";
        }
        cls = equivalence_classes(codes);
        for (int c : cls) {
            if (c >= static_cast<int>(class_size.size())) {
                class_size.resize(static_cast<std::size_t>(c) + 1, 0);
            }
            class_size[static_cast<std::size_t>(c)]++;
        }
    }
    int emitted = 0;
    for (std::size_t i = 0; i < specs.size(); i++) {
        if (dedupe && cls[i] != emitted) {
            continue;
        }
        const auto &s = codes[i];
        json line{{"n", n},
                  {"k", k},
                  {"p", specs[i].p.to_bitstring()},
                  {"q", specs[i].q.to_bitstring()},
                  {"r", specs[i].r.to_bitstring()},
                  {"stabilizer", s.to_strings()},
                  {"distance", distance(s)}};
        if (classify) {
            line["structure"] = structure_json(classify_structure(s));
            auto single = single_generator(s);
            line["single_generator"] = single ? json(single->str()) : json(nullptr);
        }
        if (dedupe) {
            line["class"] = cls[i];
            line["class_size"] = class_size[static_cast<std::size_t>(cls[i])];
        }
        run.out << line.dump() << "\n";
        emitted++;
    }
    run.results = json{{"codes", specs.size()}, {"emitted", emitted}};
}

void cmd_fer(Run &run, const std::vector<Stabilizer> &codes, const std::vector<ChannelSpec> &specs, FerKind kind,
             double bound, ErrorSetCache &cache) {
    for (const auto &s : codes) {
        std::vector<PauliChannel> channels;
        for (const auto &spec : specs) {
            channels.push_back(resolve(spec));
        }
        GeometricMeanFer gm;
        try {
            gm = geometric_mean_fer(s, channels, kind, bound, cache);
        } catch (const BudgetExceeded &ex) {
            run.out << json{{"code", s.to_strings()}, {"error", "budget_exceeded"}, {"message", ex.what()}}.dump()
                    << "\n";
            throw;
        }
        json per = json::array();
        for (std::size_t i = 0; i < specs.size(); i++) {
            per.push_back(channel_estimate_json(specs[i], gm.per_channel[i]));
            run.results.push_back(json{{"code", s.str()},
                                       {"channel", specs[i].str()},
                                       {"residual", gm.per_channel[i].residual},
                                       {"bound", bound_json(gm.per_channel[i].bound)}});
        }
        json line{{"code", s.to_strings()}, {"kind", kind_name(kind)}, {"value", gm.value}, {"bound", bound_json(gm.bound)}};
        if (specs.size() == 1) {
            const auto &e = gm.per_channel[0];
            line["residual"] = e.residual;
            line["syndromes"] = e.syndromes;
            line["errors"] = e.error_count;
        }
        line["channels"] = per;
        run.out << line.dump() << "\n";
    }
}

void cmd_classify(Run &run, const std::vector<Stabilizer> &codes) {
    for (const auto &s : codes) {
        json line{{"stabilizer", s.to_strings()}, {"n", s.n()}, {"k", s.k()}};
        line["distance"] = s.k() > 0 ? json(distance(s)) : json(nullptr);
        line["structure"] = structure_json(classify_structure(s));
        line["weight_enumerator"] = weight_enumerator(s);
        line["cyclic"] = is_shift_invariant(s);
        run.out << line.dump() << "\n";
    }
}

void cmd_hillclimb(Run &run, const SearchConfig &cfg, const std::string &trace_path, ErrorSetCache &cache) {
    SearchConfig config = cfg;
    config.record_trace = !trace_path.empty();
    auto result = hill_climb(config, cache);
    json objectives = json::array();
    for (const auto &inst : result.instances) {
        objectives.push_back(inst.objective_seo);
    }
    const auto &best = result.instances[result.best_instance];
    json line{{"n", config.n},
              {"k", config.k},
              {"best", result.best_stabilizer.to_strings()},
              {"best_instance", result.best_instance},
              {"objective_seo", result.objective_seo},
              {"objective_seo_bound", bound_json(best.objective_bound)},
              {"final_fer_map", result.final_fer_map},
              {"final_fer_map_bound", bound_json(result.final_fer_map_bound)},
              {"distance", config.k > 0 ? json(distance(result.best_stabilizer)) : json(nullptr)},
              {"instance_objectives", objectives}};
    run.out << line.dump() << "\n";
    if (!trace_path.empty()) {
        std::ofstream csv(trace_path);
        if (!csv) {
            throw std::invalid_argument("cannot write trace file '" + trace_path + "'");
        }
        csv << "iteration,percentile_objective\n";
        csv.precision(17);
        for (std::size_t i = 0; i < result.trace.size(); i++) {
            csv << i << "," << result.trace[i] << "\n";
        }
    }
    run.results = json{{"final_fer_map", result.final_fer_map},
                       {"final_fer_map_bound", bound_json(result.final_fer_map_bound)}};
}

void cmd_random_search(Run &run, const SearchConfig &config, int count, FerKind kind, ErrorSetCache &cache) {
    auto entries = random_search(config, count, kind, cache);
    for (const auto &e : entries) {
        run.out << json{{"code", e.code.to_strings()}, {"kind", kind_name(kind)}, {"value", e.value},
                        {"bound", bound_json(e.bound)}}
                       .dump()
                << "\n";
    }
}

std::vector<Stabilizer> load_family(const std::string &family) {
    if (family.rfind("cyclic:", 0) == 0) {
        int n = 0;
        int k = 0;
        char comma = 0;
        std::istringstream in(family.substr(7));
        if (!(in >> n >> comma >> k) || comma != ',') {
            throw std::invalid_argument("family must look like cyclic:7,1");
        }
        std::vector<Stabilizer> codes;
        for (const auto &c : enumerate_cyclic(n, k)) {
            codes.push_back(to_stabilizer(c));
        }
        return codes;
    }
    return read_code_file(family);
}

void cmd_tables(Run &run, const std::string &family, const std::string &channel_family, FerKind kind, double bound,
                ErrorSetCache &cache) {
    ChannelFamily fam;
    if (channel_family == "xz") {
        fam = ChannelFamily::kBiasedXZ;
    } else if (channel_family == "ad") {
        fam = ChannelFamily::kTwirledAD;
    } else {
        throw std::invalid_argument("channel family must be xz or ad");
    }
    auto codes = load_family(family);
    if (codes.empty()) {
        throw std::invalid_argument("code family '" + family + "' is empty");
    }
    auto specs = channel_grid(fam);
    std::vector<GeometricMeanFer> scores;
    for (const auto &s : codes) {
        scores.push_back(geometric_mean_fer(s, specs, kind, bound, cache));
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < codes.size(); i++) {
        if (scores[i].value < scores[best].value ||
            (scores[i].value == scores[best].value && canonical_form(codes[i]) < canonical_form(codes[best]))) {
            best = i;
        }
    }
    std::ostringstream csv;
    csv.precision(17);
    csv << "channel,min_fer,best_code_fer\n";
    std::vector<double> minima;
    for (std::size_t c = 0; c < specs.size(); c++) {
        double lo = scores[0].per_channel[c].value;
        for (const auto &sc : scores) {
            lo = std::min(lo, sc.per_channel[c].value);
        }
        minima.push_back(lo);
        csv << specs[c].str() << "," << lo << "," << scores[best].per_channel[c].value << "\n";
    }
    double mu = geometric_mean(minima);
    double lambda = scores[best].value;
    csv << "geometric_mean," << mu << "," << lambda << "\n";
    run.out << csv.str();
    run.results = json{{"lambda", lambda}, {"mu", mu}, {"best_code", codes[best].to_strings()}};
}

std::string config_echo(const CLI::App *sub) { return sub->config_to_str(true, false); }

/// Replaces "--config FILE" with the flags listed in FILE, one key=value per
/// line. Flags already given on the command line take precedence.
std::vector<std::string> expand_config(const std::vector<std::string> &args) {
    std::vector<std::string> out;
    std::vector<std::string> from_file;
    for (std::size_t i = 0; i < args.size(); i++) {
        std::string path;
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            out.push_back(args[i]);
            continue;
        }
        std::ifstream in(path);
        if (!in) {
            throw std::invalid_argument("cannot open config file '" + path + "'");
        }
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#' || line[0] == ';') {
                continue;
            }
            auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("config line is not key=value: '" + line + "'");
            }
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
                value = value.substr(1, value.size() - 2);
            }
            from_file.push_back("--" + key + "=" + value);
        }
    }
    auto given = [&](const std::string &flag) {
        std::string name = flag.substr(0, flag.find('='));
        return std::any_of(out.begin(), out.end(), [&](const std::string &a) {
            return a == name || a.rfind(name + "=", 0) == 0;
        });
    };
    std::vector<std::string> extra;
    for (const auto &f : from_file) {
        if (!given(f)) {
            extra.push_back(f);
        }
    }
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string> &raw_args, std::ostream &out, std::ostream &err) {
    auto started = std::chrono::steady_clock::now();
    CLI::App app{"Search and evaluation of stabilizer codes on asymmetric Pauli channels", "stabopt"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    int threads = 0;
    std::string manifest_path;
    app.add_option("--threads", threads, "Worker threads (default: STABOPT_THREADS or all cores)");
    app.add_option("--manifest", manifest_path, "Write the run manifest here instead of stderr");
    std::string config_path;

    // enumerate-cyclic
    auto *en = app.add_subcommand("enumerate-cyclic", "List the distinct cyclic [[n,k]] stabilizer codes");
    int en_n = 0;
    int en_k = 0;
    bool en_classify = false;
    bool en_dedupe = false;
    en->add_option("--n", en_n, "Code length")->required();
    en->add_option("--k", en_k, "Logical qubits")->required();
    en->add_flag("--classify", en_classify, "Add structure flags and single-generator witnesses");
    en->add_flag("--dedupe-equivalence", en_dedupe, "Keep one code per qubit-permutation class");
    en->add_option("--config", config_path, "Flat key=value file of flags");

    // fer
    auto *fe = app.add_subcommand("fer", "Estimate frame error rates");
    CodeSources fe_codes;
    fe_codes.add_options(fe);
    std::vector<std::string> fe_channels;
    std::string fe_kind = "map";
    double fe_bound = 0.01;
    fe->add_option("--channel,--channels", fe_channels, "Channel spec, ';'-list or grid:xz / grid:ad")->required();
    fe->add_option("--kind", fe_kind, "map, se or seo")->capture_default_str();
    fe->add_option("--bound", fe_bound, "Target relative-error bound")->capture_default_str();
    fe->add_option("--config", config_path, "Flat key=value file of flags");

    // classify
    auto *cl = app.add_subcommand("classify", "Report distance and structure of codes");
    CodeSources cl_codes;
    cl_codes.add_options(cl);
    cl->add_option("--config", config_path, "Flat key=value file of flags");

    // hillclimb and random-search share the search settings.
    SearchConfig search;
    std::vector<std::string> search_channels;
    std::string search_constraint = "none";
    std::string search_mutation = "combined";
    std::string trace_path;
    std::string rs_kind = "map";
    int rs_count = 100;
    auto add_search_options = [&](CLI::App *sub, bool climbing) {
        sub->add_option("--n", search.n, "Code length")->required();
        sub->add_option("--k", search.k, "Logical qubits")->required();
        sub->add_option("--channels,--channel", search_channels, "Objective channels")->required();
        sub->add_option("--constraint", search_constraint, "none, weight4, css, cssy or linear")->capture_default_str();
        sub->add_option("--seed", search.seed, "Master random seed")->capture_default_str();
        sub->add_option("--bound", search.target_bound, "Target relative-error bound")->capture_default_str();
        if (climbing) {
            sub->add_option("--mutation", search_mutation, "permutation, generator, combined or random")
                ->capture_default_str();
            sub->add_option("--restarts", search.restarts, "Independent instances")->capture_default_str();
            sub->add_option("--iterations", search.iterations, "Mutations per instance")->capture_default_str();
            sub->add_option("--trace", trace_path, "CSV file for the percentile trace");
            sub->add_option("--percentile", search.trace_percentile, "Trace percentile")->capture_default_str();
            sub->add_flag("--include-identity-perm", search.mutation_options.include_identity_perm,
                          "Let permutation mutations draw the identity");
        } else {
            sub->add_option("--count", rs_count, "Number of random codes")->capture_default_str();
            sub->add_option("--kind", rs_kind, "map, se or seo")->capture_default_str();
        }
        sub->add_option("--config", config_path, "Flat key=value file of flags");
    };
    auto *hc = app.add_subcommand("hillclimb", "Hill climbing with random restarts");
    add_search_options(hc, true);
    auto *rs = app.add_subcommand("random-search", "Score independent random codes");
    add_search_options(rs, false);

    // tables
    auto *tb = app.add_subcommand("tables", "Family-wide lambda and mu over the 16-channel grid");
    std::string tb_family;
    std::string tb_channel_family = "xz";
    std::string tb_kind = "map";
    double tb_bound = 0.01;
    tb->add_option("--family", tb_family, "cyclic:n,k or a file of codes")->required();
    tb->add_option("--channel-family", tb_channel_family, "xz or ad")->capture_default_str();
    tb->add_option("--kind", tb_kind, "map, se or seo")->capture_default_str();
    tb->add_option("--bound", tb_bound, "Target relative-error bound")->capture_default_str();
    tb->add_option("--config", config_path, "Flat key=value file of flags");

    // replay
    auto *rp = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
    std::string replay_path;
    rp->add_option("manifest", replay_path, "Manifest JSON file")->required();

    std::vector<std::string> args;
    try {
        args = expand_config(raw_args);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    if (rp->parsed()) {
        std::ifstream in(replay_path);
        if (!in) {
            err << "error: cannot open manifest '" << replay_path << "'\n";
            return kExitInvalid;
        }
        json m;
        try {
            m = json::parse(in);
            return run_cli(m.at("argv").get<std::vector<std::string>>(), out, err);
        } catch (const json::exception &e) {
            err << "error: malformed manifest: " << e.what() << "\n";
            return kExitInvalid;
        }
    }

    Run run{out, err, args, json::array(), std::nullopt};
    CLI::App *active = app.get_subcommands().front();
    int status = kExitOk;
    std::string failure;
    try {
        search.threads = threads;
        ErrorSetCache cache;
        if (en->parsed()) {
            cmd_enumerate(run, en_n, en_k, en_classify, en_dedupe);
        } else if (fe->parsed()) {
            cmd_fer(run, fe_codes.load(), collect_channels(fe_channels), parse_kind(fe_kind), fe_bound, cache);
        } else if (cl->parsed()) {
            cmd_classify(run, cl_codes.load());
        } else if (hc->parsed() || rs->parsed()) {
            search.channels = collect_channels(search_channels);
            search.constraint = parse_constraint(search_constraint);
            run.seed = search.seed;
            if (hc->parsed()) {
                search.mutation = parse_mutation(search_mutation);
                cmd_hillclimb(run, search, trace_path, cache);
            } else {
                search.restarts = 1;
                search.validate();
                cmd_random_search(run, search, rs_count, parse_kind(rs_kind), cache);
            }
        } else if (tb->parsed()) {
            cmd_tables(run, tb_family, tb_channel_family, parse_kind(tb_kind), tb_bound, cache);
        }
    } catch (const InfeasibleConstraint &e) {
        status = kExitInfeasible;
        failure = e.what();
    } catch (const BudgetExceeded &e) {
        status = kExitBudget;
        failure = e.what();
        if (e.has_estimate) {
            failure += " (best estimate " + json(e.best_value).dump() + " with bound " +
                       bound_json(e.best_bound).dump() + " at residual " + json(e.best_residual).dump() + ")";
        }
    } catch (const std::invalid_argument &e) {
        status = kExitInvalid;
        failure = e.what();
    } catch (const UnsatisfiableChannel &e) {
        status = kExitInvalid;
        failure = e.what();
    }
    if (!failure.empty()) {
        err << "error: " << failure << "\n";
    }

    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    json manifest{{"tool", "stabopt"},
                  {"version", kVersion},
                  {"command", active->get_name()},
                  {"argv", args},
                  {"config", config_echo(active)},
                  {"seed", run.seed ? json(*run.seed) : json(nullptr)},
                  {"threads", resolve_threads(threads)},
                  {"exit_code", status},
                  {"results", run.results},
                  {"wall_time_s", wall}};
    if (manifest_path.empty()) {
        err << manifest.dump() << "\n";
    } else {
        std::ofstream mf(manifest_path);
        if (!mf) {
            err << "error: cannot write manifest '" << manifest_path << "'\n";
            return status == kExitOk ? kExitInvalid : status;
        }
        mf << manifest.dump(2) << "\n";
    }
    return status;
}

}  // namespace stabopt
