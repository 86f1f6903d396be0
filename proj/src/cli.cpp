#include "czekan/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "czekan/dataset.hpp"
#include "czekan/metrics.hpp"
#include "czekan/parallel.hpp"
#include "czekan/pipeline.hpp"
#include "czekan/render.hpp"
#include "czekan/rng.hpp"

namespace czekan::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// ---------------------------------------------------------------- options

struct IngestOptions {
    std::string label_column;
    std::string id_column;
    std::string missing_policy = "drop_row";

    CsvOptions to_csv_options() const {
        CsvOptions opt;
        if (!label_column.empty()) opt.label_column = label_column;
        if (!id_column.empty()) opt.id_column = id_column;
        if (missing_policy == "drop_row")
            opt.missing_policy = MissingPolicy::drop_row;
        else if (missing_policy == "error")
            opt.missing_policy = MissingPolicy::error;
        else
            throw Error("unknown missing policy: " + missing_policy + " (drop_row|error)");
        return opt;
    }
};

struct PipelineOptions {
    std::string method = "OLO_average";
    int k = 2;
    int n_classes = 5;
    std::vector<double> probs;
    std::string mode = "symmetric";
    std::vector<double> fractions;
    bool scale = true;
    double fuzziness = 2.0;
    int fcm_max_iter = 100;
    double fcm_tol = 1e-6;
    std::string fcm_init = "spread";
    double sig_level = 0.05;
    int n_perm = 199;
    int min_size = 2;
    double alpha = 1.0;
    int max_cp = 0;  // 0 = default K-1
    std::uint64_t seed = 1;
    int spin_max_iter = 10;

    RunConfig to_run_config() const {
        RunConfig cfg;
        cfg.method = seriation_method_from_string(method);
        cfg.n_classes = n_classes;
        cfg.probs = probs;
        if (mode == "symmetric")
            cfg.mode = CzekMode::symmetric;
        else if (mode == "asymmetric")
            cfg.mode = CzekMode::asymmetric;
        else
            throw Error("unknown mode: " + mode + " (symmetric|asymmetric)");
        cfg.column_group_fractions = fractions;
        cfg.fcm.k = k;
        cfg.fcm.fuzziness = fuzziness;
        cfg.fcm.max_iter = fcm_max_iter;
        cfg.fcm.tol = fcm_tol;
        if (fcm_init == "spread")
            cfg.fcm.init = FcmInit::spread;
        else if (fcm_init == "random")
            cfg.fcm.init = FcmInit::random;
        else
            throw Error("unknown fcm init: " + fcm_init + " (spread|random)");
        cfg.ediv.sig_level = sig_level;
        cfg.ediv.n_perm = n_perm;
        cfg.ediv.min_size = min_size;
        cfg.ediv.alpha = alpha;
        if (max_cp > 0) cfg.ediv.max_changepoints = max_cp;
        cfg.scaling = scale;
        cfg.spin_max_iter = spin_max_iter;
        cfg.reseed(seed);
        return cfg;
    }
};

void add_ingest_flags(CLI::App* cmd, IngestOptions& opt) {
    cmd->add_option("--label-column", opt.label_column, "Name of the class label column");
    cmd->add_option("--id-column", opt.id_column, "Name of the row id column");
    cmd->add_option("--missing-policy", opt.missing_policy, "drop_row|error")
        ->default_val("drop_row");
}

void add_pipeline_flags(CLI::App* cmd, PipelineOptions& opt) {
    cmd->add_option("--method", opt.method, "OLO_average|OLO_ward|HC_ward|GW_ward|SPIN_NH")
        ->default_val("OLO_average");
    cmd->add_option("--k", opt.k, "Number of clusters")->default_val(2);
    cmd->add_option("--n-classes", opt.n_classes, "Distance classes in the diagram")->default_val(5);
    cmd->add_option("--probs", opt.probs, "Quantile levels for symmetric breaks")->delimiter(',');
    cmd->add_option("--mode", opt.mode, "symmetric|asymmetric")->default_val("symmetric");
    cmd->add_option("--fractions", opt.fractions, "Column group fractions (asymmetric mode)")
        ->delimiter(',');
    cmd->add_flag("--scale,!--no-scale", opt.scale, "Apply z-score scaling (default on)");
    cmd->add_option("--fuzziness", opt.fuzziness, "Fuzzification degree m")->default_val(2.0);
    cmd->add_option("--fcm-max-iter", opt.fcm_max_iter)->default_val(100);
    cmd->add_option("--fcm-tol", opt.fcm_tol)->default_val(1e-6);
    cmd->add_option("--fcm-init", opt.fcm_init, "spread|random")->default_val("spread");
    cmd->add_option("--sig-level", opt.sig_level, "Change-point significance level")
        ->default_val(0.05);
    cmd->add_option("--n-perm", opt.n_perm, "Permutation replicates")->default_val(199);
    cmd->add_option("--min-size", opt.min_size, "Minimum segment length")->default_val(2);
    cmd->add_option("--alpha", opt.alpha, "Moment index")->default_val(1.0);
    cmd->add_option("--max-cp", opt.max_cp, "Max change points (0 = K-1)")->default_val(0);
    cmd->add_option("--seed", opt.seed, "Random seed")->default_val(1);
    cmd->add_option("--spin-max-iter", opt.spin_max_iter, "SPIN steps per band width")
        ->default_val(10);
}

// ------------------------------------------------------------- formatting

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

json optional_json(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

std::string config_summary(const PipelineOptions& opt, const std::string& input) {
    std::ostringstream out;
    out << "input=" << input << " method=" << opt.method << " k=" << opt.k
        << " n_classes=" << opt.n_classes << " mode=" << opt.mode
        << " scale=" << (opt.scale ? "on" : "off") << " fuzziness=" << opt.fuzziness
        << " fcm_max_iter=" << opt.fcm_max_iter << " fcm_tol=" << opt.fcm_tol
        << " fcm_init=" << opt.fcm_init << " sig_level=" << opt.sig_level
        << " n_perm=" << opt.n_perm << " min_size=" << opt.min_size << " alpha=" << opt.alpha
        << " max_cp=" << opt.max_cp << " spin_max_iter=" << opt.spin_max_iter
        << " seed=" << opt.seed;
    return out.str();
}

json config_json(const PipelineOptions& opt, const IngestOptions& ingest,
                 const std::string& input) {
    json cfg;
    cfg["input"] = {{"path", input},
                    {"label_column", ingest.label_column},
                    {"id_column", ingest.id_column},
                    {"missing_policy", ingest.missing_policy}};
    cfg["method"] = opt.method;
    cfg["n_classes"] = opt.n_classes;
    cfg["probs"] = opt.probs.empty() ? json(default_probs(opt.n_classes)) : json(opt.probs);
    cfg["mode"] = opt.mode;
    cfg["column_group_fractions"] = opt.fractions;
    cfg["scaling"] = opt.scale;
    cfg["seed"] = opt.seed;
    cfg["spin_max_iter"] = opt.spin_max_iter;
    cfg["fcm"] = {{"k", opt.k},
                  {"fuzziness", opt.fuzziness},
                  {"max_iter", opt.fcm_max_iter},
                  {"tol", opt.fcm_tol},
                  {"init", opt.fcm_init}};
    cfg["e_divisive"] = {{"sig_level", opt.sig_level},
                         {"n_perm", opt.n_perm},
                         {"min_size", opt.min_size},
                         {"alpha", opt.alpha},
                         {"max_changepoints", opt.max_cp > 0 ? json(opt.max_cp) : json("k-1")}};
    return cfg;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

// --------------------------------------------------------------- reports

struct Evaluation {
    LabelMatch match;
    std::optional<double> kappa;
    std::vector<ClassificationScores> per_class;  // aligned with match.class_names
};

Evaluation evaluate(const std::vector<int>& labels_original, const std::vector<std::string>& truth,
                    int k) {
    Evaluation eval;
    eval.match = match_labels(labels_original, truth, k);
    for (const auto& counts : eval.match.per_class)
        eval.per_class.push_back(classification_scores(counts));
    if (!eval.per_class.empty()) eval.kappa = eval.per_class.front().kappa;
    return eval;
}

json evaluation_json(const Evaluation& eval) {
    json out;
    out["accuracy"] = eval.match.accuracy;
    out["kappa"] = optional_json(eval.kappa);
    json assignment = json::object();
    for (const auto& [cluster, cls] : eval.match.assignment)
        assignment[std::to_string(cluster)] = cls;
    out["assignment"] = assignment;
    out["per_class"] = json::array();
    for (std::size_t c = 0; c < eval.match.class_names.size(); ++c) {
        const auto& counts = eval.match.per_class[c];
        const auto& scores = eval.per_class[c];
        out["per_class"].push_back({{"class", eval.match.class_names[c]},
                                    {"tp", counts.tp},
                                    {"tn", counts.tn},
                                    {"fp", counts.fp},
                                    {"fn", counts.fn},
                                    {"precision", optional_json(scores.precision)},
                                    {"recall", optional_json(scores.recall)},
                                    {"f1", optional_json(scores.f1)}});
    }
    return out;
}

std::string score_or_na(const std::optional<double>& v) {
    return v ? fmt("%.4f", *v) : std::string("undefined");
}

std::string report_text(const std::string& method, const std::optional<Evaluation>& eval,
                        double u_m, double path_len, const std::vector<std::string>& truth) {
    std::ostringstream out;
    out << "Seriation method: " << method << "\n";
    out << "Path Length  " << fmt("%.4f", path_len) << "\n";
    out << "U_m Factor   " << fmt("%.2f", u_m) << "\n";
    if (eval) {
        out << "Accuracy     " << fmt("%.4f", eval->match.accuracy) << "\n";
        out << "Kappa        " << score_or_na(eval->kappa) << "\n";
        for (std::size_t c = 0; c < eval->match.class_names.size(); ++c) {
            const auto& scores = eval->per_class[c];
            out << "\n" << eval->match.class_names[c] << " (as positive)\n";
            out << "  Precision  " << score_or_na(scores.precision) << "\n";
            out << "  Recall     " << score_or_na(scores.recall) << "\n";
            out << "  F1-score   " << score_or_na(scores.f1) << "\n";
        }

        // Confusion matrix, rows = result, columns = actual.
        const auto& names = eval->match.class_names;
        std::vector<std::vector<long long>> table(names.size(),
                                                  std::vector<long long>(names.size(), 0));
        std::map<std::string, std::size_t> index;
        for (std::size_t c = 0; c < names.size(); ++c) index[names[c]] = c;
        for (std::size_t i = 0; i < truth.size(); ++i)
            ++table[index.at(eval->match.predicted[i])][index.at(truth[i])];
        out << "\nConfusion matrix (rows = result, columns = actual)\n";
        std::size_t name_width = 6;
        for (const auto& name : names) name_width = std::max(name_width, name.size());
        out << std::string(name_width + 2, ' ');
        for (const auto& name : names) out << "  " << name;
        out << "\n";
        for (std::size_t r = 0; r < names.size(); ++r) {
            out << "  " << names[r] << std::string(name_width - names[r].size(), ' ');
            for (std::size_t c = 0; c < names.size(); ++c) {
                char buf[32];
                std::snprintf(buf, sizeof(buf), "  %*lld", static_cast<int>(names[c].size()),
                              table[r][c]);
                out << buf;
            }
            out << "\n";
        }
    }
    return out.str();
}

// ----------------------------------------------------------- subcommands

struct ClusterArgs {
    std::string input;
    std::string out_dir = ".";
    IngestOptions ingest;
    PipelineOptions pipeline;
    unsigned threads = 0;
    bool dump_distances = false;
    bool show_labels = false;
};

int cmd_cluster(const ClusterArgs& args) {
    set_thread_count(args.threads);
    const Dataset ds = load_csv(args.input, args.ingest.to_csv_options());
    const RunConfig cfg = args.pipeline.to_run_config();
    const PipelineResult result = czekanowski_cluster(ds, cfg);

    fs::create_directories(args.out_dir);
    const std::string summary = config_summary(args.pipeline, args.input);

    json out;
    out["schema_version"] = kResultsSchemaVersion;
    out["tool"] = {{"name", "czekan"}, {"version", kVersion}};
    out["config"] = config_json(args.pipeline, args.ingest, args.input);
    out["dataset"] = {{"rows", ds.n()},
                      {"features", ds.dim()},
                      {"dropped_rows", ds.dropped_rows},
                      {"feature_names", ds.feature_names}};

    std::vector<int> order_1based;
    order_1based.reserve(result.permutation.size());
    for (int idx : result.permutation.order) order_1based.push_back(idx + 1);
    out["seriation"] = {{"method", to_string(cfg.method)},
                        {"u_m", result.u_m},
                        {"path_length", result.path_len},
                        {"order", order_1based}};
    out["czek"] = {{"n_classes", result.czek.n_classes},
                   {"mode", args.pipeline.mode},
                   {"breaks", result.czek.breaks},
                   {"warnings", result.czek.warnings}};
    if (cfg.fcm.k >= 2) {
        out["fcm"] = {{"converged", result.membership.converged},
                      {"iterations", result.membership.iterations},
                      {"objective", result.membership.objective_trace.empty()
                                        ? json(nullptr)
                                        : json(result.membership.objective_trace.back())}};
        out["changepoints"] = {{"locations", result.changepoints.locations},
                               {"p_values", result.changepoints.p_values},
                               {"test_stats", result.changepoints.test_stats}};
    }
    json intervals = json::array();
    for (const auto& interval : result.clusters.intervals)
        intervals.push_back({interval.start, interval.end});
    out["clusters"] = {{"k_requested", result.clusters.k_requested},
                       {"k_found", result.clusters.k_found},
                       {"intervals", intervals},
                       {"labels_seriated", result.clusters.labels},
                       {"labels_original_order", result.clusters.labels_original_order}};

    std::optional<Evaluation> eval;
    if (ds.labels) {
        eval = evaluate(result.clusters.labels_original_order, *ds.labels,
                        result.clusters.k_found);
        out["evaluation"] = evaluation_json(*eval);
        out["evaluation"]["u_m"] = result.u_m;
        out["evaluation"]["path_length"] = result.path_len;
    }

    const fs::path dir(args.out_dir);
    write_text_file((dir / "results.json").string(), out.dump(2) + "\n");

    if (cfg.fcm.k >= 2) {
        std::ostringstream csv;
        csv << "# czekan v" << kVersion << " " << summary << "\n";
        csv << "position,row_id";
        for (std::size_t j = 0; j < result.membership.k(); ++j) csv << ",cluster_" << j + 1;
        csv << "\n";
        for (std::size_t pos = 0; pos < result.membership.n(); ++pos) {
            csv << pos + 1 << "," << ds.row_ids[result.permutation.order[pos]];
            for (std::size_t j = 0; j < result.membership.k(); ++j)
                csv << "," << fmt("%.17g", result.membership.values(j, pos));
            csv << "\n";
        }
        write_text_file((dir / "membership.csv").string(), csv.str());
    }

    DiagramStyle style;
    style.show_labels = args.show_labels;
    render_svg(result.czek, result.clusters, style, (dir / "diagram.svg").string(), ds.row_ids,
               "czekan v" + std::string(kVersion) + " " + summary);

    const std::string report =
        report_text(to_string(cfg.method), eval, result.u_m, result.path_len,
                    ds.labels ? *ds.labels : std::vector<std::string>{}) +
        "\nconfig: " + summary + "\n";
    write_text_file((dir / "report.txt").string(), report);

    if (args.dump_distances) {
        std::ostringstream csv;
        csv << "# czekan v" << kVersion << " " << summary << "\n";
        for (std::size_t i = 0; i < result.distances.size(); ++i) {
            for (std::size_t j = 0; j < result.distances.size(); ++j)
                csv << (j ? "," : "") << fmt("%.17g", result.distances(i, j));
            csv << "\n";
        }
        write_text_file((dir / "distances.csv").string(), csv.str());
    }

    std::cout << report;
    std::cout << "k_found: " << result.clusters.k_found << "\n";
    std::cout << "wrote: " << (dir / "results.json").string() << "\n";
    return 0;
}

struct DiagramArgs {
    std::string input;
    std::string out = "diagram.svg";
    IngestOptions ingest;
    PipelineOptions pipeline;
    unsigned threads = 0;
    bool ascii = false;
    bool show_labels = false;
};

int cmd_diagram(const DiagramArgs& args) {
    set_thread_count(args.threads);
    const Dataset ds = load_csv(args.input, args.ingest.to_csv_options());
    const RunConfig cfg = args.pipeline.to_run_config();

    const Dataset* data = &ds;
    Dataset scaled;
    if (cfg.scaling) {
        scaled = zscore(ds).first;
        data = &scaled;
    }
    const DistanceMatrix w = distance_matrix(*data);
    const Permutation pi = seriate(w, cfg.method, cfg.seed, cfg.spin_max_iter);
    const CzekMatrix czek = cfg.mode == CzekMode::symmetric
                                ? czek_symmetric(w, pi, cfg.n_classes, cfg.probs)
                                : czek_asymmetric(w, pi, cfg.n_classes, cfg.column_group_fractions);

    DiagramStyle style;
    style.show_labels = args.show_labels;
    render_svg(czek, std::nullopt, style, args.out, ds.row_ids,
               "czekan v" + std::string(kVersion) + " " + config_summary(args.pipeline, args.input));
    if (args.ascii) std::cout << render_ascii(czek);
    std::cout << "wrote: " << args.out << "\n";
    return 0;
}

struct EvalArgs {
    std::string results;
    std::string truth_csv;
    std::string out;
    IngestOptions ingest;
    bool missing_policy_given = false;
};

int cmd_eval(const EvalArgs& args) {
    std::ifstream in(args.results);
    if (!in) throw Error("cannot open file: " + args.results);
    json results = json::parse(in);

    if (!results.contains("clusters")) throw Error("results file has no clusters section");
    const std::vector<int> labels =
        results["clusters"]["labels_original_order"].get<std::vector<int>>();
    const int k_found = results["clusters"]["k_found"].get<int>();

    // Reuse the recorded ingest settings unless overridden.
    IngestOptions ingest = args.ingest;
    if (results.contains("config") && results["config"].contains("input")) {
        const auto& rec = results["config"]["input"];
        if (ingest.label_column.empty()) ingest.label_column = rec.value("label_column", "");
        if (ingest.id_column.empty()) ingest.id_column = rec.value("id_column", "");
        if (!args.missing_policy_given)
            ingest.missing_policy = rec.value("missing_policy", "drop_row");
    }
    if (ingest.label_column.empty()) throw Error("eval needs a label column");

    const Dataset truth_ds = load_csv(args.truth_csv, ingest.to_csv_options());
    if (!truth_ds.labels) throw Error("truth file has no label column");
    if (truth_ds.n() != labels.size())
        throw Error("row mismatch: results has " + std::to_string(labels.size()) +
                    " observations, truth file has " + std::to_string(truth_ds.n()));

    const Evaluation eval = evaluate(labels, *truth_ds.labels, k_found);
    json out = evaluation_json(eval);
    if (results.contains("seriation")) {
        out["u_m"] = results["seriation"]["u_m"];
        out["path_length"] = results["seriation"]["path_length"];
    }

    const std::string method =
        results.contains("seriation") ? results["seriation"].value("method", "?") : "?";
    const double u_m = out.contains("u_m") && out["u_m"].is_number() ? out["u_m"].get<double>() : 0.0;
    const double path_len = out.contains("path_length") && out["path_length"].is_number()
                                ? out["path_length"].get<double>()
                                : 0.0;
    std::cout << report_text(method, eval, u_m, path_len, *truth_ds.labels);

    if (!args.out.empty()) write_text_file(args.out, out.dump(2) + "\n");
    return 0;
}

struct SynthArgs {
    int n_per_cluster = 10;
    int k = 2;
    int dim = 2;
    double separation = 10.0;
    std::uint64_t seed = 1;
    std::string out = "synth.csv";
};

int cmd_synth(const SynthArgs& args) {
    if (args.n_per_cluster < 1 || args.k < 1 || args.dim < 1)
        throw Error("sizes must be positive");
    if (args.separation < 0.0) throw Error("separation must be nonnegative");

    // With dim >= k the centers sit on a scaled simplex, all pairs exactly
    // `separation` apart; otherwise they go on a line with consecutive
    // centers at that distance.
    std::vector<std::vector<double>> centers(args.k, std::vector<double>(args.dim, 0.0));
    if (args.dim >= args.k) {
        for (int t = 0; t < args.k; ++t) centers[t][t] = args.separation / std::sqrt(2.0);
    } else {
        for (int t = 0; t < args.k; ++t) centers[t][0] = args.separation * t;
    }

    Rng rng(derive_seed(args.seed, 0x53594eULL));  // "SYN"
    std::ostringstream csv;
    csv << "id";
    for (int c = 0; c < args.dim; ++c) csv << ",f" << c + 1;
    csv << ",class\n";
    int row = 0;
    for (int t = 0; t < args.k; ++t) {
        for (int i = 0; i < args.n_per_cluster; ++i) {
            char id[16];
            std::snprintf(id, sizeof(id), "s%04d", ++row);
            csv << id;
            for (int c = 0; c < args.dim; ++c)
                csv << "," << fmt("%.10g", centers[t][c] + rng.gaussian());
            csv << ",c" << t + 1 << "\n";
        }
    }
    write_text_file(args.out, csv.str());
    std::cout << "wrote: " << args.out << " (" << args.k * args.n_per_cluster << " rows)\n";
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"Czekanowski diagram construction, clustering and evaluation"};
    app.set_config("--config", "", "Config file with key=value lines ([subcommand] sections)");
    app.require_subcommand(1);

    ClusterArgs cluster_args;
    auto* cluster = app.add_subcommand("cluster", "Run the full clustering pipeline");
    cluster->add_option("input", cluster_args.input, "Input CSV")->required();
    cluster->add_option("--out-dir", cluster_args.out_dir, "Output directory")->default_val(".");
    cluster->add_option("--threads", cluster_args.threads, "Worker threads (0 = all cores)")
        ->default_val(0);
    cluster->add_flag("--dump-distances", cluster_args.dump_distances,
                      "Also write the distance matrix");
    cluster->add_flag("--labels", cluster_args.show_labels, "Draw row ids on the diagram");
    add_ingest_flags(cluster, cluster_args.ingest);
    add_pipeline_flags(cluster, cluster_args.pipeline);

    DiagramArgs diagram_args;
    auto* diagram = app.add_subcommand("diagram", "Render a Czekanowski diagram");
    diagram->add_option("input", diagram_args.input, "Input CSV")->required();
    diagram->add_option("--out", diagram_args.out, "SVG output path")->default_val("diagram.svg");
    diagram->add_option("--threads", diagram_args.threads)->default_val(0);
    diagram->add_flag("--ascii", diagram_args.ascii, "Also print an ascii diagram");
    diagram->add_flag("--labels", diagram_args.show_labels, "Draw row ids on the diagram");
    add_ingest_flags(diagram, diagram_args.ingest);
    add_pipeline_flags(diagram, diagram_args.pipeline);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Score a results file against true labels");
    eval->add_option("results", eval_args.results, "results.json from cluster")->required();
    eval->add_option("truth", eval_args.truth_csv, "CSV with true labels")->required();
    eval->add_option("--out", eval_args.out, "Write the score report as JSON");
    add_ingest_flags(eval, eval_args.ingest);

    SynthArgs synth_args;
    auto* synth = app.add_subcommand("synth", "Generate Gaussian blob data");
    synth->add_option("--n-per-cluster", synth_args.n_per_cluster)->default_val(10);
    synth->add_option("--k", synth_args.k)->default_val(2);
    synth->add_option("--dim", synth_args.dim)->default_val(2);
    synth->add_option("--separation", synth_args.separation)->default_val(10.0);
    synth->add_option("--seed", synth_args.seed)->default_val(1);
    synth->add_option("--out", synth_args.out)->default_val("synth.csv");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    eval_args.missing_policy_given = eval->count("--missing-policy") > 0;

    try {
        if (cluster->parsed()) return cmd_cluster(cluster_args);
        if (diagram->parsed()) return cmd_diagram(diagram_args);
        if (eval->parsed()) return cmd_eval(eval_args);
        if (synth->parsed()) return cmd_synth(synth_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand given\n";
    return 1;
}

}  // namespace czekan::cli
