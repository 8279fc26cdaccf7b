#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "simplicial/adjacency.hpp"
#include "simplicial/centrality.hpp"
#include "simplicial/complex.hpp"
#include "simplicial/error.hpp"
#include "simplicial/essential.hpp"
#include "simplicial/families.hpp"
#include "simplicial/graph.hpp"
#include "simplicial/parallel.hpp"
#include "simplicial/paths.hpp"
#include "simplicial/stats.hpp"

#ifndef SIMPLICIAL_VERSION
#define SIMPLICIAL_VERSION "0.0.0"
#endif

namespace simplicial::cli {

namespace {

using nlohmann::json;
using Metadata = std::vector<std::pair<std::string, std::string>>;

struct Config {
    std::vector<std::string> args;
    std::string command;
    std::string input;
    int max_level = 3;
    std::vector<int> levels;
    std::vector<std::string> measures;
    std::optional<double> alpha;
    std::uint64_t seed = 1;
    std::string out_path;
    std::string format = "csv";
    unsigned threads = 1;
    std::size_t dense_limit = 5000;
    std::size_t matrix_limit = 20000;
    bool series_fallback = false;
    bool raw = false;
    std::vector<std::string> families;
    std::vector<double> grid{1, 3, 5, 10, 15, 20, 25};
    std::string annotation;
    std::size_t repetitions = 100;
    std::vector<std::size_t> overlap;
    std::string export_dir;
    std::string eccentricity_path;
    std::string distances_path;
    std::string pdf_path;
    std::vector<std::string> generate_spec;
};

std::string num(double v)
{
    if (!std::isfinite(v)) {
        return "NA";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

std::string opt_num(const std::optional<double>& v)
{
    return v ? num(*v) : "NA";
}

template <typename T>
std::string join(const std::vector<T>& items, const char* sep = ",")
{
    std::ostringstream s;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) {
            s << sep;
        }
        if constexpr (std::is_floating_point_v<T>) {
            s << num(items[i]);
        } else {
            s << items[i];
        }
    }
    return s.str();
}

// Labels may contain commas or quotes in principle; quote when needed.
std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        q += c;
        if (c == '"') {
            q += '"';
        }
    }
    return q + "\"";
}

Metadata metadata(const Config& c)
{
    Metadata m{
        {"tool", "simplicial"},
        {"version", SIMPLICIAL_VERSION},
        {"command", c.command},
        {"args", join(c.args, " ")},
        {"input", c.input},
        {"max_level", std::to_string(c.max_level)},
        {"levels", join(c.levels)},
        {"measures", join(c.measures)},
        {"alpha", c.alpha ? num(*c.alpha) : "default"},
        {"seed", std::to_string(c.seed)},
        {"threads", std::to_string(c.threads)},
        {"dense_limit", std::to_string(c.dense_limit)},
        {"matrix_limit", std::to_string(c.matrix_limit)},
        {"series_fallback", c.series_fallback ? "true" : "false"},
        {"normalized", c.raw ? "false" : "true"},
        {"format", c.format},
    };
    return m;
}

void write_metadata(std::ostream& out, const Metadata& m)
{
    for (const auto& [k, v] : m) {
        out << "# " << k << '=' << v << '\n';
    }
}

json metadata_json(const Metadata& m)
{
    json j = json::object();
    for (const auto& [k, v] : m) {
        j[k] = v;
    }
    return j;
}

CentralityOptions centrality_options(const Config& c)
{
    CentralityOptions o;
    o.threads = c.threads;
    o.dense_limit = c.dense_limit;
    o.series_fallback = c.series_fallback;
    o.katz_alpha = c.alpha;
    o.normalized = !c.raw;
    return o;
}

std::vector<Measure> parse_measures(const std::vector<std::string>& names)
{
    std::vector<Measure> out;
    for (const auto& n : names) {
        const auto m = parse_measure(n);
        if (!m) {
            throw InputError("unknown measure '" + n + "'");
        }
        out.push_back(*m);
    }
    return out;
}

// Levels default to every level whose combined adjacency is available.
void default_levels(Config& c, int cap)
{
    if (c.levels.empty()) {
        for (int k = 0; k < std::min(c.max_level, cap); ++k) {
            c.levels.push_back(k);
        }
        if (c.levels.empty()) {
            c.levels.push_back(0);
        }
    }
    for (int k : c.levels) {
        if (k < 0) {
            throw InputError("levels must be non-negative");
        }
    }
}

CliqueComplex load(const Config& c, std::ostream& err)
{
    if (c.max_level < 0) {
        throw InputError("--max-level must be non-negative");
    }
    auto report = read_edge_list_file(c.input);
    if (report.self_loops_dropped > 0 || report.duplicates_dropped > 0) {
        err << "warning: dropped " << report.self_loops_dropped << " self-loops and " << report.duplicates_dropped
            << " duplicate edges\n";
    }
    return build_clique_complex(std::move(report.graph), c.max_level);
}

// ---- commands ----

void cmd_build(Config& c, std::ostream& out, std::ostream& err)
{
    const auto complex = load(c, err);
    std::vector<std::size_t> simplices;
    std::vector<std::optional<std::size_t>> interactions;
    for (int k = 0; k <= complex.max_level(); ++k) {
        simplices.push_back(complex.count(k));
        if (k < complex.max_level()) {
            interactions.push_back(interaction_count(combined_adjacency(complex, k)));
        } else {
            interactions.emplace_back();
        }
    }
    if (!c.export_dir.empty()) {
        std::filesystem::create_directories(c.export_dir);
        for (int k = 0; k <= complex.max_level(); ++k) {
            const auto base = std::filesystem::path(c.export_dir) / ("level_" + std::to_string(k));
            std::ofstream idx(base.string() + ".simplices");
            write_simplex_index(idx, complex, k);
            if (k < complex.max_level()) {
                std::ofstream coo(base.string() + ".coo");
                write_coordinate(coo, combined_adjacency(complex, k));
            }
        }
    }
    const auto meta = metadata(c);
    if (c.format == "json") {
        json rows = json::array();
        for (std::size_t k = 0; k < simplices.size(); ++k) {
            rows.push_back({{"level", k},
                            {"simplices", simplices[k]},
                            {"interactions", interactions[k] ? json(*interactions[k]) : json(nullptr)}});
        }
        out << json{{"metadata", metadata_json(meta)}, {"levels", rows}}.dump(2) << '\n';
        return;
    }
    write_metadata(out, meta);
    out << "level,simplices,interactions\n";
    for (std::size_t k = 0; k < simplices.size(); ++k) {
        out << k << ',' << simplices[k] << ',' << (interactions[k] ? std::to_string(*interactions[k]) : "NA") << '\n';
    }
}

void cmd_centrality(Config& c, std::ostream& out, std::ostream& err)
{
    const auto complex = load(c, err);
    default_levels(c, complex.max_level());
    if (c.measures.empty()) {
        c.measures = {"degree"};
    }
    const auto measures = parse_measures(c.measures);
    const auto options = centrality_options(c);

    std::vector<std::vector<CentralityVector>> results;
    for (int k : c.levels) {
        const auto combined = combined_adjacency(complex, k);
        auto& row = results.emplace_back();
        for (Measure m : measures) {
            row.push_back(compute_centrality(combined, m, options));
        }
    }
    const auto meta = metadata(c);
    if (c.format == "json") {
        json levels = json::array();
        for (std::size_t li = 0; li < c.levels.size(); ++li) {
            const int k = c.levels[li];
            json ms = json::array();
            for (const auto& v : results[li]) {
                json params = json::object();
                for (const auto& [name, value] : v.parameters) {
                    params[name] = value;
                }
                ms.push_back({{"name", v.measure}, {"normalized", v.normalized}, {"parameters", params},
                              {"note", v.note}});
            }
            json rows = json::array();
            for (std::size_t id = 0; id < complex.count(k); ++id) {
                json scores = json::object();
                for (const auto& v : results[li]) {
                    const bool undefined = !v.undefined.empty() && v.undefined[id];
                    scores[v.measure] = undefined ? json(nullptr) : json(v.scores[id]);
                }
                rows.push_back({{"id", id}, {"simplex", complex.describe(k, static_cast<SimplexId>(id))},
                                {"scores", scores}});
            }
            levels.push_back({{"level", k}, {"measures", ms}, {"rows", rows}});
        }
        out << json{{"metadata", metadata_json(meta)}, {"levels", levels}}.dump(2) << '\n';
        return;
    }
    write_metadata(out, meta);
    for (std::size_t li = 0; li < c.levels.size(); ++li) {
        for (const auto& v : results[li]) {
            for (const auto& [name, value] : v.parameters) {
                out << "# level" << c.levels[li] << '.' << v.measure << '.' << name << '=' << num(value) << '\n';
            }
            if (!v.note.empty()) {
                out << "# level" << c.levels[li] << '.' << v.measure << ".note=" << v.note << '\n';
            }
        }
    }
    out << "level,id,simplex";
    for (const auto& m : measures) {
        out << ',' << to_string(m);
    }
    out << '\n';
    for (std::size_t li = 0; li < c.levels.size(); ++li) {
        const int k = c.levels[li];
        for (std::size_t id = 0; id < complex.count(k); ++id) {
            out << k << ',' << id << ',' << csv_field(complex.describe(k, static_cast<SimplexId>(id)));
            for (const auto& v : results[li]) {
                const bool undefined = !v.undefined.empty() && v.undefined[id];
                out << ',' << (undefined ? "NA" : num(v.scores[id]));
            }
            out << '\n';
        }
    }
}

void cmd_distance(Config& c, std::ostream& out, std::ostream& err)
{
    const auto complex = load(c, err);
    default_levels(c, complex.max_level());
    std::vector<PathProfile> profiles;
    for (int k : c.levels) {
        profiles.push_back(profile_paths(combined_adjacency(complex, k), c.threads));
    }
    if (!c.eccentricity_path.empty()) {
        std::ofstream ecc(c.eccentricity_path);
        if (!ecc) {
            throw InputError("cannot write " + c.eccentricity_path);
        }
        write_metadata(ecc, metadata(c));
        ecc << "level,id,simplex,component,eccentricity,farness,harmonic\n";
        for (std::size_t li = 0; li < c.levels.size(); ++li) {
            const int k = c.levels[li];
            const auto& p = profiles[li];
            for (std::size_t id = 0; id < complex.count(k); ++id) {
                ecc << k << ',' << id << ',' << csv_field(complex.describe(k, static_cast<SimplexId>(id))) << ','
                    << p.components.component[id] << ',' << p.eccentricity[id] << ',' << p.farness[id] << ','
                    << num(p.harmonic[id]) << '\n';
            }
        }
    }
    if (!c.distances_path.empty()) {
        std::ofstream dist(c.distances_path);
        if (!dist) {
            throw InputError("cannot write " + c.distances_path);
        }
        write_metadata(dist, metadata(c));
        dist << "level,i,j,distance\n";
        PathOptions po;
        po.matrix_limit = c.matrix_limit;
        po.threads = c.threads;
        for (int k : c.levels) {
            const auto d = shortest_distances(complex, k, po);
            for (std::size_t i = 0; i < d.size(); ++i) {
                for (std::size_t j = i + 1; j < d.size(); ++j) {
                    const Hops h = d.at(static_cast<SimplexId>(i), static_cast<SimplexId>(j));
                    if (is_finite(h)) {
                        dist << k << ',' << i << ',' << j << ',' << h << '\n';
                    }
                }
            }
        }
    }
    const auto meta = metadata(c);
    if (c.format == "json") {
        json levels = json::array();
        for (std::size_t li = 0; li < c.levels.size(); ++li) {
            const auto& p = profiles[li];
            json comps = json::array();
            Hops diam = 0;
            for (const auto& cl : p.component_lengths) {
                diam = std::max(diam, cl.diameter);
                const auto avg = cl.average();
                comps.push_back({{"component", cl.component}, {"size", cl.size}, {"diameter", cl.diameter},
                                 {"distance_sum", cl.distance_sum}, {"pair_count", cl.pair_count},
                                 {"average_path_length", avg ? json(*avg) : json(nullptr)}});
            }
            levels.push_back({{"level", c.levels[li]}, {"simplices", p.farness.size()},
                              {"component_count", p.components.count()}, {"diameter", diam}, {"components", comps}});
        }
        out << json{{"metadata", metadata_json(meta)}, {"levels", levels}}.dump(2) << '\n';
        return;
    }
    write_metadata(out, meta);
    for (std::size_t li = 0; li < c.levels.size(); ++li) {
        Hops diam = 0;
        for (const auto& cl : profiles[li].component_lengths) {
            diam = std::max(diam, cl.diameter);
        }
        out << "# level" << c.levels[li] << ".components=" << profiles[li].components.count() << '\n';
        out << "# level" << c.levels[li] << ".diameter=" << diam << '\n';
    }
    out << "level,component,size,diameter,distance_sum,pair_count,average_path_length\n";
    for (std::size_t li = 0; li < c.levels.size(); ++li) {
        for (const auto& cl : profiles[li].component_lengths) {
            out << c.levels[li] << ',' << cl.component << ',' << cl.size << ',' << cl.diameter << ','
                << cl.distance_sum << ',' << cl.pair_count << ',' << opt_num(cl.average()) << '\n';
        }
    }
}

std::string parameter_string(const FitResult& f)
{
    std::vector<std::string> parts;
    for (const auto& [k, v] : f.parameters) {
        parts.push_back(k + "=" + num(v));
    }
    for (const auto& [k, v] : f.fixed) {
        parts.push_back(k + "=" + num(v) + "(fixed)");
    }
    return join(parts, ";");
}

void cmd_fit_degree(Config& c, std::ostream& out, std::ostream& err)
{
    const auto complex = load(c, err);
    default_levels(c, complex.max_level());
    std::vector<Family> families;
    if (c.families.empty()) {
        families.assign(all_families().begin(), all_families().end());
    } else {
        for (const auto& name : c.families) {
            const auto f = parse_family(name);
            if (!f) {
                throw InputError("unknown family '" + name + "'");
            }
            families.push_back(*f);
        }
    }
    struct LevelFit {
        int level;
        DegreeDistribution dist;
        ModelSelection selection;
    };
    std::vector<LevelFit> fits;
    for (int k : c.levels) {
        if (complex.count(k) == 0) {
            err << "warning: level " << k << " is empty; skipped\n";
            continue;
        }
        auto dist = degree_distribution(complex, k);
        std::vector<double> sample(dist.sample.begin(), dist.sample.end());
        auto sel = fit_and_select(sample, families);
        fits.push_back({k, std::move(dist), std::move(sel)});
    }
    if (!c.pdf_path.empty()) {
        std::ofstream pdf(c.pdf_path);
        if (!pdf) {
            throw InputError("cannot write " + c.pdf_path);
        }
        write_metadata(pdf, metadata(c));
        pdf << "level,degree,pdf,ccdf\n";
        for (const auto& lf : fits) {
            for (std::size_t i = 0; i < lf.dist.values.size(); ++i) {
                pdf << lf.level << ',' << lf.dist.values[i] << ',' << num(lf.dist.pdf[i]) << ','
                    << num(lf.dist.ccdf[i]) << '\n';
            }
        }
    }
    struct Row {
        int level;
        std::string family, status, params, shift, lnl, aic, bic, delta, verdict;
    };
    std::vector<Row> rows;
    for (const auto& lf : fits) {
        const auto& s = lf.selection;
        for (std::size_t i = 0; i < s.ranked.size(); ++i) {
            const auto& f = s.ranked[i];
            rows.push_back({lf.level, std::string(to_string(f.family)), "ok", parameter_string(f), num(f.shift),
                            num(f.log_likelihood), num(f.aic), num(f.bic), num(s.delta_aic[i]), s.verdict});
        }
        for (const auto& f : s.excluded) {
            rows.push_back({lf.level, std::string(to_string(f.family)), std::string(to_string(f.status)), "", "",
                            "NA", "NA", "NA", "NA", s.verdict});
        }
    }
    const auto meta = metadata(c);
    if (c.format == "json") {
        json levels = json::array();
        for (const auto& lf : fits) {
            json fitted = json::array();
            for (const auto& r : rows) {
                if (r.level == lf.level) {
                    fitted.push_back({{"family", r.family}, {"status", r.status}, {"parameters", r.params},
                                      {"shift", r.shift}, {"log_likelihood", r.lnl}, {"aic", r.aic}, {"bic", r.bic},
                                      {"delta_aic", r.delta}});
                }
            }
            const auto& s = lf.selection;
            levels.push_back({{"level", lf.level}, {"sample_size", lf.dist.sample.size()}, {"fits", fitted},
                              {"verdict", s.verdict}, {"reason", s.reason},
                              {"delta_bic", s.delta_bic ? json(*s.delta_bic) : json(nullptr)}});
        }
        out << json{{"metadata", metadata_json(meta)}, {"levels", levels}}.dump(2) << '\n';
        return;
    }
    const std::vector<std::string> header{"level", "family", "status", "parameters", "shift",
                                          "log_likelihood", "aic", "bic", "delta_aic", "verdict"};
    auto cells = [](const Row& r) {
        return std::vector<std::string>{std::to_string(r.level), r.family, r.status, r.params, r.shift,
                                        r.lnl, r.aic, r.bic, r.delta, r.verdict};
    };
    write_metadata(out, meta);
    if (c.format == "text") {
        std::vector<std::size_t> width(header.size());
        for (std::size_t i = 0; i < header.size(); ++i) {
            width[i] = header[i].size();
        }
        for (const auto& r : rows) {
            const auto cs = cells(r);
            for (std::size_t i = 0; i < cs.size(); ++i) {
                width[i] = std::max(width[i], cs[i].size());
            }
        }
        auto line = [&](const std::vector<std::string>& cs) {
            for (std::size_t i = 0; i < cs.size(); ++i) {
                out << std::left << std::setw(static_cast<int>(width[i])) << cs[i] << (i + 1 < cs.size() ? "  " : "");
            }
            out << '\n';
        };
        line(header);
        for (const auto& r : rows) {
            line(cells(r));
        }
        return;
    }
    out << join(header) << '\n';
    for (const auto& r : rows) {
        auto cs = cells(r);
        for (auto& s : cs) {
            s = csv_field(s);
        }
        out << join(cs) << '\n';
    }
}

void cmd_correlate(Config& c, std::ostream& out, std::ostream& err)
{
    const auto complex = load(c, err);
    if (c.levels.empty()) {
        for (int k = 0; k < std::min(3, complex.max_level()); ++k) {
            c.levels.push_back(k);
        }
    }
    default_levels(c, complex.max_level());
    if (c.measures.empty()) {
        c.measures = {"degree", "subgraph", "closeness"};
    }
    const auto measures = parse_measures(c.measures);
    const auto options = centrality_options(c);
    const auto table = correlation_table(complex, measures, c.levels, options);

    struct Overlap {
        std::string a, b;
        std::size_t m, count;
    };
    std::vector<Overlap> overlaps;
    if (!c.overlap.empty()) {
        std::vector<std::pair<std::string, std::vector<NodeId>>> rankings;
        for (int k : c.levels) {
            for (Measure m : measures) {
                const auto v = project_to_nodes(complex, compute_centrality(complex, k, m, options));
                rankings.emplace_back(CorrelationEntry{k, m}.name(), rank_nodes(v));
            }
        }
        for (std::size_t i = 0; i < rankings.size(); ++i) {
            for (std::size_t j = i + 1; j < rankings.size(); ++j) {
                for (std::size_t m : c.overlap) {
                    overlaps.push_back({rankings[i].first, rankings[j].first, m,
                                        top_overlap(rankings[i].second, rankings[j].second, m)});
                }
            }
        }
    }
    const auto meta = metadata(c);
    const auto& e = table.entries;
    if (c.format == "json") {
        json pairs = json::array();
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i; j < e.size(); ++j) {
                const auto& r = table.coefficients[i][j];
                pairs.push_back({{"row", e[i].name()}, {"column", e[j].name()}, {"value", r ? json(*r) : json(nullptr)}});
            }
        }
        json avgs = json::array();
        for (const auto& [key, v] : table.averages) {
            avgs.push_back({{"levels", {key.first, key.second}}, {"value", v ? json(*v) : json(nullptr)}});
        }
        json ov = json::array();
        for (const auto& o : overlaps) {
            ov.push_back({{"row", o.a}, {"column", o.b}, {"m", o.m}, {"count", o.count}});
        }
        out << json{{"metadata", metadata_json(meta)}, {"pairs", pairs}, {"averages", avgs}, {"overlaps", ov}}.dump(2)
            << '\n';
        return;
    }
    write_metadata(out, meta);
    out << "kind,row,column,value\n";
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i; j < e.size(); ++j) {
            out << "pair," << e[i].name() << ',' << e[j].name() << ',' << opt_num(table.coefficients[i][j]) << '\n';
        }
    }
    for (const auto& [key, v] : table.averages) {
        out << "average,level" << key.first << ",level" << key.second << ',' << opt_num(v) << '\n';
    }
    for (const auto& o : overlaps) {
        out << "overlap@" << o.m << ',' << o.a << ',' << o.b << ',' << o.count << '\n';
    }
}

void cmd_essential(Config& c, std::ostream& out, std::ostream& err)
{
    const auto complex = load(c, err);
    if (c.levels.empty()) {
        for (int k = 0; k < std::min(3, complex.max_level()); ++k) {
            c.levels.push_back(k);
        }
    }
    default_levels(c, complex.max_level());
    if (c.measures.empty()) {
        c.measures = {"degree", "subgraph", "closeness"};
    }
    if (c.annotation.empty()) {
        throw InputError("essential requires --annotation");
    }
    const auto measures = parse_measures(c.measures);
    const auto options = centrality_options(c);
    const auto ann = read_annotation_file(c.annotation, complex.graph());
    if (ann.unknown_labels > 0) {
        err << "warning: " << ann.unknown_labels << " annotation labels are not in the network\n";
    }
    if (ann.annotated < complex.graph().node_count()) {
        err << "warning: " << complex.graph().node_count() - ann.annotated
            << " nodes are unannotated and treated as non-essential\n";
    }
    if (ann.essential_count() == 0) {
        err << "warning: annotation marks no essential nodes\n";
    }
    std::vector<DetectionCurve> curves;
    for (int k : c.levels) {
        for (Measure m : measures) {
            const auto v = project_to_nodes(complex, compute_centrality(complex, k, m, options));
            auto curve = detection_curve(rank_nodes(v), ann, c.grid);
            curve.measure = std::string(to_string(m));
            curve.level = k;
            curves.push_back(std::move(curve));
        }
    }
    auto baseline = random_baseline(complex.graph().node_count(), ann, c.grid, c.seed, c.repetitions);
    auto meta = metadata(c);
    meta.emplace_back("annotation", c.annotation);
    meta.emplace_back("grid", join(c.grid));
    meta.emplace_back("repetitions", std::to_string(c.repetitions));
    meta.emplace_back("essential_nodes", std::to_string(ann.essential_count()));
    meta.emplace_back("unknown_labels", std::to_string(ann.unknown_labels));
    if (c.format == "json") {
        json rows = json::array();
        auto add = [&](const DetectionCurve& curve, json level) {
            for (const auto& p : curve.points) {
                rows.push_back({{"measure", curve.measure}, {"level", level}, {"x", p.percent}, {"top", p.top},
                                {"count", p.count}, {"percentage", p.percentage}});
            }
        };
        for (const auto& curve : curves) {
            add(curve, curve.level);
        }
        add(baseline, nullptr);
        out << json{{"metadata", metadata_json(meta)}, {"curves", rows}}.dump(2) << '\n';
        return;
    }
    write_metadata(out, meta);
    out << "measure,level,x,top,count,percentage\n";
    for (const auto& curve : curves) {
        for (const auto& p : curve.points) {
            out << curve.measure << ',' << curve.level << ',' << num(p.percent) << ',' << p.top << ',' << num(p.count)
                << ',' << num(p.percentage) << '\n';
        }
    }
    for (const auto& p : baseline.points) {
        out << "random,NA," << num(p.percent) << ',' << p.top << ',' << num(p.count) << ',' << num(p.percentage)
            << '\n';
    }
}

int parse_int(const std::string& s)
{
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw InputError("expected an integer, got '" + s + "'");
    }
    return v;
}

void cmd_generate(Config& c, std::ostream& out, std::ostream&)
{
    const auto& spec = c.generate_spec;
    if (spec.empty()) {
        throw InputError("generate needs a family: S l k | T k x1..x(k+1) | P l k");
    }
    std::vector<int> n;
    for (std::size_t i = 1; i < spec.size(); ++i) {
        n.push_back(parse_int(spec[i]));
    }
    Graph g;
    if (spec[0] == "S" && n.size() == 2) {
        g = star_family_graph(n[0], n[1]);
    } else if (spec[0] == "P" && n.size() == 2) {
        g = path_family_graph(n[0], n[1]);
    } else if (spec[0] == "T" && n.size() >= 1) {
        const std::vector<int> arms(n.begin() + 1, n.end());
        g = branch_family_graph(n[0], arms);
    } else {
        throw InputError("generate expects S l k | T k x1..x(k+1) | P l k");
    }
    auto meta = metadata(c);
    meta.emplace_back("family", join(spec, " "));
    write_metadata(out, meta);
    write_edge_list(out, g);
}

std::vector<int> split_ints(const std::vector<std::string>& items)
{
    std::vector<int> out;
    for (const auto& s : items) {
        out.push_back(parse_int(s));
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config c;
    c.args = args;
    c.threads = default_thread_count();

    CLI::App app{"Clique simplicial complexes: adjacency, paths, centralities and statistics"};
    app.set_version_flag("--version", SIMPLICIAL_VERSION);
    app.require_subcommand(1);
    std::vector<std::string> level_args;

    auto common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input) {
            sub->add_option("input", c.input, "Edge list file (two labels per line)")->required();
            sub->add_option("-K,--max-level", c.max_level, "Largest simplex dimension to build")
                ->capture_default_str();
        }
        sub->add_option("--out", c.out_path, "Write results to this file instead of stdout");
        sub->add_option("--threads", c.threads, "Worker threads (default from SIMPLICIAL_THREADS or 1)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
    };
    auto centrality_flags = [&](CLI::App* sub) {
        sub->add_option("--level,--levels", level_args, "Simplex levels")->delimiter(',');
        sub->add_option("--measure,--measures", c.measures,
                        "degree|closeness|harmonic|betweenness|katz|eigenvector|subgraph")
            ->delimiter(',');
        sub->add_option("--alpha", c.alpha, "Katz damping (default 0.5/lambda1)");
        sub->add_option("--dense-limit", c.dense_limit, "Largest level for dense spectral methods")
            ->capture_default_str();
        sub->add_flag("--series-fallback", c.series_fallback, "Use truncated exp series above the dense limit");
        sub->add_flag("--raw", c.raw, "Report unnormalized closeness and betweenness");
    };
    auto format_flag = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
    };

    auto* build = app.add_subcommand("build", "Build the clique complex and report per-level counts");
    common(build, true);
    format_flag(build, {"csv", "json"});
    build->add_option("--export", c.export_dir, "Directory for coordinate-format adjacency and simplex index files");

    auto* centrality = app.add_subcommand("centrality", "Per-simplex centralities");
    common(centrality, true);
    centrality_flags(centrality);
    format_flag(centrality, {"csv", "json"});

    auto* distance = app.add_subcommand("distance", "Components, diameter and average path length per level");
    common(distance, true);
    distance->add_option("--level,--levels", level_args, "Simplex levels")->delimiter(',');
    distance->add_option("--eccentricity", c.eccentricity_path, "Per-simplex eccentricity CSV");
    distance->add_option("--distances", c.distances_path, "All finite pairwise distances CSV");
    distance->add_option("--matrix-limit", c.matrix_limit, "Largest level for which --distances is written")
        ->capture_default_str();
    format_flag(distance, {"csv", "json"});

    auto* fit = app.add_subcommand("fit-degree", "Fit degree distributions and select a model");
    common(fit, true);
    fit->add_option("--level,--levels", level_args, "Simplex levels")->delimiter(',');
    fit->add_option("--family,--families", c.families, "gen-Pareto|GEV|gamma|exponential|lognormal|normal")
        ->delimiter(',');
    fit->add_option("--pdf", c.pdf_path, "Empirical pdf/ccdf CSV");
    format_flag(fit, {"csv", "json", "text"});

    auto* correlate = app.add_subcommand("correlate", "Spearman correlations between level centralities");
    common(correlate, true);
    centrality_flags(correlate);
    correlate->add_option("--overlap", c.overlap, "Top-m overlap cutoffs between node rankings")->delimiter(',');
    format_flag(correlate, {"csv", "json"});

    auto* essential = app.add_subcommand("essential", "Essential-node detection curves");
    common(essential, true);
    centrality_flags(essential);
    essential->add_option("--annotation", c.annotation, "File of `label 0|1` lines")->required();
    essential->add_option("--grid", c.grid, "Top percentages")->delimiter(',');
    essential->add_option("--repetitions", c.repetitions, "Random baseline repetitions")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    format_flag(essential, {"csv", "json"});

    auto* generate = app.add_subcommand("generate", "Write the edge list of S l k, T k x1..x(k+1) or P l k");
    common(generate, false);
    generate->add_option("spec", c.generate_spec, "Family and sizes")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        c.levels = split_ints(level_args);
        c.command = app.get_subcommands().front()->get_name();
        std::ofstream file;
        if (!c.out_path.empty()) {
            file.open(c.out_path);
            if (!file) {
                throw InputError("cannot write " + c.out_path);
            }
        }
        std::ostream& sink = c.out_path.empty() ? out : file;
        if (c.command == "build") {
            cmd_build(c, sink, err);
        } else if (c.command == "centrality") {
            cmd_centrality(c, sink, err);
        } else if (c.command == "distance") {
            cmd_distance(c, sink, err);
        } else if (c.command == "fit-degree") {
            cmd_fit_degree(c, sink, err);
        } else if (c.command == "correlate") {
            cmd_correlate(c, sink, err);
        } else if (c.command == "essential") {
            cmd_essential(c, sink, err);
        } else if (c.command == "generate") {
            cmd_generate(c, sink, err);
        }
        sink.flush();
    } catch (const InsufficientDepthError& e) {
        err << "error: " << e.what() << " (raise --max-level)\n";
        return kInsufficientDepth;
    } catch (const NumericError& e) {
        err << "error: " << e.what() << '\n';
        return kNumericError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kSuccess;
}

}  // namespace simplicial::cli
