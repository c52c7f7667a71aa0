#include "cli.hpp"

#include "subdiv/catalog.hpp"
#include "subdiv/convergence.hpp"
#include "subdiv/dynamics.hpp"
#include "subdiv/errors.hpp"
#include "subdiv/export.hpp"
#include "subdiv/local_matrix.hpp"
#include "subdiv/refinement.hpp"
#include "subdiv/report_json.hpp"
#include "subdiv/search.hpp"
#include "subdiv/spectrum.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace subdiv::cli {

namespace {

struct Options {
    std::string scheme;
    int iters = 10;
    int steps = 30;
    int width = 6;
    std::string grid;
    double tol = 1e-9;
    std::string out_path;
    std::string format;
    int target_m = 3;
    std::string points = "1";
    int first_index = 0;
    std::string mesh = "primal";
    std::string v0;
    int basis_index = 1;
    std::string norm = "inf";
    int max_width = 0;
    bool no_filter = false;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw IoError("failed writing '" + path + "'");
}

void emit(const Options& o, std::ostream& out, const std::string& content) {
    if (o.out_path.empty()) {
        out << content;
    } else {
        write_file(o.out_path, content);
    }
}

std::string format_or(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed,
                      const std::string& command) {
    const std::string f = o.format.empty() ? fallback : o.format;
    for (const char* a : allowed) {
        if (f == a) return f;
    }
    throw DomainError(command + " does not support --format " + f);
}

void check_tolerance(const Options& o) {
    if (!(o.tol > 0)) throw DomainError("--tol must be positive");
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& what) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw DomainError(what + " must list at least one value");
    return out;
}

RationalVector to_vector(const std::vector<Rational>& v) {
    RationalVector out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render_curve(const SampledCurve& curve, const std::string& format) {
    std::ostringstream s;
    if (format == "svg") {
        write_curve_svg(s, curve);
    } else {
        write_curve_csv(s, curve);
    }
    return s.str();
}

int cmd_analyze(const Options& o, std::ostream& out) {
    check_tolerance(o);
    format_or(o, "json", {"json"}, "analyze");
    if (o.target_m < 0) throw DomainError("--target-m must be >= 0");
    const SchemeRecord record = resolve_scheme(o.scheme);
    const LocalMatrix a = build_local_matrix(record.mask);
    const Spectrum spec = eigenvalues(a.entries);
    const SpectralClass cls = classify(spec, o.tol);

    Json j;
    j["scheme"] = to_json(record);
    j["symbol"] = to_string(symbol_of(record.mask));
    j["convergence"] = to_json(certify(record.mask, o.target_m));
    j["local_matrix"] = to_json(a);
    j["spectrum"] = to_json(spec);
    j["classification"] = {{"has_complex", cls.has_complex},
                           {"negative_real_count", cls.negative_real_count},
                           {"convergence_spectral_ok", cls.convergence_spectral_ok}};
    emit(o, out, dump(j));
    return kExitOk;
}

int cmd_refine(const Options& o, std::ostream& out) {
    const std::string format = format_or(o, "csv", {"csv", "svg", "json"}, "refine");
    if (o.iters < 0) throw DomainError("--iters must be >= 0");
    const SchemeRecord record = resolve_scheme(o.scheme);
    const MeshKind mesh = o.mesh == "dual" ? MeshKind::Dual : MeshKind::Primal;
    const auto p0 = make_polygon<Rational>(o.first_index, to_vector(parse_rational_list(o.points, "--points")), 0, mesh);
    const auto p = refine_k(p0, record.mask, o.iters);

    if (format == "json") {
        Json values = Json::array();
        for (const auto& x : p.values) values.push_back(to_string(x));
        Json j;
        j["level"] = p.level;
        j["mesh"] = to_string(p.mesh);
        j["first_index"] = p.first_index;
        j["values"] = std::move(values);
        emit(o, out, dump(j));
    } else {
        emit(o, out, render_curve(parameterize(p), format));
    }
    return kExitOk;
}

int cmd_basis(const Options& o, std::ostream& out) {
    const std::string format = format_or(o, "csv", {"csv", "svg"}, "basis");
    const SchemeRecord record = resolve_scheme(o.scheme);
    emit(o, out, render_curve(basis_experiment(record.mask, o.iters), format));
    return kExitOk;
}

int cmd_dynamics(const Options& o, std::ostream& out) {
    check_tolerance(o);
    const std::string format = format_or(o, "csv", {"csv", "json"}, "dynamics");
    const SchemeRecord record = resolve_scheme(o.scheme);
    const LocalMatrix a = build_local_matrix(record.mask);
    const RationalVector v0 =
        o.v0.empty() ? unit_vector(a.n(), o.basis_index) : to_vector(parse_rational_list(o.v0, "--v0"));

    DynamicsOptions options;
    options.norm = o.norm == "2" ? DistanceNorm::Two : DistanceNorm::Infinity;
    options.tol = o.tol;
    const Spectrum spec = eigenvalues(a.entries);
    const TrajectoryReport traj = decompose_modes(iterate_local(v0, a, o.steps, options), spec);

    if (format == "json") {
        Json j = to_json(traj);
        j["scheme"] = record.name;
        emit(o, out, dump(j));
    } else {
        std::ostringstream s;
        write_trajectory_csv(s, traj);
        emit(o, out, s.str());
    }
    return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
    check_tolerance(o);
    const std::string format = format_or(o, "csv", {"csv", "json"}, "search");

    if (o.max_width > 0) {
        std::map<int, SearchSpec> overrides;
        for (int w = kMinSearchWidth; w <= std::min(o.max_width, kMaxSearchWidth); ++w) {
            SearchSpec s = default_search(w);
            s.tol = o.tol;
            s.convergence_filter = !o.no_filter;
            overrides.emplace(w, s);
        }
        const MinWidthReport report = min_width_report(o.max_width, overrides);
        emit(o, out, dump(to_json(report)));
        return kExitOk;
    }

    SearchSpec spec = default_search(o.width);
    if (!o.grid.empty()) spec.ranges = parse_grid(o.grid);
    spec.tol = o.tol;
    spec.convergence_filter = !o.no_filter;
    const SearchResult result = scan(spec);

    std::ostringstream csv;
    write_search_csv(csv, result);
    const std::string summary = dump(to_json(result));
    if (!o.out_path.empty()) {
        write_file(o.out_path + ".csv", csv.str());
        write_file(o.out_path + ".json", summary);
    } else {
        out << (format == "json" ? summary : csv.str());
    }
    return kExitOk;
}

int cmd_catalog(const Options& o, std::ostream& out) {
    const std::string format = format_or(o, "text", {"text", "json"}, "catalog");
    const auto& records = Catalog::standard().records();
    if (format == "json") {
        Json j = Json::array();
        for (const auto& r : records) j.push_back(to_json(r));
        emit(o, out, dump(j));
        return kExitOk;
    }
    std::ostringstream s;
    for (const auto& r : records) {
        s << r.name << "  width " << r.mask.width() << "  support [" << r.mask.support_min() << ", "
          << r.mask.support_max() << "]  " << to_string(classify_symmetry(r.mask).cls) << "  C";
        if (r.documented_smoothness) {
            s << *r.documented_smoothness;
        } else {
            s << '?';
        }
        s << "  {";
        for (Eigen::Index k = 0; k < r.mask.coeffs().size(); ++k) s << (k ? ", " : "") << to_string(r.mask.coeffs()[k]);
        s << "}\n";
    }
    emit(o, out, s.str());
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Analysis and refinement of univariate binary subdivision schemes", "subdiv"};
    app.require_subcommand(1);

    auto add_scheme = [&](CLI::App* c) {
        c->add_option("--scheme", o.scheme, "catalog:NAME or a scheme JSON file")->required();
    };
    auto add_output = [&](CLI::App* c, std::vector<std::string> formats) {
        c->add_option("--out", o.out_path, "Output path (stdout when omitted)");
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    };
    auto add_tol = [&](CLI::App* c) { c->add_option("--tol", o.tol, "Classification tolerance")->capture_default_str(); };

    auto* analyze = app.add_subcommand("analyze", "Convergence certificate, local matrix and spectrum (JSON)");
    add_scheme(analyze);
    add_tol(analyze);
    add_output(analyze, {"json"});
    analyze->add_option("--target-m", o.target_m, "Highest C^m rung to try")->capture_default_str();

    auto* refine = app.add_subcommand("refine", "Refine a control polygon");
    add_scheme(refine);
    add_output(refine, {"csv", "svg", "json"});
    refine->add_option("--iters", o.iters, "Refinement steps")->capture_default_str();
    refine->add_option("--points", o.points, "Initial values p0,p1,... (rationals)")->capture_default_str();
    refine->add_option("--first-index", o.first_index, "Index of the first initial value")->capture_default_str();
    refine->add_option("--mesh", o.mesh, "Parameterisation of the indices")
        ->check(CLI::IsMember({"primal", "dual"}))
        ->capture_default_str();

    auto* basis = app.add_subcommand("basis", "Refine the delta sequence on -4..4 and sample [-4, 4]");
    add_scheme(basis);
    add_output(basis, {"csv", "svg"});
    basis->add_option("--iters", o.iters, "Refinement steps")->capture_default_str();

    auto* dynamics = app.add_subcommand("dynamics", "Local dynamics v_{k+1} = A v_k");
    add_scheme(dynamics);
    add_tol(dynamics);
    add_output(dynamics, {"csv", "json"});
    dynamics->add_option("--K", o.steps, "Number of steps")->capture_default_str();
    auto* v0 = dynamics->add_option("--v0", o.v0, "Initial vector v0 (rationals)");
    dynamics->add_option("--basis-index", o.basis_index, "Use v0 = e_i (0-based)")
        ->capture_default_str()
        ->excludes(v0);
    dynamics->add_option("--norm", o.norm, "Distance norm")
        ->check(CLI::IsMember({"inf", "2"}))
        ->capture_default_str();

    auto* search = app.add_subcommand("search", "Classify the spectra of a palindromic family over a grid");
    add_tol(search);
    add_output(search, {"csv", "json"});
    search->add_option("--width", o.width, "Mask width (2..8)")->capture_default_str();
    search->add_option("--grid", o.grid, "lo:hi:step per free parameter, comma separated");
    search->add_option("--max-width", o.max_width, "Report the smallest width up to this one with a complex convergent cell");
    search->add_flag("--no-filter", o.no_filter, "Do not require the contractivity norm test");

    auto* catalog = app.add_subcommand("catalog", "List the built-in schemes");
    catalog->add_option("--out", o.out_path, "Output path (stdout when omitted)");
    catalog->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitDomain;
    }

    try {
        if (*analyze) return cmd_analyze(o, out);
        if (*refine) return cmd_refine(o, out);
        if (*basis) return cmd_basis(o, out);
        if (*dynamics) return cmd_dynamics(o, out);
        if (*search) return cmd_search(o, out);
        return cmd_catalog(o, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace subdiv::cli
