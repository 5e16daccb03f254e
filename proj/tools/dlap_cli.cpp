#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dlap/deformed.hpp"
#include "dlap/error.hpp"
#include "dlap/graph.hpp"
#include "dlap/hjoin.hpp"
#include "dlap/tree_inertia.hpp"
#include "dlap/verify.hpp"

using json = nlohmann::json;
using namespace dlap;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInput = 2, kInvariant = 3 };

constexpr double kHJoinVerifyTol = 1e-8;

struct Options {
    double s = 0.0;
    double lambda = 0.0;
    std::size_t k = 1;
    std::size_t root = 0;
    double tol = kDefaultBisectionTol;
    double eps_zero = kDefaultEpsZero;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::string out;
    std::string format = "text";
    bool verify = false;
    std::string input;
    std::string family;
    std::vector<std::size_t> params;
    double s_from = -1.0;
    double s_to = 1.0;
    std::size_t steps = 11;
};

std::string num(double x) {
    char buf[40];
    if (x == 0.0) x = 0.0;  // no "-0"
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

// Value as printed, so JSON and text carry the same 9 significant digits.
double printed(double x) { return std::stod(num(x)); }

json printed_array(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(printed(x));
    return a;
}

// Eigenvalues that are zero up to rounding print as 0.
std::vector<double> snapped(const Spectrum& sp) {
    double scale = 1.0;
    for (double v : sp.values()) scale = std::max(scale, std::abs(v));
    std::vector<double> out = sp.values();
    for (double& v : out)
        if (std::abs(v) <= 1e-12 * scale) v = 0.0;
    return out;
}

json header(const std::string& command) { return {{"schema", 1}, {"command", command}}; }

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ParseError(0, "cannot write " + path);
        }
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

bool is_json_path(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

FamilySpec family_from_args(const std::string& name, const std::vector<std::size_t>& params) {
    auto fam = parse_family(name);
    if (!fam || *fam == Family::edges) throw ParameterError("unknown family '" + name + "'");
    if (*fam == Family::starlike) return FamilySpec::starlike(params);
    if (params.size() != 1) throw ParameterError(name + " takes exactly one size argument");
    switch (*fam) {
        case Family::path: return FamilySpec::path(params[0]);
        case Family::cycle: return FamilySpec::cycle(params[0]);
        case Family::star: return FamilySpec::star(params[0]);
        case Family::complete: return FamilySpec::complete(params[0]);
        default: break;
    }
    throw ParameterError("unknown family '" + name + "'");
}

int cmd_gen(const Options& o) {
    Graph g = build_family(family_from_args(o.family, o.params));
    Output out(o.out);
    write_edge_list(out.os(), g);
    return kOk;
}

int cmd_spectrum(const Options& o) {
    Graph g = read_edge_list_file(o.input);
    const std::vector<double> values = snapped(symmetric_spectrum(deformed_matrix(g, o.s)));
    Output out(o.out);
    if (o.format == "json") {
        json j = header("spectrum");
        j["n"] = g.order();
        j["m"] = g.size();
        j["s"] = o.s;
        j["eigenvalues"] = printed_array(values);
        j["trace"] = printed(deformed_trace(g, o.s));
        j["average"] = printed(average_eigenvalue(g, o.s));
        json bounds = {{"upper", printed(upper_bound_radius(g, o.s))}, {"lower", nullptr}};
        if (g.order() >= 2 && is_connected(g))
            if (auto lb = lower_bound_radius(g, o.s)) bounds["lower"] = printed(*lb);
        j["bounds"] = bounds;
        out.os() << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        out.os() << "index,eigenvalue\n";
        for (std::size_t i = 0; i < values.size(); ++i) out.os() << i + 1 << "," << num(values[i]) << "\n";
    } else {
        for (double v : values) out.os() << num(v) << "\n";
    }
    return kOk;
}

RootedTree load_tree(const Options& o) {
    Graph g = read_edge_list_file(o.input);
    if (!is_tree(g)) throw StructureError(o.input + " is not a tree");
    return root_and_order(g, static_cast<Vertex>(o.root));
}

int cmd_tree_locate(const Options& o) {
    const RootedTree t = load_tree(o);
    const InertiaCounts c = count_relative(t, o.s, o.lambda, o.eps_zero);
    Output out(o.out);
    if (o.format == "json") {
        json j = header("tree locate");
        j.update({{"s", o.s}, {"lambda", o.lambda}, {"greater", c.greater}, {"equal", c.equal}, {"less", c.less}});
        out.os() << j.dump(2) << "\n";
    } else {
        out.os() << "greater=" << c.greater << " equal=" << c.equal << " less=" << c.less << "\n";
    }
    return kOk;
}

int emit_value(const Options& o, const std::string& command, const std::string& key, double v) {
    Output out(o.out);
    if (o.format == "json") {
        json j = header(command);
        j.update({{"s", o.s}, {key, printed(v)}});
        out.os() << j.dump(2) << "\n";
    } else {
        out.os() << num(v) << "\n";
    }
    return kOk;
}

int cmd_tree_radius(const Options& o) {
    return emit_value(o, "tree radius", "lambda_max", tree_lambda_max(load_tree(o), o.s, o.tol, o.eps_zero));
}

int cmd_tree_kth(const Options& o) {
    return emit_value(o, "tree kth", "eigenvalue", kth_eigenvalue(load_tree(o), o.s, o.k, o.tol, o.eps_zero));
}

int cmd_tree_props(const Options& o) {
    const TreePropertyReport rep = check_tree_properties(load_tree(o), o.s, o.eps_zero);
    Output out(o.out);
    if (o.format == "json") {
        json j = header("tree props");
        j["s"] = o.s;
        j["lambda_max"] = printed(rep.lambda_max);
        json items = json::array();
        for (const auto& c : rep.checks) {
            json values = json::object();
            for (const auto& [name, v] : c.values) values[name] = printed(v);
            items.push_back({{"item", c.item}, {"description", c.description},
                             {"status", to_string(c.status)}, {"values", values}});
        }
        j["items"] = items;
        out.os() << j.dump(2) << "\n";
    } else {
        out.os() << "lambda_max = " << num(rep.lambda_max) << "\n";
        for (const auto& c : rep.checks) {
            out.os() << "(" << c.item << ") " << to_string(c.status) << "  " << c.description;
            for (const auto& [name, v] : c.values) out.os() << "  " << name << "=" << num(v);
            out.os() << "\n";
        }
    }
    return rep.any_failure() ? kInvariant : kOk;
}

std::optional<Spectrum> closed_form_for(const HJoinSpec& spec, double s) {
    for (auto f : {closed_form_p3_symmetric, closed_form_p4_palindrome, closed_form_c4_palindrome}) {
        try {
            return f(spec, s);
        } catch (const PreconditionError&) {
        }
    }
    return std::nullopt;
}

int cmd_hjoin(const Options& o) {
    const HJoinSpec spec = read_hjoin_file(o.input);
    const Spectrum sp = hjoin_spectrum(spec, o.s);
    std::optional<double> deviation;
    std::optional<double> closed_deviation;
    if (o.verify) {
        deviation = spectrum_deviation(sp, symmetric_spectrum(deformed_matrix(assemble_graph(spec), o.s)));
        if (auto cf = closed_form_for(spec, o.s)) closed_deviation = spectrum_deviation(sp, *cf);
    }
    Output out(o.out);
    if (o.format == "json") {
        json j = header("hjoin");
        j["s"] = o.s;
        j["eigenvalues"] = printed_array(snapped(sp));
        if (deviation) j["oracle_deviation"] = *deviation;
        if (closed_deviation) j["closed_form_deviation"] = *closed_deviation;
        out.os() << j.dump(2) << "\n";
    } else {
        for (double v : snapped(sp)) out.os() << num(v) << "\n";
        if (deviation) out.os() << "max deviation from dense oracle: " << num(*deviation) << "\n";
        if (closed_deviation) out.os() << "max deviation from closed form: " << num(*closed_deviation) << "\n";
    }
    const bool bad = (deviation && *deviation > kHJoinVerifyTol) ||
                     (closed_deviation && *closed_deviation > kHJoinVerifyTol);
    return bad ? kInvariant : kOk;
}

int cmd_bounds(const Options& o) {
    Graph g = read_edge_list_file(o.input);
    const double lmax = largest_eigenvalue(deformed_matrix(g, o.s));
    const double upper = upper_bound_radius(g, o.s);
    const std::optional<double> lower = lower_bound_radius(g, o.s);
    const double slack = 1e-9 * std::max(1.0, std::abs(lmax));
    const bool ok = lmax <= upper + slack && (!lower || *lower <= lmax + slack);
    Output out(o.out);
    if (o.format == "json") {
        json j = header("bounds");
        j.update({{"s", o.s},
                  {"lambda_max", printed(lmax)},
                  {"upper", printed(upper)},
                  {"lower", lower ? json(printed(*lower)) : json(nullptr)},
                  {"monotone_regime", monotone_regime(o.s)},
                  {"ok", ok}});
        out.os() << j.dump(2) << "\n";
    } else {
        out.os() << "lower      = " << (lower ? num(*lower) : std::string("n/a (s in (0,1))")) << "\n"
                 << "lambda_max = " << num(lmax) << "\n"
                 << "upper      = " << num(upper) << "\n";
    }
    return ok ? kOk : kInvariant;
}

int cmd_sweep(const Options& o) {
    if (!(o.s_from < o.s_to)) throw ParameterError("sweep needs --from < --to");
    if (o.steps < 2) throw ParameterError("sweep needs --steps >= 2");
    std::optional<HJoinSpec> spec;
    std::optional<Graph> g;
    if (is_json_path(o.input))
        spec = read_hjoin_file(o.input);
    else
        g = read_edge_list_file(o.input);

    std::vector<std::vector<double>> rows(o.steps);
    std::vector<double> svals(o.steps);
    for (std::size_t i = 0; i < o.steps; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(o.steps - 1);
        svals[i] = i + 1 == o.steps ? o.s_to : o.s_from + t * (o.s_to - o.s_from);
        rows[i] = snapped(spec ? hjoin_spectrum(*spec, svals[i]) : symmetric_spectrum(deformed_matrix(*g, svals[i])));
    }

    Output out(o.out);
    const std::size_t n = rows.front().size();
    out.os() << "s";
    for (std::size_t k = 1; k <= n; ++k) out.os() << ",lambda_" << k;
    out.os() << "\n";
    for (std::size_t i = 0; i < o.steps; ++i) {
        out.os() << num(svals[i]);
        for (double v : rows[i]) out.os() << "," << num(v);
        out.os() << "\n";
    }
    return kOk;
}

void print_report(std::ostream& os, const VerifyReport& rep, const std::string& format, const std::string& what) {
    if (format == "json") {
        json j = header("verify");
        j["input"] = what;
        json suites = json::array();
        for (const auto& s : rep.suites)
            suites.push_back({{"name", s.name},
                              {"checks", s.checks},
                              {"failures", s.failures},
                              {"worst_deviation", s.worst_deviation},
                              {"failure_details", s.failure_details},
                              {"findings", s.findings}});
        j["suites"] = suites;
        j["ok"] = rep.ok();
        os << j.dump(2) << "\n";
        return;
    }
    for (const auto& s : rep.suites) {
        char line[160];
        std::snprintf(line, sizeof line, "%-26s %-4s checks=%-6zu failures=%-4zu worst_deviation=%s",
                      s.name.c_str(), s.ok() ? "PASS" : "FAIL", s.checks, s.failures,
                      num(s.worst_deviation).c_str());
        os << line << "\n";
        for (const auto& d : s.failure_details) os << "    failure: " << d << "\n";
        for (const auto& f : s.findings) os << "    finding: " << f << "\n";
    }
    os << (rep.ok() ? "all suites pass" : "FAILURES detected") << "\n";
}

int cmd_verify(const Options& o) {
    VerifyOptions vo;
    vo.eps_zero = o.eps_zero;
    vo.tol = o.tol;
    VerifyReport rep;
    std::string what;
    if (o.trials > 0) {
        if (!o.input.empty()) throw ParameterError("give either a graph file or --random, not both");
        rep = verify_random(o.trials, o.seed, vo);
        what = "random trials=" + std::to_string(o.trials) + " seed=" + std::to_string(o.seed);
    } else {
        if (o.input.empty()) throw ParameterError("verify needs a graph file or --random N");
        rep = verify_graph(read_edge_list_file(o.input), vo);
        what = o.input;
    }
    Output out(o.out);
    print_report(out.os(), rep, o.format, what);
    return rep.ok() ? kOk : kInvariant;
}

int exit_for(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const StructureError*>(&e) ||
        dynamic_cast<const RegularityError*>(&e) || dynamic_cast<const NotFoundError*>(&e) ||
        dynamic_cast<const PreconditionError*>(&e))
        return kInput;
    if (dynamic_cast<const ConsistencyError*>(&e) || dynamic_cast<const NumericError*>(&e)) return kInvariant;
    return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deformed Laplacian spectra: trees, H-joins, bounds and checks"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        c->add_option("--out", o.out, "write to this file instead of stdout");
    };
    auto add_s = [&](CLI::App* c) { c->add_option("--s", o.s, "deformation parameter")->required(); };
    auto add_tree_opts = [&](CLI::App* c) {
        c->add_option("graph", o.input, "edge-list file")->required();
        add_s(c);
        c->add_option("--root", o.root, "root vertex for the bottom-up order");
        c->add_option("--tol", o.tol, "bisection tolerance");
        c->add_option("--eps-zero", o.eps_zero, "zero-pivot tolerance");
        add_format(c);
    };

    auto* gen = app.add_subcommand("gen", "write a named graph family as an edge list");
    gen->add_option("family", o.family, "path, cycle, star, complete or starlike")->required();
    gen->add_option("params", o.params, "size, or leg lengths for starlike")->required();
    gen->add_option("--out", o.out, "output file");

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of M_G(s)");
    spectrum->add_option("graph", o.input, "edge-list file")->required();
    add_s(spectrum);
    add_format(spectrum);

    auto* tree = app.add_subcommand("tree", "inertia-based computations on trees");
    tree->require_subcommand(1);
    auto* locate = tree->add_subcommand("locate", "eigenvalue counts above, at and below --lambda");
    add_tree_opts(locate);
    locate->add_option("--lambda", o.lambda, "location to test")->required();
    auto* radius = tree->add_subcommand("radius", "largest eigenvalue by bisection");
    add_tree_opts(radius);
    auto* kth = tree->add_subcommand("kth", "k-th smallest eigenvalue by bisection");
    add_tree_opts(kth);
    kth->add_option("--k", o.k, "1-based index")->required();
    auto* props = tree->add_subcommand("props", "checklist of spectral facts for trees");
    add_tree_opts(props);

    auto* hjoin = app.add_subcommand("hjoin", "H-join spectrum from component data");
    hjoin->add_option("spec", o.input, "H-join JSON file")->required();
    add_s(hjoin);
    hjoin->add_flag("--verify", o.verify, "compare with the dense solver on the assembled graph");
    add_format(hjoin);

    auto* bounds = app.add_subcommand("bounds", "lower and upper bounds on lambda_max");
    bounds->add_option("graph", o.input, "edge-list file")->required();
    add_s(bounds);
    add_format(bounds);

    auto* sweep = app.add_subcommand("sweep", "eigenvalues over a range of s as CSV");
    sweep->add_option("input", o.input, "edge-list file, or H-join JSON (.json)")->required();
    sweep->add_option("--from", o.s_from, "first s");
    sweep->add_option("--to", o.s_to, "last s");
    sweep->add_option("--steps", o.steps, "number of samples (>= 2)");
    sweep->add_option("--out", o.out, "output CSV file");
    sweep->add_option("--format", o.format, "csv")->check(CLI::IsMember({"csv"}));

    auto* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("graph", o.input, "edge-list file");
    verify->add_option("--random", o.trials, "number of random trials");
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--tol", o.tol, "bisection tolerance");
    verify->add_option("--eps-zero", o.eps_zero, "zero-pivot tolerance");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) return cmd_gen(o);
        if (*spectrum) return cmd_spectrum(o);
        if (*locate) return cmd_tree_locate(o);
        if (*radius) return cmd_tree_radius(o);
        if (*kth) return cmd_tree_kth(o);
        if (*props) return cmd_tree_props(o);
        if (*hjoin) return cmd_hjoin(o);
        if (*bounds) return cmd_bounds(o);
        if (*sweep) return cmd_sweep(o);
        if (*verify) return cmd_verify(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return kUsage;
}
