// ihara: batch front end for the zeta/entropy library.
//
// Subcommands: validate, zeta, lambda, params, entropy, audit, primes,
// billiard. Output is deterministic; JSON carries schema tag "ihara-lab/1".
// Exit codes: 0 ok, 1 semantic failure (hypotheses fail, empty strict
// window, billiard assertion), 2 I/O failure, 3 parse failure, 4 invalid
// distribution, 5 parameters outside the window, 70 internal error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "ihara/entropy.hpp"
#include "ihara/errors.hpp"
#include "ihara/graph.hpp"
#include "ihara/json_io.hpp"
#include "ihara/params.hpp"
#include "ihara/shift.hpp"
#include "ihara/zeta.hpp"

namespace {

using namespace ihara;

enum ExitCode {
    kOk = 0,
    kFail = 1,
    kIoError = 2,
    kParseError = 3,
    kBadDistribution = 4,
    kOutOfWindow = 5,
    kInternal = 70,
};

struct CommonOpts {
    std::string output = "json";  // json | table | csv
    std::string config_path;
    std::optional<double> tol_flag;
    std::optional<int> order_flag;

    std::map<std::string, std::string> config;

    void load_config() {
        if (config_path.empty()) return;
        std::ifstream in(config_path);
        if (!in) throw IoError("cannot read config file: " + config_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            config[line.substr(0, eq)] = line.substr(eq + 1);
        }
    }

    // Precedence: flag > config > env > built-in default.
    double tol() const {
        if (tol_flag) return *tol_flag;
        if (auto it = config.find("tol"); it != config.end()) return std::stod(it->second);
        if (const char* env = std::getenv("IHARA_LAB_TOL")) return std::stod(env);
        return 1e-12;
    }

    int order(int fallback = 8) const {
        if (order_flag) return *order_flag;
        if (auto it = config.find("order"); it != config.end()) return std::stoi(it->second);
        return fallback;
    }
};

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

void emit(const ordered_json& j) { std::cout << dump_json(j) << "\n"; }

// ---------------------------------------------------------------- validate

int cmd_validate(const std::string& path, const CommonOpts& opts) {
    Graph g = load_graph(path);
    ValidationReport report = validate(g);
    if (opts.output == "table") {
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.hypothesis << ": " << c.detail << "\n";
        }
        std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
    } else {
        ordered_json j{{"schema", kSchemaTag}, {"command", "validate"}};
        j.update(to_json(report));
        emit(j);
    }
    return report.pass ? kOk : kFail;
}

// -------------------------------------------------------------------- zeta

int cmd_zeta(const std::string& path, const std::string& form, const CommonOpts& opts,
             int grid_points) {
    Graph g = load_graph(path);
    require_valid(g);
    int order = opts.order();

    if (opts.output == "csv") {
        // Plot-ready grid of (x, zeta, zeta', h) over [0, 0.9/lambda].
        ZetaFunction zf(g);
        std::cout << "x,zeta,zeta_prime,h\n";
        for (int i = 0; i < grid_points; ++i) {
            double x = 0.9 * zf.spectral().radius * i / (grid_points - 1);
            auto d = zf.derivatives(x);
            double h = 1.0 - x * d.zeta_prime;
            std::cout << format_double(x) << ',' << format_double(d.zeta) << ','
                      << format_double(d.zeta_prime) << ',' << format_double(h) << "\n";
        }
        return kOk;
    }

    ordered_json j{{"schema", kSchemaTag}, {"command", "zeta"}, {"form", form}};
    if (form == "det") {
        ReciprocalZetaPolynomial r = reciprocal_poly(g);
        j["m"] = r.m;
        j["n"] = r.n;
        j["cyclotomic_exponent"] = r.m - r.n;
        j["det_factor"] = to_json(r.det_part);
        j["reciprocal_polynomial"] = to_json(r.q);
        if (opts.output == "table") {
            std::cout << "Q(x) = (1 - x^2)^" << (r.m - r.n) << " * det factor\ndet factor:";
            for (const Int& c : r.det_part.coefficients()) std::cout << ' ' << to_string(c);
            std::cout << "\nexpanded Q(x) coefficients (lowest degree first):";
            for (const Int& c : r.q.coefficients()) std::cout << ' ' << to_string(c);
            std::cout << "\n";
            return kOk;
        }
    } else if (form == "series") {
        TruncatedSeries s = zeta_series(g, order);
        j["order"] = order;
        j["series"] = to_json(s);
        if (opts.output == "table") {
            std::cout << "zeta series coefficients c_0.." << order << ":";
            for (int k = 0; k <= order; ++k) std::cout << ' ' << to_string(s[k]);
            std::cout << "\n";
            return kOk;
        }
    } else if (form == "euler") {
        std::vector<PrimeCycle> primes = enumerate_primes(g, order);
        TruncatedSeries s = euler_product_series(primes, order, order);
        j["order"] = order;
        j["prime_count"] = primes.size();
        j["series"] = to_json(s);
        if (opts.output == "table") {
            std::cout << "euler product coefficients to order " << order << ":";
            for (int k = 0; k <= order; ++k) std::cout << ' ' << to_string(s[k]);
            std::cout << "\n";
            return kOk;
        }
    } else {
        throw DomainError("unknown --form: " + form);
    }
    emit(j);
    return kOk;
}

// ------------------------------------------------------------------ lambda

int cmd_lambda(const std::string& path, const CommonOpts& opts) {
    Graph g = load_graph(path);
    SpectralData s = perron_root(g);
    if (opts.output == "table") {
        std::cout << "lambda " << format_double(s.lambda) << "\npower_iteration "
                  << format_double(s.lambda_power) << "\nbounds [" << format_double(s.lower_bound)
                  << ", " << format_double(s.upper_bound) << "]\nradius " << format_double(s.radius)
                  << "\n";
        return kOk;
    }
    ordered_json j{{"schema", kSchemaTag}, {"command", "lambda"}};
    j.update(to_json(s));
    emit(j);
    return kOk;
}

// ------------------------------------------------------------------ params

int cmd_params(const std::string& path, const std::string& mode_str, std::optional<double> a,
               std::optional<double> sigma, const CommonOpts& opts) {
    Graph g = load_graph(path);
    require_valid(g);
    WindowMode mode = window_mode_from_string(mode_str);
    ZetaFunction zf(g);
    ParamSolver solver(zf, opts.tol());

    double x0 = solver.solve_x0();
    double x1 = solver.solve_x1();
    if (mode == WindowMode::strict && !(x1 < x0)) {
        ordered_json j{{"schema", kSchemaTag},
                       {"command", "params"},
                       {"mode", mode_str},
                       {"tolerance", opts.tol()},
                       {"lambda", zf.spectral().lambda},
                       {"x0", x0},
                       {"x1", x1},
                       {"strict_window_nonempty", false},
                       {"error", "strict window (x1, x0) is empty"}};
        emit(j);
        return kFail;
    }

    ParamWindow w = solver.window(mode, a, sigma);
    if (opts.output == "csv") {
        std::cout << "lambda,x0,x1,l_sigma,a,sigma,mode,strict_window_nonempty,chain_holds\n"
                  << format_double(w.lambda) << ',' << format_double(w.x0) << ','
                  << format_double(w.x1) << ',' << format_double(w.l_sigma) << ','
                  << format_double(w.a) << ',' << format_double(w.sigma) << ',' << to_string(w.mode)
                  << ',' << (w.strict_window_nonempty ? 1 : 0) << ',' << (w.chain_holds ? 1 : 0)
                  << "\n";
        return kOk;
    }
    ordered_json j{{"schema", kSchemaTag}, {"command", "params"}, {"tolerance", opts.tol()}};
    j.update(to_json(w));
    double lo = (mode == WindowMode::strict) ? w.x1 : 0.0;
    j["a_range"] = {lo, w.x0};
    if (opts.output == "table") {
        for (auto it = j.begin(); it != j.end(); ++it)
            std::cout << it.key() << " = " << dump_json(it.value(), 0) << "\n";
        return kOk;
    }
    emit(j);
    return kOk;
}

// ----------------------------------------------------------------- entropy

int cmd_entropy(const std::string& graph_path, const std::string& dist_path,
                const std::string& mode_str, std::optional<double> a, std::optional<double> sigma,
                bool normalize, const CommonOpts& opts) {
    Graph g = load_graph(graph_path);
    require_valid(g);
    std::ifstream in(dist_path);
    if (!in) throw IoError("cannot read distribution file: " + dist_path);
    std::stringstream buf;
    buf << in.rdbuf();
    ProbabilityDistribution P = ProbabilityDistribution::from_text(buf.str(), normalize);

    ZetaFunction zf(g);
    ParamSolver solver(zf, opts.tol());
    EntropyParams params = make_entropy_params(solver, window_mode_from_string(mode_str), a, sigma);
    double value = ihara_entropy(zf, params, P);

    ordered_json j{{"schema", kSchemaTag},
                   {"command", "entropy"},
                   {"value", value},
                   {"params",
                    ordered_json{{"a", params.a}, {"sigma", params.sigma}, {"mode", mode_str}}},
                   {"window", to_json(params.window)},
                   {"W", P.W()}};
    if (opts.output == "table") {
        std::cout << "S = " << format_double(value) << "  (a = " << format_double(params.a)
                  << ", sigma = " << format_double(params.sigma) << ", mode = " << mode_str << ")\n";
        return kOk;
    }
    emit(j);
    return kOk;
}

// ------------------------------------------------------------------- audit

int cmd_audit(const std::string& path, const CommonOpts& opts) {
    Graph g = load_graph(path);
    require_valid(g);
    AuditReport report = audit_inequalities(g, opts.tol());
    if (opts.output == "table") {
        for (const auto& c : report.claims) {
            std::cout << (c.holds ? "holds " : "FAILS ") << c.claim_id << " ["
                      << c.paper_location << "] lhs=" << format_double(c.lhs)
                      << " rhs=" << format_double(c.rhs) << "  " << c.note << "\n";
        }
        return kOk;
    }
    if (opts.output == "csv") {
        std::cout << "claim_id,paper_location,lhs,rhs,holds\n";
        for (const auto& c : report.claims) {
            std::cout << c.claim_id << ",\"" << c.paper_location << "\"," << format_double(c.lhs)
                      << ',' << format_double(c.rhs) << ',' << (c.holds ? 1 : 0) << "\n";
        }
        return kOk;
    }
    ordered_json j{{"schema", kSchemaTag}, {"command", "audit"}};
    j.update(to_json(report));
    emit(j);
    return kOk;  // claim outcomes are data, not process failures
}

// ------------------------------------------------------------------ primes

int cmd_primes(const std::string& path, int max_len, const CommonOpts& opts) {
    Graph g = load_graph(path);
    std::vector<PrimeCycle> primes = enumerate_primes(g, max_len);
    std::map<int, long> counts;
    for (const auto& p : primes) ++counts[p.length()];
    if (opts.output == "table") {
        std::cout << "length count\n";
        for (int l = 3; l <= max_len; ++l) {
            auto it = counts.find(l);
            std::cout << l << " " << (it == counts.end() ? 0 : it->second) << "\n";
        }
        return kOk;
    }
    ordered_json count_json = ordered_json::object();
    for (int l = 3; l <= max_len; ++l) {
        auto it = counts.find(l);
        count_json[std::to_string(l)] = it == counts.end() ? 0 : it->second;
    }
    ordered_json j{{"schema", kSchemaTag},
                   {"command", "primes"},
                   {"max_len", max_len},
                   {"counts", count_json},
                   {"primes", to_json(primes)}};
    emit(j);
    return kOk;
}

// ---------------------------------------------------------------- billiard

IntPoly billiard_reference_polynomial() {
    // (1 - x^2)^3 (48x^10 + 32x^8 - 32x^7 - 8x^6 - 32x^5 - 4x^4 - 8x^3 + 3x^2 + 1)
    IntPoly cyc({Int(1), Int(0), Int(-1)});
    IntPoly f({Int(1), Int(0), Int(3), Int(-8), Int(-4), Int(-32), Int(-8), Int(-32), Int(32),
               Int(0), Int(48)});
    return cyc.pow(3) * f;
}

int cmd_billiard(const CommonOpts& opts) {
    Graph g = make_billiard_graph();

    ValidationReport report = validate(g);
    std::cout << "validate: " << (report.pass ? "pass" : "fail") << "\n";
    if (!report.pass) return kFail;

    ReciprocalZetaPolynomial r = reciprocal_poly(g);
    std::cout << "1/zeta coefficients:";
    for (const Int& c : r.q.coefficients()) std::cout << ' ' << to_string(c);
    std::cout << "\n";
    if (!(r.q == billiard_reference_polynomial())) {
        std::cout << "FAIL: determinant-formula polynomial differs from the published one\n";
        return kFail;
    }
    std::cout << "polynomial matches the published billiard zeta\n";

    if (opts.order_flag) {
        TruncatedSeries s = zeta_series(g, opts.order());
        std::cout << "series c_0.." << opts.order() << ":";
        for (int k = 0; k <= opts.order(); ++k) std::cout << ' ' << to_string(s[k]);
        std::cout << "\n";
    }

    ZetaFunction zf(g);
    ParamSolver solver(zf, opts.tol());
    ParamWindow w = solver.window(WindowMode::relaxed);
    std::cout << "lambda " << format_double(w.lambda) << "  x0 " << format_double(w.x0) << "  x1 "
              << format_double(w.x1) << "  l_sigma " << format_double(w.l_sigma) << "\n";

    EntropyParams params = make_entropy_params(solver, WindowMode::relaxed);
    double S = ihara_entropy(zf, params, ProbabilityDistribution::uniform(5));
    std::cout << "entropy(uniform W=5) " << format_double(S) << "\n";

    AuditReport audit = solver.audit();
    int holds = 0;
    for (const auto& c : audit.claims) holds += c.holds ? 1 : 0;
    std::cout << "audit: " << holds << "/" << audit.claims.size() << " claims hold\n";
    std::cout << "PASS\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ihara zeta function, entropy and lemma-audit toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand

    CommonOpts opts;
    app.add_option("--output", opts.output, "Output format: json, table or csv")
        ->check(CLI::IsMember({"json", "table", "csv"}));
    app.add_option("--config", opts.config_path, "key=value config file (tol, order)");
    double tol_val = 0.0;
    auto* tol_opt = app.add_option("--tol", tol_val, "Root-finding tolerance (absolute, on x)");
    int order_val = 0;
    auto* order_opt = app.add_option("--order", order_val, "Series / product truncation order");

    std::string graph_path, dist_path, form = "det", mode = "relaxed";
    int max_len = 6, grid_points = 50;
    std::optional<double> a_flag, sigma_flag;
    double a_val = 0.0, sigma_val = 0.0;
    bool normalize = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check the standing hypotheses");
    validate_cmd->add_option("graph", graph_path)->required();

    auto* zeta_cmd = app.add_subcommand("zeta", "Reciprocal polynomial / series / Euler product");
    zeta_cmd->add_option("graph", graph_path)->required();
    zeta_cmd->add_option("--form", form, "det, series or euler")
        ->check(CLI::IsMember({"det", "series", "euler"}));
    zeta_cmd->add_option("--grid", grid_points, "Points in the csv grid");

    auto* lambda_cmd = app.add_subcommand("lambda", "Perron root and bounds");
    lambda_cmd->add_option("graph", graph_path)->required();

    auto* params_cmd = app.add_subcommand("params", "Thresholds x0, x1 and the sigma limit");
    params_cmd->add_option("graph", graph_path)->required();
    params_cmd->add_option("--mode", mode)->check(CLI::IsMember({"strict", "relaxed"}));
    auto* pa = params_cmd->add_option("--a", a_val, "Entropy parameter a");
    auto* ps = params_cmd->add_option("--sigma", sigma_val, "Entropy parameter sigma");

    auto* entropy_cmd = app.add_subcommand("entropy", "Ihara entropy of a distribution");
    entropy_cmd->add_option("graph", graph_path)->required();
    entropy_cmd->add_option("dist", dist_path)->required();
    entropy_cmd->add_option("--mode", mode)->check(CLI::IsMember({"strict", "relaxed"}));
    auto* ea = entropy_cmd->add_option("--a", a_val, "Entropy parameter a");
    auto* es = entropy_cmd->add_option("--sigma", sigma_val, "Entropy parameter sigma");
    entropy_cmd->add_flag("--normalize", normalize, "Rescale inputs to sum 1");

    auto* audit_cmd = app.add_subcommand("audit", "Measure every lemma/inequality claim");
    audit_cmd->add_option("graph", graph_path)->required();

    auto* primes_cmd = app.add_subcommand("primes", "Prime cycles up to a length");
    primes_cmd->add_option("graph", graph_path)->required();
    primes_cmd->add_option("--max-len", max_len, "Maximum prime length");

    auto* billiard_cmd =
        app.add_subcommand("billiard", "Run the bundled five-reflector demo end to end");

    CLI11_PARSE(app, argc, argv);

    try {
        opts.load_config();
        if (*tol_opt) opts.tol_flag = tol_val;
        if (*order_opt) opts.order_flag = order_val;
        if (*pa || *ea) a_flag = a_val;
        if (*ps || *es) sigma_flag = sigma_val;

        if (*validate_cmd) return cmd_validate(graph_path, opts);
        if (*zeta_cmd) return cmd_zeta(graph_path, form, opts, grid_points);
        if (*lambda_cmd) return cmd_lambda(graph_path, opts);
        if (*params_cmd) return cmd_params(graph_path, mode, a_flag, sigma_flag, opts);
        if (*entropy_cmd)
            return cmd_entropy(graph_path, dist_path, mode, a_flag, sigma_flag, normalize, opts);
        if (*audit_cmd) return cmd_audit(graph_path, opts);
        if (*primes_cmd) return cmd_primes(graph_path, max_len, opts);
        if (*billiard_cmd) return cmd_billiard(opts);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kIoError;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const DistributionError& e) {
        std::cerr << "distribution error: " << e.what() << "\n";
        return kBadDistribution;
    } catch (const WindowError& e) {
        std::cerr << "window error: " << e.what() << "\n";
        return kOutOfWindow;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
