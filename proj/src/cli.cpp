#include "stokes/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "stokes/closedform.hpp"
#include "stokes/solver.hpp"

namespace stokes::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string family;
    int n = 0;
    int m = 0;
    std::vector<int> weights;
    std::string format = "table";
    bool verify = false;
    bool char_poly = false;
    bool timing = false;
    int max_dim = 16;
};

Json rational_json(const Rational& r)
{
    return Json::array({r.numerator().get_str(), r.denominator().get_str()});
}

Json cyclo(const Cyclotomic& c)
{
    const Cyclotomic d = c.demoted();
    Json coeffs = Json::array();
    for (const auto& r : d.coeffs()) {
        coeffs.push_back(rational_json(r));
    }
    Json out;
    out["order"] = d.order();
    out["coeffs"] = std::move(coeffs);
    return out;
}

Json polynomial_json(const Polynomial& p)
{
    Json coeffs = Json::array();
    for (const auto& r : p.coeffs()) {
        coeffs.push_back(rational_json(r));
    }
    return coeffs;
}

Json problem_json(const QdeProblem& p)
{
    Json out;
    if (const auto* proj = std::get_if<Projective>(&p.family())) {
        out["family"] = "projective";
        out["n"] = proj->n;
    } else if (const auto* w = std::get_if<Weighted>(&p.family())) {
        out["family"] = "weighted";
        out["weights"] = w->weights;
    } else {
        const auto& h = std::get<Hypersurface>(p.family());
        out["family"] = "hypersurface";
        out["n"] = h.n;
        out["m"] = h.m;
    }
    out["ramification"] = p.ramification();
    out["dimension"] = p.dimension();
    out["base_order"] = p.base_order();
    return out;
}

Json matrix_json(const SymMatrix& a)
{
    Json entries = Json::array();
    for (const auto& [idx, e] : a.entries()) {
        Json item;
        item["row"] = idx.first;
        item["col"] = idx.second;
        if (e.is_constant()) {
            item["value"] = cyclo(e.constant_term());
        } else {
            item["symbol"] = e.str();
        }
        entries.push_back(std::move(item));
    }
    return entries;
}

Json document(const StokesSystem& system, const StokesData& data, const Options& opt,
              const std::optional<VerificationReport>& report, double elapsed_ms)
{
    const QdeProblem& p = system.problem;
    Json doc;
    doc["schema"] = kSchema;
    doc["problem"] = problem_json(p);

    const EigenvalueSet ev = eigenvalues(p);
    Json eig;
    eig["ramified"] = ev.ramification;
    eig["constant_power"] = rational_json(ev.constant_power);
    eig["zero_multiplicity"] = ev.zero_multiplicity;
    doc["eigenvalues"] = std::move(eig);

    Json dirs = Json::array();
    for (const auto& f : system.factors) {
        Json d;
        d["direction"] = rational_json(f.direction.value);
        Json pairs = Json::array();
        for (const auto& pr : f.direction.pairs) {
            pairs.push_back(Json::array({eigen_label(pr.source), eigen_label(pr.target)}));
        }
        d["pairs"] = std::move(pairs);
        d["support"] = matrix_json(f.matrix);
        dirs.push_back(std::move(d));
    }
    doc["singular_directions"] = std::move(dirs);

    Json gamma;
    gamma["wrap_sign"] = system.gamma.wrap_sign;
    gamma["entries"] = matrix_json(system.gamma.matrix);
    doc["formal_monodromy"] = std::move(gamma);

    Json sd;
    Json base = Json::array();
    for (const auto& [lk, v] : data.x_base) {
        base.push_back({{"l", lk.first}, {"k", lk.second}, {"value", cyclo(v)}});
    }
    sd["solved"] = std::move(base);
    Json table = Json::array();
    for (const auto& [lk, v] : data.x) {
        table.push_back({{"l", lk.first}, {"k", lk.second}, {"value", cyclo(v)}});
    }
    sd["x"] = std::move(table);
    Json yz = Json::array();
    for (const auto& [j, v] : data.yz) {
        yz.push_back({{"j", j}, {"value", cyclo(v)}, {"display", v.str()}});
    }
    sd["yz"] = std::move(yz);
    Json gauge = Json::array();
    for (const auto& [j, v] : data.gauge.y) {
        gauge.push_back({{"j", j}, {"y", cyclo(v)}});
    }
    sd["gauge"] = std::move(gauge);
    doc["stokes_data"] = std::move(sd);

    if (opt.char_poly) {
        Json cp;
        cp["symbolic"] = system.charpoly.str();
        cp["target"] = polynomial_json(system.target());
        cp["target_display"] = system.target().str("λ");
        cp["monodromy"] = polynomial_json(system.monodromy_poly);
        cp["sign"] = system.sign;
        doc["char_poly"] = std::move(cp);
    }
    if (report) {
        Json v;
        v["passed"] = report->passed();
        Json checks = Json::array();
        for (const auto& c : report->checks) {
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        v["checks"] = std::move(checks);
        doc["verification"] = std::move(v);
    }
    Json stats;
    stats["equations"] = system.equations.size();
    stats["unknowns"] = system.unknowns().size();
    stats["charpoly_states"] = system.stats.states;
    doc["stats"] = std::move(stats);
    if (opt.timing) {
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(3) << elapsed_ms;
        doc["timing_ms"] = ms.str();
    }
    return doc;
}

std::string pair_label(int l, int k)
{
    return "x_{" + std::to_string(l) + "," + std::to_string(k) + "}";
}

void print_table(std::ostream& out, const StokesSystem& system, const StokesData& data, const Options& opt,
                 const std::optional<VerificationReport>& report, double elapsed_ms)
{
    const QdeProblem& p = system.problem;
    out << p.describe() << "  ram=" << p.ramification() << "  N=" << p.dimension() << "\n";
    out << "formal monodromy wrap sign: " << (system.gamma.wrap_sign > 0 ? "+1" : "-1") << "\n";
    out << "singular directions in [0,1):\n";
    for (const auto& f : system.factors) {
        out << "  d=" << f.direction.value.str() << ":";
        for (const auto& pr : f.direction.pairs) {
            out << " (" << eigen_label(pr.source) << "->" << eigen_label(pr.target) << ")";
        }
        out << "\n";
    }
    if (opt.char_poly) {
        out << "char poly:  " << system.charpoly.str() << "\n";
        out << "target:     " << system.target().str("λ") << "\n";
    }
    out << "solved Stokes data:\n";
    for (const auto& [lk, v] : data.x_base) {
        out << "  " << pair_label(lk.first, lk.second) << " = " << v.str() << "\n";
    }
    for (const auto& [j, v] : data.yz) {
        out << "  y_" << j << "z_" << j << " = " << v.str() << "\n";
    }
    if (!data.x.empty()) {
        const int ram = p.ramification();
        out << "full table x_{l,k} (row l, column k):\n";
        std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(ram),
                                                    std::vector<std::string>(static_cast<std::size_t>(ram), "."));
        std::size_t width = 1;
        for (const auto& [lk, v] : data.x) {
            auto& cell = cells[static_cast<std::size_t>(lk.first)][static_cast<std::size_t>(lk.second)];
            cell = v.str();
            width = std::max(width, cell.size());
        }
        for (const auto& row : cells) {
            out << " ";
            for (const auto& c : row) {
                out << " " << std::setw(static_cast<int>(width)) << c;
            }
            out << "\n";
        }
    }
    if (report) {
        out << "verify: " << (report->passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& c : report->checks) {
            out << "  [" << (c.passed ? "ok" : "!!") << "] " << c.name << ": " << c.detail << "\n";
        }
    }
    out << "char poly expansion states: " << system.stats.states << "\n";
    if (opt.timing) {
        out << "time: " << std::fixed << std::setprecision(3) << elapsed_ms << " ms\n";
    }
}

QdeProblem make_problem(const Options& opt)
{
    if (opt.family == "projective") {
        return QdeProblem::projective(opt.n);
    }
    if (opt.family == "weighted") {
        return QdeProblem::weighted(opt.weights);
    }
    return QdeProblem::hypersurface(opt.n, opt.m);
}

}  // namespace

std::string cyclotomic_json(const Cyclotomic& c)
{
    return cyclo(c).dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Stokes data of quantum differential equations", "stokes-lab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    app.add_flag("--verify", opt.verify, "Compare against the closed-form oracles");
    app.add_flag("--char-poly", opt.char_poly, "Include the characteristic polynomials");
    app.add_flag("--timing", opt.timing, "Include wall-clock time");
    app.add_option("--max-dim", opt.max_dim, "Largest dimension to attempt")->check(CLI::Range(1, 62));

    auto* proj = app.add_subcommand("projective", "delta^n - z");
    proj->add_option("--n", opt.n, "n")->required();
    auto* weighted = app.add_subcommand("weighted", "weighted projective space");
    auto* w_opt = weighted->add_option("--weights", opt.weights, "w0,w1,...")->delimiter(',');
    std::vector<int> positional_weights;
    auto* w_pos = weighted->add_option("weight-list", positional_weights, "w0,w1,...")->delimiter(',');
    w_opt->excludes(w_pos);
    auto* hyp = app.add_subcommand("hypersurface", "degree m hypersurface in P^{n+m-1}");
    hyp->add_option("--n", opt.n, "n")->required();
    hyp->add_option("--m", opt.m, "m")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadArguments;
    }
    if (opt.weights.empty()) {
        opt.weights = positional_weights;
    }
    opt.family = proj->parsed() ? "projective" : weighted->parsed() ? "weighted" : "hypersurface";
    if (opt.family == "weighted" && opt.weights.empty()) {
        err << "weighted: --weights is required\n";
        return kBadArguments;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        const QdeProblem p = make_problem(opt);
        if (p.dimension() > opt.max_dim) {
            err << "refusing " << p.describe() << ": dimension " << p.dimension() << " exceeds --max-dim "
                << opt.max_dim << "\n";
            return kBadArguments;
        }
        const StokesSystem system = build_system(p, opt.max_dim);
        const StokesData data = solve(system);
        std::optional<VerificationReport> report;
        if (opt.verify) {
            report = verify(data, system);
        }
        const double elapsed =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (opt.format == "json") {
            out << document(system, data, opt, report, elapsed).dump(2) << "\n";
        } else {
            print_table(out, system, data, opt, report, elapsed);
        }
        return kOk;
    } catch (const StuckSystem& e) {
        err << "stuck: " << e.what() << "\n";
        return kUnsolved;
    } catch (const InconsistentSystem& e) {
        err << "inconsistent: " << e.what() << "\n";
        return kUnsolved;
    } catch (const DimensionLimitExceeded& e) {
        err << e.what() << "\n";
        return kBadArguments;
    } catch (const std::invalid_argument& e) {
        err << "invalid problem: " << e.what() << "\n";
        return kBadArguments;
    }
}

}  // namespace stokes::cli
