#include "mlcech/cli/run.hpp"

#include "commands.hpp"
#include "io.hpp"

#include "mlcech/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>

namespace mlcech::cli {

namespace {

Format resolve_format(const std::string& requested, Format fallback) {
    if (requested.empty()) {
        return fallback;
    }
    return requested == "csv" ? Format::csv : Format::json;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mittag-Leffler problems, Cech cohomology and Riemann-Roch on desk-scale instances", "mlcech"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::vector<std::string> assignments;
    std::string out_path;
    std::string format;
    bool explain = false;
    app.add_option("--config", config_path, "JSON file with numerical defaults (see --explain)");
    app.add_option("--set", assignments, "Override one numerical default, key=value (repeatable)");
    app.add_option("--out", out_path, "Write the report to this file instead of stdout");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--explain", explain, "Print the effective numerical defaults and the parsed command, then exit");

    std::string cech_input;
    auto* cech = app.add_subcommand("cech", "Cohomology ranks of a finite cover with exact section data");
    cech->add_option("--input", cech_input, "Cover JSON (inline or path)")->required();

    P1Request p1;
    auto* p1_cmd = app.add_subcommand("p1", "Cohomology of O(D) on P^1, Riemann-Roch, linear equivalence, Omega^1");
    p1_cmd->add_option("--divisor", p1.divisor, "Divisor JSON {point: order} (inline or path)");
    p1_cmd->add_option("--equivalent", p1.equivalent, "Second divisor for the linear equivalence test");
    p1_cmd->add_flag("--omega1", p1.omega1, "Also report the Cech ranks of Omega^1");

    SweepRequest sweep;
    auto* sweep_cmd = app.add_subcommand("rr-sweep", "Riemann-Roch over randomly sampled divisors");
    sweep_cmd->add_option("--support", sweep.support, "Comma-separated support points")->capture_default_str();
    sweep_cmd->add_option("--range", sweep.range, "Coefficients lie in [-range, range]")->capture_default_str();
    sweep_cmd->add_option("--max-degree", sweep.max_degree, "Bound on |deg D|")->capture_default_str();
    sweep_cmd->add_option("--samples", sweep.samples, "Number of divisors")->capture_default_str();
    sweep_cmd->add_option("--seed", sweep.seed, "Sampler seed")->capture_default_str();

    std::string ml_parts;
    auto* ml_cmd = app.add_subcommand("ml-p1", "Mittag-Leffler distribution on P^1: obstruction class and solution");
    ml_cmd->add_option("--parts", ml_parts, "[{pole, coeffs}] JSON (inline or path)")->required();

    PlaneRequest plane;
    auto* plane_cmd = app.add_subcommand("plane-ml", "Mittag-Leffler series in a plane domain by pole pushing");
    plane_cmd->add_option("--domain", plane.domain, "Domain JSON {kind, ...} (inline or path)")->required();
    plane_cmd->add_option("--poles", plane.poles, "[{a, coeffs: {j: c}}] JSON (inline or path)")->required();
    plane_cmd->add_option("--stages", plane.stages, "Truncation depth N (default: last stage with a pole)");
    plane_cmd->add_option("--grid", plane.grid, "Evaluation grid 'xmin:xmax:nx,ymin:ymax:ny' (CSV output)");

    TorusRequest torus;
    auto* torus_cmd = app.add_subcommand("torus-ml", "Residue criterion and elliptic solution on a complex torus");
    torus_cmd->add_option("--lattice", torus.lattice, "Periods \"w1,w2\"")->required();
    torus_cmd->add_option("--parts", torus.parts, "[{a, coeffs: {j: c}}] JSON (inline or path)")->required();
    torus_cmd->add_flag("--check", torus.check, "Verify periodicity and local coefficients numerically");

    long tables_n = 1;
    auto* tables_cmd = app.add_subcommand("tables", "Betti and Hodge numbers of P^n");
    tables_cmd->add_option("--n", tables_n, "Dimension n >= 1")->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kSchemaError;
    }

    try {
        Settings settings;
        if (!config_path.empty()) {
            settings.merge(load_json_arg(config_path));
        }
        for (const auto& a : assignments) {
            settings.set(a);
        }
        const auto* sub = app.get_subcommands().front();
        if (explain) {
            json j = {{"command", sub->get_name()}, {"settings", settings.to_json()}, {"schema_version", 1}};
            out << j.dump(2) << "\n";
            return kOk;
        }

        std::string report;
        const std::string name = sub->get_name();
        if (name == "cech") {
            report = cech_command(cech_input, settings, resolve_format(format, Format::json));
        } else if (name == "p1") {
            report = p1_command(p1, settings, resolve_format(format, Format::json));
        } else if (name == "rr-sweep") {
            report = rr_sweep_command(sweep, settings, resolve_format(format, Format::csv));
        } else if (name == "ml-p1") {
            report = ml_p1_command(ml_parts, settings, resolve_format(format, Format::json));
        } else if (name == "plane-ml") {
            report = plane_ml_command(plane, settings, resolve_format(format, plane.grid ? Format::csv : Format::json));
        } else if (name == "torus-ml") {
            report = torus_ml_command(torus, settings, resolve_format(format, Format::json));
        } else {
            report = tables_command(tables_n, resolve_format(format, Format::json));
        }

        if (out_path.empty()) {
            out << report;
        } else {
            write_report(out_path, report);
        }
        return kOk;
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << "\n";
        return kSchemaError;
    } catch (const nlohmann::json::exception& e) {
        err << "schema error: " << e.what() << "\n";
        return kSchemaError;
    } catch (const MathError& e) {
        err << "math error: " << e.what() << "\n";
        return kMathError;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kIoError;
    }
}

} // namespace mlcech::cli
