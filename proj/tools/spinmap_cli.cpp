// Command-line front end: single-point measures, the Werner <-> temperature
// map, parameter sweeps with CSV/SVG output, and the figure presets.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "spinmap/sweep.hpp"

namespace {

using namespace spinmap;

BellChoice parse_bell(const std::string& s) {
    static const std::map<std::string, BellChoice> table = {
        {"phi+", BellChoice::PhiPlus},
        {"phi-", BellChoice::PhiMinus},
        {"psi+", BellChoice::PsiPlus},
        {"psi-", BellChoice::PsiMinus},
    };
    const auto it = table.find(s);
    if (it == table.end()) throw validation_error("unknown Bell state: " + s);
    return it->second;
}

SweepAxis parse_axis(const std::string& s) {
    if (s == "t") return SweepAxis::Temperature;
    if (s == "invt") return SweepAxis::InverseTemperature;
    if (s == "b") return SweepAxis::Field;
    if (s == "x") return SweepAxis::WernerX;
    throw validation_error("unknown sweep axis: " + s);
}

const char* regime_name(WernerRegime r) {
    switch (r) {
        case WernerRegime::Separable: return "separable";
        case WernerRegime::EntangledLocal: return "entangled-local";
        case WernerRegime::ChshViolating: return "chsh-violating";
    }
    return "?";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit Heisenberg thermal states, Werner states, and their measures"};
    app.require_subcommand(1);

    double j = 1.0, b = 0.0, kb = 1.0, t = 1.0, x = 0.0;
    std::string bell = "phi+";
    bool invert = false;

    auto* point = app.add_subcommand("point", "measures of the thermal state at (J, B, T)");
    point->add_option("--j", j, "coupling J_H")->default_val(1.0);
    point->add_option("--b", b, "field B")->default_val(0.0);
    point->add_option("--t", t, "temperature")->required();
    point->add_option("--kb", kb, "Boltzmann constant")->default_val(1.0);
    point->add_option("--bell", bell, "phi+|phi-|psi+|psi-");

    auto* werner = app.add_subcommand("werner", "measures of the Werner state at mixing x");
    werner->add_option("--x", x, "mixing parameter")->required();
    werner->add_option("--bell", bell, "phi+|phi-|psi+|psi-");

    auto* map_cmd = app.add_subcommand("map", "Werner parameter <-> temperature map");
    map_cmd->add_option("--j", j)->default_val(1.0);
    map_cmd->add_option("--b", b)->default_val(0.0);
    map_cmd->add_option("--kb", kb)->default_val(1.0);
    auto* map_t = map_cmd->add_option("--t", t, "temperature (forward map)");
    auto* map_x = map_cmd->add_option("--x", x, "Werner x (with --invert)");
    map_cmd->add_flag("--invert", invert, "solve for the temperature of a given x");

    auto* critical = app.add_subcommand("critical", "critical temperature and field");
    critical->add_option("--j", j)->default_val(1.0);
    critical->add_option("--kb", kb)->default_val(1.0);

    std::string axis = "t", out_file, svg_file, svg_x = "t", svg_y = "c_js";
    double lo = 0.0, hi = 0.0;
    int n = 2;
    bool log_spacing = false;
    auto* sweep = app.add_subcommand("sweep", "grid sweep, CSV to stdout or --out");
    sweep->add_option("--axis", axis, "t|invt|b|x")->required();
    sweep->add_option("--lo", lo)->required();
    sweep->add_option("--hi", hi)->required();
    sweep->add_option("--n", n)->required();
    sweep->add_flag("--log", log_spacing, "log-spaced grid");
    sweep->add_option("--j", j)->default_val(1.0);
    sweep->add_option("--b", b)->default_val(0.0);
    sweep->add_option("--t", t, "held temperature for field sweeps")->default_val(1.0);
    sweep->add_option("--kb", kb)->default_val(1.0);
    sweep->add_option("--bell", bell, "phi+|phi-|psi+|psi-");
    sweep->add_option("--out", out_file, "CSV destination (default stdout)");
    sweep->add_option("--svg", svg_file, "also write a line plot here");
    sweep->add_option("--svg-x", svg_x, "SVG abscissa column");
    sweep->add_option("--svg-y", svg_y, "SVG ordinate column");

    int fig_id = 0;
    std::string out_dir = ".";
    auto* fig = app.add_subcommand("figure", "write a figure preset's CSV data");
    fig->add_option("id", fig_id, "figure number 1..5")->required();
    fig->add_option("--out", out_dir, "output directory")->default_val(".");

    auto* classify = app.add_subcommand("classify", "Werner regime of a mixing parameter");
    classify->add_option("--x", x)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (point->parsed()) {
            emit_csv({evaluate_point(ModelParams{j, b, kb}, t, parse_bell(bell))}, std::cout);
        } else if (werner->parsed()) {
            emit_csv({evaluate_werner(x, parse_bell(bell))}, std::cout);
        } else if (map_cmd->parsed()) {
            const ModelParams p{j, b, kb};
            if (invert) {
                if (!map_x->count()) throw validation_error("map --invert requires --x");
                std::cout << "t=" << csv::format_number(temperature_of_x(p, x)) << '\n';
            } else {
                if (!map_t->count()) throw validation_error("map requires --t (or --invert --x)");
                const MapPoint mp = x_of_temperature(p, t);
                std::cout << "x=" << csv::format_number(mp.x);
                if (!mp.in_bijection_domain) std::cout << " (B above B_c: outside bijection domain)";
                std::cout << '\n';
            }
        } else if (critical->parsed()) {
            const auto cc = critical_constants(ModelParams{j, 0.0, kb});
            std::cout << "t_c=" << csv::format_number(cc.t_c)
                      << " b_c=" << csv::format_number(cc.b_c) << '\n';
        } else if (sweep->parsed()) {
            SweepSpec spec;
            spec.axis = parse_axis(axis);
            spec.lo = lo;
            spec.hi = hi;
            spec.n = n;
            spec.spacing = log_spacing ? Spacing::Log : Spacing::Linear;
            spec.fixed = ModelParams{j, b, kb};
            spec.fixed_t = t;
            spec.bell = parse_bell(bell);
            const auto records = run_sweep(spec);
            if (out_file.empty())
                emit_csv(records, std::cout);
            else
                emit_csv(records, std::filesystem::path(out_file));
            if (!svg_file.empty())
                emit_svg(records, svg_x, svg_y, std::filesystem::path(svg_file));
        } else if (fig->parsed()) {
            for (const auto& path : figure(fig_id, out_dir)) std::cout << path.string() << '\n';
        } else if (classify->parsed()) {
            std::cout << regime_name(classify_werner(x)) << '\n';
        }
    } catch (const spinmap::validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const spinmap::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const spinmap::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
