#pragma once

#include <cassert>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "spinmap/werner_map.hpp"

namespace spinmap {

/// One row of sweep output: every measure the figures need, evaluated at
/// a single (T, B) or Werner-x grid point.
struct MeasureRecord {
    std::optional<double> t;
    std::optional<double> b;
    double x_eff = 0.0;
    double c = 0.0;
    double e_f = 0.0;
    double s_vn = 0.0;
    double h_vn = 0.0;
    double j_js = 0.0;
    double c_js = 0.0;
    double r = 1.0;

    void validate() const {
        if (!(r >= 1.0 - 1e-9 && r <= 4.0 + 1e-9))
            throw validation_error("MeasureRecord: degree of mixture outside [1,4]");
        if (!(h_vn >= -1e-12 && h_vn <= 1.0 + 1e-12))
            throw validation_error("MeasureRecord: normalized entropy outside [0,1]");
        // e_f and c vanish together; e_f underflows to zero once c drops
        // below ~1e-8, so only flag a clearly inconsistent pair
        if ((c == 0.0 && e_f != 0.0) || (e_f == 0.0 && c > 1e-7))
            throw validation_error("MeasureRecord: e_f and c must vanish together");
    }
};

enum class SweepAxis { Temperature, InverseTemperature, Field, WernerX };
enum class Spacing { Linear, Log };

struct SweepSpec {
    SweepAxis axis = SweepAxis::Temperature;
    double lo = 0.0;
    double hi = 0.0;
    int n = 2;
    Spacing spacing = Spacing::Linear;
    ModelParams fixed{};
    double fixed_t = 1.0; ///< held temperature for Field sweeps
    BellChoice bell = BellChoice::PhiPlus;

    void validate() const {
        if (!(lo < hi)) throw validation_error("SweepSpec: lo must be below hi");
        if (n < 2) throw validation_error("SweepSpec: n must be at least 2");
        if (spacing == Spacing::Log && !(lo > 0.0))
            throw validation_error("SweepSpec: log spacing requires lo > 0");
        if (axis != SweepAxis::WernerX) fixed.validate();
    }

    double grid_point(int i) const {
        if (spacing == Spacing::Linear) return lo + i * (hi - lo) / (n - 1);
        return std::exp(std::log(lo) + i * (std::log(hi) - std::log(lo)) / (n - 1));
    }
};

/// Full measure bundle for the thermal state at (p, t).
inline MeasureRecord evaluate_point(const ModelParams& p, double t,
                                    BellChoice /*bell*/ = BellChoice::PhiPlus) {
    const DensityMatrix rho = thermal_state(p, t);
    MeasureRecord rec;
    rec.t = t;
    rec.b = p.b;
    rec.c = concurrence_wootters(rho);
    assert(std::abs(rec.c - concurrence_thermal(p, t)) < 1e-9);
    rec.e_f = entanglement_of_formation(rec.c);
    rec.s_vn = von_neumann_entropy(rho);
    rec.h_vn = normalized_entropy(rho);
    rec.j_js = quantum_jsd(rho, maximally_mixed());
    rec.c_js = rec.j_js * rec.h_vn;
    rec.r = degree_of_mixture(rho);
    rec.x_eff = x_of_temperature(p, t).x;
    return rec;
}

/// Same bundle for a Werner state; t and b stay empty and x_eff is x itself.
inline MeasureRecord evaluate_werner(double x, BellChoice bell = BellChoice::PhiPlus) {
    const DensityMatrix rho = werner_state(x, bell);
    MeasureRecord rec;
    rec.x_eff = x;
    rec.c = concurrence_wootters(rho);
    rec.e_f = entanglement_of_formation(rec.c);
    rec.s_vn = von_neumann_entropy(rho);
    rec.h_vn = normalized_entropy(rho);
    rec.j_js = quantum_jsd(rho, maximally_mixed());
    rec.c_js = rec.j_js * rec.h_vn;
    rec.r = degree_of_mixture(rho);
    return rec;
}

inline std::vector<MeasureRecord> run_sweep(const SweepSpec& spec) {
    spec.validate();
    std::vector<MeasureRecord> out;
    out.reserve(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i) {
        const double v = spec.grid_point(i);
        switch (spec.axis) {
            case SweepAxis::Temperature:
                out.push_back(evaluate_point(spec.fixed, v, spec.bell));
                break;
            case SweepAxis::InverseTemperature:
                if (!(v > 0.0))
                    throw validation_error("run_sweep: inverse temperature must be positive");
                out.push_back(evaluate_point(spec.fixed, 1.0 / v, spec.bell));
                break;
            case SweepAxis::Field: {
                ModelParams p = spec.fixed;
                p.b = v;
                out.push_back(evaluate_point(p, spec.fixed_t, spec.bell));
                break;
            }
            case SweepAxis::WernerX:
                out.push_back(evaluate_werner(v, spec.bell));
                break;
        }
    }
    return out;
}

namespace csv {

/// Shortest decimal representation that round-trips the double.
inline std::string format_number(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline const std::vector<std::string>& columns() {
    static const std::vector<std::string> cols = {"t",    "b",    "inv_t", "x_eff",
                                                  "c",    "e_f",  "s_vn",  "h_vn",
                                                  "j_js", "c_js", "r"};
    return cols;
}

inline std::optional<double> field(const MeasureRecord& rec, const std::string& name) {
    if (name == "t") return rec.t;
    if (name == "b") return rec.b;
    if (name == "inv_t")
        return rec.t ? std::optional<double>(1.0 / *rec.t) : std::nullopt;
    if (name == "x_eff") return rec.x_eff;
    if (name == "c") return rec.c;
    if (name == "e_f") return rec.e_f;
    if (name == "s_vn") return rec.s_vn;
    if (name == "h_vn") return rec.h_vn;
    if (name == "j_js") return rec.j_js;
    if (name == "c_js") return rec.c_js;
    if (name == "r") return rec.r;
    throw validation_error("unknown column: " + name);
}

} // namespace csv

inline void emit_csv(const std::vector<MeasureRecord>& records, std::ostream& os) {
    if (records.empty()) throw validation_error("emit_csv: no records");
    const auto& cols = csv::columns();
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto& rec : records) {
        rec.validate();
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) os << ',';
            if (const auto v = csv::field(rec, cols[i])) os << csv::format_number(*v);
        }
        os << '\n';
    }
}

inline void emit_csv(const std::vector<MeasureRecord>& records,
                     const std::filesystem::path& destination) {
    std::ofstream os(destination, std::ios::binary);
    if (!os) throw io_error("cannot open for writing: " + destination.string());
    emit_csv(records, os);
    if (!os) throw io_error("write failed: " + destination.string());
}

/// Minimal single-polyline SVG plot with labeled axes. A convenience view
/// of the CSV content, not a styling target.
inline void emit_svg(const std::vector<MeasureRecord>& records, const std::string& x_col,
                     const std::string& y_col, const std::filesystem::path& destination) {
    if (records.empty()) throw validation_error("emit_svg: no records");
    std::vector<std::pair<double, double>> pts;
    for (const auto& rec : records) {
        const auto x = csv::field(rec, x_col);
        const auto y = csv::field(rec, y_col);
        if (x && y) pts.emplace_back(*x, *y);
    }
    if (pts.empty()) throw validation_error("emit_svg: no plottable points");

    double xmin = pts[0].first, xmax = pts[0].first;
    double ymin = pts[0].second, ymax = pts[0].second;
    for (const auto& [x, y] : pts) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;

    const double w = 640.0, h = 480.0, margin = 60.0;
    const auto sx = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (w - 2 * margin); };
    const auto sy = [&](double y) { return h - margin - (y - ymin) / (ymax - ymin) * (h - 2 * margin); };

    std::ofstream os(destination, std::ios::binary);
    if (!os) throw io_error("cannot open for writing: " + destination.string());
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
          "viewBox=\"0 0 640 480\">\n";
    os << "<line x1=\"60\" y1=\"420\" x2=\"580\" y2=\"420\" stroke=\"black\"/>\n";
    os << "<line x1=\"60\" y1=\"60\" x2=\"60\" y2=\"420\" stroke=\"black\"/>\n";
    os << "<text x=\"320\" y=\"460\" text-anchor=\"middle\">" << x_col << "</text>\n";
    os << "<text x=\"20\" y=\"240\" text-anchor=\"middle\" transform=\"rotate(-90 20 240)\">"
       << y_col << "</text>\n";
    os << "<polyline fill=\"none\" stroke=\"steelblue\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << ' ';
        os << csv::format_number(sx(pts[i].first)) << ',' << csv::format_number(sy(pts[i].second));
    }
    os << "\"/>\n</svg>\n";
    if (!os) throw io_error("write failed: " + destination.string());
}

namespace detail {

inline SweepSpec thermal_t_sweep(double b) {
    SweepSpec s;
    s.axis = SweepAxis::Temperature;
    s.lo = 1e-3;
    s.hi = 20.0;
    s.n = 400;
    s.spacing = Spacing::Log;
    s.fixed = ModelParams{1.0, b, 1.0};
    return s;
}

} // namespace detail

/// Writes the preset sweeps behind the five plots into `out_dir`, one CSV
/// per curve. Returns the written paths.
inline std::vector<std::filesystem::path> figure(int id,
                                                 const std::filesystem::path& out_dir) {
    if (id < 1 || id > 5) throw validation_error("figure: id must be 1..5");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw io_error("cannot create directory: " + out_dir.string());

    std::vector<std::filesystem::path> written;
    const auto write = [&](const SweepSpec& spec, const std::string& name) {
        const auto path = out_dir / name;
        emit_csv(run_sweep(spec), path);
        written.push_back(path);
    };

    switch (id) {
        case 1: {
            write(detail::thermal_t_sweep(0.0), "fig1_thermal.csv");
            SweepSpec wx;
            wx.axis = SweepAxis::WernerX;
            wx.lo = 0.0;
            wx.hi = 1.0;
            wx.n = 400;
            write(wx, "fig1_werner.csv");
            break;
        }
        case 2:
            for (double b : {0.0, 1.0, 2.0, 3.0, 4.0})
                write(detail::thermal_t_sweep(b), "fig2_b" + csv::format_number(b) + ".csv");
            break;
        case 3:
            for (double b : {3.8, 3.9, 3.99, 4.001, 4.05, 4.1})
                write(detail::thermal_t_sweep(b), "fig3_b" + csv::format_number(b) + ".csv");
            break;
        case 4:
            for (double b : {3.99, 4.001})
                write(detail::thermal_t_sweep(b), "fig4_b" + csv::format_number(b) + ".csv");
            break;
        case 5: {
            SweepSpec s;
            s.axis = SweepAxis::Field;
            s.lo = 3.9;
            s.hi = 4.1;
            s.n = 401;
            s.fixed = ModelParams{1.0, 0.0, 1.0};
            s.fixed_t = 1e-3;
            write(s, "fig5.csv");
            break;
        }
    }
    return written;
}

} // namespace spinmap
