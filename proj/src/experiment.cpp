#include "revival/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "revival/evolution.hpp"

namespace revival {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const auto tmp = path.parent_path() / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

struct InitialDatum {
    GridFunction values;
    std::vector<double> jumps;   // discontinuities of the datum, if known
};

InitialDatum make_initial(const ExperimentConfig& cfg, std::size_t grid) {
    if (cfg.initial_kind == "indicator")
        return {make_indicator(cfg.indicator_a, cfg.indicator_b, grid),
                {cfg.indicator_a, cfg.indicator_b}};
    if (cfg.initial_kind == "sine")
        return {sine_basis(cfg.sine_index, grid), {}};
    if (cfg.initial_kind == "poly")
        return {make_poly(grid), {}};
    // samples: resample the tabulated datum onto the working grid
    const GridFunction raw = load_samples_csv(cfg.initial_samples_file);
    GridFunction g(grid);
    for (std::size_t i = 0; i <= grid; ++i) g[i] = raw.value_at(g.node(i));
    return {std::move(g), {}};
}

Potential make_potential(const ExperimentConfig& cfg, Complex qcoef) {
    if (cfg.potential_kind == "mathieu") return Potential::mathieu(qcoef);
    return Potential::samples(load_samples_csv(cfg.potential_samples_file));
}

std::string qcoef_label(Complex q) {
    std::ostringstream os;
    os << "q";
    if (q.real() != 0.0 || q.imag() == 0.0) os << q.real();
    if (q.imag() != 0.0) {
        if (q.real() != 0.0 && q.imag() > 0.0) os << "+";
        os << q.imag() << "i";
    }
    std::string s = os.str();
    std::replace(s.begin(), s.end(), '.', 'p');
    return s;
}

std::string decomposition_csv(const RevivalDecomposition& d) {
    std::string out = "x,u_re,u_im,revival_re,revival_im,w_re,w_im\n";
    for (std::size_t i = 0; i < d.solution.size(); ++i) {
        out += fmt(d.solution.node(i));
        out += ',' + fmt(d.solution[i].real()) + ',' + fmt(d.solution[i].imag());
        out += ',' + fmt(d.revival_part[i].real()) + ',' + fmt(d.revival_part[i].imag());
        out += ',' + fmt(d.correction[i].real()) + ',' + fmt(d.correction[i].imag());
        out += '\n';
    }
    return out;
}

std::string solution_csv(const GridFunction& u) {
    std::string out = "x,u_re,u_im\n";
    for (std::size_t i = 0; i < u.size(); ++i)
        out += fmt(u.node(i)) + ',' + fmt(u[i].real()) + ',' + fmt(u[i].imag()) + '\n';
    return out;
}

std::string spectrum_csv(const EigenSweep& sweep, Complex mean) {
    std::string out = "j,lambda_re,lambda_im,residual,k_j_re,k_j_im\n";
    for (const auto& p : sweep.pairs) {
        const Complex lambda = p.lambda + mean;   // eigenvalue of L itself
        out += std::to_string(p.index);
        out += ',' + fmt(lambda.real()) + ',' + fmt(lambda.imag());
        out += ',' + fmt(p.residual);
        out += ',' + fmt(p.deviation.real()) + ',' + fmt(p.deviation.imag());
        out += '\n';
    }
    return out;
}

std::string continuity_csv(const std::vector<std::pair<std::string, ContinuityReport>>& rows) {
    std::string out = "field,max_jump,refinement_ratio,l2,sup\n";
    for (const auto& [name, r] : rows) {
        out += name;
        out += ',' + fmt(r.max_jump) + ',' + fmt(r.refinement_ratio);
        out += ',' + fmt(r.l2_norm) + ',' + fmt(r.sup_norm) + '\n';
    }
    return out;
}

// --- minimal three-panel SVG plot: Re(x), Im(x), complex-plane curve ---

struct Series {
    const GridFunction* field;
    const char* color;
    const char* name;
};

void polyline(std::string& svg, const std::vector<std::pair<double, double>>& pts,
              const char* color) {
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1\" points=\"";
    char buf[48];
    for (const auto& [x, y] : pts) {
        std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", x, y);
        svg += buf;
    }
    svg += "\"/>\n";
}

std::string plot_svg(const RevivalDecomposition& d) {
    const Series series[3] = {{&d.solution, "#1f77b4", "u"},
                              {&d.revival_part, "#ff7f0e", "revival"},
                              {&d.correction, "#000000", "w"}};
    const double panel_w = 400, panel_h = 300, margin = 40;
    const double width = 3 * panel_w + 4 * margin, height = panel_h + 2 * margin + 20;

    const std::size_t stride = std::max<std::size_t>(1, d.solution.intervals() / 1024);

    double vmin = 0, vmax = 0;
    for (const auto& s : series)
        for (const auto& v : s.field->values()) {
            vmin = std::min({vmin, v.real(), v.imag()});
            vmax = std::max({vmax, v.real(), v.imag()});
        }
    if (vmax - vmin < 1e-12) vmax = vmin + 1.0;
    const double pad = 0.05 * (vmax - vmin);
    vmin -= pad;
    vmax += pad;

    std::string svg;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
                  "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  width, height, width, height);
    svg += buf;
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const char* titles[3] = {"Re u(x)", "Im u(x)", "complex plane"};
    for (int panel = 0; panel < 3; ++panel) {
        const double x0 = margin + panel * (panel_w + margin);
        const double y0 = margin;
        std::snprintf(buf, sizeof(buf),
                      "<rect x=\"%.0f\" y=\"%.0f\" width=\"%.0f\" height=\"%.0f\" "
                      "fill=\"none\" stroke=\"#888\"/>\n",
                      x0, y0, panel_w, panel_h);
        svg += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.0f\" y=\"%.0f\" font-size=\"14\" "
                      "font-family=\"sans-serif\">%s</text>\n",
                      x0 + 4, y0 - 6, titles[panel]);
        svg += buf;

        for (const auto& s : series) {
            std::vector<std::pair<double, double>> pts;
            pts.reserve(s.field->size() / stride + 2);
            for (std::size_t i = 0; i < s.field->size(); i += stride) {
                const Complex v = (*s.field)[i];
                double px, py;
                if (panel < 2) {
                    const double val = panel == 0 ? v.real() : v.imag();
                    px = x0 + panel_w * (s.field->node(i) / kPi);
                    py = y0 + panel_h * (1.0 - (val - vmin) / (vmax - vmin));
                } else {
                    px = x0 + panel_w * ((v.real() - vmin) / (vmax - vmin));
                    py = y0 + panel_h * (1.0 - (v.imag() - vmin) / (vmax - vmin));
                }
                pts.emplace_back(px, py);
            }
            polyline(svg, pts, s.color);
        }
    }
    // legend
    double lx = margin;
    for (const auto& s : series) {
        std::snprintf(buf, sizeof(buf),
                      "<rect x=\"%.0f\" y=\"%.0f\" width=\"12\" height=\"12\" fill=\"%s\"/>"
                      "<text x=\"%.0f\" y=\"%.0f\" font-size=\"13\" "
                      "font-family=\"sans-serif\">%s</text>\n",
                      lx, height - 24, s.color, lx + 16, height - 13, s.name);
        svg += buf;
        lx += 110;
    }
    svg += "</svg>\n";
    return svg;
}

ExperimentReport run_single(const ExperimentConfig& cfg, Complex qcoef,
                            const std::filesystem::path& dir, unsigned jobs,
                            const std::string& label) {
    std::filesystem::create_directories(dir);
    ExperimentReport report;
    report.label = label;

    const RationalTime rt(cfg.time_p, cfg.time_q);
    const std::size_t grid = adjust_grid(cfg.grid, rt.q);
    report.grid_used = grid;

    const Potential V = make_potential(cfg, qcoef);
    const Potential centered = V.mean_centered();
    const InitialDatum datum = make_initial(cfg, grid);

    const EigenSweep direct = eigen_sweep(centered, cfg.modes, grid, jobs);
    report.norm_bound_warning = direct.norm_bound_warning;
    const EigenSweep adjoint = eigen_sweep(centered.conjugated(), cfg.modes, grid, jobs);
    const BiorthogonalSystem system = assemble_biorthogonal(direct, adjoint);
    report.gram_defect = system.gram_defect;

    const RevivalDecomposition decomp =
        decompose_at_rational_time(V, system, direct.pairs, datum.values, rt);

    try {
        for (const auto& name : cfg.outputs) {
            std::filesystem::path file;
            if (name == "decomposition_csv") {
                file = dir / "decomposition.csv";
                atomic_write(file, decomposition_csv(decomp));
            } else if (name == "solution_csv") {
                file = dir / "solution.csv";
                atomic_write(file, solution_csv(decomp.solution));
            } else if (name == "spectrum_csv") {
                file = dir / "spectrum.csv";
                atomic_write(file, spectrum_csv(direct, V.mean()));
            } else if (name == "plot_svg") {
                file = dir / "plot.svg";
                atomic_write(file, plot_svg(decomp));
            } else if (name == "continuity_csv") {
                // recompute on the doubled grid for the refinement ratio
                const std::size_t grid2 = 2 * grid;
                const InitialDatum datum2 = make_initial(cfg, grid2);
                const EigenSweep direct2 = eigen_sweep(centered, cfg.modes, grid2, jobs);
                const EigenSweep adjoint2 =
                    eigen_sweep(centered.conjugated(), cfg.modes, grid2, jobs);
                const BiorthogonalSystem system2 = assemble_biorthogonal(direct2, adjoint2);
                const RevivalDecomposition decomp2 = decompose_at_rational_time(
                    V, system2, direct2.pairs, datum2.values, rt);

                std::vector<std::pair<std::string, ContinuityReport>> rows;
                rows.emplace_back("solution",
                                  continuity_report(decomp.solution, decomp2.solution));
                rows.emplace_back("revival", continuity_report(decomp.revival_part,
                                                               decomp2.revival_part));
                rows.emplace_back("correction", continuity_report(decomp.correction,
                                                                  decomp2.correction));
                if (!datum.jumps.empty()) {
                    const auto zones = gibbs_exclusion_zones(
                        shifted_jump_locations(datum.jumps, rt.q), cfg.modes);
                    rows.emplace_back("correction_outside_gibbs",
                                      continuity_report(decomp.correction,
                                                        decomp2.correction, zones));
                }
                file = dir / "continuity.csv";
                atomic_write(file, continuity_csv(rows));
            }
            report.files.push_back(file);
        }
    } catch (...) {
        for (const auto& f : report.files) {
            std::error_code ec;
            std::filesystem::remove(f, ec);
        }
        throw;
    }
    return report;
}

}  // namespace

GridFunction load_samples_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open samples file " + path.string());
    std::vector<double> xs;
    std::vector<Complex> vs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double x, re, im;
        if (!(ss >> x >> re >> im))
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": expected x,re,im");
        xs.push_back(x);
        vs.push_back(Complex{re, im});
    }
    if (xs.size() < 3 || xs.size() % 2 == 0)
        throw std::runtime_error(path.string() + ": need an odd node count >= 3");
    const std::size_t m = xs.size() - 1;
    const double h = kPi / static_cast<double>(m);
    for (std::size_t i = 0; i <= m; ++i)
        if (std::abs(xs[i] - static_cast<double>(i) * h) > 1e-8)
            throw std::runtime_error(path.string() +
                                     ": samples must lie on a uniform grid of [0,pi]");
    return GridFunction(m, std::move(vs));
}

std::vector<ExperimentReport> run_experiment(const ExperimentConfig& config,
                                             const std::filesystem::path& out_dir,
                                             unsigned jobs) {
    config.validate();
    if (jobs == 0) jobs = 1;

    if (config.sweep.empty()) {
        return {run_single(config, config.qcoef, out_dir, 0, "")};
    }

    std::vector<ExperimentReport> reports(config.sweep.size());
    const unsigned outer = std::min<unsigned>(jobs, config.sweep.size());
    const unsigned inner = outer > 1 ? 1 : 0;   // avoid oversubscription

    std::exception_ptr failure;
    std::mutex mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t n = next.fetch_add(1);
            if (n >= config.sweep.size()) break;
            try {
                const Complex q = config.sweep[n];
                reports[n] = run_single(config, q, out_dir / qcoef_label(q), inner,
                                        qcoef_label(q));
            } catch (...) {
                std::lock_guard<std::mutex> lock(mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (outer <= 1) {
        worker();
    } else {
        std::vector<std::future<void>> tasks;
        for (unsigned t = 0; t + 1 < outer; ++t)
            tasks.push_back(std::async(std::launch::async, worker));
        worker();
        for (auto& t : tasks) t.get();
    }
    if (failure) std::rethrow_exception(failure);
    return reports;
}

}  // namespace revival
