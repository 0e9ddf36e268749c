#include "revival/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace revival {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& text, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("config: cannot parse number '" + text + "' for " + key);
    }
}

std::int64_t parse_int(const std::string& text, const std::string& key) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("config: cannot parse integer '" + text + "' for " + key);
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

const std::set<std::string> kOutputNames = {
    "solution_csv", "decomposition_csv", "spectrum_csv", "plot_svg", "continuity_csv"};

}  // namespace

Complex parse_complex(const std::string& text) {
    const std::string s = trim(text);
    if (s.empty()) throw std::runtime_error("empty complex literal");
    if (s.back() != 'i' && s.back() != 'I') {
        return Complex{parse_double(s, "complex literal"), 0.0};
    }
    std::string body = s.substr(0, s.size() - 1);
    // locate a +/- separating real and imaginary parts (not a leading
    // sign, not an exponent sign)
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') &&
            body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    double re = 0.0;
    std::string imag_text;
    if (split == std::string::npos) {
        imag_text = body;
    } else {
        re = parse_double(trim(body.substr(0, split)), "complex literal");
        imag_text = body.substr(split);
    }
    imag_text = trim(imag_text);
    double im;
    if (imag_text.empty() || imag_text == "+")
        im = 1.0;
    else if (imag_text == "-")
        im = -1.0;
    else
        im = parse_double(imag_text, "complex literal");
    return Complex{re, im};
}

void ExperimentConfig::validate() const {
    if (potential_kind != "mathieu" && potential_kind != "samples")
        throw std::runtime_error("config: potential.kind must be mathieu or samples");
    if (potential_kind == "samples" && potential_samples_file.empty())
        throw std::runtime_error("config: potential.samples_file required for samples kind");
    if (initial_kind != "indicator" && initial_kind != "sine" && initial_kind != "poly" &&
        initial_kind != "samples")
        throw std::runtime_error(
            "config: initial.kind must be indicator, sine, poly or samples");
    if (initial_kind == "indicator" &&
        !(0.0 <= indicator_a && indicator_a < indicator_b && indicator_b <= kPi))
        throw std::runtime_error("config: indicator bounds must satisfy 0 <= a < b <= pi");
    if (initial_kind == "sine" && sine_index < 1)
        throw std::runtime_error("config: initial.j must be >= 1");
    if (initial_kind == "samples" && initial_samples_file.empty())
        throw std::runtime_error("config: initial.samples_file required for samples kind");
    if (time_p < 1 || time_q < 1)
        throw std::runtime_error("config: time.p and time.q must be positive");
    if (modes < 1) throw std::runtime_error("config: modes must be >= 1");
    if (grid < 64) throw std::runtime_error("config: grid must be >= 64");
    for (const auto& name : outputs)
        if (!kOutputNames.count(name))
            throw std::runtime_error("config: unknown output '" + name + "'");
    if (!sweep.empty() && potential_kind != "mathieu")
        throw std::runtime_error("config: sweep requires the mathieu potential kind");
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "potential.kind") cfg.potential_kind = value;
        else if (key == "potential.q_re") cfg.qcoef = Complex{parse_double(value, key), cfg.qcoef.imag()};
        else if (key == "potential.q_im") cfg.qcoef = Complex{cfg.qcoef.real(), parse_double(value, key)};
        else if (key == "potential.samples_file") cfg.potential_samples_file = value;
        else if (key == "initial.kind") cfg.initial_kind = value;
        else if (key == "initial.a") cfg.indicator_a = parse_double(value, key);
        else if (key == "initial.b") cfg.indicator_b = parse_double(value, key);
        else if (key == "initial.j") cfg.sine_index = static_cast<int>(parse_int(value, key));
        else if (key == "initial.samples_file") cfg.initial_samples_file = value;
        else if (key == "time.p") cfg.time_p = parse_int(value, key);
        else if (key == "time.q") cfg.time_q = parse_int(value, key);
        else if (key == "modes") cfg.modes = static_cast<int>(parse_int(value, key));
        else if (key == "grid") cfg.grid = static_cast<std::size_t>(parse_int(value, key));
        else if (key == "outputs") cfg.outputs = split_list(value);
        else if (key == "sweep") {
            cfg.sweep.clear();
            for (const auto& item : split_list(value)) cfg.sweep.push_back(parse_complex(item));
        } else {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": unknown key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path.string());
    try {
        return parse_config(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

std::size_t adjust_grid(std::size_t grid, std::int64_t q) {
    const auto step = static_cast<std::size_t>(2 * q);
    const std::size_t remainder = grid % step;
    return remainder == 0 ? grid : grid + (step - remainder);
}

}  // namespace revival
