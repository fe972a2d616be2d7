#include "polyschur/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace polyschur {

namespace {

const std::map<std::string, long long> kDefaultBudgets = {
    {"exhaustive_cap", 26},
    {"frontier_cap", 10'000},
    {"frontier_nodes", 50'000'000},
    {"independence", 20'000'000},
    {"coloring_elements", 1LL << 28},
    {"witness_limit", 1'000},
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

long long Config::budget(const std::string& name) const {
    auto it = budgets.find(name);
    if (it == budgets.end()) throw PreconditionViolated("unknown budget: " + name);
    return it->second;
}

Config default_config() {
    Config cfg;
    cfg.budgets = kDefaultBudgets;
    return cfg;
}

void apply_config_line(Config& cfg, const std::string& raw, int line_no) {
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) return;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
        throw ParseError("expected key = value", line_no, 1);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
        throw ParseError("expected key = value", line_no, 1);

    auto as_int = [&] { return to_int64(parse_int(value, line_no, static_cast<int>(eq) + 2)); };
    auto as_double = [&] {
        try {
            std::size_t used = 0;
            double d = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument("");
            return d;
        } catch (const std::exception&) {
            throw ParseError("expected a number", line_no, static_cast<int>(eq) + 2);
        }
    };

    if (key == "q")
        cfg.q = as_int();
    else if (key == "ell")
        cfg.ell = as_int();
    else if (key == "eta_numerator")
        cfg.eta_numerator = as_int();
    else if (key == "eta_denominator")
        cfg.eta_denominator = as_int();
    else if (key == "seed")
        cfg.seed = static_cast<std::uint64_t>(as_int());
    else if (key == "workers")
        cfg.workers = static_cast<int>(as_int());
    else if (key == "output_format") {
        if (value == "structured-text")
            cfg.output_format = Config::OutputFormat::structured_text;
        else if (value == "csv")
            cfg.output_format = Config::OutputFormat::csv;
        else
            throw ParseError("output_format must be structured-text or csv", line_no, 1);
    } else if (key == "anneal.iterations")
        cfg.anneal.iterations = static_cast<std::uint64_t>(as_int());
    else if (key == "anneal.t0")
        cfg.anneal.t0 = as_double();
    else if (key == "anneal.cooling")
        cfg.anneal.cooling = as_double();
    else if (key == "anneal.shift_prob")
        cfg.anneal.shift_prob = as_double();
    else if (key.rfind("budget.", 0) == 0) {
        std::string name = key.substr(7);
        if (kDefaultBudgets.find(name) == kDefaultBudgets.end())
            throw ParseError("unknown budget: " + name, line_no, 1);
        cfg.budgets[name] = as_int();
    } else
        throw ParseError("unknown config key: " + key, line_no, 1);
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file: " + path);
    Config cfg = default_config();
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) apply_config_line(cfg, line, ++line_no);
    validate_config(cfg);
    return cfg;
}

void validate_config(const Config& cfg) {
    if (cfg.q < 2) throw PreconditionViolated("config: q must be >= 2");
    if (cfg.ell < 1) throw PreconditionViolated("config: ell must be >= 1");
    if (cfg.eta_numerator < 1 || cfg.eta_denominator < 1)
        throw PreconditionViolated("config: eta must be a positive rational");
    if (cfg.workers < 1) throw PreconditionViolated("config: workers must be >= 1");
    if (cfg.anneal.iterations < 1)
        throw PreconditionViolated("config: anneal.iterations must be >= 1");
    for (const auto& [name, value] : cfg.budgets)
        if (value < 1) throw PreconditionViolated("config: budget " + name + " must be positive");
}

std::string print_config(const Config& cfg) {
    std::ostringstream out;
    out << "q = " << cfg.q << "\n";
    out << "ell = " << cfg.ell << "\n";
    out << "eta_numerator = " << cfg.eta_numerator << "\n";
    out << "eta_denominator = " << cfg.eta_denominator << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "workers = " << cfg.workers << "\n";
    out << "output_format = "
        << (cfg.output_format == Config::OutputFormat::csv ? "csv" : "structured-text") << "\n";
    out << "anneal.iterations = " << cfg.anneal.iterations << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", cfg.anneal.t0);
    out << "anneal.t0 = " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.6g", cfg.anneal.cooling);
    out << "anneal.cooling = " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.6g", cfg.anneal.shift_prob);
    out << "anneal.shift_prob = " << buf << "\n";
    for (const auto& [name, value] : cfg.budgets)
        out << "budget." << name << " = " << value << "\n";
    return out.str();
}

}  // namespace polyschur
