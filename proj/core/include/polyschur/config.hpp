#ifndef POLYSCHUR_CONFIG_HPP
#define POLYSCHUR_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>

#include "polyschur/search.hpp"

namespace polyschur {

// Concrete instantiation of the free constants behind the asymptotic
// hierarchy (1/k << eta << epsilon << 1/ell << 1/q << 1/||p||), plus the
// explicit brute-force budgets.  Every value is auditable via
// --print-config and every lemma report names the constants it ran with.
struct Config {
    long long q = 4;
    long long ell = 1024;
    long long eta_numerator = 1;
    long long eta_denominator = 100;
    std::uint64_t seed = 1;
    int workers = 1;
    enum class OutputFormat { structured_text, csv } output_format = OutputFormat::structured_text;
    AnnealParams anneal;
    std::map<std::string, long long> budgets;

    long long budget(const std::string& name) const;
};

Config default_config();

// Line-based "key = value" file; '#' starts a comment.  Unknown keys are
// rejected so typos cannot silently fall back to defaults.
Config load_config_file(const std::string& path);
void apply_config_line(Config& cfg, const std::string& line, int line_no);

// Checks invariants (q >= 2, ell >= 1, positive budgets, ...).
void validate_config(const Config& cfg);

// Deterministic key = value dump, suitable as a config file.
std::string print_config(const Config& cfg);

}  // namespace polyschur

#endif
