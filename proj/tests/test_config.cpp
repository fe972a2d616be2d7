#include <doctest.h>

#include <fstream>

#include "polyschur/config.hpp"

using namespace polyschur;

TEST_CASE("defaults validate and print") {
    Config cfg = default_config();
    CHECK_NOTHROW(validate_config(cfg));
    std::string dump = print_config(cfg);
    CHECK(dump.find("q = 4") != std::string::npos);
    CHECK(dump.find("budget.exhaustive_cap = 26") != std::string::npos);
    CHECK(cfg.budget("frontier_cap") == 10'000);
    CHECK_THROWS_AS(cfg.budget("no-such"), PreconditionViolated);
}

TEST_CASE("config lines") {
    Config cfg = default_config();
    apply_config_line(cfg, "q = 8", 1);
    apply_config_line(cfg, "budget.exhaustive_cap = 20  # comment", 2);
    apply_config_line(cfg, "", 3);
    apply_config_line(cfg, "  # full-line comment", 4);
    apply_config_line(cfg, "output_format = csv", 5);
    CHECK(cfg.q == 8);
    CHECK(cfg.budget("exhaustive_cap") == 20);
    CHECK(cfg.output_format == Config::OutputFormat::csv);

    CHECK_THROWS_AS(apply_config_line(cfg, "nonsense", 1), ParseError);
    CHECK_THROWS_AS(apply_config_line(cfg, "mystery = 3", 1), ParseError);
    CHECK_THROWS_AS(apply_config_line(cfg, "budget.mystery = 3", 1), ParseError);
    CHECK_THROWS_AS(apply_config_line(cfg, "q = x", 1), ParseError);
}

TEST_CASE("invariants are enforced") {
    Config cfg = default_config();
    cfg.q = 1;
    CHECK_THROWS_AS(validate_config(cfg), PreconditionViolated);
    cfg = default_config();
    cfg.budgets["frontier_cap"] = 0;
    CHECK_THROWS_AS(validate_config(cfg), PreconditionViolated);
}

TEST_CASE("round trip through a file") {
    Config cfg = default_config();
    cfg.q = 16;
    cfg.seed = 99;
    std::string path = "test_config_roundtrip.tmp";
    {
        std::ofstream f(path);
        f << print_config(cfg);
    }
    Config loaded = load_config_file(path);
    CHECK(loaded.q == 16);
    CHECK(loaded.seed == 99);
    CHECK(print_config(loaded) == print_config(cfg));
    std::remove(path.c_str());
}
