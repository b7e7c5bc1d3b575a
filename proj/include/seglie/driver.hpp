#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seglie/rational.hpp"

namespace seglie {

// Exit codes: 0 success, 2 input error, 3 not decided within caps.
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUndecided = 3;

struct RunConfig {
    unsigned cap = 6;
    std::uint64_t seed = 0x5EC4E;
    int rmax = 6;
    std::string point;                  // comma-separated rationals, empty = origin
    std::vector<std::string> epsilons;  // rationals
    int oracle_degree = -1;             // -1 = off
};

struct RunResult {
    int exit_code = kExitOk;
    std::string stdout_text;
    std::string stderr_text;
};

RunResult run_parse(const std::string& text);
RunResult run_prolong(int n, int m, int order);
RunResult run_segre(const std::string& input, const RunConfig& cfg);
RunResult run_involutive(const std::string& input, const RunConfig& cfg);
RunResult run_lie_eqs(const std::string& input, const RunConfig& cfg);
RunResult run_analyze(const std::string& input, const RunConfig& cfg);
RunResult run_flat_dim(const std::string& input, const RunConfig& cfg);
RunResult run_deform_check(const std::string& input, const RunConfig& cfg);

std::vector<Rational> parse_point(const std::string& text, int nvars);

}  // namespace seglie
