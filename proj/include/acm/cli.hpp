#pragma once

// Command implementations behind the command-line front end. Each returns
// the process exit code: 0 success, 1 verification failure, 2 file or
// parse problem, 3 precondition violation. Summaries go to `out`
// (stdout), diagnostics to `err` (stderr).

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace acm {

struct PairCmdOptions {
    std::string input;
    std::string output;            // result document path; empty = no files
    std::string basis = "rotated"; // "rotated" or "original"
    bool force = false;
    double delta_floor = 1e-14;
};

struct FamilyCmdOptions {
    std::string input;
    std::string output;
    std::string basis = "rotated";
    bool force = false;
    bool analytic = false;
    double delta_floor = 1e-14;
};

struct SweepCmdOptions {
    std::vector<long long> n_list;   // sorted ascending before running
    std::vector<double> epsilons;    // sorted ascending before running
    int p = 2;
    int trials = 1;
    std::uint64_t seed = 1;
    std::string output;              // CSV path, required
    bool force = false;
    bool analytic = false;
    double delta_floor = 1e-14;
};

struct GenCmdOptions {
    long long n = 8;
    int p = 2;
    double epsilon = 0.0;
    std::uint64_t seed = 1;
    std::string output;  // matrix file path, required
};

// Fixed CSV header for p operators:
// trial,n,epsilon,p,delta,err1,..,errP,bound1,..,boundP,guaranteed,wall_time_ms
std::string sweep_csv_header(int p);

int cmd_pair(const PairCmdOptions& options, std::ostream& out = std::cout,
             std::ostream& err = std::cerr);
int cmd_family(const FamilyCmdOptions& options, std::ostream& out = std::cout,
               std::ostream& err = std::cerr);
int cmd_sweep(const SweepCmdOptions& options, std::ostream& out = std::cout,
              std::ostream& err = std::cerr);
int cmd_gen(const GenCmdOptions& options, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace acm
