#pragma once

#include <string>
#include <vector>

#include "horadam/bounds.hpp"
#include "horadam/verify.hpp"

namespace horadam {

/// One grid point of a parameter sweep.
struct SweepRow {
    double value = 0.0;
    BoundReport report;
};

struct SweepConfig {
    enum class Var { Alpha, X, Nu, T };

    ClassSpec base;
    double nu = 1.0;
    Var var = Var::X;
    double lo = 0.0;
    double hi = 1.0;
    int steps = 2;
};

const char* to_string(SweepConfig::Var var);

/// Evaluates the bound engine over the sweep grid. Throws
/// std::invalid_argument unless lo < hi, steps >= 2 and every swept spec
/// validates (in particular a swept alpha must stay inside the class range).
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// CSV with header sweep_var,value,a2_bound,a3_bound,nu,fs_bound,fs_branch,denom;
/// floats carry 12 significant digits, infinities render as "inf".
std::string sweep_to_csv(const SweepConfig& config, const std::vector<SweepRow>& rows);

std::string sweep_to_json(const SweepConfig& config, const std::vector<SweepRow>& rows);

/// Machine-readable bound report for one spec over a nu grid.
std::string bounds_to_json(const ClassSpec& spec, const std::vector<double>& nus);

/// VerifyReport as JSON (sorted keys, shortest round-trip floats, carries
/// seed, spec and library version).
std::string verify_to_json(const VerifyReport& report);

}  // namespace horadam
