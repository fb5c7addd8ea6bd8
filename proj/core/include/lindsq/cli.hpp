#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lindsq/evolve.hpp"
#include "lindsq/model.hpp"

namespace lindsq {

/// Initial-state selector for experiment configs.
struct StateSpec {
    enum class Kind { fock, coherent, thermal };
    Kind kind = Kind::coherent;
    double value = 1.0;  ///< n for fock, alpha for coherent, nbar for thermal
};

DensityMatrix make_state(const StateSpec& spec, std::size_t dim, double theta = 0.0);

enum class OutputFormat { csv, json };

/// One experiment: model, truncation, initial state, grid, methods, output.
struct RunConfig {
    ModelParams model{};
    std::size_t dim = 24;
    double theta = 0.0;
    StateSpec initial_state{};
    double t_max = 2.0;
    std::size_t n_points = 21;
    std::vector<Method> methods{Method::exact, Method::split};
    double rk4_dt = 1e-3;
    FactorizedRoute factorized_route = FactorizedRoute::operator_level;
    std::string out_path;  ///< empty -> stdout
    OutputFormat format = OutputFormat::csv;
    std::uint64_t seed = 12345;
};

/// Throws validation_error on out-of-range fields (dim in [4,64], points >= 2
/// unless t_max == 0, nonempty methods, ...).
void check_config(const RunConfig& c);

RunConfig parse_config_json(const std::string& text);
RunConfig load_config_file(const std::string& path);

/// printf "%.17g" — the one number format used for all emitted values.
std::string format_g17(double v);

struct EvolveTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Runs every requested method on the transformed-frame equation and tabulates
/// per-method observables and pairwise errors, one row per time point.
EvolveTable run_evolve(const RunConfig& c);

std::string table_to_csv(const EvolveTable& t);
std::string table_to_json(const EvolveTable& t);
EvolveTable parse_csv(const std::string& text);

struct SqueezeReport {
    double phi = 0.0;
    double t_h = 0.0;
    double abs_eps = 0.0;
    double c = 1.0;
    double s = 0.0;
    double mu_p = 0.0;
    double nu_p = 0.0;
    double discriminant = 0.0;
    double residual_c = 0.0;  ///< |coefficient of the a^2 bracket| at the solution
    double residual_d = 0.0;  ///< |coefficient of the (a+)^2 bracket|
};

SqueezeReport run_solve_squeeze(const ModelParams& p);
std::string squeeze_report_text(const SqueezeReport& r);
std::string squeeze_report_csv(const SqueezeReport& r);
std::string squeeze_report_json(const SqueezeReport& r);

struct SelftestCheck {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;
    bool all_passed() const;
};

/// Full invariant suite (commutators, vec identity, quadratic residuals,
/// 2x2 disentangling identity, conjugation check). inject_wrong_root is a
/// test hook that perturbs the squeeze root so the residual check must fail.
SelftestReport run_selftest(std::uint64_t seed, bool inject_wrong_root = false);
std::string selftest_text(const SelftestReport& r);

}  // namespace lindsq
