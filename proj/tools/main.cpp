#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lindsq/cli.hpp"
#include "lindsq/errors.hpp"

namespace {

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw lindsq::io_error("cannot open output file '" + path + "'");
    out << payload;
    out.flush();
    if (!out) throw lindsq::io_error("failed writing output file '" + path + "'");
}

// flag overrides shared by solve-squeeze and evolve; only values the user
// actually passed are applied on top of the config file
struct Overrides {
    double mu = 0, nu = 0, kappa_re = 0, kappa_im = 0, omega = 0, t_max = 0, theta = 0;
    double state_value = 0, rk4_dt = 0;
    std::size_t dim = 0, points = 0;
    std::uint64_t seed = 0;
    std::string config_path, out_path, format, state_kind, methods, route;

    CLI::Option *o_mu{}, *o_nu{}, *o_kre{}, *o_kim{}, *o_omega{}, *o_tmax{}, *o_theta{};
    CLI::Option *o_sval{}, *o_dt{}, *o_dim{}, *o_points{}, *o_seed{};
    CLI::Option *o_out{}, *o_format{}, *o_skind{}, *o_methods{}, *o_route{};

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file");
        o_mu = cmd->add_option("--mu", mu, "damping rate mu");
        o_nu = cmd->add_option("--nu", nu, "excitation rate nu");
        o_kre = cmd->add_option("--kappa-re", kappa_re, "Re kappa");
        o_kim = cmd->add_option("--kappa-im", kappa_im, "Im kappa");
        o_omega = cmd->add_option("--omega", omega, "oscillator frequency");
        o_tmax = cmd->add_option("--t-max", t_max, "final time");
        o_points = cmd->add_option("--points", points, "number of grid points");
        o_dim = cmd->add_option("--dim", dim, "Fock truncation dimension");
        o_theta = cmd->add_option("--theta", theta, "ladder-operator phase");
        o_skind = cmd->add_option("--state-kind", state_kind,
                                  "initial state kind: fock|coherent|thermal");
        o_sval = cmd->add_option("--state-value", state_value, "initial state parameter");
        o_methods = cmd->add_option("--methods", methods,
                                    "comma-separated subset of exact,split,factorized,rk4");
        o_dt = cmd->add_option("--rk4-dt", rk4_dt, "RK4 step size");
        o_route = cmd->add_option("--factorized-route", route,
                                  "factorized computation route: operator|superop");
        o_seed = cmd->add_option("--seed", seed, "random seed");
        o_out = cmd->add_option("--out", out_path, "output file (default stdout)");
        o_format = cmd->add_option("--format", format, "output format: csv|json");
    }

    lindsq::RunConfig build() const {
        lindsq::RunConfig cfg;
        if (!config_path.empty()) cfg = lindsq::load_config_file(config_path);
        if (*o_mu) cfg.model.mu = mu;
        if (*o_nu) cfg.model.nu = nu;
        if (*o_kre) cfg.model.kappa.real(kappa_re);
        if (*o_kim) cfg.model.kappa.imag(kappa_im);
        if (*o_omega) cfg.model.omega = omega;
        if (*o_tmax) cfg.t_max = t_max;
        if (*o_points) cfg.n_points = points;
        if (*o_dim) cfg.dim = dim;
        if (*o_theta) cfg.theta = theta;
        if (*o_skind) {
            if (state_kind == "fock") cfg.initial_state.kind = lindsq::StateSpec::Kind::fock;
            else if (state_kind == "coherent")
                cfg.initial_state.kind = lindsq::StateSpec::Kind::coherent;
            else if (state_kind == "thermal")
                cfg.initial_state.kind = lindsq::StateSpec::Kind::thermal;
            else
                throw lindsq::validation_error("unknown state kind '" + state_kind + "'");
        }
        if (*o_sval) cfg.initial_state.value = state_value;
        if (*o_methods) {
            cfg.methods.clear();
            std::string item;
            std::istringstream is(methods);
            while (std::getline(is, item, ',')) {
                if (item == "exact") cfg.methods.push_back(lindsq::Method::exact);
                else if (item == "split") cfg.methods.push_back(lindsq::Method::split);
                else if (item == "factorized") cfg.methods.push_back(lindsq::Method::factorized);
                else if (item == "rk4") cfg.methods.push_back(lindsq::Method::rk4);
                else throw lindsq::validation_error("unknown method '" + item + "'");
            }
        }
        if (*o_dt) cfg.rk4_dt = rk4_dt;
        if (*o_route) {
            if (route == "operator") cfg.factorized_route = lindsq::FactorizedRoute::operator_level;
            else if (route == "superop") cfg.factorized_route = lindsq::FactorizedRoute::superop;
            else throw lindsq::validation_error("unknown factorized route '" + route + "'");
        }
        if (*o_seed) cfg.seed = seed;
        if (*o_out) cfg.out_path = out_path;
        if (*o_format) {
            if (format == "csv") cfg.format = lindsq::OutputFormat::csv;
            else if (format == "json") cfg.format = lindsq::OutputFormat::json;
            else throw lindsq::validation_error("unknown format '" + format + "'");
        }
        return cfg;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"squeezed-frame dynamics of the generalized damped oscillator"};
    app.require_subcommand(1);

    auto* cmd_squeeze = app.add_subcommand(
        "solve-squeeze", "solve the squeezing quadratic and print the transformed rates");
    Overrides ov_squeeze;
    ov_squeeze.attach(cmd_squeeze);

    auto* cmd_evolve =
        app.add_subcommand("evolve", "run the requested evolution methods and tabulate results");
    Overrides ov_evolve;
    ov_evolve.attach(cmd_evolve);

    auto* cmd_selftest = app.add_subcommand("selftest", "run the built-in invariant suite");
    std::uint64_t st_seed = 12345;
    bool inject_wrong_root = false;
    cmd_selftest->add_option("--seed", st_seed, "random seed");
    cmd_selftest->add_flag("--inject-wrong-root", inject_wrong_root,
                           "test hook: perturb the squeeze root so the residual check fails");

    try {
        app.parse(argc, argv);

        if (cmd_squeeze->parsed()) {
            const lindsq::RunConfig cfg = ov_squeeze.build();
            const lindsq::SqueezeReport rep = lindsq::run_solve_squeeze(cfg.model);
            if (cfg.out_path.empty()) {
                std::cout << lindsq::squeeze_report_text(rep);
            } else {
                const std::string payload = cfg.format == lindsq::OutputFormat::json
                                                ? lindsq::squeeze_report_json(rep)
                                                : lindsq::squeeze_report_csv(rep);
                write_output(cfg.out_path, payload);
            }
        } else if (cmd_evolve->parsed()) {
            const lindsq::RunConfig cfg = ov_evolve.build();
            const lindsq::EvolveTable table = lindsq::run_evolve(cfg);
            const std::string payload = cfg.format == lindsq::OutputFormat::json
                                            ? lindsq::table_to_json(table)
                                            : lindsq::table_to_csv(table);
            write_output(cfg.out_path, payload);
        } else if (cmd_selftest->parsed()) {
            const lindsq::SelftestReport rep = lindsq::run_selftest(st_seed, inject_wrong_root);
            std::cout << lindsq::selftest_text(rep);
            if (!rep.all_passed()) return 3;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const lindsq::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lindsq::range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lindsq::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const lindsq::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
