#include "lindsq/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "lindsq/errors.hpp"

namespace lindsq {

using nlohmann::json;

DensityMatrix make_state(const StateSpec& spec, std::size_t dim, double theta) {
    switch (spec.kind) {
        case StateSpec::Kind::fock: {
            if (spec.value < 0.0 || spec.value > 1e6 || spec.value != std::floor(spec.value))
                throw validation_error("fock state level must be a small nonnegative integer");
            return fock_state(static_cast<std::size_t>(spec.value), dim);
        }
        case StateSpec::Kind::coherent:
            return coherent_state(complexd{spec.value, 0.0}, dim, theta);
        case StateSpec::Kind::thermal:
            return thermal_state(spec.value, dim);
    }
    throw validation_error("unknown initial state kind");
}

void check_config(const RunConfig& c) {
    if (c.dim < 4 || c.dim > 64)
        throw validation_error("dim must lie in [4, 64]");
    if (!(c.t_max >= 0.0) || !std::isfinite(c.t_max))
        throw validation_error("t_max must be a finite nonnegative number");
    if (c.t_max > 0.0 && c.n_points < 2)
        throw validation_error("points must be at least 2");
    if (c.methods.empty()) throw validation_error("methods must be nonempty");
    if (!(c.rk4_dt > 0.0)) throw validation_error("rk4_dt must be positive");
    if (!std::isfinite(c.theta)) throw validation_error("theta must be finite");
}

namespace {

Method method_from_string(const std::string& s) {
    if (s == "exact") return Method::exact;
    if (s == "split") return Method::split;
    if (s == "factorized") return Method::factorized;
    if (s == "rk4") return Method::rk4;
    throw validation_error("unknown method '" + s + "'");
}

StateSpec::Kind state_kind_from_string(const std::string& s) {
    if (s == "fock") return StateSpec::Kind::fock;
    if (s == "coherent") return StateSpec::Kind::coherent;
    if (s == "thermal") return StateSpec::Kind::thermal;
    throw validation_error("unknown initial state kind '" + s + "'");
}

}  // namespace

RunConfig parse_config_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw validation_error(std::string("config parse error: ") + e.what());
    }
    RunConfig c;
    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "model") {
                for (const auto& [mk, mv] : value.items()) {
                    if (mk == "omega") c.model.omega = mv.get<double>();
                    else if (mk == "mu") c.model.mu = mv.get<double>();
                    else if (mk == "nu") c.model.nu = mv.get<double>();
                    else if (mk == "kappa_re") c.model.kappa.real(mv.get<double>());
                    else if (mk == "kappa_im") c.model.kappa.imag(mv.get<double>());
                    else throw validation_error("unknown model key '" + mk + "'");
                }
            } else if (key == "dim") {
                c.dim = value.get<std::size_t>();
            } else if (key == "theta") {
                c.theta = value.get<double>();
            } else if (key == "initial_state") {
                c.initial_state.kind = state_kind_from_string(value.at("kind").get<std::string>());
                c.initial_state.value = value.at("value").get<double>();
            } else if (key == "time") {
                for (const auto& [tk, tv] : value.items()) {
                    if (tk == "t_max") c.t_max = tv.get<double>();
                    else if (tk == "points") c.n_points = tv.get<std::size_t>();
                    else throw validation_error("unknown time key '" + tk + "'");
                }
            } else if (key == "methods") {
                c.methods.clear();
                for (const auto& m : value) c.methods.push_back(method_from_string(m.get<std::string>()));
            } else if (key == "rk4_dt") {
                c.rk4_dt = value.get<double>();
            } else if (key == "factorized_route") {
                const std::string r = value.get<std::string>();
                if (r == "operator") c.factorized_route = FactorizedRoute::operator_level;
                else if (r == "superop") c.factorized_route = FactorizedRoute::superop;
                else throw validation_error("factorized_route must be 'operator' or 'superop'");
            } else if (key == "output") {
                for (const auto& [ok, ov] : value.items()) {
                    if (ok == "path") c.out_path = ov.get<std::string>();
                    else if (ok == "format") {
                        const std::string f = ov.get<std::string>();
                        if (f == "csv") c.format = OutputFormat::csv;
                        else if (f == "json") c.format = OutputFormat::json;
                        else throw validation_error("format must be 'csv' or 'json'");
                    } else throw validation_error("unknown output key '" + ok + "'");
                }
            } else if (key == "seed") {
                c.seed = value.get<std::uint64_t>();
            } else {
                throw validation_error("unknown config key '" + key + "'");
            }
        }
    } catch (const json::exception& e) {
        throw validation_error(std::string("config value error: ") + e.what());
    }
    return c;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_error("failed reading config file '" + path + "'");
    return parse_config_json(buf.str());
}

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

struct StateMetrics {
    double n_mean, trace, trace_defect, herm_defect, min_eig;
};

StateMetrics state_metrics(const CMatrix& rho, const CMatrix& number) {
    StateMetrics m{};
    m.n_mean = trace_of(number * rho).real();
    const MatrixStats st = norms_and_trace(rho);
    m.trace = st.trace.real();
    m.trace_defect = std::abs(st.trace - complexd{1.0, 0.0});
    m.herm_defect = st.herm_defect;
    m.min_eig = hermitian_min_eig(0.5 * (rho + rho.adjoint()));
    return m;
}

}  // namespace

EvolveTable run_evolve(const RunConfig& c) {
    check_config(c);
    const ModelParams p = validated(c.model);
    const SqueezeSolution sq = solve_squeeze(p);
    const TransformedCoeffs tc = transformed_coeffs(p, sq);
    const DensityMatrix rho0 = make_state(c.initial_state, c.dim, c.theta);

    std::vector<double> times;
    if (c.t_max == 0.0) {
        times.push_back(0.0);
    } else {
        for (std::size_t i = 0; i < c.n_points; ++i)
            times.push_back(c.t_max * static_cast<double>(i) /
                            static_cast<double>(c.n_points - 1));
    }

    const TransformedLiouvillian tf = liouvillian_transformed(p, sq, tc, c.dim, c.theta);
    std::vector<EvolutionResult> results;
    for (Method m : c.methods) {
        switch (m) {
            case Method::exact:
                results.push_back(evolve_exact(tf.full, rho0, times));
                break;
            case Method::rk4:
                results.push_back(evolve_rk4(tf.full, rho0, times, c.rk4_dt));
                break;
            case Method::split:
                results.push_back(evolve_split(p, sq, tc, rho0, times, c.theta));
                break;
            case Method::factorized:
                results.push_back(
                    evolve_factorized(p, sq, tc, rho0, times, c.factorized_route, c.theta));
                break;
        }
    }

    EvolveTable table;
    table.columns.push_back("t");
    for (Method m : c.methods) {
        const std::string n = method_name(m);
        table.columns.push_back(n + "_n_mean");
        table.columns.push_back(n + "_trace");
        table.columns.push_back(n + "_trace_defect");
        table.columns.push_back(n + "_herm_defect");
        table.columns.push_back(n + "_min_eig");
    }
    for (std::size_t i = 0; i < c.methods.size(); ++i)
        for (std::size_t j = i + 1; j < c.methods.size(); ++j) {
            const std::string pair =
                method_name(c.methods[i]) + "_" + method_name(c.methods[j]);
            table.columns.push_back(pair + "_frobenius_error");
            table.columns.push_back(pair + "_trace_distance");
        }

    const CMatrix number = number_op(c.dim);
    for (std::size_t row = 0; row < times.size(); ++row) {
        std::vector<double> r;
        r.push_back(times[row]);
        for (const auto& res : results) {
            const StateMetrics m = state_metrics(res.states[row], number);
            r.push_back(m.n_mean);
            r.push_back(m.trace);
            r.push_back(m.trace_defect);
            r.push_back(m.herm_defect);
            r.push_back(m.min_eig);
        }
        for (std::size_t i = 0; i < results.size(); ++i)
            for (std::size_t j = i + 1; j < results.size(); ++j) {
                const CompareReport cr =
                    compare_states(results[i].states[row], results[j].states[row]);
                r.push_back(cr.frobenius_error);
                r.push_back(cr.trace_distance);
            }
        table.rows.push_back(std::move(r));
    }
    return table;
}

std::string table_to_csv(const EvolveTable& t) {
    std::ostringstream os;
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
        if (j) os << ',';
        os << t.columns[j];
    }
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ',';
            os << format_g17(row[j]);
        }
        os << '\n';
    }
    return os.str();
}

std::string table_to_json(const EvolveTable& t) {
    json doc;
    doc["columns"] = t.columns;
    doc["rows"] = t.rows;
    return doc.dump(2) + "\n";
}

EvolveTable parse_csv(const std::string& text) {
    EvolveTable t;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw validation_error("csv: missing header");
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) t.columns.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream rs(line);
        while (std::getline(rs, cell, ',')) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str()) throw validation_error("csv: non-numeric cell '" + cell + "'");
            row.push_back(v);
        }
        if (row.size() != t.columns.size())
            throw validation_error("csv: ragged row");
        t.rows.push_back(std::move(row));
    }
    return t;
}

SqueezeReport run_solve_squeeze(const ModelParams& p_in) {
    const ModelParams p = validated(p_in);
    const SqueezeSolution sq = solve_squeeze(p);
    const TransformedCoeffs tc = transformed_coeffs(p, sq);
    const RawCoeffs raw = raw_transformed_coeffs(p, sq);
    const double k = std::abs(p.kappa);

    SqueezeReport r;
    r.phi = sq.phi;
    r.t_h = sq.t_h;
    r.abs_eps = sq.abs_eps;
    r.c = sq.c;
    r.s = sq.s;
    r.mu_p = tc.mu_p;
    r.nu_p = tc.nu_p;
    r.discriminant = (p.mu + p.nu) * (p.mu + p.nu) - 4.0 * k * k;
    r.residual_c = std::abs(raw.c);
    r.residual_d = std::abs(raw.d);
    return r;
}

namespace {

std::vector<std::pair<std::string, double>> squeeze_fields(const SqueezeReport& r) {
    return {{"phi", r.phi},
            {"t_h", r.t_h},
            {"abs_eps", r.abs_eps},
            {"cosh_eps", r.c},
            {"sinh_eps", r.s},
            {"mu_prime", r.mu_p},
            {"nu_prime", r.nu_p},
            {"discriminant", r.discriminant},
            {"residual_c", r.residual_c},
            {"residual_d", r.residual_d}};
}

}  // namespace

std::string squeeze_report_text(const SqueezeReport& r) {
    std::ostringstream os;
    for (const auto& [name, value] : squeeze_fields(r))
        os << name << " = " << format_g17(value) << '\n';
    return os.str();
}

std::string squeeze_report_csv(const SqueezeReport& r) {
    const auto fields = squeeze_fields(r);
    std::ostringstream os;
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i].first;
    os << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i)
        os << (i ? "," : "") << format_g17(fields[i].second);
    os << '\n';
    return os.str();
}

std::string squeeze_report_json(const SqueezeReport& r) {
    json doc;
    for (const auto& [name, value] : squeeze_fields(r)) doc[name] = value;
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// selftest

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }
    complexd cplx(double amp) { return complexd{uniform(-amp, amp), uniform(-amp, amp)}; }
    CMatrix matrix(std::size_t r, std::size_t c, double amp) {
        CMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = cplx(amp);
        return m;
    }
    ModelParams params() {
        ModelParams p;
        p.omega = uniform(0.2, 3.0);
        p.mu = uniform(0.5, 8.0);
        p.nu = p.mu * uniform(0.0, 0.9);
        const double k = std::sqrt(p.mu * p.nu) * uniform(0.0, 0.999);
        p.kappa = std::polar(k, uniform(-3.0, 3.0));
        return p;
    }
};

SelftestCheck check_vec_identity(Rng& rng) {
    double worst = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        const CMatrix a = rng.matrix(6, 6, 1.0);
        const CMatrix x = rng.matrix(6, 6, 1.0);
        const CMatrix b = rng.matrix(6, 6, 1.0);
        const CMatrix lhs = vec(a * x * b);
        const CMatrix rhs = kron(a, b.transpose()) * vec(x);
        worst = std::max(worst, max_abs(lhs - rhs));
    }
    return {"vec-identity", worst <= 1e-12, worst, 1e-12};
}

SelftestCheck check_kron_bilinear(Rng& rng) {
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        const CMatrix a = rng.matrix(4, 3, 1.0);
        const CMatrix b = rng.matrix(3, 5, 1.0);
        const complexd alpha = rng.cplx(2.0);
        worst = std::max(worst, max_abs(kron(alpha * a, b) - alpha * kron(a, b)));
    }
    return {"kron-bilinearity", worst <= 1e-14, worst, 1e-14};
}

SelftestCheck check_expm_unitary(Rng& rng) {
    const CMatrix g = rng.matrix(12, 12, 1.0);
    const CMatrix anti = 0.5 * (g - g.adjoint());
    const CMatrix u = expm(anti);
    const double defect = frobenius_norm(u.adjoint() * u - CMatrix::identity(12));
    return {"expm-unitarity", defect < 1e-10, defect, 1e-10};
}

double su11_defect(const GeneratorSet& g, std::size_t dim) {
    const CMatrix p = pair_projector(dim, dim - 2).mat;
    double worst = 0.0;
    worst = std::max(worst, max_abs(commutator(g.k3.mat, g.kp.mat) - g.kp.mat));
    worst = std::max(worst, max_abs(commutator(g.k3.mat, g.km.mat) + g.km.mat));
    worst = std::max(
        worst, max_abs(p * (commutator(g.kp.mat, g.km.mat) + 2.0 * g.k3.mat) * p));
    return worst;
}

SelftestCheck check_su11_k(std::size_t dim, double theta) {
    const double worst = su11_defect(k_generators(dim, theta), dim);
    return {"su11-K-interior", worst <= 1e-10, worst, 1e-10};
}

SelftestCheck check_su11_ktilde(std::size_t dim, double theta) {
    const double worst = su11_defect(ktilde_generators(dim, theta), dim);
    return {"su11-Ktilde-interior", worst <= 1e-10, worst, 1e-10};
}

SelftestCheck check_cross_commutators(std::size_t dim, double theta) {
    const GeneratorSet kg = k_generators(dim, theta);
    const GeneratorSet tg = ktilde_generators(dim, theta);
    const CMatrix a = annihilation_op(dim, theta);
    const CMatrix ad = a.adjoint();
    const CMatrix a2 = a * a;
    const CMatrix ad2 = ad * ad;
    const CMatrix id = CMatrix::identity(dim);
    const CMatrix p = pair_projector(dim, dim - 2).mat;

    double worst = 0.0;
    worst = std::max(worst, max_abs(commutator(kg.k3.mat, tg.kp.mat)));
    worst = std::max(worst, max_abs(commutator(kg.k3.mat, tg.km.mat)));
    worst = std::max(worst, max_abs(commutator(kg.k3.mat, tg.k3.mat)));

    const CMatrix adad = kron(ad, ad.transpose());
    const CMatrix aa = kron(a, a.transpose());
    worst = std::max(worst, max_abs(p * (commutator(kg.kp.mat, tg.kp.mat) + adad) * p));
    worst = std::max(worst, max_abs(p * (commutator(kg.kp.mat, tg.km.mat) + adad) * p));
    worst = std::max(worst, max_abs(p * (commutator(kg.km.mat, tg.kp.mat) - aa) * p));
    worst = std::max(worst, max_abs(p * (commutator(kg.km.mat, tg.km.mat) - aa) * p));
    const CMatrix kp_k3 = -0.5 * (kron(ad2, id) + kron(id, ad2.transpose()));
    const CMatrix km_k3 = 0.5 * (kron(a2, id) + kron(id, a2.transpose()));
    worst = std::max(worst, max_abs(p * (commutator(kg.kp.mat, tg.k3.mat) - kp_k3) * p));
    worst = std::max(worst, max_abs(p * (commutator(kg.km.mat, tg.k3.mat) - km_k3) * p));
    return {"cross-commutators", worst <= 1e-10, worst, 1e-10};
}

SelftestCheck check_squeeze_residual(Rng& rng, bool inject_wrong_root) {
    double worst = 0.0;
    bool perturbed_detected = true;
    for (int rep = 0; rep < 20; ++rep) {
        const ModelParams p = rng.params();
        const SqueezeSolution sq = solve_squeeze(p);
        const double t_used = inject_wrong_root ? std::min(sq.t_h + 0.01, 0.999) : sq.t_h;
        const double res = std::abs(squeeze_residual(p, t_used)) / (p.mu + p.nu);
        worst = std::max(worst, res);
        if (std::abs(p.kappa) > 1e-6) {
            const double res_pert =
                std::abs(squeeze_residual(p, std::min(sq.t_h + 0.01, 0.999))) / (p.mu + p.nu);
            perturbed_detected = perturbed_detected && (res_pert > 1e-10);
        }
    }
    return {"squeeze-residual", worst <= 1e-10 && perturbed_detected, worst, 1e-10};
}

SelftestCheck check_disentangle_2x2(Rng& rng) {
    CMatrix l3(2, 2), lp(2, 2), lm(2, 2);
    l3(0, 0) = 0.5;
    l3(1, 1) = -0.5;
    lp(0, 1) = 1.0;
    lm(1, 0) = -1.0;

    double worst = 0.0;
    int done = 0;
    while (done < 200) {
        const complexd a = rng.cplx(1.2), b = rng.cplx(1.2), c = rng.cplx(1.2);
        const double t = rng.uniform(0.05, 0.8);
        DisentangledFactors f;
        try {
            f = su11_factors(a, b, c, t);
        } catch (const singular_error&) {
            continue;
        }
        if (std::abs(f.f) <= 1e-3) continue;
        const CMatrix lhs = expm(2.0 * a * l3 + b * lp + c * lm, complexd{t, 0.0});
        const CMatrix rhs =
            expm(lp, f.g) * expm(l3, -2.0 * f.log_f) * expm(lm, f.e);
        worst = std::max(worst, max_abs(lhs - rhs));
        ++done;
    }
    return {"disentangle-2x2", worst <= 1e-9, worst, 1e-9};
}

SelftestCheck check_gfe_specializations(Rng& rng) {
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        const ModelParams p = rng.params();
        const SqueezeSolution sq = solve_squeeze(p);
        const TransformedCoeffs tc = transformed_coeffs(p, sq);
        const double cc = sq.c * sq.c + sq.s * sq.s;
        const double cs = sq.c * sq.s;
        const complexd i{0.0, 1.0};
        const complexd eip = std::polar(1.0, sq.phi);
        for (double t : {0.1, 0.4, 0.9, 1.7}) {
            const DisentangledFactors h = hamiltonian_factors(p, sq, t);
            const DisentangledFactors hg = su11_factors(
                -i * p.omega * cc, 2.0 * i * p.omega * eip * cs,
                2.0 * i * p.omega * std::conj(eip) * cs, t);
            worst = std::max({worst, std::abs(h.g - hg.g), std::abs(h.f - hg.f),
                              std::abs(h.e - hg.e)});
            const DisentangledFactors dg = dissipative_factors(tc, t);
            const double w = 0.5 * (p.mu - p.nu);
            const complexd a{-0.5 * (tc.mu_p + tc.nu_p), 0.0};
            const complexd ft = std::cosh(t * w) - (a.real() / w) * std::sinh(t * w);
            worst = std::max(worst, std::abs(dg.f - ft));
        }
    }
    return {"gfe-specializations", worst <= 1e-12, worst, 1e-12};
}

SelftestCheck check_frame_conjugation() {
    const std::size_t dim = 24;
    const ModelParams p{1.0, 3.0, 1.0, complexd{1.0, 0.0}};
    const SqueezeSolution sq = solve_squeeze(p);
    const TransformedCoeffs tc = transformed_coeffs(p, sq);

    const CMatrix s = squeeze_op(dim, std::polar(sq.abs_eps, sq.phi));
    const CMatrix w = kron(s, s.conjugate());
    const CMatrix l = liouvillian_original(p, dim).mat;
    const CMatrix conjugated = w * l * w.adjoint();
    const CMatrix ls = liouvillian_transformed(p, sq, tc, dim).full.mat;
    // squeeze-conjugation defects are not edge-confined; interior = d/4
    const CMatrix proj = pair_projector(dim, dim / 4).mat;
    const double defect = frobenius_norm(proj * (ls - conjugated) * proj);
    return {"frame-conjugation", defect <= 1e-5, defect, 1e-5};
}

SelftestCheck check_trace_preservation() {
    const std::size_t dim = 12;
    const ModelParams p{1.0, 3.0, 1.0, complexd{0.8, 0.6}};
    const SqueezeSolution sq = solve_squeeze(p);
    const TransformedCoeffs tc = transformed_coeffs(p, sq);

    const double worst_orig = max_abs(trace_row(liouvillian_original(p, dim)));
    // for the K-built transformed generator the defect sits in the edge
    // column; interior columns must vanish
    const CMatrix row = trace_row(liouvillian_transformed(p, sq, tc, dim).full);
    double worst_interior = 0.0;
    for (std::size_t m = 0; m + 1 < dim; ++m)
        for (std::size_t n = 0; n + 1 < dim; ++n)
            worst_interior = std::max(worst_interior, std::abs(row(0, m * dim + n)));
    const double worst = std::max(worst_orig, worst_interior);
    return {"trace-preservation", worst <= 1e-10, worst, 1e-10};
}

}  // namespace

bool SelftestReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

SelftestReport run_selftest(std::uint64_t seed, bool inject_wrong_root) {
    Rng rng(seed);
    const double theta = rng.uniform(-3.0, 3.0);
    SelftestReport report;
    report.checks.push_back(check_vec_identity(rng));
    report.checks.push_back(check_kron_bilinear(rng));
    report.checks.push_back(check_expm_unitary(rng));
    report.checks.push_back(check_su11_k(12, theta));
    report.checks.push_back(check_su11_ktilde(12, theta));
    report.checks.push_back(check_cross_commutators(12, theta));
    report.checks.push_back(check_squeeze_residual(rng, inject_wrong_root));
    report.checks.push_back(check_disentangle_2x2(rng));
    report.checks.push_back(check_gfe_specializations(rng));
    report.checks.push_back(check_trace_preservation());
    report.checks.push_back(check_frame_conjugation());
    return report;
}

std::string selftest_text(const SelftestReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks)
        os << (c.passed ? "ok   " : "FAIL ") << c.name << " (measured " << format_g17(c.measured)
           << ", tolerance " << format_g17(c.tolerance) << ")\n";
    os << (r.all_passed() ? "selftest passed" : "selftest FAILED") << "\n";
    return os.str();
}

}  // namespace lindsq
