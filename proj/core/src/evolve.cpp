#include "lindsq/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lindsq/errors.hpp"

namespace lindsq {

namespace {

void require_grid(std::span<const double> times) {
    if (times.empty()) throw shape_error("evolve: empty time grid");
    for (double t : times)
        if (!std::isfinite(t)) throw contract_error("evolve: non-finite time");
    for (std::size_t i = 0; i + 1 < times.size(); ++i)
        if (times[i + 1] < times[i]) throw contract_error("evolve: time grid must be sorted");
    if (times.front() < 0.0) throw contract_error("evolve: negative time");
}

void require_state(const SuperOp& l, const DensityMatrix& rho0) {
    if (rho0.dim != l.dim) throw shape_error("evolve: state and generator dimensions differ");
}

bool uniform_grid(std::span<const double> times, double& step) {
    if (times.size() < 2) return false;
    step = times[1] - times[0];
    for (std::size_t i = 1; i + 1 < times.size(); ++i)
        if (std::abs((times[i + 1] - times[i]) - step) > 1e-12 * std::max(1.0, std::abs(step)))
            return false;
    return step > 0.0 && times.front() == 0.0;
}

// column-compressed view of a superoperator for cheap repeated mat-vec
struct SparseApply {
    std::size_t n = 0;
    std::vector<std::size_t> col;
    std::vector<complexd> val;
    std::vector<std::size_t> row_ptr;

    explicit SparseApply(const CMatrix& m) : n(m.rows()), row_ptr(m.rows() + 1, 0) {
        for (std::size_t i = 0; i < n; ++i) {
            const complexd* r = m.row(i);
            for (std::size_t j = 0; j < n; ++j)
                if (r[j].real() != 0.0 || r[j].imag() != 0.0) {
                    col.push_back(j);
                    val.push_back(r[j]);
                }
            row_ptr[i + 1] = col.size();
        }
    }

    void apply(const std::vector<complexd>& x, std::vector<complexd>& y) const {
        for (std::size_t i = 0; i < n; ++i) {
            complexd acc{0.0, 0.0};
            for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) acc += val[k] * x[col[k]];
            y[i] = acc;
        }
    }
};

double vec_norm(const std::vector<complexd>& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::split: return "split";
        case Method::factorized: return "factorized";
        case Method::rk4: return "rk4";
    }
    return "unknown";
}

EvolutionResult evolve_exact(const SuperOp& l, const DensityMatrix& rho0,
                             std::span<const double> times) {
    require_grid(times);
    require_state(l, rho0);
    EvolutionResult out;
    out.method = Method::exact;
    out.times.assign(times.begin(), times.end());

    CMatrix v = vec(rho0.mat);
    double t_cur = 0.0;
    std::map<double, CMatrix> step_cache;
    for (double t : times) {
        const double dt = t - t_cur;
        if (dt > 0.0) {
            auto it = step_cache.find(dt);
            if (it == step_cache.end())
                it = step_cache.emplace(dt, expm(l.mat, complexd{dt, 0.0})).first;
            v = it->second * v;
            t_cur = t;
        }
        out.states.push_back(unvec(v, l.dim));
    }
    return out;
}

EvolutionResult evolve_rk4(const SuperOp& l, const DensityMatrix& rho0,
                           std::span<const double> times, double dt, double growth_rate) {
    require_grid(times);
    require_state(l, rho0);
    if (!(dt > 0.0)) throw contract_error("evolve_rk4: dt must be positive");
    if (dt * one_norm(l.mat) >= 1.0)
        throw contract_error("evolve_rk4: dt * ||L||_1 must stay below 1");

    const std::size_t n = l.dim * l.dim;
    const SparseApply ls(l.mat);
    std::vector<complexd> v(n), k1(n), k2(n), k3(n), k4(n), tmp(n);
    const CMatrix v0 = vec(rho0.mat);
    for (std::size_t i = 0; i < n; ++i) v[i] = v0(i, 0);
    const double norm0 = vec_norm(v);

    EvolutionResult out;
    out.method = Method::rk4;
    out.times.assign(times.begin(), times.end());

    double t_cur = 0.0;
    for (double target : times) {
        while (t_cur < target - 1e-15 * std::max(1.0, target)) {
            const double h = std::min(dt, target - t_cur);
            ls.apply(v, k1);
            for (std::size_t i = 0; i < n; ++i) tmp[i] = v[i] + 0.5 * h * k1[i];
            ls.apply(tmp, k2);
            for (std::size_t i = 0; i < n; ++i) tmp[i] = v[i] + 0.5 * h * k2[i];
            ls.apply(tmp, k3);
            for (std::size_t i = 0; i < n; ++i) tmp[i] = v[i] + h * k3[i];
            ls.apply(tmp, k4);
            for (std::size_t i = 0; i < n; ++i)
                v[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            t_cur += h;
            if (vec_norm(v) > 10.0 * norm0 * std::exp(growth_rate * t_cur))
                throw numeric_error("evolve_rk4: instability detected; reduce the step size");
        }
        CMatrix col(n, 1);
        for (std::size_t i = 0; i < n; ++i) col(i, 0) = v[i];
        out.states.push_back(unvec(col, l.dim));
    }
    return out;
}

EvolutionResult evolve_split(const ModelParams& p, const SqueezeSolution& s,
                             const TransformedCoeffs& tc, const DensityMatrix& rho0,
                             std::span<const double> times, double theta) {
    require_grid(times);
    const TransformedLiouvillian tf = liouvillian_transformed(p, s, tc, rho0.dim, theta);
    const CMatrix v0 = vec(rho0.mat);

    EvolutionResult out;
    out.method = Method::split;
    out.times.assign(times.begin(), times.end());

    double step = 0.0;
    if (uniform_grid(times, step)) {
        const CMatrix ea = expm(tf.hamiltonian.mat, complexd{step, 0.0});
        const CMatrix ed = expm(tf.dissipative.mat, complexd{step, 0.0});
        CMatrix pa = CMatrix::identity(v0.rows());
        CMatrix pd = CMatrix::identity(v0.rows());
        for (double t : times) {
            const double pref = std::exp(0.5 * (p.mu - p.nu) * t);
            out.states.push_back(unvec(complexd{pref, 0.0} * (pa * (pd * v0)), rho0.dim));
            pa = ea * pa;
            pd = ed * pd;
        }
    } else {
        for (double t : times) {
            const CMatrix ea = expm(tf.hamiltonian.mat, complexd{t, 0.0});
            const CMatrix ed = expm(tf.dissipative.mat, complexd{t, 0.0});
            const double pref = std::exp(0.5 * (p.mu - p.nu) * t);
            out.states.push_back(unvec(complexd{pref, 0.0} * (ea * (ed * v0)), rho0.dim));
        }
    }
    return out;
}

EvolutionResult evolve_factorized(const ModelParams& p, const SqueezeSolution& s,
                                  const TransformedCoeffs& tc, const DensityMatrix& rho0,
                                  std::span<const double> times, FactorizedRoute route,
                                  double theta) {
    require_grid(times);
    EvolutionResult out;
    out.method = Method::factorized;
    out.times.assign(times.begin(), times.end());

    // re-throw factorization singularities with the offending time attached
    auto factors_at = [&](double t) {
        try {
            return std::pair{hamiltonian_factors(p, s, t), dissipative_factors(tc, t)};
        } catch (const singular_error& e) {
            throw singular_error(std::string(e.what()) + " (at t = " + std::to_string(t) + ")");
        }
    };

    if (route == FactorizedRoute::operator_level) {
        for (double t : times) {
            const auto [fh, fd] = factors_at(t);
            out.states.push_back(operator_level_apply(fh, fd, p.mu - p.nu, rho0.mat, theta));
        }
        return out;
    }

    const GeneratorSet kg = k_generators(rho0.dim, theta);
    const GeneratorSet tg = ktilde_generators(rho0.dim, theta);
    const CMatrix v0 = vec(rho0.mat);
    for (double t : times) {
        const auto [fh, fd] = factors_at(t);
        const SuperOp fa = factored_superop(fh, kg);
        const SuperOp fdis = factored_superop(fd, tg);
        const double pref = std::exp(0.5 * (p.mu - p.nu) * t);
        out.states.push_back(unvec(complexd{pref, 0.0} * (fa.mat * (fdis.mat * v0)), rho0.dim));
    }
    return out;
}

std::vector<complexd> expectation_values(const CMatrix& rho, std::span<const CMatrix> ops) {
    std::vector<complexd> vals;
    vals.reserve(ops.size());
    for (const CMatrix& op : ops) {
        if (op.rows() != rho.rows() || op.cols() != rho.rows() || !rho.is_square())
            throw shape_error("expectation_values: dimension mismatch");
        vals.push_back(trace_of(op * rho));
    }
    return vals;
}

CompareReport compare_states(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square())
        throw shape_error("compare_states: states must be square and equal-sized");
    CompareReport r;
    r.frobenius_error = frobenius_norm(a - b);

    const CMatrix diff = a - b;
    const CMatrix herm_diff = 0.5 * (diff + diff.adjoint());
    double td = 0.0;
    for (double ev : hermitian_eigenvalues(herm_diff)) td += std::abs(ev);
    r.trace_distance = 0.5 * td;

    const MatrixStats st = norms_and_trace(a);
    r.trace_defect = std::abs(st.trace - complexd{1.0, 0.0});
    r.herm_defect = st.herm_defect;
    const CMatrix herm_a = 0.5 * (a + a.adjoint());
    r.min_eig = hermitian_min_eig(herm_a);
    return r;
}

}  // namespace lindsq
