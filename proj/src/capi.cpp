#include "boostlet/boostlet.h"

#include <cstring>
#include <string>

#include "cbt.hpp"
#include "errors.hpp"
#include "example.hpp"
#include "field.hpp"
#include "io.hpp"
#include "mother.hpp"
#include "quadrature.hpp"
#include "signals.hpp"
#include "specfun.hpp"
#include "suite.hpp"
#include "uncertainty.hpp"

struct bsl_field {
    bsl::Field2D f;
};
struct bsl_mother {
    bsl::MotherBoostlet m;
};
struct bsl_coeffs {
    bsl::CbtCoefficients c;
};
struct bsl_admissibility {
    bsl::AdmissibilityResult a;
};

namespace {

thread_local std::string g_last_error;

bsl_status status_of(const bsl::Error& e) {
    g_last_error = e.what();
    switch (e.code()) {
        case bsl::ErrorCode::Invalid: return BSL_ERR_INVALID;
        case bsl::ErrorCode::Io: return BSL_ERR_IO;
        case bsl::ErrorCode::Aliasing: return BSL_ERR_ALIASING;
        case bsl::ErrorCode::Degenerate: return BSL_ERR_DEGENERATE;
        case bsl::ErrorCode::Shape: return BSL_ERR_SHAPE;
        case bsl::ErrorCode::Divergence: return BSL_ERR_DIVERGENCE;
        default: return BSL_ERR_INTERNAL;
    }
}

template <typename Fn>
bsl_status guarded(Fn&& fn) {
    try {
        fn();
        return BSL_OK;
    } catch (const bsl::Error& e) {
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BSL_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return BSL_ERR_INTERNAL;
    }
}

bsl::GridSpec to_grid(const bsl_grid& g) {
    return bsl::GridSpec(g.n_s, g.n_t, g.extent_s, g.extent_t);
}

bsl::Cone to_cone(bsl_cone c) {
    return c == BSL_CONE_SUPERSONIC ? bsl::Cone::Supersonic : bsl::Cone::Subsonic;
}

bsl::QuadSpec to_quad(const bsl_quad& q) {
    return {q.c_min, q.c_max, q.alpha_min, q.alpha_max, q.n_c, q.n_alpha};
}

void require(bool ok, const char* what) {
    if (!ok) throw bsl::InvalidArgument(what);
}

void fill_report(const bsl::InequalityReport& src, bsl_report* dst) {
    std::memset(dst, 0, sizeof(*dst));
    std::snprintf(dst->name, sizeof(dst->name), "%s", src.name.c_str());
    dst->p_or_lambda = src.p_or_lambda;
    dst->lhs = src.lhs;
    dst->rhs = src.rhs;
    dst->ratio = src.ratio;
    dst->satisfied = src.satisfied.has_value() ? (*src.satisfied ? 1 : 0) : -1;
    dst->divergence_warning = src.divergence_warning ? 1 : 0;
    dst->truncation_warning = src.truncation_warning ? 1 : 0;
    std::snprintf(dst->quadrature_id, sizeof(dst->quadrature_id), "%s",
                  src.quadrature_id.c_str());
}

bsl::UncertaintyOptions to_options(const bsl_uncertainty_params* p) {
    bsl::UncertaintyOptions opt;
    if (!p) return opt;
    opt.include_heisenberg = p->include_heisenberg != 0;
    opt.include_log = p->include_log != 0;
    for (int32_t i = 0; i < p->n_p; ++i) opt.p_values.push_back(p->p_values[i]);
    for (int32_t i = 0; i < p->n_lambda; ++i) opt.lambda_values.push_back(p->lambda_values[i]);
    require((p->a1 == nullptr) == (p->a2 == nullptr), "a1 and a2 must be given together");
    if (p->a1) {
        opt.nazarov_rects = std::make_pair(
            bsl::Rect{p->a1->lo1, p->a1->hi1, p->a1->lo2, p->a1->hi2},
            bsl::Rect{p->a2->lo1, p->a2->hi1, p->a2->lo2, p->a2->hi2});
    }
    opt.convention = p->first_component_only ? bsl::PairMagnitude::FirstOnly
                                             : bsl::PairMagnitude::BothComponents;
    return opt;
}

template <typename Fn>
bsl_status one_report(const bsl_field* f, const bsl_mother* m, const bsl_admissibility* adm,
                      const bsl_quad& quad, bsl_report* out, Fn&& fn) {
    return guarded([&] {
        require(f && m && adm && out, "null argument");
        const bsl::GroupQuadrature q = bsl::make_group_quadrature(to_quad(quad));
        fill_report(fn(q), out);
    });
}

}  // namespace

extern "C" {

const char* bsl_version(void) { return "1.0.0"; }

const char* bsl_last_error(void) { return g_last_error.c_str(); }

bsl_status bsl_field_create(bsl_grid grid, const double* data, bsl_field** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        auto f = std::make_unique<bsl_field>();
        f->f = bsl::Field2D(to_grid(grid));
        if (data) {
            for (size_t i = 0; i < f->f.values.size(); ++i) {
                f->f.values[i] = {data[2 * i], data[2 * i + 1]};
            }
        }
        *out = f.release();
    });
}

void bsl_field_free(bsl_field* f) { delete f; }

bsl_status bsl_field_get_grid(const bsl_field* f, bsl_grid* out) {
    return guarded([&] {
        require(f && out, "null argument");
        *out = {f->f.grid.n_s, f->f.grid.n_t, f->f.grid.extent_s, f->f.grid.extent_t};
    });
}

const double* bsl_field_data(const bsl_field* f) {
    if (!f) return nullptr;
    return reinterpret_cast<const double*>(f->f.values.data());
}

bsl_status bsl_field_l2_norm(const bsl_field* f, double* out) {
    return guarded([&] {
        require(f && out, "null argument");
        *out = bsl::l2_norm(f->f);
    });
}

bsl_status bsl_field_read_bsf(const char* path, bsl_field** out) {
    return guarded([&] {
        require(path && out, "null argument");
        auto f = std::make_unique<bsl_field>();
        f->f = bsl::read_bsf(path);
        *out = f.release();
    });
}

bsl_status bsl_field_write_bsf(const bsl_field* f, const char* path) {
    return guarded([&] {
        require(f && path, "null argument");
        bsl::write_bsf(f->f, path);
    });
}

bsl_status bsl_field_write_pgm(const bsl_field* f, const char* path) {
    return guarded([&] {
        require(f && path, "null argument");
        bsl::write_pgm_magnitude(f->f, path);
    });
}

bsl_status bsl_field_suite_signal(bsl_grid grid, const bsl_mother* m, uint64_t seed,
                                  int32_t index, bsl_field** out) {
    return guarded([&] {
        require(m && out, "null argument");
        auto f = std::make_unique<bsl_field>();
        f->f = bsl::suite_signal(to_grid(grid), m->m, seed, index);
        *out = f.release();
    });
}

bsl_status bsl_mother_create(bsl_grid grid, bsl_cone cone, double scale_center,
                             double scale_width, double rapidity_width, bsl_mother** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        auto m = std::make_unique<bsl_mother>();
        m->m = bsl::default_mother(to_grid(grid), to_cone(cone), scale_center, scale_width,
                                   rapidity_width);
        *out = m.release();
    });
}

void bsl_mother_free(bsl_mother* m) { delete m; }

bsl_status bsl_mother_norm(const bsl_mother* m, double* out) {
    return guarded([&] {
        require(m && out, "null argument");
        *out = m->m.norm();
    });
}

bsl_status bsl_mother_default_quad(const bsl_mother* m, int32_t n_c, int32_t n_alpha,
                                   bsl_quad* out) {
    return guarded([&] {
        require(m && out, "null argument");
        const bsl::QuadSpec q = bsl::default_quadrature(m->m, n_c, n_alpha);
        *out = {q.c_min, q.c_max, q.alpha_min, q.alpha_max, q.n_c, q.n_alpha};
    });
}

bsl_status bsl_mother_default_omegas(const bsl_mother* m, int32_t n, double* out_pairs) {
    return guarded([&] {
        require(m && out_pairs, "null argument");
        const auto samples = bsl::default_omega_samples(m->m, n);
        for (size_t i = 0; i < samples.size(); ++i) {
            out_pairs[2 * i] = samples[i][0];
            out_pairs[2 * i + 1] = samples[i][1];
        }
    });
}

bsl_status bsl_cbt_point(const bsl_field* f, const bsl_mother* m, double c, double alpha,
                         double tau_s, double tau_t, double out_pair[4]) {
    return guarded([&] {
        require(f && m && out_pair, "null argument");
        const auto [p1, p2] = bsl::cbt_point(f->f, m->m, {c, alpha, tau_s, tau_t});
        out_pair[0] = p1.real();
        out_pair[1] = p1.imag();
        out_pair[2] = p2.real();
        out_pair[3] = p2.imag();
    });
}

bsl_status bsl_cbt_slice(const bsl_field* f, const bsl_mother* m, double c, double alpha,
                         bsl_coeffs** out) {
    return guarded([&] {
        require(f && m && out, "null argument");
        auto coeffs = std::make_unique<bsl_coeffs>();
        coeffs->c = bsl::cbt_slice(f->f, m->m, c, alpha);
        *out = coeffs.release();
    });
}

bsl_status bsl_convolution_form(const bsl_field* f, const bsl_mother* m, double c, double alpha,
                                bsl_coeffs** out) {
    return guarded([&] {
        require(f && m && out, "null argument");
        auto coeffs = std::make_unique<bsl_coeffs>();
        coeffs->c = bsl::convolution_form(f->f, m->m, c, alpha);
        *out = coeffs.release();
    });
}

bsl_status bsl_atom(const bsl_mother* m, double c, double alpha, double tau_s, double tau_t,
                    bsl_field** out) {
    return guarded([&] {
        require(m && out, "null argument");
        auto f = std::make_unique<bsl_field>();
        f->f = bsl::atom(m->m, {c, alpha, tau_s, tau_t});
        *out = f.release();
    });
}

void bsl_coeffs_free(bsl_coeffs* c) { delete c; }

bsl_status bsl_coeffs_plane(const bsl_coeffs* c, int32_t component, bsl_field** out) {
    return guarded([&] {
        require(c && out, "null argument");
        require(component == 1 || component == 2, "component must be 1 or 2");
        auto f = std::make_unique<bsl_field>();
        f->f = component == 1 ? c->c.plane1 : c->c.plane2;
        *out = f.release();
    });
}

bsl_status bsl_admissibility_run(const bsl_mother* m, const double* omega_pairs, int32_t n,
                                 bsl_quad quad, bsl_admissibility** out) {
    return guarded([&] {
        require(m && omega_pairs && out, "null argument");
        require(n > 0, "need at least one omega sample");
        std::vector<std::array<double, 2>> omegas(n);
        for (int32_t i = 0; i < n; ++i) {
            omegas[i] = {omega_pairs[2 * i], omega_pairs[2 * i + 1]};
        }
        auto a = std::make_unique<bsl_admissibility>();
        a->a = bsl::admissibility(m->m, omegas, to_quad(quad));
        *out = a.release();
    });
}

void bsl_admissibility_free(bsl_admissibility* a) { delete a; }

double bsl_admissibility_delta(const bsl_admissibility* a) { return a ? a->a.delta : 0.0; }

double bsl_admissibility_spread(const bsl_admissibility* a) {
    return a ? a->a.relative_spread : 0.0;
}

int32_t bsl_admissibility_admissible(const bsl_admissibility* a) {
    return a && a->a.admissible ? 1 : 0;
}

int32_t bsl_admissibility_resolution_warning(const bsl_admissibility* a) {
    return a && a->a.resolution_warning ? 1 : 0;
}

bsl_status bsl_admissibility_samples(const bsl_admissibility* a, double* delta_phi,
                                     double* delta_phi_star) {
    return guarded([&] {
        require(a != nullptr, "null argument");
        for (size_t i = 0; i < a->a.delta_phi.size(); ++i) {
            if (delta_phi) delta_phi[i] = a->a.delta_phi[i];
            if (delta_phi_star) delta_phi_star[i] = a->a.delta_phi_star[i];
        }
    });
}

bsl_status bsl_uncertainty_suite(const bsl_field* f, const bsl_mother* m,
                                 const bsl_admissibility* adm, bsl_quad quad,
                                 const bsl_uncertainty_params* params, bsl_report* out,
                                 int32_t max_reports, int32_t* n_out) {
    return guarded([&] {
        require(f && m && adm && out && n_out, "null argument");
        const bsl::GroupQuadrature q = bsl::make_group_quadrature(to_quad(quad));
        const auto reports = bsl::run_reports(f->f, m->m, adm->a, q, to_options(params));
        require(static_cast<int32_t>(reports.size()) <= max_reports,
                "report buffer too small");
        for (size_t i = 0; i < reports.size(); ++i) fill_report(reports[i], &out[i]);
        *n_out = static_cast<int32_t>(reports.size());
    });
}

bsl_status bsl_heisenberg(const bsl_field* f, const bsl_mother* m, const bsl_admissibility* adm,
                          bsl_quad quad, bsl_report* out) {
    return one_report(f, m, adm, quad, out, [&](const bsl::GroupQuadrature& q) {
        return bsl::heisenberg_report(f->f, m->m, adm->a, q);
    });
}

bsl_status bsl_lp_heisenberg_i(const bsl_field* f, const bsl_mother* m,
                               const bsl_admissibility* adm, bsl_quad quad, double p,
                               bsl_report* out) {
    return one_report(f, m, adm, quad, out, [&](const bsl::GroupQuadrature& q) {
        return bsl::lp_heisenberg_i_report(f->f, m->m, p, adm->a, q);
    });
}

bsl_status bsl_lp_heisenberg_ii(const bsl_field* f, const bsl_mother* m,
                                const bsl_admissibility* adm, bsl_quad quad, double p,
                                bsl_report* out) {
    return one_report(f, m, adm, quad, out, [&](const bsl::GroupQuadrature& q) {
        return bsl::lp_heisenberg_ii_report(f->f, m->m, p, adm->a, q);
    });
}

bsl_status bsl_log_uncertainty(const bsl_field* f, const bsl_mother* m,
                               const bsl_admissibility* adm, bsl_quad quad, bsl_report* out) {
    return one_report(f, m, adm, quad, out, [&](const bsl::GroupQuadrature& q) {
        return bsl::log_uncertainty_report(f->f, m->m, adm->a, q);
    });
}

bsl_status bsl_pitt(const bsl_field* f, const bsl_mother* m, const bsl_admissibility* adm,
                    bsl_quad quad, double lambda, bsl_report* out) {
    return one_report(f, m, adm, quad, out, [&](const bsl::GroupQuadrature& q) {
        return bsl::pitt_report(f->f, m->m, lambda, adm->a, q);
    });
}

bsl_status bsl_nazarov(const bsl_field* f, const bsl_mother* m, const bsl_admissibility* adm,
                       bsl_quad quad, bsl_rect a1, bsl_rect a2, bsl_report* out) {
    return one_report(f, m, adm, quad, out, [&](const bsl::GroupQuadrature& q) {
        return bsl::nazarov_report(f->f, m->m, {a1.lo1, a1.hi1, a1.lo2, a1.hi2},
                                   {a2.lo1, a2.hi1, a2.lo2, a2.hi2}, adm->a, q);
    });
}

bsl_status bsl_report_csv_line(const bsl_report* r, char* buf, size_t bufsize) {
    return guarded([&] {
        require(r && buf, "null argument");
        bsl::InequalityReport rep;
        rep.name = r->name;
        rep.p_or_lambda = r->p_or_lambda;
        rep.lhs = r->lhs;
        rep.rhs = r->rhs;
        rep.ratio = r->ratio;
        if (r->satisfied >= 0) rep.satisfied = r->satisfied != 0;
        rep.quadrature_id = r->quadrature_id;
        const std::string line = bsl::report_csv_line(rep);
        require(line.size() + 1 <= bufsize, "buffer too small");
        std::memcpy(buf, line.c_str(), line.size() + 1);
    });
}

double bsl_digamma_half(void) { return bsl::digamma_half(); }

bsl_status bsl_pitt_constant(double lambda, double* out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = bsl::pitt_constant(lambda);
    });
}

bsl_status bsl_spectral_dispersion(const bsl_field* f, double exponent, double* out) {
    return guarded([&] {
        require(f && out, "null argument");
        *out = bsl::spectral_dispersion(f->f, exponent);
    });
}

bsl_status bsl_example_cbt(double c, double alpha, double tau_s, double tau_t, double epsilon,
                           double out_pair[4]) {
    return guarded([&] {
        require(out_pair != nullptr, "null output");
        const auto [c1, c2] = bsl::example_cbt({c, alpha, tau_s, tau_t, epsilon});
        out_pair[0] = c1.real();
        out_pair[1] = c1.imag();
        out_pair[2] = c2.real();
        out_pair[3] = c2.imag();
    });
}

bsl_status bsl_verify_run(bsl_grid grid, bsl_cone cone, double scale_center, double scale_width,
                          double rapidity_width, uint64_t seed, bsl_verify_row* rows,
                          int32_t max_rows, int32_t* n_rows) {
    return guarded([&] {
        require(rows && n_rows, "null argument");
        const auto result = bsl::run_verify_suite(to_grid(grid), to_cone(cone), scale_center,
                                                  scale_width, rapidity_width, seed);
        require(static_cast<int32_t>(result.size()) <= max_rows, "row buffer too small");
        for (size_t i = 0; i < result.size(); ++i) {
            std::memset(&rows[i], 0, sizeof(rows[i]));
            std::snprintf(rows[i].name, sizeof(rows[i].name), "%s", result[i].name.c_str());
            rows[i].residual = result[i].residual;
            rows[i].tolerance = result[i].tolerance;
            rows[i].pass = result[i].pass ? 1 : 0;
            rows[i].informational = result[i].informational ? 1 : 0;
        }
        *n_rows = static_cast<int32_t>(result.size());
    });
}

}  // extern "C"
