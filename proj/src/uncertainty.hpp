#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cbt.hpp"
#include "field.hpp"
#include "mother.hpp"
#include "quadrature.hpp"

namespace bsl {

// How the squared magnitude of the pair-valued transform is read: summed over
// both components (the default, documented) or first component only.
enum class PairMagnitude { BothComponents, FirstOnly };

// Axis-aligned rectangle, [lo, hi] per axis, in the tau plane or the
// frequency plane depending on use.
struct Rect {
    double lo1 = 0.0, hi1 = 0.0;
    double lo2 = 0.0, hi2 = 0.0;
};

struct DispersionResult {
    double value = 0.0;
    double boundary_fraction = 0.0;  // share contributed by boundary nodes
    bool truncation_warning = false;
};

struct InequalityReport {
    std::string name;
    double p_or_lambda = std::numeric_limits<double>::quiet_NaN();
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;  // lhs / rhs
    // Oriented so `true` always means the stated inequality holds; absent for
    // reports with no pass/fail reading.
    std::optional<bool> satisfied;
    bool divergence_warning = false;
    bool truncation_warning = false;
    std::string quadrature_id;
    std::map<std::string, std::string> parameters;
};

// Comparison tolerances for the satisfied flags. Lower bounds get 1e-9.
// The upper-bound family degenerates to an exact equality at lambda = 0
// (both sides are the same quantity routed through two discretizations), so
// it carries an explicit quadrature-consistency allowance instead.
inline constexpr double kSatisfiedTolerance = 1e-9;
inline constexpr double kUpperBoundTolerance = 1e-6;

double spectral_dispersion(const Field2D& psi, double exponent);

DispersionResult spatial_dispersion(const Field2D& psi, const MotherBoostlet& m,
                                    const GroupQuadrature& q,
                                    PairMagnitude conv = PairMagnitude::BothComponents);

// int |B psi|^2 dc dalpha dtau / c^3 over the quadrature box.
double group_energy(const Field2D& psi, const MotherBoostlet& m, const GroupQuadrature& q,
                    PairMagnitude conv = PairMagnitude::BothComponents);

InequalityReport heisenberg_report(const Field2D& psi, const MotherBoostlet& m,
                                   const AdmissibilityResult& adm, const GroupQuadrature& q,
                                   PairMagnitude conv = PairMagnitude::BothComponents);

InequalityReport lp_heisenberg_i_report(const Field2D& psi, const MotherBoostlet& m, double p,
                                        const AdmissibilityResult& adm, const GroupQuadrature& q,
                                        PairMagnitude conv = PairMagnitude::BothComponents);

InequalityReport lp_heisenberg_ii_report(const Field2D& psi, const MotherBoostlet& m, double p,
                                         const AdmissibilityResult& adm, const GroupQuadrature& q,
                                         PairMagnitude conv = PairMagnitude::BothComponents);

InequalityReport log_uncertainty_report(const Field2D& psi, const MotherBoostlet& m,
                                        const AdmissibilityResult& adm, const GroupQuadrature& q,
                                        PairMagnitude conv = PairMagnitude::BothComponents);

InequalityReport pitt_report(const Field2D& f, const MotherBoostlet& m, double lambda,
                             const AdmissibilityResult& adm, const GroupQuadrature& q,
                             PairMagnitude conv = PairMagnitude::BothComponents);

InequalityReport nazarov_report(const Field2D& f, const MotherBoostlet& m, const Rect& a1,
                                const Rect& a2, const AdmissibilityResult& adm,
                                const GroupQuadrature& q,
                                PairMagnitude conv = PairMagnitude::BothComponents);

struct UncertaintyOptions {
    bool include_heisenberg = true;
    bool include_log = true;
    std::vector<double> p_values;       // p <= 2 -> variant (i), p >= 2 -> variant (ii), 2 -> both
    std::vector<double> lambda_values;  // weighted-norm reports
    std::optional<std::pair<Rect, Rect>> nazarov_rects;
    PairMagnitude convention = PairMagnitude::BothComponents;
};

// All requested reports from a single sweep over the (c, alpha) lattice.
std::vector<InequalityReport> run_reports(const Field2D& psi, const MotherBoostlet& m,
                                          const AdmissibilityResult& adm,
                                          const GroupQuadrature& q,
                                          const UncertaintyOptions& options);

// ASCII row "name,p_or_lambda,lhs,rhs,ratio,satisfied,quadrature_id".
std::string report_csv_line(const InequalityReport& r);

}  // namespace bsl
