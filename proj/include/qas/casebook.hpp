#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qas/elimination.hpp"
#include "qas/lyapcore.hpp"
#include "qas/numlab.hpp"

namespace qas {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Catalogued coefficient condition: the solved substitution chain that
// imposes it (mutually reduced, so no substituted variable appears in any
// stored value), and the factors assumed nonzero on the branch.
struct ConditionSet {
  std::string name;
  std::vector<Substitution> subs;
  std::vector<ParamPoly> nonzero;
  bool center = false;
  bool isochronous = false;
  std::string mechanism;   // how sufficiency is certified
  std::string citation;    // reference-catalog anchor
};

const ConditionSet& load_condition(const std::string& name);
bool has_condition(const std::string& name);
std::vector<std::string> condition_names();

// Defining relations var*den - num, one per substitution; a point satisfies
// the condition iff all of them vanish (and the declared factors do not).
std::vector<ParamPoly> condition_relations(const std::string& name);

// Catalogued printed constant, cleared: value = num / den.  Suspect entries
// are not comparable to the reduced constant on their branch, either from a
// known slip or because they hold only modulo prior constants; they are
// settled by numeric arbitration, never asserted.
struct Fixture {
  std::string key;
  ParamPoly num, den;
  bool suspect = false;
};
const Fixture& fixture(const std::string& key);
bool has_fixture(const std::string& key);

SwitchingSystem quadratic_template();

// ---- comparison ----------------------------------------------------------

enum class MatchKind { both_zero, proportional, ideal_equivalent, mismatch };

struct Comparison {
  MatchKind kind = MatchKind::mismatch;
  Scalar ratio;        // proportional: computed = ratio * (num/den) * units
  std::string detail;
};

// Equality up to a nonzero Scalar and powers of the declared factors.  When
// branch_core is nonzero, a cross-scaled difference exactly divisible by it
// is recognized as agreement modulo the branch ideal.
Comparison compare_constants(const ParamPoly& computed, const Fixture& fx,
                             const std::vector<ParamPoly>& nonzero,
                             const ParamPoly& branch_core = ParamPoly());

// ---- branch values -------------------------------------------------------

// Focus values / period constants of the quadratic template under a named
// condition: polynomial substitutions are applied before the series solve,
// rational ones cleared afterwards.
FocusValues branch_focus_values(const std::string& name, unsigned N);
PeriodConstants branch_period_constants(const std::string& name, unsigned N);

struct CenterReport {
  std::string name;
  bool all_zero = false;
  int first_nonzero = -1;
  std::string mechanism;
};
CenterReport verify_center(const std::string& name, unsigned N = 8);

struct CaseRow {
  unsigned index;            // subscript k of the catalogued constant L_k
  std::string fixture_key;
  Comparison cmp;
};
std::vector<CaseRow> verify_case(const std::string& name, unsigned N = 8);

// Exact rational parameter point on a branch: free coefficients drawn from
// a seeded generator, substituted ones evaluated through the chain.
struct BranchInstance {
  std::map<Var, Rational> exact;
  std::map<Var, double> approx;
};
BranchInstance branch_instance(const std::string& name, unsigned seed);

// Numeric arbitration: series_crosscheck of the engine focus series against
// integrated displacement at a random instance of the branch.
CrosscheckResult arbitrate_branch(const std::string& name, unsigned N,
                                  unsigned seed);

// Frozen perturbation points: "two_zero" brackets two displacement zeros on
// (0, 0.3); "alternation" makes V_2..V_7 alternate in sign with each constant
// progressively less dominant.
const std::map<Var, Rational>& cycle_fixture(const std::string& which);

// ---- first integrals -----------------------------------------------------

std::vector<std::string> integral_names();                    // "H0".."H5"
const std::string& integral_condition(const std::string& h);  // owning condition

double eval_integral(const std::string& h, double x, double y,
                     const std::map<Var, double>& params);

// max over pts of |grad H . field| / (|grad H| |field|), central
// differences with step 1e-6.
double first_integral_residual(const std::string& h,
                               const std::vector<std::pair<double, double>>& pts,
                               const std::map<Var, double>& params);

// Random points in the integral's valid region on a random instance of the
// owning condition; returns the max normalized residual.
double check_first_integral(const std::string& h, unsigned n_points,
                            unsigned seed);

// ---- elimination pipeline -------------------------------------------------

struct PipelineStep {
  std::string what;
  bool ok = false;
  std::string detail;
};

struct EliminationRecord {
  std::string case_id;
  std::vector<PipelineStep> steps;
  ParamPoly det_j;                    // Jacobian determinant, exact
  std::vector<double> real_roots;     // of the catalogued resultant factor
  Rational unique_lambda;             // surviving branch point
  bool unique_lambda_found = false;

  bool all_ok() const {
    for (const auto& s : steps)
      if (!s.ok) return false;
    return true;
  }
};

EliminationRecord cyclicity_pipeline(const std::string& case_id);

// ---- positive-root window --------------------------------------------------

struct WindowSample {
  Rational lambda;
  int positive_roots = 0;
  int real_roots = 0;
  int claimed = -1;   // catalogued expectation, -1 when not catalogued
};

struct WindowReport {
  std::string case_id;
  ParamPoly A2, A1, A0;            // engine coefficients of the k-quadratic
  bool coefficients_match = false;  // against catalogued forms (where stored)
  bool discriminant_match = false;
  double boundary_root = 0;         // catalogued discriminant-factor root
  double upper_boundary = 0;        // onset of the unique-positive regime
  std::vector<WindowSample> samples;
};

WindowReport six_cycle_window(const std::string& case_id);

}  // namespace qas
