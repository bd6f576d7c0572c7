#pragma once

// Per-instance checks of the mesh and multiplier-sequence results. A check
// either confirms a claim on its inputs or returns a witness that replays
// through the public operations.
//
// Randomized sufficiency checks are self-tests: a failure there means the
// library is wrong. Witness searches return certificates, and a search that
// finds nothing is Inconclusive, never Holds.

#include "meshpoly/fixtures.hpp"
#include "meshpoly/transform.hpp"

#include <optional>
#include <string>

namespace meshpoly {

enum class Status { Holds, Fails, Inconclusive, Skipped };
std::string status_name(Status s);

struct Witness {
  enum class Kind {
    NotInClass,        // image is not in `violated`
    AlternatingSigns,  // Pochhammer coefficients of the input break the sign pattern
    ProperPosition,    // image << partner fails
  };

  Kind kind = Kind::NotInClass;
  Polynomial input;
  Transform transform;
  Polynomial image;
  ClassSpec violated;
  std::optional<Polynomial> partner;
  std::string detail;
};

/// Recomputes the image from the input and re-checks the violation.
bool replay(const Witness& w);

struct Verdict {
  std::string claim_id;
  Status status = Status::Skipped;
  std::optional<Witness> witness;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::string note;

  bool holds() const { return status == Status::Holds; }
};

// ---------------------------------------------------------------------------
// Mesh monotonicity

/// mesh(T(p)) >= mesh(p), decided as mesh_at_least(T(p), beta) with beta the
/// exact mesh of p (or its certified lower bound when roots are irrational).
/// For an Operator transform p must lie in HP>=alpha; for DerivativeRiesz p
/// must be real-rooted and alpha is unused. Precondition failures are Skipped.
Verdict check_mesh_monotone(const Transform& T, const Polynomial& p, const Rational& alpha);

/// T(p) in spec whenever p in spec. A zero image passes.
Verdict check_class_preserved(const Transform& T, const Polynomial& p, const ClassSpec& spec,
                              const std::string& claim_id);

// ---------------------------------------------------------------------------
// Constant-coefficient preservers

struct HerpouConfig {
  std::size_t trials = 500;
  std::size_t max_degree = 6;
  std::size_t i_max = 64;
  std::uint64_t seed = 1;
};

struct HerpouScanResult {
  std::optional<std::size_t> index;  // smallest i with T((x)_i) outside HP>=1
  std::optional<Witness> witness;
};

/// Scans i = k..i_max using the factorization T((x)_i) = (x-k)...(x-i+1) R_i.
HerpouScanResult herpou_scan(const Polynomial& Q, std::size_t i_max);

/// Q with real roots >= 0: randomized sufficiency on HP>=1 fixtures.
/// Otherwise: herpou_scan, Inconclusive when nothing turns up.
/// Throws std::invalid_argument for Q = 0.
Verdict herpou_verdict(const Polynomial& Q, const HerpouConfig& cfg);

// ---------------------------------------------------------------------------
// Discrete multiplier sequences

/// Pochhammer coefficients a_i of p in HP+>=1 with a_n > 0 satisfy
/// (-1)^(n-i) a_i >= 0. Skipped outside that domain.
Verdict check_altn(const Polynomial& p);

/// Nonzero entries of opposite sign give a fixture (x - s)_j in HP+>=1 whose
/// image is outside HP+>=1. Inconclusive when all nonzero entries agree in sign.
Verdict signs_witness(const std::vector<Rational>& alpha, const Rational& s = Rational(1, 2));

/// alpha_m > alpha_(m+1) with alpha_(m+2) > 0 gives a fixture
/// (x)_m (x-m-a)(x-1-m-a) whose image leaves HP+>=1. Inconclusive otherwise.
/// Throws std::invalid_argument unless alpha_m2 > 0.
Verdict alink_witness(const Rational& alpha_m, const Rational& alpha_m1, const Rational& alpha_m2,
                      std::size_t m);

struct DmsConfig {
  std::size_t trials = 500;
  std::size_t max_degree = 6;
  std::uint64_t seed = 1;
  /// When set, also checks W(p) << p and W(p) << p(x-1) for W = 1 + lambda x Delta.
  std::optional<Rational> claim2_lambda;
};

/// Structural checks (signs, trivial sequences) then randomized preservation of HP+>=1.
/// Throws std::out_of_range when A is shorter than max_degree + 1.
Verdict dms_test(const DiagonalSequence& A, const DmsConfig& cfg);

/// W_lambda(p) << p and W_lambda(p) << p(x-1).
Verdict check_claim2_proof_path(const Rational& lambda, const Polynomial& p);

struct SearchBudget {
  std::size_t trials = 500;
  std::size_t max_degree = 4;
  std::uint64_t seed = 1;
};

/// A fixture in HP+>=1 whose {rho^i} image leaves HP>=1. Throws
/// std::invalid_argument unless 0 < rho <= 1.
Verdict remark2_witness(const Rational& rho, const SearchBudget& cfg);

/// A real-rooted p with T(p) not real-rooted. Skipped when T has fewer than
/// two nonzero coefficients.
Verdict lemma1_violation(const FiniteDifferenceOperator& T, const SearchBudget& cfg);

struct ClassicalProbeConfig {
  std::size_t trials = 200;
  std::size_t max_degree = 6;
  std::uint64_t seed = 1;
  bool trace_rescaling = false;
};

/// sum gamma_i alpha_i x^i is real-rooted whenever sum gamma_i x^i has only
/// non-negative roots. With trace_rescaling, also
/// sum gamma_i rho^i alpha_i (x/rho)_i in HP+>=rho for rho in {1, 1/2, 1/10}.
Verdict classical_multiplier_probe(const DiagonalSequence& A, const ClassicalProbeConfig& cfg);

}  // namespace meshpoly
