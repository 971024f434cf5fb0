#pragma once

#include "parafock/gram.hpp"
#include "parafock/report.hpp"
#include "parafock/words.hpp"

namespace parafock {

enum class RelationFamily {
  parabose,    // [{b,b},b]
  parafermi,   // [[f,f],f]
  mixed_bb_f,  // [{b,b},f] = 0
  mixed_ff_b,  // [[f,f],b] = 0
  mixed_fb_b,  // [{f,b},b]
  mixed_bf_f   // {{b,f},f}
};

std::string to_string(RelationFamily family);

/// One defining trilinear relation, stored as lhs - rhs where lhs is the
/// nested bracket and rhs the linear combination it must equal.
struct Relation {
  RelationFamily family;
  int xi;   // +1 or -1
  int eta;  // +1 or -1
  int eps;  // +1 or -1
  std::string label;  // e.g. "[{b+,b-},f+] = 0"
  AlgebraElement lhs;
  AlgebraElement rhs;

  AlgebraElement residual() const { return lhs - rhs; }
};

/// The full canonical list: 6 parabose + 2 parafermi + 6 + 2 + 8 + 8 = 32.
/// Families symmetric under xi <-> eta are emitted once per unordered pair.
std::vector<Relation> enumerate_relations();

/// Checks every relation residual annihilates every canonical vector with
/// m <= max_m - 3 (a trilinear word raises m by at most 3, so the result
/// stays inside the exact region). threads <= 1 means sequential; the
/// split is deterministic either way.
Report verify_relations(const LadderAction& action, int max_m, int threads = 1);

/// vac conditions: b-|0> = f-|0> = 0, b-f+|0> = f-b+|0> = 0,
/// b-b+|0> = f-f+|0> = p|0>, <0|0> = 1.
Report verify_vacuum(const LadderAction& action);

/// The action table versus the defining words: acting with the table must
/// agree with re-evaluating the defining word of the image, for every
/// generator and canonical vector in range, including the two-route
/// expansion of the beta words.
Report verify_definitions(const LadderAction& action, int max_m);

/// Symmetry, positive-definiteness on interior sectors, the alpha/beta
/// pairing identity <a,a> = p<a,b>, zero-row norms, and the beta
/// identification at n = p.
Report verify_gram(const LadderAction& action, int max_m);

/// <X u, v> = <u, adj(X) v> for all generators over sampled u, v pairs in
/// the window (exact, not sampled randomly: all pairs with m small enough
/// that both sides stay exact).
Report verify_adjointness(const LadderAction& action, int max_m);

/// N_b, N_f, N_s: eigenvalues m and n, commutation among the three, and
/// the sector shape of N_s (scalar 1/2 on 1-dim sectors, trace 0 and
/// det -1/4 on 2-dim sectors).
Report verify_csco(const LadderAction& action, int max_m);

/// deg(X v) = deg(X) + deg(v) for homogeneous v, all four generators.
Report verify_grading(const LadderAction& action, int max_m);

/// Strong connectivity of the single-generator transition graph on the
/// inner window (vectors whose full neighbourhood is inside the window).
Report verify_irreducibility(const LadderAction& action, int max_m);

/// Orthonormality and completeness residuals of every sector in window,
/// each below 1e-12.
Report verify_orthonormal(const LadderAction& action, int max_m);

/// All suites above, in a fixed order. A suite that throws is converted
/// into a failing report rather than aborting the run.
std::vector<Report> run_all_suites(const LadderAction& action, int max_m, int threads = 1);

bool all_passed(const std::vector<Report>& reports);

}  // namespace parafock
