#pragma once

#include <optional>
#include <string>
#include <vector>

#include "figcmp/figure.hpp"

namespace figcmp {

enum class Certificate {
  none,
  distance_multiset,   // some pairwise distance of A has no home in B
  search_exhausted,    // every anchor-pair candidate failed
  cardinality,         // |A| != |B| (equality) or |A| > |B| (embedding)
};
std::string to_string(Certificate c);

struct ComparisonVerdict {
  bool yes = false;
  std::optional<Isometry> witness;
  Certificate certificate = Certificate::none;
  std::string detail;
};

struct SearchConfig {
  std::size_t size_cap = 2000;
};

/// Decides whether some isometry maps A into (a subset of) B.  Exact up to
/// tol: every returned witness is re-verified by an independent containment
/// pass, and every embedding isometry maps the maximal-distance anchor pair
/// of A onto one of the enumerated candidate pairs of B.
ComparisonVerdict leq_finite(const FiniteFigure& A, const FiniteFigure& B,
                             Tolerance tol, const SearchConfig& cfg = {});

/// Decides geometric equality: an embedding whose image hits every point
/// of B.
ComparisonVerdict equal_finite(const FiniteFigure& A, const FiniteFigure& B,
                               Tolerance tol, const SearchConfig& cfg = {});

enum class LambdaRelation { equal, strictly_less, strictly_greater, incomparable };
std::string to_string(LambdaRelation r);

struct LambdaVerdict {
  LambdaRelation relation = LambdaRelation::incomparable;
  std::optional<Isometry> witness;
  std::string detail;
};

/// The derived order: equal, or one-directional embedding only.
LambdaVerdict lambda_compare(const FiniteFigure& A, const FiniteFigure& B,
                             Tolerance tol, const SearchConfig& cfg = {});

/// All distinct embedding isometries of A into B the anchor search finds,
/// up to `limit` (distinctness judged by the action on A's points).
std::vector<Isometry> find_embeddings(const FiniteFigure& A,
                                      const FiniteFigure& B, Tolerance tol,
                                      std::size_t limit,
                                      const SearchConfig& cfg = {});

struct StronglyGoodReport {
  bool value = true;  // finite figures always are
  std::string explanation;
  std::size_t self_embeddings_found = 0;
  bool all_fix_figure = true;
};

/// Finite figures are strongly good by the pigeonhole argument; the report
/// also runs the randomized falsification probe (every self-embedding the
/// search finds must fix the figure as a set).
StronglyGoodReport strongly_good_finite(const FiniteFigure& A,
                                        Tolerance tol = {});

enum class SubsetVerdict { proved, refuted, unknown };
std::string to_string(SubsetVerdict v);

struct SubsetResult {
  SubsetVerdict verdict = SubsetVerdict::unknown;
  std::optional<Point> counterexample;  // present when refuted
  std::string detail;
};

/// Witness checking for symbolic figures: computes image(A, f) and applies
/// the sound subset rule engine; if the rules are inconclusive, samples the
/// image for a membership counterexample in B.  Sampling refutes but never
/// proves.  Throws unsupported_image_error when image(A, f) has no closed
/// form.
SubsetResult check_leq_symbolic(const SymbolicFigure& A,
                                const SymbolicFigure& B, const Isometry& f,
                                Tolerance tol = {});

/// The raw rule engine on two already-transformed figures (A subset of B?).
SubsetResult check_subset(const SymbolicFigure& A, const SymbolicFigure& B,
                          Tolerance tol = {});

}  // namespace figcmp
