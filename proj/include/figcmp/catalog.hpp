#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "figcmp/comparator.hpp"

namespace figcmp {

/// A computable isometry-invariant property whose differing values on two
/// figures certify that no isometry maps one onto the other.
struct Distinguisher {
  enum class Kind {
    closedness,
    regular_closedness,
    convexity,          // refuted via the stored witness pair
    neighbor_signature, // per-point counts of r-neighbors at a truncation
    local_finiteness,   // number of figure points at a fixed distance from a probe
  };
  Kind kind = Kind::closedness;

  // convexity
  Vec2 witness_a{}, witness_b{};
  // neighbor_signature
  double r = 0.0;
  double sig_tol = 1e-6;
  // local_finiteness: a probe point per figure and the circle radius
  std::optional<Point> probe_a, probe_b;
  double radius = 0.0;

  std::string expected_a, expected_b;
};
std::string to_string(Distinguisher::Kind k);

/// Evaluates the distinguisher value on a figure.  `transport` maps the
/// stored witness data along when the figure is an isometric image; `which`
/// selects the per-figure probe (0 = A side, 1 = B side).
std::string evaluate_distinguisher(const Distinguisher& d,
                                   const SymbolicFigure& fig, int which,
                                   const std::optional<Isometry>& transport,
                                   long truncation);

struct CatalogEntry {
  enum class Kind { paradox_pair, strongly_good_claim, intersection_regression };

  std::string id;
  Geometry geometry = Geometry::Euclidean;
  std::string summary;
  Kind kind = Kind::paradox_pair;

  SymbolicFigure A, B;
  std::optional<Isometry> f_AtoB;  // witness for A <= B
  std::optional<Isometry> g_BtoA;  // witness for B <= A
  std::optional<Distinguisher> distinguisher;
  std::vector<std::string> assumptions;
  std::optional<long> default_truncation;

  // strongly-good probes: seeded adversarial isometries
  std::vector<std::pair<std::string, Isometry>> probe_seeds;
  // intersection regression: the two strongly good sets whose intersection
  // reproduces the half-line paradox
  std::optional<SymbolicFigure> aux_L, aux_M;
};

struct Clause {
  std::string name;
  bool pass = false;
  std::string evidence;
};

struct ExampleReport {
  std::string entry;
  std::vector<Clause> clauses;
  std::vector<std::string> assumptions;
  bool pass = false;
};

/// Builds one of the eleven catalog entries; throws unknown_entry_error.
CatalogEntry build_entry(const std::string& id);

/// The eleven ids in report order.
const std::vector<std::string>& entry_ids();

/// Runs the verifier for one entry.  Orbit-based entries use the supplied
/// truncation (default 40).
ExampleReport verify_entry(const CatalogEntry& entry,
                           std::optional<long> truncation = std::nullopt);

/// Entry registry with verification statuses for the listing command.
class Catalog {
 public:
  Catalog();
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry& entry(const std::string& id) const;
  ExampleReport verify(const std::string& id,
                       std::optional<long> truncation = std::nullopt);
  std::vector<ExampleReport> verify_all(std::optional<long> truncation = std::nullopt);

  struct Listing {
    std::string id;
    Geometry geometry;
    std::string summary;
    std::string status;  // "unverified", "PASS" or "FAIL"
  };
  std::vector<Listing> list() const;

 private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::string> status_;
};

}  // namespace figcmp
