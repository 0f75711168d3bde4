#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pl {

// Absolute tolerance used when checking a configuration against its claim.
inline constexpr double kClaimTolerance = 1e-12;

// Raised when an operation's inputs violate its documented preconditions.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on file / serialization problems.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// One incident point-line pair: the point (x, y) and the line of slope theta
// through it.  Valid elements live in the box [-1,1] x [-1,1] x [-1,1].
struct ConfigElement {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  friend bool operator==(const ConfigElement&, const ConfigElement&) = default;
};

bool in_domain(const ConfigElement& e);

// Vertical offset from the point of `a` to the line of `b`:
//   |a.y - b.y - b.theta * (a.x - b.x)|
// Note the asymmetry: the slope of the second argument is used.
double vertical_distance(const ConfigElement& a, const ConfigElement& b);

// Bookkeeping label attached to composed elements: which base element,
// which vertical shift, and which inner element a composed element came from.
struct CellLabel {
  std::size_t base = 0;
  long long shift = 0;
  std::size_t inner = 0;
};

// A finite list of distinct elements, all inside the domain box, with an
// optional claimed lower bound on the pairwise minimum distance.  Element
// storage is immutable after construction.
class Configuration {
 public:
  Configuration() = default;

  // Validates domain membership and pairwise distinctness; throws
  // PreconditionError on violation.
  static Configuration create(std::vector<ConfigElement> elements,
                              std::optional<double> claimed_delta = std::nullopt,
                              std::string provenance = "");

  const std::vector<ConfigElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  const std::optional<double>& claimed_delta() const { return claimed_delta_; }
  void set_claimed_delta(double d) { claimed_delta_ = d; }

  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  // Empty unless set; when present, has one label per element.
  const std::vector<CellLabel>& labels() const { return labels_; }
  void set_labels(std::vector<CellLabel> labels);

 private:
  std::vector<ConfigElement> elements_;
  std::optional<double> claimed_delta_;
  std::string provenance_;
  std::vector<CellLabel> labels_;
};

// The ordered pair of indices achieving a minimum, and the value there.
struct DistanceWitness {
  std::size_t index_a = 0;
  std::size_t index_b = 0;
  double value = 0.0;
};

struct MinDistanceResult {
  double value = 0.0;
  DistanceWitness witness;
};

// Exact minimum over all ordered pairs (i, j), i != j.  Witness tie-break:
// lexicographically smallest (index_a, index_b).  Throws on |X| < 2.
MinDistanceResult min_distance_bruteforce(const Configuration& x);

// Same value as the brute-force scan (identical float), possibly a different
// witness.  Buckets points into a uniform grid of the given cell size and,
// for each element's line, visits only the rows the current candidate band
// can touch.  Throws on |X| < 2 or cell <= 0.
MinDistanceResult min_distance_grid(const Configuration& x, double cell);

// Grid scan with an automatic cell size.
MinDistanceResult min_distance(const Configuration& x);

struct VerifyOutcome {
  bool pass = false;
  bool degenerate = false;       // |X| < 2: nothing to check
  double measured = 0.0;         // meaningless when degenerate
  std::optional<DistanceWitness> witness;
  bool sanity_exceeded = false;  // measured distance above the packing bound
  std::string note;
};

// Recomputes the minimum distance and checks it against claimed_delta
// (within kClaimTolerance).  Requires claimed_delta to be present.
VerifyOutcome verify_claim(const Configuration& x);

// n stacked horizontal lines: elements (0, -1 + (2i+1)/n, 0), i = 0..n-1,
// realized so the measured minimum distance is exactly the double 2.0/n.
// claimed_delta = 2.0/n for n >= 2, unset for n = 1.
Configuration trivial_configuration(int n);

// A small rigid fixture (two parabolic arcs, 18 elements) whose minimum
// distance equals `gap` and which is sensitive to single-coordinate edits:
// nudging any one coordinate of any element by +-gap/4 breaks the claim.
Configuration pinned_configuration(double gap = 4e-3);

}  // namespace pl
