#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "thompson/element.hpp"
#include "thompson/words.hpp"

namespace thompson {

constexpr std::size_t kDefaultStateCap = 5'000'000;

std::size_t caret_norm(const Element& e);

long long d_n(const PcqFactorization& f);

/// Layer-by-layer breadth-first search of a Cayley graph.
class BallSearch {
 public:
  BallSearch(GeneratingSet gens, std::size_t cap = kDefaultStateCap);

  /// Adds the next sphere; throws CapError when the state count would exceed the cap.
  void grow();
  /// Grows until every target has a length or max_radius is complete.
  /// Returns false when the cap stopped the search first.
  bool grow_until_found(const std::vector<Element>& targets, int max_radius);

  int radius() const noexcept { return static_cast<int>(layers_.size()) - 1; }
  std::size_t size() const noexcept { return lengths_.size(); }
  const GeneratingSet& generators() const noexcept { return gens_; }
  const std::vector<std::vector<Element>>& layers() const noexcept { return layers_; }
  std::optional<int> length(const Element& e) const;

  struct Bracket {
    int low = 0;
    std::optional<int> high;
    bool exact() const { return high && *high == low; }
  };
  /// Length of e from a local search around e that meets the ball: exact once
  /// the local depth reaches (best candidate - radius), otherwise an interval.
  Bracket bracket(const Element& e, std::size_t local_cap = 200'000) const;

 private:
  GeneratingSet gens_;
  std::size_t cap_;
  std::vector<Element> letters_;
  std::unordered_map<std::string, int> lengths_;
  std::vector<std::vector<Element>> layers_;
};

struct BallTable {
  int n = 2;
  GeneratingSet gens;
  int radius = 0;
  /// Canonical key -> exact word length.
  std::map<CanonicalKey, int> lengths;
  /// Elements of each sphere, in canonical key order.
  std::vector<std::vector<Element>> spheres;

  std::size_t size() const { return lengths.size(); }
  std::optional<int> length(const Element& e) const;
  /// (radius, count of elements of exactly that length).
  std::vector<std::pair<int, std::size_t>> growth() const;
};

BallTable bfs_ball(int n, const GeneratingSet& gens, int radius, std::size_t cap = kDefaultStateCap);
/// Growth series as "radius,count" lines.
void write_growth(std::ostream& os, const BallTable& table);

enum class Verdict { Pass, Fail, Undecided };
std::string verdict_name(Verdict v);

struct MetricRow {
  CanonicalKey element_key;
  int n = 2;
  std::size_t n_sigma = 0;
  long long d_n = 0;
  /// Exact length of the quantity the row bounds; empty when outside the searched ball.
  std::optional<long long> len_exact;
  /// Known interval for that length when it is not exact.
  long long len_low = 0;
  std::optional<long long> len_high;
  std::optional<std::size_t> len_upper;
  Rational lb = 0;
  Rational ub = 0;
  Verdict verdict = Verdict::Undecided;
  /// "exact", "bracketed", or "lower-bounded".
  std::string status = "exact";
  /// Report-specific quantities and secondary checks.
  std::vector<std::pair<std::string, std::string>> extra;

  bool pass() const { return verdict == Verdict::Pass; }
};

struct MetricReport {
  std::string kind;
  int n = 2;
  std::vector<MetricRow> rows;
  std::vector<std::string> notes;

  std::size_t count(Verdict v) const;
  bool all_passed() const { return count(Verdict::Pass) == rows.size(); }
  bool none_failed() const { return count(Verdict::Fail) == 0; }

  static const char* csv_header() { return "element_key,n,N_sigma,D_n,len_exact,len_upper,lb,ub,pass"; }
  void write_csv(std::ostream& os) const;
  std::string to_json() const;
};

/// Length sweep over the Σ-ball: N/3 <= |w| <= 15(n-1)N + 3n and
/// |w| <= constructive upper <= 3 D_n.
MetricReport check_length_bounds(int n, int radius, std::size_t cap = kDefaultStateCap);
MetricReport check_length_bounds(const BallTable& ball, std::size_t cap = kDefaultStateCap);

/// |w|_{Σ_n}/(36(n-1)) <= |w|_Σ <= 45(n-1)^2 |w|_{Σ_n} - 1 for the rotation-0
/// part of the Σ-ball. len_exact is |w|_Σ, the bounds come from |w|_{Σ_n}.
MetricReport fn_vs_tn_report(int n, int radius, std::size_t cap = kDefaultStateCap,
                             int f_radius_limit = 8);
MetricReport fn_vs_tn_report(const BallTable& ball, std::size_t cap = kDefaultStateCap,
                             int f_radius_limit = 8);

struct DistortionOptions {
  /// Radius of the T_n ball used for exact |w|_Σ.
  int tn_radius = 4;
  /// Maximum radius of the targeted T_2 search for |phi(w)|.
  int t2_radius = 10;
  std::size_t cap = kDefaultStateCap;
  /// State cap for the local search that meets the T_2 ball from each image.
  std::size_t local_cap = 20'000;
};

/// (n-1)/45 |w| - (n-1)(n+3)/15 <= |phi(w)| <= 45(n-1)|w| + 15 and the caret
/// relation (n-1) N(w) = N(phi(w)). len_exact is |phi(w)|.
MetricReport distortion_report(int n, const std::vector<Element>& sample,
                               const DistortionOptions& opt = {});

/// Which x-letters the candidate Σ_n needs: searches the F_n ball of the
/// smaller set {x_0, ..., x_{n-2}} and reports whether x_{n-1} lies in it.
struct GeneratorSubsetReport {
  int n = 2;
  int radius = 0;
  std::size_t small_ball = 0;
  std::size_t full_ball = 0;
  bool last_letter_reached = false;
};
GeneratorSubsetReport generator_subset_report(int n, int radius, std::size_t cap = kDefaultStateCap);

}  // namespace thompson
