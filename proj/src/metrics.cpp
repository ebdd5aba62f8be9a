#include "thompson/metrics.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "thompson/embed.hpp"
#include "thompson/errors.hpp"
#include "thompson/plmap.hpp"

namespace thompson {

std::size_t caret_norm(const Element& e) { return reduce(e).caret_count(); }

long long d_n(const PcqFactorization& f) {
  long long total = f.k + f.n;
  const auto p = f.p_blocks();
  const auto q = f.q_blocks();
  for (const auto& [index, exp] : p) total += exp;
  for (const auto& [index, exp] : q) total += exp;
  if (!p.empty()) total += p.back().first;
  if (!q.empty()) total += q.back().first;
  return total;
}

// ---------------------------------------------------------------------------

BallSearch::BallSearch(GeneratingSet gens, std::size_t cap) : gens_(gens), cap_(cap) {
  for (const auto& g : gens_.letters()) letters_.push_back(letter_element(g, gens_.n));
  const Element id = identity(gens_.n);
  lengths_.emplace(id.compact_key(), 0);
  layers_.push_back({id});
}

void BallSearch::grow() {
  const int next = radius() + 1;
  std::vector<Element> sphere;
  for (const auto& e : layers_.back()) {
    for (const auto& g : letters_) {
      Element h = multiply(e, g);
      auto [it, fresh] = lengths_.try_emplace(h.compact_key(), next);
      if (!fresh) continue;
      if (lengths_.size() > cap_) {
        lengths_.erase(it);
        throw CapError("ball search exceeded the state cap at radius " + std::to_string(next),
                       lengths_.size());
      }
      sphere.push_back(std::move(h));
    }
  }
  layers_.push_back(std::move(sphere));
}

bool BallSearch::grow_until_found(const std::vector<Element>& targets, int max_radius) {
  std::vector<std::string> pending;
  for (const auto& t : targets) pending.push_back(reduce(t).compact_key());
  for (;;) {
    std::erase_if(pending, [&](const std::string& k) { return lengths_.count(k) != 0; });
    if (pending.empty()) return true;
    if (radius() >= max_radius) return false;
    try {
      grow();
    } catch (const CapError&) {
      return false;
    }
  }
}

std::optional<int> BallSearch::length(const Element& e) const {
  auto it = lengths_.find(reduce(e).compact_key());
  if (it == lengths_.end()) return std::nullopt;
  return it->second;
}

BallSearch::Bracket BallSearch::bracket(const Element& e, std::size_t local_cap) const {
  const Element start = reduce(e);
  if (auto len = length(start)) return {*len, *len};
  // Every element of length <= radius is in the table, so a geodesic for e
  // enters it exactly (length(e) - radius) steps away from e.
  const int R = radius();
  std::optional<int> best;
  std::unordered_map<std::string, int> seen{{start.compact_key(), 0}};
  std::vector<Element> frontier{start};
  int depth = 0;
  while (!best || depth < *best - R) {
    std::vector<Element> next;
    ++depth;
    for (const auto& h : frontier) {
      for (const auto& g : letters_) {
        Element k = multiply(h, g);
        std::string key = k.compact_key();
        if (!seen.try_emplace(key, depth).second) continue;
        if (auto it = lengths_.find(key); it != lengths_.end()) {
          const int cand = depth + it->second;
          if (!best || cand < *best) best = cand;
          continue;
        }
        next.push_back(std::move(k));
      }
    }
    if (next.empty() || seen.size() > local_cap) {
      const int low = R + depth + 1;
      if (best && *best - R <= depth) return {*best, best};
      return {best ? std::min(low, *best) : low, best};
    }
    frontier = std::move(next);
  }
  return {*best, best};
}

std::optional<int> BallTable::length(const Element& e) const {
  auto it = lengths.find(canonical_key(e));
  if (it == lengths.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<int, std::size_t>> BallTable::growth() const {
  std::vector<std::pair<int, std::size_t>> out;
  for (std::size_t r = 0; r < spheres.size(); ++r) out.push_back({static_cast<int>(r), spheres[r].size()});
  return out;
}

BallTable bfs_ball(int n, const GeneratingSet& gens, int radius, std::size_t cap) {
  if (radius < 0) throw std::domain_error("bfs_ball: negative radius");
  if (gens.n != n) throw std::domain_error("bfs_ball: generating set has a different arity");
  BallSearch search(gens, cap);
  while (search.radius() < radius) search.grow();
  BallTable table;
  table.n = n;
  table.gens = gens;
  table.radius = radius;
  for (const auto& layer : search.layers()) {
    const int r = static_cast<int>(table.spheres.size());
    std::vector<std::pair<CanonicalKey, const Element*>> keyed;
    for (const auto& e : layer) keyed.push_back({e.to_string(), &e});
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Element> sphere;
    for (const auto& [key, e] : keyed) {
      table.lengths.emplace(key, r);
      sphere.push_back(*e);
    }
    table.spheres.push_back(std::move(sphere));
  }
  return table;
}

void write_growth(std::ostream& os, const BallTable& table) {
  os << "radius,count\n";
  for (const auto& [r, count] : table.growth()) os << r << ',' << count << '\n';
}

// ---------------------------------------------------------------------------

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

std::size_t MetricReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [v](const MetricRow& r) { return r.verdict == v; }));
}

namespace {

std::string length_field(const MetricRow& r) {
  if (r.len_exact) return std::to_string(*r.len_exact);
  std::string s = ">=" + std::to_string(r.len_low);
  if (r.len_high) s += ";<=" + std::to_string(*r.len_high);
  return s;
}

Verdict decide(bool holds_for_sure, bool fails_for_sure) {
  if (holds_for_sure) return Verdict::Pass;
  if (fails_for_sure) return Verdict::Fail;
  return Verdict::Undecided;
}

Verdict both(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Undecided || b == Verdict::Undecided) return Verdict::Undecided;
  return Verdict::Pass;
}

long long ceil_third(std::size_t v) { return static_cast<long long>((v + 2) / 3); }

}  // namespace

void MetricReport::write_csv(std::ostream& os) const {
  os << csv_header() << '\n';
  for (const auto& r : rows) {
    os << r.element_key << ',' << r.n << ',' << r.n_sigma << ',' << r.d_n << ','
       << length_field(r) << ',';
    if (r.len_upper) os << *r.len_upper;
    os << ',' << rational_to_string(r.lb) << ',' << rational_to_string(r.ub) << ','
       << verdict_name(r.verdict) << '\n';
  }
}

std::string MetricReport::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["n"] = n;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["element_key"] = r.element_key;
    row["n"] = r.n;
    row["N_sigma"] = r.n_sigma;
    row["D_n"] = r.d_n;
    if (r.len_exact) {
      row["len_exact"] = *r.len_exact;
    } else {
      row["len_exact"] = nullptr;
      row["len_low"] = r.len_low;
      if (r.len_high) row["len_high"] = *r.len_high;
    }
    if (r.len_upper) {
      row["len_upper"] = *r.len_upper;
    } else {
      row["len_upper"] = nullptr;
    }
    row["lb"] = rational_to_string(r.lb);
    row["ub"] = rational_to_string(r.ub);
    row["pass"] = verdict_name(r.verdict);
    row["status"] = r.status;
    for (const auto& [k, v] : r.extra) row[k] = v;
    j["rows"].push_back(row);
  }
  j["notes"] = notes;
  j["summary"] = {{"rows", rows.size()},
                  {"pass", count(Verdict::Pass)},
                  {"fail", count(Verdict::Fail)},
                  {"undecided", count(Verdict::Undecided)}};
  return j.dump(2);
}

// ---------------------------------------------------------------------------

MetricReport check_length_bounds(int n, int radius, std::size_t cap) {
  return check_length_bounds(bfs_ball(n, GeneratingSet::sigma(n), radius, cap), cap);
}

MetricReport check_length_bounds(const BallTable& ball, std::size_t) {
  const int n = ball.n;
  MetricReport rep;
  rep.kind = "bounds";
  rep.n = n;
  for (const auto& sphere : ball.spheres) {
    for (const auto& e : sphere) {
      MetricRow row;
      row.element_key = e.to_string();
      row.n = n;
      row.n_sigma = e.caret_count();
      const PcqFactorization f = pcq_factorize(e);
      row.d_n = d_n(f);
      const long long len = *ball.length(e);
      row.len_exact = len;
      row.len_low = len;
      row.len_high = len;
      const std::size_t upper = word_length_upper(e).length;
      row.len_upper = upper;
      row.lb = Rational(static_cast<long long>(row.n_sigma), 3);
      row.ub = 15LL * (n - 1) * static_cast<long long>(row.n_sigma) + 3LL * n;
      const bool bounds = row.lb <= len && Rational(len) <= row.ub;
      const bool chain = len <= static_cast<long long>(upper) &&
                         static_cast<long long>(upper) <= 3 * row.d_n;
      const bool averaging = 5LL * (n - 1) * static_cast<long long>(row.n_sigma) >= row.d_n - n;
      row.extra = {{"three_D_n", std::to_string(3 * row.d_n)},
                   {"bounds", bounds ? "holds" : "fails"},
                   {"constructive_chain", chain ? "holds" : "fails"},
                   {"averaging", averaging ? "holds" : "fails"},
                   {"pcq", f.to_string()}};
      row.verdict = bounds && chain && averaging ? Verdict::Pass : Verdict::Fail;
      rep.rows.push_back(std::move(row));
    }
  }
  rep.notes.push_back("ball radius " + std::to_string(ball.radius) + ", " +
                      std::to_string(ball.size()) + " elements");
  return rep;
}

// ---------------------------------------------------------------------------

MetricReport fn_vs_tn_report(int n, int radius, std::size_t cap, int f_radius_limit) {
  return fn_vs_tn_report(bfs_ball(n, GeneratingSet::sigma(n), radius, cap), cap, f_radius_limit);
}

MetricReport fn_vs_tn_report(const BallTable& ball, std::size_t cap, int f_radius_limit) {
  const int n = ball.n;
  MetricReport rep;
  rep.kind = "fn_vs_tn";
  rep.n = n;
  std::vector<Element> targets;
  for (const auto& sphere : ball.spheres) {
    for (const auto& e : sphere) {
      if (is_in_F(e)) targets.push_back(e);
    }
  }
  BallSearch f_search(GeneratingSet::sigma_n(n), cap);
  const bool complete = f_search.grow_until_found(targets, f_radius_limit);
  const long long m = n - 1;
  for (const auto& e : targets) {
    MetricRow row;
    row.element_key = e.to_string();
    row.n = n;
    row.n_sigma = e.caret_count();
    const PcqFactorization f = pcq_factorize(e);
    row.d_n = d_n(f);
    const long long len_t = *ball.length(e);
    row.len_exact = len_t;
    row.len_low = len_t;
    row.len_high = len_t;
    row.len_upper = word_length_upper(e).length;
    // Σ_n-word from the normal form; an upper bound for |w|_{Σ_n}.
    Word pq = f.p;
    pq.insert(pq.end(), f.q.begin(), f.q.end());
    const long long f_constructive = static_cast<long long>(to_sigma(pq, n).size());
    long long f_low, f_high;
    const auto fb = f_search.bracket(e);
    f_low = fb.low;
    f_high = fb.high ? std::min<long long>(*fb.high, f_constructive) : f_constructive;
    if (f_low != f_high) row.status = "bracketed";
    row.lb = Rational(f_high, 36 * m);
    row.ub = 45 * m * m * f_low - 1;
    const Verdict lower = decide(Rational(f_high, 36 * m) <= len_t, Rational(f_low, 36 * m) > len_t);
    const Verdict upper = decide(len_t <= 45 * m * m * f_low - 1, len_t > 45 * m * m * f_high - 1);
    row.verdict = both(lower, upper);
    const bool same_norm = evaluate_word(to_sigma(pq, n), n).caret_count() == row.n_sigma;
    row.extra = {{"len_F", f_low == f_high ? std::to_string(f_low)
                                           : std::to_string(f_low) + ".." + std::to_string(f_high)},
                 {"len_F_constructive", std::to_string(f_constructive)},
                 {"lower_inequality", verdict_name(lower)},
                 {"upper_inequality", verdict_name(upper)},
                 {"upper_margin", f_low == f_high ? std::to_string(45 * m * m * f_low - 1 - len_t) : ""},
                 {"N_F_equals_N_T", same_norm ? "yes" : "no"}};
    rep.rows.push_back(std::move(row));
  }
  rep.notes.push_back("T ball radius " + std::to_string(ball.radius) + ", F search radius " +
                      std::to_string(f_search.radius()) + ", " + std::to_string(f_search.size()) +
                      " F states" + (complete ? "" : ", incomplete"));
  return rep;
}

// ---------------------------------------------------------------------------

MetricReport distortion_report(int n, const std::vector<Element>& sample, const DistortionOptions& opt) {
  const EmbeddingSpec spec = EmbeddingSpec::make(n, 2);
  const BallTable ball = bfs_ball(n, GeneratingSet::sigma(n), opt.tn_radius, opt.cap);
  std::vector<Element> images;
  for (const auto& e : sample) images.push_back(phi(e, spec));
  BallSearch t2(GeneratingSet::sigma(2), opt.cap);
  t2.grow_until_found(images, opt.t2_radius);

  MetricReport rep;
  rep.kind = "distortion";
  rep.n = n;
  const long long m = n - 1;
  const Rational lin_lo(m, 45);
  const Rational shift(m * (n + 3), 15);
  std::size_t caret_discrepancies = 0;
  for (std::size_t s = 0; s < sample.size(); ++s) {
    const Element e = reduce(sample[s]);
    const Element& img = images[s];
    MetricRow row;
    row.element_key = e.to_string();
    row.n = n;
    row.n_sigma = e.caret_count();
    row.d_n = d_n(pcq_factorize(e));
    row.len_upper = word_length_upper(img).length;

    long long a_lo, a_hi;
    bool exact = true;
    if (auto a = ball.length(e)) {
      a_lo = a_hi = *a;
    } else {
      exact = false;
      a_lo = std::max<long long>(ball.radius + 1, ceil_third(row.n_sigma));
      a_hi = std::min<long long>(static_cast<long long>(word_length_upper(e).length),
                                 15 * m * static_cast<long long>(row.n_sigma) + 3 * n);
    }
    long long b_lo, b_hi;
    const std::size_t img_carets = img.caret_count();
    if (const auto b = t2.bracket(img, opt.local_cap); b.exact()) {
      b_lo = b_hi = b.low;
      row.len_exact = b.low;
    } else {
      exact = false;
      b_lo = std::max<long long>(b.low, ceil_third(img_carets));
      b_hi = std::min<long long>(static_cast<long long>(*row.len_upper),
                                 15 * static_cast<long long>(img_carets) + 6);
      if (b.high) b_hi = std::min<long long>(b_hi, *b.high);
    }
    row.len_low = b_lo;
    row.len_high = b_hi;
    row.status = exact ? "exact" : "bracketed";
    row.lb = lin_lo * a_hi - shift;
    row.ub = 45 * m * a_lo + 15;
    const Verdict lower = decide(lin_lo * a_hi - shift <= b_lo, lin_lo * a_lo - shift > b_hi);
    const Verdict upper = decide(b_hi <= 45 * m * a_lo + 15, b_lo > 45 * m * a_hi + 15);
    row.verdict = both(lower, upper);

    const std::size_t unreduced = phi_unreduced(e, spec).caret_count();
    const bool caret_relation = static_cast<std::size_t>(m) * row.n_sigma == img_carets;
    if (!caret_relation) ++caret_discrepancies;
    row.extra = {{"len_T_n", a_lo == a_hi ? std::to_string(a_lo)
                                          : std::to_string(a_lo) + ".." + std::to_string(a_hi)},
                 {"image_key", img.to_string()},
                 {"N_image", std::to_string(img_carets)},
                 {"N_image_unreduced", std::to_string(unreduced)},
                 {"caret_relation", caret_relation ? "holds" : "differs"}};
    rep.rows.push_back(std::move(row));
  }
  rep.notes.push_back("T_" + std::to_string(n) + " ball radius " + std::to_string(ball.radius) +
                      ", T_2 search radius " + std::to_string(t2.radius()));
  rep.notes.push_back("caret relation discrepancies after reduction: " +
                      std::to_string(caret_discrepancies));
  return rep;
}

GeneratorSubsetReport generator_subset_report(int n, int radius, std::size_t cap) {
  GeneratorSubsetReport rep;
  rep.n = n;
  rep.radius = radius;
  GeneratingSet small{n, false, n - 1};
  BallSearch s(small, cap), full(GeneratingSet::sigma_n(n), cap);
  while (s.radius() < radius) s.grow();
  while (full.radius() < radius) full.grow();
  rep.small_ball = s.size();
  rep.full_ball = full.size();
  rep.last_letter_reached = s.length(x(n - 1, n)).has_value();
  return rep;
}

}  // namespace thompson
