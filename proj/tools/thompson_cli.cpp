#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thompson/embed.hpp"
#include "thompson/errors.hpp"
#include "thompson/generators.hpp"
#include "thompson/metrics.hpp"
#include "thompson/plmap.hpp"
#include "thompson/random.hpp"
#include "thompson/words.hpp"

using namespace thompson;

namespace {

struct Options {
  int n = 2;
  int radius = 4;
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultStateCap;
  int from = 3;
  int to = 2;
  std::string csv;
  std::string json;
  std::string elem;
  std::vector<std::string> args;
  int k = -1;
  int l = -1;
  int k_max = 8;
  int bound = 8;
  int count = 200;
  int max_carets = 6;
  int tn_radius = 4;
  int t2_radius = 10;
  bool fn = false;
  bool scan = false;
};

std::vector<Element> elements(const Options& o, std::size_t expected) {
  std::vector<std::string> texts = o.args;
  if (!o.elem.empty()) texts.insert(texts.begin(), o.elem);
  if (texts.size() != expected) {
    throw CLI::ValidationError("expected " + std::to_string(expected) + " element literal(s), got " +
                               std::to_string(texts.size()));
  }
  std::vector<Element> out;
  for (const auto& t : texts) {
    try {
      out.push_back(parse_element_literal(t, o.n));
    } catch (const ParseError& e) {
      throw ParseError("in '" + t + "': " + e.reason(), e.position());
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << body;
}

int emit(const MetricReport& rep, const Options& o) {
  if (!o.csv.empty()) {
    std::ofstream f(o.csv);
    if (!f) throw std::runtime_error("cannot write " + o.csv);
    rep.write_csv(f);
  }
  if (!o.json.empty()) write_file(o.json, rep.to_json() + "\n");
  if (o.csv.empty() && o.json.empty()) rep.write_csv(std::cout);
  std::cerr << rep.kind << " n=" << rep.n << ": " << rep.rows.size() << " rows, "
            << rep.count(Verdict::Pass) << " pass, " << rep.count(Verdict::Fail) << " fail, "
            << rep.count(Verdict::Undecided) << " undecided\n";
  for (const auto& note : rep.notes) std::cerr << "  " << note << "\n";
  return rep.none_failed() ? 0 : 1;
}

int run(const std::string& verb, const Options& o) {
  if (verb == "eval" || verb == "reduce") {
    std::cout << format_element(elements(o, 1)[0]) << "\n";
    return 0;
  }
  if (verb == "mul") {
    auto es = elements(o, 2);
    std::cout << format_element(multiply(es[0], es[1])) << "\n";
    return 0;
  }
  if (verb == "inv") {
    std::cout << format_element(inverse(elements(o, 1)[0])) << "\n";
    return 0;
  }
  if (verb == "order") {
    auto m = order(elements(o, 1)[0]);
    if (m) {
      std::cout << *m << "\n";
    } else {
      std::cout << "infinite\n";
    }
    return 0;
  }
  if (verb == "plmap") {
    std::cout << from_element(elements(o, 1)[0]).to_string() << "\n";
    return 0;
  }
  if (verb == "factorize") {
    const Element e = elements(o, 1)[0];
    const PcqFactorization f = pcq_factorize(e);
    std::cout << f.to_string() << "\n";
    std::cerr << "D_n=" << d_n(f) << " N=" << caret_norm(e)
              << " upper=" << word_length_upper(e).length << "\n";
    return f.satisfies_invariants() ? 0 : 1;
  }
  if (verb == "pump") {
    if (o.k >= 0 && o.l >= 0) {
      int status = 0;
      if (o.k >= 1 && o.l <= o.k * (o.n - 1)) {
        try {
          const PumpIdentity id = pump_step(o.k, o.l, o.n);
          std::cout << word_to_string(id.lhs) << " = " << word_to_string(id.rhs) << "\n"
                    << word_to_string(id.inverse_lhs) << " = " << word_to_string(id.inverse_rhs)
                    << "\n";
        } catch (const IdentityMismatch& e) {
          std::cerr << e.what() << "\n";
          status = 1;
        }
      }
      const Word w = pump_reduce(o.k, o.l, o.n);
      std::cout << word_to_string(w) << "\n";
      std::cerr << "length " << w.size() << ", bound 3k+n = " << 3 * o.k + o.n << "\n";
      if (static_cast<int>(w.size()) >= 3 * o.k + o.n) status = 1;
      return status;
    }
    const PumpBoundReport rep = pump_bound_report(o.k_max, o.n);
    std::cout << "n=" << rep.n << " k<=" << rep.k_max << " instances=" << rep.instances
              << " verified=" << rep.verified << " beyond_short_bound=" << rep.beyond_short_bound
              << " bound=" << (rep.matches_order_of_previous() ? "l<=k(n-1)" : "l<=(k-1)(n-1)")
              << "\n";
    return rep.verified == rep.instances ? 0 : 1;
  }
  if (verb == "embed") {
    const EmbeddingSpec spec = EmbeddingSpec::make(o.from, o.to);
    if (o.scan) {
      Rng rng(o.seed);
      const InjectivityReport rep =
          injectivity_scan(spec, rng, static_cast<std::size_t>(o.count),
                           static_cast<std::size_t>(o.max_carets));
      std::cout << "samples=" << rep.samples << " identity_images=" << rep.identity_images
                << " collisions=" << rep.collisions
                << " homomorphism_failures=" << rep.homomorphism_failures
                << " order_mismatches=" << rep.order_mismatches << "/" << rep.order_checks
                << " caret_discrepancies=" << rep.caret_discrepancies << "\n";
      for (const auto& ex : rep.examples) std::cerr << "  " << ex << "\n";
      return rep.passed() ? 0 : 1;
    }
    Options src = o;
    src.n = o.from;
    std::cout << format_element(phi(elements(src, 1)[0], spec)) << "\n";
    return 0;
  }
  if (verb == "relations") {
    const RelationReport rep = relation_suite(o.n, o.bound);
    for (const auto& c : rep.checks) {
      std::cout << (c.passed ? "pass " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << "  " << c.detail;
      std::cout << "\n";
    }
    for (const auto& d : rep.diagnostics) {
      std::cerr << "  note: " << (d.passed ? "holds " : "fails ") << d.name;
      if (!d.detail.empty()) std::cerr << "  " << d.detail;
      std::cerr << "\n";
    }
    for (const auto& a : rep.shapes) {
      std::cerr << "  shape " << shape_name(a.shape) << ": A,B match " << (a.matches_A_B ? "yes" : "no")
                << ", infinite relations " << (a.infinite_relations ? "hold" : "fail") << "\n";
    }
    return rep.all_passed() ? 0 : 1;
  }
  if (verb == "ball") {
    const BallTable table = bfs_ball(o.n, GeneratingSet::sigma(o.n), o.radius, o.cap);
    if (!o.csv.empty()) {
      std::ofstream f(o.csv);
      f << "element_key,length\n";
      for (const auto& [key, len] : table.lengths) f << key << ',' << len << '\n';
    }
    write_growth(std::cout, table);
    std::cerr << table.size() << " elements within radius " << table.radius << "\n";
    return 0;
  }
  if (verb == "bounds") {
    if (o.fn) return emit(fn_vs_tn_report(o.n, o.radius, o.cap), o);
    return emit(check_length_bounds(o.n, o.radius, o.cap), o);
  }
  if (verb == "distortion") {
    Rng rng(o.seed);
    std::vector<Element> sample;
    for (int s = 0; s < o.count; ++s) {
      sample.push_back(random_element(o.n, static_cast<std::size_t>(o.max_carets), rng));
    }
    DistortionOptions opt;
    opt.tn_radius = o.tn_radius;
    opt.t2_radius = o.t2_radius;
    opt.cap = o.cap;
    return emit(distortion_report(o.n, sample, opt), o);
  }
  if (verb == "census") {
    const TorsionCensus c = torsion_census(o.n, o.radius, o.cap);
    std::cout << "order,count,witness\n";
    for (const auto& [m, count] : c.orders) {
      std::cout << m << ',' << count << ',' << c.witness.at(m) << '\n';
    }
    std::cerr << c.torsion_count << " torsion elements among " << c.ball_size << ", "
              << c.non_divisor_orders.size() << " orders outside l(n-1)+1 divisors, "
              << c.order_n_minus_1 << " of order n-1\n";
    return c.passed() ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree pair calculus for the groups F_n and T_n"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "arity")->check(CLI::Range(2, 64));
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--cap", o.cap, "state cap for ball searches");
  };
  auto elem_args = [&](CLI::App* sub) {
    sub->add_option("--elem", o.elem, "element literal");
    sub->add_option("elements", o.args, "element literals");
  };
  auto outputs = [&](CLI::App* sub) {
    sub->add_option("--csv", o.csv, "write CSV to this path");
    sub->add_option("--json", o.json, "write JSON to this path");
  };
  auto radius = [&](CLI::App* sub) { sub->add_option("--radius", o.radius, "ball radius")->check(CLI::NonNegativeNumber); };

  for (const char* verb : {"eval", "reduce", "mul", "inv", "order", "plmap", "factorize"}) {
    auto* sub = app.add_subcommand(verb);
    common(sub);
    elem_args(sub);
  }
  app.get_subcommand("eval")->description("canonical form of an element");
  app.get_subcommand("reduce")->description("reduced tree pair");
  app.get_subcommand("mul")->description("product, left factor applied first");
  app.get_subcommand("inv")->description("inverse");
  app.get_subcommand("order")->description("order, or 'infinite'");
  app.get_subcommand("plmap")->description("circle map breakpoints");
  app.get_subcommand("factorize")->description("pcq normal form");

  auto* pump = app.add_subcommand("pump", "pumping identities and torsion rewriting");
  common(pump);
  pump->add_option("--k", o.k);
  pump->add_option("--l", o.l);
  pump->add_option("--k-max", o.k_max);

  auto* embed = app.add_subcommand("embed", "caret replacement embedding");
  common(embed);
  elem_args(embed);
  embed->add_option("--from", o.from, "source arity");
  embed->add_option("--to", o.to, "target arity");
  embed->add_flag("--scan", o.scan, "sample injectivity and homomorphism checks");
  embed->add_option("--count", o.count);
  embed->add_option("--max-carets", o.max_carets);

  auto* rel = app.add_subcommand("relations", "relator and generator checks");
  common(rel);
  rel->add_option("--bound", o.bound, "largest generator index");

  auto* ball = app.add_subcommand("ball", "Cayley ball growth series");
  common(ball);
  radius(ball);
  ball->add_option("--csv", o.csv, "write key,length table");

  auto* bounds = app.add_subcommand("bounds", "word length inequalities over a ball");
  common(bounds);
  radius(bounds);
  outputs(bounds);
  bounds->add_flag("--fn", o.fn, "compare against the F_n ball instead");

  auto* dist = app.add_subcommand("distortion", "embedding distortion on random samples");
  common(dist);
  outputs(dist);
  dist->add_option("--count", o.count);
  dist->add_option("--max-carets", o.max_carets);
  dist->add_option("--tn-radius", o.tn_radius);
  dist->add_option("--t2-radius", o.t2_radius);

  auto* census = app.add_subcommand("census", "torsion orders in a ball");
  common(census);
  radius(census);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    return run(verb, o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
