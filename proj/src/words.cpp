#include "thompson/words.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "thompson/errors.hpp"

namespace thompson {

namespace {

Word repeat(const GenLetter& g, int times) { return Word(static_cast<std::size_t>(times), g); }

void append(Word& out, const Word& w) { out.insert(out.end(), w.begin(), w.end()); }

std::vector<std::pair<int, int>> blocks(const Word& w) {
  std::vector<std::pair<int, int>> out;
  for (const auto& g : w) {
    if (!out.empty() && out.back().first == g.index) {
      ++out.back().second;
    } else {
      out.push_back({g.index, 1});
    }
  }
  return out;
}

void collect_off_spine(const std::string& code, std::size_t& pos, int n, bool on_spine,
                       std::size_t& leaves, Word& out) {
  if (code[pos++] == '0') {
    ++leaves;
    return;
  }
  if (!on_spine) out.push_back(x_letter(static_cast<int>(leaves)));
  for (int c = 0; c < n; ++c) collect_off_spine(code, pos, n, on_spine && c == n - 1, leaves, out);
}

void require_equal(const Element& got, const Element& want, const std::string& what) {
  if (got != want) {
    throw IdentityMismatch(what + ": word evaluates to " + got.to_string() + ", expected " +
                           want.to_string());
  }
}

}  // namespace

std::vector<GenLetter> GeneratingSet::letters() const {
  std::vector<GenLetter> candidates;
  for (int i = 0; i < x_count; ++i) {
    candidates.push_back(x_letter(i));
    candidates.push_back(x_letter(i, -1));
  }
  if (with_torsion) {
    candidates.push_back(c_letter(0));
    candidates.push_back(c_letter(0, -1));
  }
  std::vector<GenLetter> out;
  std::set<std::string> seen;
  for (const auto& g : candidates) {
    if (seen.insert(letter_element(g, n).compact_key()).second) out.push_back(g);
  }
  return out;
}

std::vector<std::pair<int, int>> PcqFactorization::p_blocks() const { return blocks(p); }

std::vector<std::pair<int, int>> PcqFactorization::q_blocks() const {
  auto b = blocks(q);
  std::reverse(b.begin(), b.end());
  return b;
}

Word PcqFactorization::word() const {
  Word w = p;
  append(w, repeat(c_letter(k), ell));
  append(w, q);
  return w;
}

bool PcqFactorization::satisfies_invariants() const {
  for (const auto& g : p) {
    if (g.kind != GenLetter::Kind::X || g.sign != 1) return false;
  }
  for (const auto& g : q) {
    if (g.kind != GenLetter::Kind::X || g.sign != -1) return false;
  }
  auto strictly_increasing = [](const std::vector<std::pair<int, int>>& b) {
    for (std::size_t u = 1; u < b.size(); ++u) {
      if (b[u - 1].first >= b[u].first) return false;
    }
    return true;
  };
  const int ord = (k + 1) * (n - 1) + 1;
  return strictly_increasing(p_blocks()) && strictly_increasing(q_blocks()) && k >= 0 &&
         ell >= 0 && ell < ord;
}

std::string PcqFactorization::to_string() const {
  return word_to_string(p) + " | " + word_to_string(repeat(c_letter(k), ell)) + " | " +
         word_to_string(q) + " | k=" + std::to_string(k) + ", l=" + std::to_string(ell);
}

PcqFactorization PcqFactorization::parse(std::string_view text, int n) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  for (;;) {
    std::size_t bar = text.find('|', pos);
    fields.push_back(text.substr(pos, bar == std::string_view::npos ? text.npos : bar - pos));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  if (fields.size() != 4) throw ParseError("pcq form needs four '|'-separated fields", 0);
  PcqFactorization f;
  f.n = n;
  f.p = parse_word(fields[0]);
  f.q = parse_word(fields[2]);
  std::string tail(fields[3]);
  int k = -1, ell = -1;
  if (std::sscanf(tail.c_str(), " k=%d, l=%d", &k, &ell) != 2 || k < 0 || ell < 0) {
    throw ParseError("expected 'k=<k>, l=<l>'", text.size() - fields[3].size());
  }
  f.k = k;
  f.ell = ell;
  Word c_part = parse_word(fields[1]);
  if (c_part != repeat(c_letter(k), ell)) {
    throw ParseError("torsion field does not match k and l", fields[0].size() + 1);
  }
  return f;
}

Word positive_word_from_tree(const NTree& t) {
  Word w;
  std::size_t pos = 0, leaves = 0;
  collect_off_spine(t.code(), pos, t.arity(), true, leaves, w);
  std::stable_sort(w.begin(), w.end(),
                   [](const GenLetter& a, const GenLetter& b) { return a.index < b.index; });
  return w;
}

PcqFactorization pcq_factorize(const Element& e) {
  const Element r = reduce(e);
  const int n = r.arity();
  const std::size_t carets = r.caret_count();
  const std::size_t leaves = r.leaf_count();
  PcqFactorization f;
  f.n = n;
  f.p = positive_word_from_tree(r.source());
  f.q = inverse_word(positive_word_from_tree(r.target()));
  f.k = carets == 0 ? 0 : static_cast<int>(carets) - 1;
  // ell is the power of the same-caret-count rotation that matches the labelling.
  const Element torsion = c(f.k, n);
  for (std::size_t ell = 0; ell < leaves; ++ell) {
    if (carets == 0 || (ell * torsion.rotation()) % leaves == r.rotation()) {
      f.ell = static_cast<int>(ell);
      break;
    }
  }
  require_equal(evaluate_word(f.word(), n), r, "pcq_factorize(" + r.to_string() + ")");
  return f;
}

PumpIdentity pump_step(int k, int ell, int n) {
  Arity{n};
  if (k < 1 || ell < 1 || k * (n - 1) < ell) {
    throw std::domain_error("pump_step: need k >= 1 and 1 <= l <= k(n-1), got k=" +
                            std::to_string(k) + ", l=" + std::to_string(ell));
  }
  const int d = k * (n - 1) - ell;
  PumpIdentity id;
  id.lhs = repeat(c_letter(k), ell);
  id.rhs = repeat(c_letter(k - 1), ell);
  id.rhs.push_back(x_letter(d));
  id.inverse_lhs = repeat(c_letter(k, -1), ell);
  id.inverse_rhs = {x_letter(d, -1)};
  append(id.inverse_rhs, repeat(c_letter(k - 1, -1), ell));
  const std::string where =
      "(k=" + std::to_string(k) + ", l=" + std::to_string(ell) + ", n=" + std::to_string(n) + ")";
  if (evaluate_word(id.lhs, n) != evaluate_word(id.rhs, n)) {
    throw IdentityMismatch("pumping identity fails at " + where);
  }
  if (evaluate_word(id.inverse_lhs, n) != evaluate_word(id.inverse_rhs, n)) {
    throw IdentityMismatch("inverse pumping identity fails at " + where);
  }
  return id;
}

PumpBoundReport pump_bound_report(int k_max, int n) {
  PumpBoundReport rep;
  rep.n = n;
  rep.k_max = k_max;
  for (int k = 1; k <= k_max; ++k) {
    for (int ell = 1; ell <= k * (n - 1); ++ell) {
      ++rep.instances;
      try {
        pump_step(k, ell, n);
        ++rep.verified;
        if (ell >= (k - 1) * (n - 1) + 1) ++rep.beyond_short_bound;
      } catch (const IdentityMismatch&) {
      }
    }
  }
  return rep;
}

ConjugateForm conjugate_normalize(int alpha, int n) {
  Arity{n};
  if (alpha < 0) throw std::domain_error("conjugate_normalize: negative index");
  ConjugateForm f;
  // x_1 .. x_{n-1} and x_0 are letters of Σ; the recursion reaches them from above.
  f.gamma = alpha == 0 ? 0 : (alpha - 1) / (n - 1);
  f.delta = alpha - f.gamma * (n - 1);
  f.word = repeat(x_letter(0, -1), f.gamma);
  f.word.push_back(x_letter(f.delta));
  append(f.word, repeat(x_letter(0), f.gamma));
  require_equal(evaluate_word(f.word, n), x(alpha, n), "conjugate_normalize(" + std::to_string(alpha) + ")");
  return f;
}

Word to_sigma(const Word& w, int n) {
  Word out;
  for (const auto& g : w) {
    if (g.kind == GenLetter::Kind::C) {
      if (g.index != 0) throw std::domain_error("to_sigma: c_k with k > 0 is not a letter of Σ");
      out.push_back(g);
      continue;
    }
    const int gamma = g.index == 0 ? 0 : (g.index - 1) / (n - 1);
    const int delta = g.index - gamma * (n - 1);
    append(out, repeat(x_letter(0, -1), gamma));
    out.push_back(x_letter(delta, g.sign));
    append(out, repeat(x_letter(0), gamma));
  }
  return free_reduce(out);
}

Word pump_reduce(int k, int ell, int n) {
  Arity{n};
  const int ord = (k + 1) * (n - 1) + 1;
  if (k < 0 || ell <= 0 || ell >= ord) {
    throw std::domain_error("pump_reduce: need 0 < l < " + std::to_string(ord) + ", got l=" +
                            std::to_string(ell));
  }
  const int q = (ell - 1) / (n - 1);
  // c_k^l = c_q^l x_{(q+1)(n-1)-l} ... x_{k(n-1)-l}
  Word tail;
  for (int j = q + 1; j <= k; ++j) tail.push_back(x_letter(j * (n - 1) - ell));
  Word head;
  int c0_power = ell;  // c_q^l once the head is peeled, as a power of c_0
  if (q >= 1) {
    // c_q^l = (c_q^{-1})^{ord c_q - l}; peel with the inverse identity down to c_0.
    const int back = (q + 1) * (n - 1) + 1 - ell;
    for (int j = q; j >= 1; --j) head.push_back(x_letter(j * (n - 1) - back, -1));
    c0_power = n - back;
  }
  Word middle = c0_power <= n - c0_power ? repeat(c_letter(0), c0_power)
                                         : repeat(c_letter(0, -1), n - c0_power);
  Word w = head;
  append(w, middle);
  append(w, tail);
  Word sigma = to_sigma(w, n);
  require_equal(evaluate_word(sigma, n), power(c(k, n), ell),
                "pump_reduce(k=" + std::to_string(k) + ", l=" + std::to_string(ell) + ")");
  return sigma;
}

UpperBound word_length_upper(const Element& e) {
  const Element r = reduce(e);
  const int n = r.arity();
  const PcqFactorization f = pcq_factorize(r);
  Word w = to_sigma(f.p, n);
  if (f.ell > 0) append(w, pump_reduce(f.k, f.ell, n));
  append(w, to_sigma(f.q, n));
  w = free_reduce(w);
  require_equal(evaluate_word(w, n), r, "word_length_upper(" + r.to_string() + ")");
  return {w.size(), w};
}

Element parse_element_literal(std::string_view text, int n) {
  const auto first = text.find_first_not_of(' ');
  const auto last = text.find_last_not_of(' ');
  if (first == std::string_view::npos) return identity(n);
  const std::string_view body = text.substr(first, last - first + 1);
  if (body == "identity" || body == "1") return identity(n);
  if (body.find_first_of("(.@") != std::string_view::npos) {
    try {
      return Element::parse(body, n);
    } catch (const ParseError& e) {
      throw e.shifted(first);
    }
  }
  try {
    return evaluate_word(parse_word(body), n);
  } catch (const ParseError& e) {
    throw e.shifted(first);
  }
}

std::string format_element(const Element& e) {
  const Element r = reduce(e);
  return r.is_identity() ? "identity" : r.to_string();
}

}  // namespace thompson
