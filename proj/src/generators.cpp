#include "thompson/generators.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "thompson/errors.hpp"
#include "thompson/plmap.hpp"

namespace thompson {

namespace {

Element right_spine(int i, int n) {
  const int gamma = i / (n - 1);
  return Element(expand_at(all_right(gamma + 1, n), i), all_right(gamma + 2, n), 0);
}

Element shaped_x(int i, int n, GeneratorShape shape) {
  int base = i;
  int conjugations = 0;
  while (base > n - 1) {
    base -= n - 1;
    ++conjugations;
  }
  Element e = base_generator(base, n, shape);
  if (conjugations) {
    const Element x0 = base_generator(0, n, shape);
    const Element x0_inv = inverse(x0);
    for (int k = 0; k < conjugations; ++k) e = multiply(multiply(x0_inv, e), x0);
  }
  return e;
}

bool infinite_relations_hold(int n, int bound, GeneratorShape shape) {
  std::vector<Element> xs;
  for (int i = 0; i <= bound + n - 1; ++i) xs.push_back(shaped_x(i, n, shape));
  for (int i = 0; i < bound; ++i) {
    for (int j = i + 1; j <= bound; ++j) {
      Element lhs = multiply(multiply(inverse(xs[i]), xs[j]), xs[i]);
      if (lhs != xs[j + n - 1]) return false;
    }
  }
  return true;
}

// Generator maps of F as displayed PL formulas.
PLMap map_A() { return PLMap::parse("0/1:0/1; 1/2:1/4; 3/4:1/2", 2); }
PLMap map_B() { return PLMap::parse("0/1:0/1; 1/2:1/2; 3/4:5/8; 7/8:3/4", 2); }

// Words over A, B, C: upper case is the letter, lower case its inverse.
std::string inv(const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& ch : out) ch = std::isupper(ch) ? std::tolower(ch) : std::toupper(ch);
  return out;
}

std::string comm(const std::string& u, const std::string& v) { return u + v + inv(u) + inv(v); }

// Relator words are compositions of maps, so the rightmost letter acts first.
Element eval_abc(const std::string& w, const Element& A, const Element& B, const Element& C) {
  Element acc = identity(A.arity());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const char ch = *it;
    const Element& g = std::toupper(ch) == 'A' ? A : std::toupper(ch) == 'B' ? B : C;
    acc = multiply(acc, std::isupper(ch) ? g : inverse(g));
  }
  return acc;
}

std::vector<std::pair<std::string, std::string>> f_relator_words() {
  return {{"[AB^-1, A^-1BA]", comm("Ab", "aBA")}, {"[AB^-1, A^-2BA^2]", comm("Ab", "aaBAA")}};
}

std::vector<std::pair<std::string, std::string>> t_relator_words(TRelatorForm form) {
  auto words = f_relator_words();
  words.push_back({"C^-1B(A^-1CB)", "cB" "aCB"});
  if (form == TRelatorForm::AsPrinted) {
    words.push_back({"((A^-1CB)(A^-1BA))^-1B(A^-2CB^-2)", inv("aCB" "aBA") + "B" + "aaCbb"});
  } else {
    words.push_back({"((A^-1CB)(A^-1BA))^-1B(A^-2CB^2)", inv("aCB" "aBA") + "B" + "aaCBB"});
  }
  words.push_back({"(CA)^-1(A^-1CB)^2", inv("CA") + "aCB" "aCB"});
  words.push_back({"C^3", "CCC"});
  return words;
}

std::vector<RelatorCheck> check_words(const std::vector<std::pair<std::string, std::string>>& ws,
                                      const Element& A, const Element& B, const Element& C) {
  std::vector<RelatorCheck> out;
  for (const auto& [name, w] : ws) {
    Element value = eval_abc(w, A, B, C);
    out.push_back({name, value.is_identity(), value.is_identity() ? "" : value.to_string()});
  }
  return out;
}

}  // namespace

std::string word_to_string(const Word& w) {
  std::string out;
  for (const auto& g : w) {
    if (!out.empty()) out.push_back(' ');
    char ch = g.kind == GenLetter::Kind::X ? 'x' : 'c';
    out.push_back(g.sign > 0 ? ch : static_cast<char>(std::toupper(ch)));
    out += std::to_string(g.index);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    const char ch = text[pos++];
    GenLetter g;
    switch (ch) {
      case 'x': g = x_letter(0, 1); break;
      case 'X': g = x_letter(0, -1); break;
      case 'c': g = c_letter(0, 1); break;
      case 'C': g = c_letter(0, -1); break;
      default: throw ParseError(std::string("unknown letter '") + ch + "'", start);
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("letter without index", pos);
    }
    int index = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + (text[pos++] - '0');
      if (index > 1000000) throw ParseError("letter index too large", start);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected whitespace between letters", pos);
    }
    g.index = index;
    w.push_back(g);
  }
  return w;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& g : w) {
    if (!out.empty() && out.back() == g.inverse()) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return out;
}

Element base_generator(int i, int n, GeneratorShape shape) {
  Arity{n};
  if (i < 0 || i > n - 1) throw std::out_of_range("base generator index out of range");
  const bool two_caret = shape == GeneratorShape::TwoCaret || shape == GeneratorShape::TwoCaretSwapped;
  if (two_caret && i <= n - 2) {
    const NTree root = all_right(1, n);
    if (shape == GeneratorShape::TwoCaret) return Element(expand_at(root, i + 1), expand_at(root, i), 0);
    return Element(expand_at(root, i), expand_at(root, i + 1), 0);
  }
  if (shape == GeneratorShape::RightSpineSwapped) return inverse(right_spine(i, n));
  return right_spine(i, n);
}

std::string shape_name(GeneratorShape shape) {
  switch (shape) {
    case GeneratorShape::RightSpine: return "right-spine";
    case GeneratorShape::RightSpineSwapped: return "right-spine-swapped";
    case GeneratorShape::TwoCaret: return "two-caret";
    case GeneratorShape::TwoCaretSwapped: return "two-caret-swapped";
  }
  return "?";
}

Element x(int i, int n) {
  if (i < 0) throw std::out_of_range("x: negative index");
  return shaped_x(i, n, GeneratorShape::RightSpine);
}

Element c(int j, int n) {
  if (j < 0) throw std::out_of_range("c: negative index");
  const NTree spine = all_right(static_cast<std::size_t>(j) + 1, n);
  return Element(spine, spine, spine.leaf_count() - 1);
}

Element letter_element(const GenLetter& g, int n) {
  Element e = g.kind == GenLetter::Kind::X ? x(g.index, n) : c(g.index, n);
  return g.sign > 0 ? e : inverse(e);
}

Element evaluate_word(const Word& w, int n) {
  Element acc = identity(n);
  std::map<std::pair<int, int>, Element> cache;
  for (const auto& g : w) {
    auto key = std::make_pair(g.kind == GenLetter::Kind::X ? g.index : -1 - g.index, g.sign);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, letter_element(g, n)).first;
    acc = multiply(acc, it->second);
  }
  return acc;
}

Element commutator(const Element& a, const Element& b) {
  return multiply(multiply(multiply(a, b), inverse(a)), inverse(b));
}

std::vector<RelatorCheck> f_relators(const Element& A, const Element& B) {
  return check_words(f_relator_words(), A, B, A);
}

std::vector<RelatorCheck> t_relators(const Element& A, const Element& B, const Element& C,
                                     TRelatorForm form) {
  return check_words(t_relator_words(form), A, B, C);
}

bool RelationReport::all_passed() const {
  for (const auto& ch : checks) {
    if (!ch.passed) return false;
  }
  return true;
}

RelationReport relation_suite(int n, int bound) {
  if (bound < n) throw std::domain_error("relation_suite: bound must be at least n");
  RelationReport report;
  report.n = n;
  report.bound = bound;

  std::vector<Element> xs;
  for (int i = 0; i <= bound + n - 1; ++i) xs.push_back(x(i, n));
  for (int i = 0; i < bound; ++i) {
    for (int j = i + 1; j <= bound; ++j) {
      Element lhs = multiply(multiply(inverse(xs[i]), xs[j]), xs[i]);
      bool ok = lhs == xs[j + n - 1];
      report.checks.push_back({"x" + std::to_string(i) + "^-1 x" + std::to_string(j) + " x" +
                                   std::to_string(i) + " = x" + std::to_string(j + n - 1),
                               ok, ok ? "" : lhs.to_string()});
    }
  }

  for (GeneratorShape shape : {GeneratorShape::RightSpine, GeneratorShape::RightSpineSwapped,
                               GeneratorShape::TwoCaret, GeneratorShape::TwoCaretSwapped}) {
    ShapeAudit audit{shape};
    if (n == 2) {
      audit.matches_A_B = from_element(base_generator(0, 2, shape)) == invert(map_A()) &&
                          from_element(base_generator(1, 2, shape)) == invert(map_B());
    }
    audit.infinite_relations = infinite_relations_hold(n, std::min(bound, n + 2), shape);
    report.shapes.push_back(audit);
  }

  if (n == 2) {
    const Element A = inverse(xs[0]);
    const Element B = inverse(xs[1]);
    for (auto& ch : f_relators(A, B)) report.checks.push_back(ch);

    // C is searched: the displayed order-2 rotation cannot satisfy C^3.
    std::vector<std::pair<std::string, Element>> candidates;
    std::vector<Word> tails = {{}};
    const Word letters = {x_letter(0), x_letter(0, -1), x_letter(1), x_letter(1, -1)};
    for (const auto& a : letters) tails.push_back({a});
    for (const auto& a : letters) {
      for (const auto& b : letters) {
        if (!(b == a.inverse())) tails.push_back({a, b});
      }
    }
    const std::vector<std::pair<std::string, Element>> bases = {
        {"c1", c(1, 2)}, {"C1", inverse(c(1, 2))}, {"c0", c(0, 2)}};
    for (const auto& [name, base] : bases) {
      for (const auto& tail : tails) {
        const Element t = evaluate_word(tail, 2);
        const std::string ts = word_to_string(tail);
        if (tail.empty()) {
          candidates.push_back({name, base});
          continue;
        }
        candidates.push_back({name + " " + ts, multiply(base, t)});
        candidates.push_back({ts + " " + name, multiply(t, base)});
      }
    }
    auto search = [&](TRelatorForm form) -> std::optional<std::pair<std::string, Element>> {
      for (const auto& cand : candidates) {
        bool ok = true;
        for (const auto& r : t_relators(A, B, cand.second, form)) ok = ok && r.passed;
        if (ok) return cand;
      }
      return std::nullopt;
    };
    if (auto found = search(TRelatorForm::AsPrinted)) {
      report.t_presentation_assignment = found->first;
      for (auto& r : t_relators(A, B, found->second, TRelatorForm::AsPrinted)) {
        r.name = "T: " + r.name + " with C = " + found->first;
        report.checks.push_back(r);
      }
    } else {
      report.diagnostics.push_back({"T relators as printed", false, "no assignment found"});
      if (auto fixed = search(TRelatorForm::Corrected)) {
        report.t_corrected_assignment = fixed->first;
        for (auto& r : t_relators(A, B, fixed->second, TRelatorForm::Corrected)) {
          r.name = "T (corrected): " + r.name + " with C = " + fixed->first;
          report.checks.push_back(r);
        }
      } else {
        report.checks.push_back({"T presentation", false, "no assignment found"});
      }
    }
  }
  return report;
}

}  // namespace thompson
