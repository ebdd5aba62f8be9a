#include "thompson/element.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

#include "thompson/errors.hpp"

namespace thompson {

namespace {

std::size_t leaves_before(const std::vector<NTree>& subs, std::size_t upto) {
  std::size_t total = 0;
  for (std::size_t j = 0; j < upto; ++j) total += subs[j].leaf_count();
  return total;
}

// Offsets (into the code) of every leaf, in leaf order.
std::vector<std::size_t> leaf_offsets(const std::string& code) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i] == '0') out.push_back(i);
  }
  return out;
}

bool block_is_caret(const std::string& code, const std::vector<std::size_t>& offsets,
                    std::size_t leaf, int n) {
  std::size_t off = offsets[leaf];
  if (off == 0 || code[off - 1] != '1') return false;
  for (int c = 1; c < n; ++c) {
    if (code[off + c] != '0') return false;
  }
  return true;
}

// Self-delimiting tree text starting at `pos`; returns one past its end.
std::size_t scan_tree(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("expected a tree", pos);
  if (text[pos] == '.') return pos + 1;
  if (text[pos] != '(') throw ParseError("expected '.' or '('", pos);
  int depth = 0;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth == 0) return i + 1;
  }
  throw ParseError("unbalanced parentheses", text.size());
}

}  // namespace

Element::Element(NTree source, NTree target, std::size_t rotation)
    : source_(std::move(source)), target_(std::move(target)), rotation_(rotation) {
  if (source_.arity() != target_.arity()) throw std::domain_error("tree pair of mixed arity");
  if (source_.caret_count() != target_.caret_count()) {
    throw std::domain_error("tree pair with different caret counts");
  }
  if (rotation_ >= source_.leaf_count()) {
    throw std::domain_error("rotation " + std::to_string(rotation_) + " out of range");
  }
}

std::string Element::to_string() const {
  return source_.to_string() + " " + target_.to_string() + " @" + std::to_string(rotation_);
}

Element Element::parse(std::string_view text, int arity) {
  std::size_t src_end = scan_tree(text, 0);
  if (src_end >= text.size() || text[src_end] != ' ') throw ParseError("expected ' '", src_end);
  std::size_t tgt_begin = src_end + 1;
  std::size_t tgt_end = scan_tree(text, tgt_begin);
  if (tgt_end + 1 >= text.size() || text.substr(tgt_end, 2) != " @") {
    throw ParseError("expected ' @<rotation>'", tgt_end);
  }
  std::size_t rot_begin = tgt_end + 2;
  std::size_t rotation = 0;
  auto [ptr, ec] = std::from_chars(text.data() + rot_begin, text.data() + text.size(), rotation);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad rotation", rot_begin);
  }
  NTree source = NTree::parse(text.substr(0, src_end), arity);
  NTree target = [&] {
    try {
      return NTree::parse(text.substr(tgt_begin, tgt_end - tgt_begin), arity);
    } catch (const ParseError& e) {
      throw e.shifted(tgt_begin);
    }
  }();
  if (source.caret_count() != target.caret_count()) {
    throw ParseError("source and target caret counts differ", tgt_begin);
  }
  if (rotation >= source.leaf_count()) throw ParseError("rotation out of range", rot_begin);
  return Element(std::move(source), std::move(target), rotation);
}

std::string Element::compact_key() const {
  std::string out;
  std::size_t r = rotation_;
  do {
    out.push_back(static_cast<char>((r & 0x7f) | (r > 0x7f ? 0x80 : 0)));
    r >>= 7;
  } while (r);
  unsigned char acc = 0;
  int bits = 0;
  auto push = [&](const std::string& code) {
    for (char ch : code) {
      acc = static_cast<unsigned char>((acc << 1) | (ch == '1'));
      if (++bits == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        bits = 0;
      }
    }
  };
  push(source_.code());
  push(target_.code());
  if (bits) out.push_back(static_cast<char>(acc << (8 - bits)));
  return out;
}

Element identity(int arity) { return Element(NTree(arity), NTree(arity), 0); }

Element reduce(const Element& e) {
  const int n = e.arity();
  std::string src = e.source().code();
  std::string tgt = e.target().code();
  std::size_t rot = e.rotation();
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t leaves = (src.size() - 1) / n * (n - 1) + 1;
    std::vector<std::size_t> tgt_leaves = leaf_offsets(tgt);
    std::size_t leaf = 0;
    for (std::size_t i = 0; i + n < src.size() + 1 && !changed; ++i) {
      if (src[i] == '0') {
        ++leaf;
        continue;
      }
      bool bottom = true;
      for (int c = 1; c <= n; ++c) {
        if (src[i + c] != '0') {
          bottom = false;
          break;
        }
      }
      if (!bottom) continue;
      // Source leaves leaf..leaf+n-1 form a caret; their images must too,
      // without wrapping past the end of the target.
      std::size_t t = (leaf + rot) % leaves;
      if (t + n - 1 >= leaves || !block_is_caret(tgt, tgt_leaves, t, n)) continue;
      src.replace(i, n + 1, "0");
      tgt.replace(tgt_leaves[t] - 1, n + 1, "0");
      if (t < rot) rot -= n - 1;
      changed = true;
    }
  }
  return Element(NTree::from_code(n, std::move(src)), NTree::from_code(n, std::move(tgt)), rot);
}

Element expand_source_to(const Element& e, const NTree& expanded) {
  const std::size_t L = e.leaf_count();
  std::vector<NTree> subs = leaf_subtrees(expanded, e.source());
  std::vector<NTree> at_target(L, NTree(e.arity()));
  for (std::size_t p = 0; p < L; ++p) at_target[(p + e.rotation()) % L] = subs[p];
  std::size_t rot = leaves_before(at_target, e.rotation());
  return Element(expanded, graft(e.target(), at_target), rot);
}

Element multiply(const Element& a, const Element& b) {
  if (a.arity() != b.arity()) {
    throw std::domain_error("multiply: arity " + std::to_string(a.arity()) + " vs " +
                            std::to_string(b.arity()));
  }
  const NTree middle = minimal_joint_expansion(a.target(), b.source());
  const std::size_t la = a.leaf_count();
  const std::size_t lb = b.leaf_count();

  std::vector<NTree> below_a = leaf_subtrees(middle, a.target());
  std::vector<NTree> at_source(la, NTree(a.arity()));
  for (std::size_t p = 0; p < la; ++p) at_source[p] = below_a[(p + a.rotation()) % la];

  std::vector<NTree> below_b = leaf_subtrees(middle, b.source());
  std::vector<NTree> at_target(lb, NTree(a.arity()));
  for (std::size_t i = 0; i < lb; ++i) at_target[(i + b.rotation()) % lb] = below_b[i];

  // Follow the first source leaf through the middle tree into the target.
  std::size_t m0 = leaves_before(below_a, a.rotation());
  std::size_t i = 0, start = 0;
  while (start + below_b[i].leaf_count() <= m0) start += below_b[i++].leaf_count();
  std::size_t rot = leaves_before(at_target, (i + b.rotation()) % lb) + (m0 - start);

  return reduce(Element(graft(a.source(), at_source), graft(b.target(), at_target), rot));
}

Element inverse(const Element& e) {
  const std::size_t L = e.leaf_count();
  return Element(e.target(), e.source(), (L - e.rotation()) % L);
}

Element power(const Element& e, long long m) {
  Element base = m < 0 ? inverse(reduce(e)) : reduce(e);
  unsigned long long k = m < 0 ? 0ULL - static_cast<unsigned long long>(m) : m;
  Element acc = identity(e.arity());
  while (k) {
    if (k & 1) acc = multiply(acc, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return acc;
}

bool is_in_F(const Element& e) { return reduce(e).rotation() == 0; }

CanonicalKey canonical_key(const Element& e) { return reduce(e).to_string(); }

}  // namespace thompson
