#include "thompson/ntree.hpp"

#include <algorithm>
#include <stdexcept>

#include "thompson/errors.hpp"

namespace thompson {

namespace {

// Index one past the subtree whose code starts at `pos`.
std::size_t subtree_end(const std::string& code, std::size_t pos, int n) {
  std::size_t need = 1;
  while (need > 0) {
    if (pos >= code.size()) throw StructuralError("truncated tree code");
    need += code[pos++] == '1' ? n - 1 : -1;
  }
  return pos;
}

// Code offset of the leaf at position `leaf`, or npos.
std::size_t leaf_offset(const std::string& code, std::size_t leaf) {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i] == '0' && seen++ == leaf) return i;
  }
  return std::string::npos;
}

void check_same_arity(const NTree& a, const NTree& b) {
  if (a.arity() != b.arity()) throw std::domain_error("trees of different arity");
}

void joint(const std::string& a, std::size_t& i, const std::string& b, std::size_t& j, int n,
           std::string& out) {
  if (a[i] == '0') {
    std::size_t e = subtree_end(b, j, n);
    out.append(b, j, e - j);
    ++i;
    j = e;
    return;
  }
  if (b[j] == '0') {
    std::size_t e = subtree_end(a, i, n);
    out.append(a, i, e - i);
    i = e;
    ++j;
    return;
  }
  out.push_back('1');
  ++i;
  ++j;
  for (int c = 0; c < n; ++c) joint(a, i, b, j, n, out);
}

bool prefix(const std::string& big, std::size_t& i, const std::string& small, std::size_t& j,
            int n) {
  if (small[j] == '0') {
    ++j;
    i = subtree_end(big, i, n);
    return true;
  }
  if (big[i] != '1') return false;
  ++i;
  ++j;
  for (int c = 0; c < n; ++c) {
    if (!prefix(big, i, small, j, n)) return false;
  }
  return true;
}

void write_text(const std::string& code, std::size_t& pos, int n, std::string& out) {
  if (code[pos++] == '0') {
    out.push_back('.');
    return;
  }
  out.push_back('(');
  for (int c = 0; c < n; ++c) {
    if (c) out.push_back(' ');
    write_text(code, pos, n, out);
  }
  out.push_back(')');
}

struct TextParser {
  std::string_view text;
  int n;
  std::size_t pos = 0;
  std::string code;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

  void tree() {
    if (pos >= text.size()) fail("unexpected end of tree");
    if (text[pos] == '.') {
      ++pos;
      code.push_back('0');
      return;
    }
    if (text[pos] != '(') fail("expected '.' or '('");
    ++pos;
    code.push_back('1');
    int children = 0;
    for (;;) {
      tree();
      ++children;
      if (pos >= text.size()) fail("unterminated caret");
      if (text[pos] == ')') break;
      if (text[pos] != ' ') fail("expected ' ' or ')'");
      ++pos;
    }
    if (children != n) {
      fail("caret with " + std::to_string(children) + " children, expected " +
           std::to_string(n));
    }
    ++pos;
  }
};

void replace(const std::string& code, std::size_t& pos, int n, const std::string& block,
             std::string& out) {
  if (code[pos++] == '0') {
    out.push_back('0');
    return;
  }
  // Walk the block, substituting the next child of this caret at each block leaf.
  for (char ch : block) {
    if (ch == '1') {
      out.push_back('1');
    } else {
      replace(code, pos, n, block, out);
    }
  }
}

}  // namespace

Arity::Arity(int n) : n_(n) {
  if (n < 2) throw std::domain_error("arity must be at least 2, got " + std::to_string(n));
}

NTree::NTree(int arity) : arity_(Arity(arity)), code_("0") {}

NTree NTree::from_code(int arity, std::string code) {
  Arity{arity};
  if (code.empty()) throw StructuralError("empty tree code");
  for (char ch : code) {
    if (ch != '0' && ch != '1') throw StructuralError("tree code must be '0'/'1'");
  }
  if (subtree_end(code, 0, arity) != code.size()) throw StructuralError("trailing tree code");
  return NTree(arity, std::move(code));
}

NTree NTree::caret(const std::vector<NTree>& children) {
  if (children.size() < 2) throw std::domain_error("caret needs at least 2 children");
  int n = static_cast<int>(children.size());
  std::string code = "1";
  for (const auto& c : children) {
    if (c.arity() != n) throw std::domain_error("child arity does not match caret width");
    code += c.code();
  }
  return NTree(n, std::move(code));
}

std::vector<NTree> NTree::children() const {
  std::vector<NTree> out;
  if (is_leaf()) return out;
  std::size_t pos = 1;
  for (int c = 0; c < arity_; ++c) {
    std::size_t e = subtree_end(code_, pos, arity_);
    out.push_back(NTree(arity_, code_.substr(pos, e - pos)));
    pos = e;
  }
  return out;
}

std::string NTree::to_string() const {
  std::string out;
  std::size_t pos = 0;
  write_text(code_, pos, arity_, out);
  return out;
}

NTree NTree::parse(std::string_view text, int arity) {
  TextParser p{text, Arity(arity), 0, {}};
  p.tree();
  if (p.pos != text.size()) p.fail("trailing characters after tree");
  return NTree(arity, std::move(p.code));
}

NTree all_right(std::size_t k, int arity) {
  Arity{arity};
  std::string code;
  for (std::size_t i = 0; i < k; ++i) {
    code.push_back('1');
    code.append(arity - 1, '0');
  }
  code.push_back('0');
  return NTree::from_code(arity, std::move(code));
}

NTree expand_at(const NTree& t, std::size_t leaf) {
  std::size_t off = leaf_offset(t.code(), leaf);
  if (off == std::string::npos) {
    throw std::out_of_range("leaf " + std::to_string(leaf) + " out of range (" +
                            std::to_string(t.leaf_count()) + " leaves)");
  }
  std::string code = t.code();
  code.replace(off, 1, "1" + std::string(t.arity(), '0'));
  return NTree::from_code(t.arity(), std::move(code));
}

bool is_contractible_at(const NTree& t, std::size_t leaf) {
  const std::string& code = t.code();
  std::size_t off = leaf_offset(code, leaf);
  if (off == std::string::npos || off == 0 || code[off - 1] != '1') return false;
  if (off + t.arity() > code.size()) return false;
  return std::all_of(code.begin() + off, code.begin() + off + t.arity(),
                     [](char c) { return c == '0'; });
}

NTree contract_at(const NTree& t, std::size_t leaf) {
  if (leaf >= t.leaf_count()) {
    throw std::out_of_range("leaf " + std::to_string(leaf) + " out of range (" +
                            std::to_string(t.leaf_count()) + " leaves)");
  }
  if (!is_contractible_at(t, leaf)) {
    throw StructuralError("leaves " + std::to_string(leaf) + ".." +
                          std::to_string(leaf + t.arity() - 1) +
                          " are not the children of one caret");
  }
  std::string code = t.code();
  std::size_t off = leaf_offset(code, leaf);
  code.replace(off - 1, t.arity() + 1, "0");
  return NTree::from_code(t.arity(), std::move(code));
}

bool is_expansion_of(const NTree& big, const NTree& small) {
  check_same_arity(big, small);
  std::size_t i = 0, j = 0;
  return prefix(big.code(), i, small.code(), j, big.arity());
}

NTree minimal_joint_expansion(const NTree& a, const NTree& b) {
  check_same_arity(a, b);
  std::string out;
  out.reserve(std::max(a.code().size(), b.code().size()));
  std::size_t i = 0, j = 0;
  joint(a.code(), i, b.code(), j, a.arity(), out);
  return NTree::from_code(a.arity(), std::move(out));
}

std::vector<NTree> leaf_subtrees(const NTree& big, const NTree& small) {
  check_same_arity(big, small);
  const std::string& bc = big.code();
  const std::string& sc = small.code();
  const int n = big.arity();
  std::vector<NTree> out;
  out.reserve(small.leaf_count());
  std::size_t i = 0;
  for (char ch : sc) {
    if (i >= bc.size()) throw StructuralError("not an expansion");
    if (ch == '1') {
      if (bc[i] != '1') throw StructuralError("not an expansion");
      ++i;
    } else {
      std::size_t e = subtree_end(bc, i, n);
      out.push_back(NTree::from_code(n, bc.substr(i, e - i)));
      i = e;
    }
  }
  return out;
}

NTree graft(const NTree& t, const std::vector<NTree>& subtrees) {
  if (subtrees.size() != t.leaf_count()) throw std::domain_error("graft: wrong subtree count");
  std::string out;
  std::size_t k = 0;
  for (char ch : t.code()) {
    if (ch == '1') {
      out.push_back('1');
    } else {
      if (subtrees[k].arity() != t.arity()) throw std::domain_error("graft: arity mismatch");
      out += subtrees[k++].code();
    }
  }
  return NTree::from_code(t.arity(), std::move(out));
}

std::vector<std::pair<Rational, Rational>> leaf_intervals(const NTree& t) {
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(t.leaf_count());
  const int n = t.arity();
  // Stack of (left end, width, children still to visit).
  struct Frame {
    Rational left, width;
    int next;
  };
  std::vector<Frame> stack;
  Rational left = 0, width = 1;
  for (char ch : t.code()) {
    if (ch == '1') {
      stack.push_back({left, width / n, 0});
    } else {
      out.emplace_back(left, left + width);
    }
    // Position (left, width) at the next node in preorder.
    while (!stack.empty() && stack.back().next == n) stack.pop_back();
    if (stack.empty()) break;
    Frame& f = stack.back();
    left = f.left + f.width * f.next;
    width = f.width;
    ++f.next;
  }
  return out;
}

NTree replace_carets(const NTree& t, const NTree& block) {
  if (static_cast<int>(block.leaf_count()) != t.arity()) {
    throw std::domain_error("replacement block must have " + std::to_string(t.arity()) +
                            " leaves");
  }
  std::string out;
  std::size_t pos = 0;
  replace(t.code(), pos, t.arity(), block.code(), out);
  return NTree::from_code(block.arity(), std::move(out));
}

}  // namespace thompson
