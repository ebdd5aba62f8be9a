#include <stdexcept>
#include <string>
#include <vector>

#include "thompson/element.hpp"

namespace thompson {

namespace {

// Points of [0,1) with finite base-n expansion, as digit strings without
// trailing zeros. The empty string is 0.
class AddressAction {
 public:
  explicit AddressAction(const Element& e) : rotation_(e.rotation()) {
    build(e.source().code(), e.arity(), nodes_, source_addr_);
    std::vector<Node> unused;
    build(e.target().code(), e.arity(), unused, target_addr_);
  }

  // A leaf interval maps affinely onto its image, which on expansions is
  // replacing the source leaf address by the target leaf address.
  std::string apply(const std::string& w) const {
    std::size_t node = 0, depth = 0;
    while (nodes_[node].leaf < 0) {
      const int digit = depth < w.size() ? static_cast<unsigned char>(w[depth]) : 0;
      node = nodes_[node].children[static_cast<std::size_t>(digit)];
      ++depth;
    }
    const std::size_t p = static_cast<std::size_t>(nodes_[node].leaf);
    std::string out = target_addr_[(p + rotation_) % target_addr_.size()];
    if (depth < w.size()) out.append(w, depth, std::string::npos);
    while (!out.empty() && out.back() == '\0') out.pop_back();
    return out;
  }

 private:
  struct Node {
    long leaf = -1;
    std::vector<std::size_t> children;
  };

  static void build(const std::string& code, int n, std::vector<Node>& nodes,
                    std::vector<std::string>& addresses) {
    std::size_t pos = 0;
    std::string path;
    auto rec = [&](auto&& self) -> std::size_t {
      const std::size_t id = nodes.size();
      nodes.emplace_back();
      if (code[pos++] == '0') {
        nodes[id].leaf = static_cast<long>(addresses.size());
        addresses.push_back(path);
        return id;
      }
      for (int c = 0; c < n; ++c) {
        path.push_back(static_cast<char>(c));
        const std::size_t child = self(self);
        nodes[id].children.push_back(child);
        path.pop_back();
      }
      return id;
    };
    rec(rec);
  }

  std::size_t rotation_;
  std::vector<Node> nodes_;
  std::vector<std::string> source_addr_;
  std::vector<std::string> target_addr_;
};

}  // namespace

// A finite-order circle homeomorphism is conjugate to a rotation by p/m with
// gcd(p, m) = 1, so every orbit has exact period m. The first return time of
// 0 is therefore the only candidate order; the tree-pair power confirms it.
std::optional<std::size_t> order(const Element& e, std::size_t cap) {
  const Element r = reduce(e);
  if (r.is_identity()) return 1;
  if (r.rotation() == 0) return std::nullopt;  // F_n is torsion-free
  const AddressAction f(r);
  std::string y;
  for (std::size_t k = 1; k <= cap; ++k) {
    y = f.apply(y);
    if (y.empty()) {
      if (power(r, static_cast<long long>(k)).is_identity()) return k;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Element torsion_balanced_form(const Element& e, std::size_t cap) {
  const Element f = reduce(e);
  if (!order(f, cap)) throw std::domain_error("torsion_balanced_form: element is not torsion");
  const NTree& source = f.source();
  NTree image = f.target();
  // image is the target of f^k; each round re-expresses f on the minimal
  // joint expansion of that target and f's own source.
  for (std::size_t k = 0; k <= cap; ++k) {
    NTree joint = minimal_joint_expansion(image, source);
    Element expanded = expand_source_to(f, joint);
    if (expanded.target() == joint) return expanded;
    image = expanded.target();
  }
  throw std::domain_error("torsion_balanced_form: construction did not close within cap");
}

}  // namespace thompson
