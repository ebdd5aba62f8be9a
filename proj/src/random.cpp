#include "thompson/random.hpp"

namespace thompson {

NTree random_tree(std::size_t carets, int n, Rng& rng) {
  NTree t(n);
  for (std::size_t k = 0; k < carets; ++k) {
    std::uniform_int_distribution<std::size_t> leaf(0, t.leaf_count() - 1);
    t = expand_at(t, leaf(rng));
  }
  return t;
}

Element random_element(int n, std::size_t max_carets, Rng& rng, bool in_F) {
  std::uniform_int_distribution<std::size_t> size(0, max_carets);
  const std::size_t k = size(rng);
  NTree source = random_tree(k, n, rng);
  NTree target = random_tree(k, n, rng);
  std::size_t rotation = 0;
  if (!in_F) {
    std::uniform_int_distribution<std::size_t> rot(0, source.leaf_count() - 1);
    rotation = rot(rng);
  }
  return reduce(Element(std::move(source), std::move(target), rotation));
}

Element random_nonidentity(int n, std::size_t max_carets, Rng& rng, bool in_F) {
  for (;;) {
    Element e = random_element(n, max_carets, rng, in_F);
    if (!e.is_identity()) return e;
  }
}

}  // namespace thompson
