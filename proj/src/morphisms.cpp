#include "chein/morphisms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "chein/errors.hpp"

namespace chein {

bool ElementMap::is_bijection() const {
  std::vector<bool> hit(images.size(), false);
  for (Element y : images) {
    if (y >= images.size() || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool verify_homomorphism(const CayleyTable& a, const CayleyTable& b,
                         const ElementMap& f) {
  if (a.order() != b.order() || f.images.size() != a.order()) {
    throw std::invalid_argument("verify_homomorphism: order mismatch");
  }
  const auto n = static_cast<Element>(a.order());
  for (Element r = 0; r < n; ++r) {
    for (Element c = 0; c < n; ++c) {
      if (f(a(r, c)) != b(f(r), f(c))) return false;
    }
  }
  return true;
}

ElementMap lemma5_map(const Group& g) {
  const auto n = static_cast<Element>(g.order());
  ElementMap f{std::vector<Element>(2 * static_cast<std::size_t>(n))};
  for (Element x = 0; x < n; ++x) {
    f.images[x] = x;
    f.images[n + x] = n + g.inverse(x);
  }
  return f;
}

namespace {

std::size_t left_order(const CayleyTable& t, Element x, Element e) {
  Element power = x;
  for (std::size_t k = 1; k <= t.order(); ++k) {
    if (power == e) return k;
    power = t(x, power);
  }
  return 0;
}

void require_loop(const CayleyTable& t, const char* which) {
  if (t.order() > kMaxIsomorphismOrder) {
    throw HypothesisError(std::string("isomorphism search not attempted: order ") +
                          std::to_string(t.order()) + " exceeds " +
                          std::to_string(kMaxIsomorphismOrder));
  }
  const auto e = find_neutral(t);
  if (!is_latin_square(t) || !e || *e != 0) {
    throw HypothesisError(std::string("input ") + which +
                          " is not a loop with neutral element 0");
  }
}

class IsoSearch {
 public:
  IsoSearch(const CayleyTable& a, const CayleyTable& b)
      : a_(a), b_(b), fa_(element_fingerprints(a)), fb_(element_fingerprints(b)) {
    choose_generators();
  }

  std::optional<ElementMap> run() {
    State s;
    s.image.assign(a_.order(), kUnset);
    s.used.assign(b_.order(), false);
    if (!assign(s, 0, 0) || !propagate(s)) return std::nullopt;
    return extend(s, 0);
  }

 private:
  static constexpr Element kUnset = ~Element{0};

  struct State {
    std::vector<Element> image;
    std::vector<bool> used;
    std::vector<Element> domain;
  };

  bool assign(State& s, Element from, Element to) const {
    if (s.used[to] || fa_[from] != fb_[to]) return false;
    s.image[from] = to;
    s.used[to] = true;
    s.domain.push_back(from);
    return true;
  }

  // Closes the partial map under products; false on any contradiction.
  bool propagate(State& s) const {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < s.domain.size(); ++i) {
        for (std::size_t j = 0; j < s.domain.size(); ++j) {
          const Element u = s.domain[i], v = s.domain[j];
          const Element w = a_(u, v);
          const Element target = b_(s.image[u], s.image[v]);
          if (s.image[w] == kUnset) {
            if (!assign(s, w, target)) return false;
            grew = true;
          } else if (s.image[w] != target) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::optional<ElementMap> extend(const State& s, std::size_t depth) const {
    if (depth == generators_.size()) return ElementMap{s.image};
    const Element gen = generators_[depth];
    if (s.image[gen] != kUnset) return extend(s, depth + 1);
    for (Element candidate = 0; candidate < b_.order(); ++candidate) {
      State next = s;
      if (!assign(next, gen, candidate) || !propagate(next)) continue;
      if (auto found = extend(next, depth + 1)) return found;
    }
    return std::nullopt;
  }

  // Elements of the rarest fingerprint classes first, each one added only if
  // it lies outside the subloop generated so far.
  void choose_generators() {
    std::map<ElementFingerprint, std::size_t> class_size;
    for (const auto& fp : fa_) ++class_size[fp];
    std::vector<Element> order(a_.order());
    for (Element x = 0; x < order.size(); ++x) order[x] = x;
    std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) {
      return class_size[fa_[x]] < class_size[fa_[y]];
    });
    std::vector<bool> in(a_.order(), false);
    std::vector<Element> closure{0};
    in[0] = true;
    for (Element x : order) {
      if (in[x]) continue;
      generators_.push_back(x);
      in[x] = true;
      closure.push_back(x);
      for (std::size_t i = 0; i < closure.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          for (Element p : {a_(closure[i], closure[j]), a_(closure[j], closure[i])}) {
            if (!in[p]) {
              in[p] = true;
              closure.push_back(p);
            }
          }
        }
      }
    }
  }

  const CayleyTable& a_;
  const CayleyTable& b_;
  std::vector<ElementFingerprint> fa_;
  std::vector<ElementFingerprint> fb_;
  std::vector<Element> generators_;
};

}  // namespace

std::vector<ElementFingerprint> element_fingerprints(const CayleyTable& loop,
                                                     Element neutral) {
  const auto n = static_cast<Element>(loop.order());
  std::vector<ElementFingerprint> out(n);
  for (Element x = 0; x < n; ++x) {
    std::size_t commutant = 0;
    for (Element y = 0; y < n; ++y) commutant += loop(x, y) == loop(y, x);
    out[x] = {left_order(loop, x, neutral), left_order(loop, loop(x, x), neutral),
              commutant};
  }
  return out;
}

std::vector<ElementFingerprint> loop_fingerprint(const CayleyTable& loop) {
  auto fps = element_fingerprints(loop);
  std::sort(fps.begin(), fps.end());
  return fps;
}

std::optional<ElementMap> are_isomorphic(const CayleyTable& a, const CayleyTable& b) {
  require_loop(a, "a");
  require_loop(b, "b");
  if (a.order() != b.order()) return std::nullopt;
  if (loop_fingerprint(a) != loop_fingerprint(b)) return std::nullopt;
  return IsoSearch(a, b).run();
}

std::optional<ElementMap> are_anti_isomorphic(const CayleyTable& a,
                                              const CayleyTable& b) {
  return are_isomorphic(a, b.transposed());
}

}  // namespace chein
