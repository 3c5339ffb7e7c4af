#include "arbor/quotient.hpp"

#include <unordered_set>

#include "arbor/errors.hpp"

namespace arbor {

std::vector<Perm> Quotients::generator_images(int level) {
  std::vector<Perm> out;
  for (std::size_t k = 0; k < group_.rank(); ++k) out.push_back(images_.of({Letter::of(k)}, level));
  return out;
}

const PermGroup& Quotients::ambient(int level) {
  auto& slot = ambient_[level];
  if (!slot) slot = std::make_unique<PermGroup>(shape(level), generator_images(level));
  return *slot;
}

const PermGroup& Quotients::eval(const SubgroupExpr& e, int level) {
  if (level < 0) throw DomainError("negative level");
  auto key = std::make_pair(level, render_subgroup_expr(e, group_.def()));
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    auto value = std::make_unique<PermGroup>(compute(e, level));
    it = cache_.emplace(std::move(key), std::move(value)).first;
  }
  return *it->second;
}

namespace {

std::vector<TreeVertex> outside_subtree(const TreeShape& shape, const Vertex& v) {
  std::vector<TreeVertex> out;
  for (const auto& u : vertices_breadth_first(shape, shape.level)) {
    const Vertex word = decode_vertex(u.index, shape.degree, u.level);
    const bool below = word.size() >= v.size() && std::equal(v.begin(), v.end(), word.begin());
    if (!below) out.push_back(u);
  }
  return out;
}

Perm perm_power(const Perm& p, int k) {
  Perm out(p.degree());
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

}  // namespace

PermGroup Quotients::compute(const SubgroupExpr& e, int level) {
  using K = SubgroupExpr::Kind;
  const TreeShape sh = shape(level);
  auto images_of = [&](const std::vector<Word>& words) {
    std::vector<Perm> out;
    for (const auto& w : words) out.push_back(images_.of(w, level));
    return out;
  };
  auto check_vertex = [&](const Vertex& v) {
    if (static_cast<int>(v.size()) > level) throw DomainError("vertex deeper than the quotient level");
  };
  switch (e.kind) {
    case K::whole: return ambient(level);
    case K::gen: return PermGroup(sh, images_of(e.words));
    case K::normal_closure: return normal_closure(sh, images_of(e.words), generator_images(level));
    case K::commutator: {
      const PermGroup& a = eval(e.args.at(0), level);
      const PermGroup& b = eval(e.args.at(1), level);
      return commutator_subgroup(a, b);
    }
    case K::level_stab:
      if (e.number < 0 || e.number > level) throw DomainError("stabilized level exceeds the quotient level");
      return pointwise_stabilizer(ambient(level), vertices_breadth_first(sh, e.number));
    case K::vertex_stab:
      check_vertex(e.vertex);
      return pointwise_stabilizer(ambient(level), path_to(e.vertex, group_.degree()));
    case K::rigid_stab:
      check_vertex(e.vertex);
      return pointwise_stabilizer(ambient(level), outside_subtree(sh, e.vertex));
    case K::power: {
      if (e.number < 1) throw DomainError("power exponent must be positive");
      bool exact = false;
      PermGroup out = power_subgroup(eval(e.args.at(0), level), e.number, &exact);
      power_unchecked_ = power_unchecked_ || !exact;
      return out;
    }
    case K::product: {
      std::vector<Perm> gens;
      for (const auto& part : e.args) {
        const auto& g = eval(part, level).generators();
        gens.insert(gens.end(), g.begin(), g.end());
      }
      return PermGroup(sh, gens);
    }
    case K::at_vertex: {
      check_vertex(e.vertex);
      const int below = level - static_cast<int>(e.vertex.size());
      std::vector<Perm> gens;
      for (const auto& g : eval(e.args.at(0), below).generators()) {
        gens.push_back(lift(g, e.vertex, group_.degree(), level));
      }
      return PermGroup(sh, gens);
    }
  }
  throw DomainError("unknown subgroup expression");
}

PermGroup normal_closure(const TreeShape& shape, const std::vector<Perm>& seeds,
                         const std::vector<Perm>& conjugators) {
  PermGroup h(shape, seeds);
  std::vector<Perm> inverses;
  for (const auto& c : conjugators) inverses.push_back(c.inverse());
  for (std::size_t k = 0; k < h.generators().size(); ++k) {
    for (std::size_t c = 0; c < conjugators.size(); ++c) {
      const Perm x = conjugators[c] * h.generators()[k] * inverses[c];
      h.extend(x);
    }
  }
  return h;
}

PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> seeds;
  for (const auto& x : a.generators()) {
    const Perm xi = x.inverse();
    for (const auto& y : b.generators()) seeds.push_back(xi * y.inverse() * x * y);
  }
  std::vector<Perm> conjugators = a.generators();
  conjugators.insert(conjugators.end(), b.generators().begin(), b.generators().end());
  return normal_closure(a.shape(), seeds, conjugators);
}

PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<TreeVertex>& points) {
  const PermGroup chain(g.shape(), g.generators(), points);
  return PermGroup(g.shape(), chain.stabilizer_generators(points.size()));
}

std::vector<Perm> enumerate_elements(const PermGroup& g, std::size_t limit) {
  if (g.order() > limit) throw DomainError("group too large to enumerate");
  std::unordered_set<Perm, PermHash> seen{Perm(g.shape().points())};
  std::vector<Perm> out{Perm(g.shape().points())};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& s : g.generators()) {
      Perm x = out[k] * s;
      if (seen.insert(x).second) out.push_back(std::move(x));
    }
  }
  return out;
}

PermGroup power_subgroup(const PermGroup& g, int k, bool* exact) {
  constexpr std::size_t kEnumerationLimit = 10'000;
  const auto& gens = g.generators();
  std::vector<Perm> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    seeds.push_back(perm_power(gens[i], k));
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i != j) seeds.push_back(perm_power(gens[i] * gens[j], k));
    }
  }
  PermGroup h = normal_closure(g.shape(), seeds, gens);
  // Iterate with powers of products of the new generators until stable.
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Perm> current = h.generators();
    for (const auto& x : gens) {
      for (const auto& y : current) {
        if (!h.contains(perm_power(x * y, k))) {
          h = normal_closure(g.shape(), [&] {
            auto s = h.generators();
            s.push_back(perm_power(x * y, k));
            return s;
          }(), gens);
          grew = true;
        }
      }
    }
  }
  const bool small = g.order() <= kEnumerationLimit;
  if (small) {
    for (const auto& x : enumerate_elements(g, kEnumerationLimit)) {
      const Perm p = perm_power(x, k);
      if (!h.contains(p)) {
        auto s = h.generators();
        s.push_back(p);
        h = normal_closure(g.shape(), s, gens);
      }
    }
  }
  if (exact != nullptr) *exact = small;
  return h;
}

bool is_subgroup(const PermGroup& sub, const PermGroup& sup) {
  for (const auto& g : sub.generators()) {
    if (!sup.contains(g)) return false;
  }
  return true;
}

BigInt index(const PermGroup& sub, const PermGroup& sup) {
  if (!is_subgroup(sub, sup)) throw NotASubgroup("a generator of the subgroup is not in the supergroup");
  return sup.order() / sub.order();
}

bool verify_containment(Quotients& q, const SubgroupExpr& a, const SubgroupExpr& b, int level) {
  const PermGroup& sub = q.eval(a, level);
  const PermGroup& sup = q.eval(b, level);
  for (const auto& g : sub.strong_generators()) {
    if (!sup.contains(g)) return false;
  }
  return true;
}

std::vector<PermGroup> series(SeriesKind kind, const PermGroup& g, std::size_t length) {
  if (length < 1) throw DomainError("series length must be at least 1");
  std::vector<PermGroup> out{g};
  while (out.size() < length) {
    const PermGroup& last = out.back();
    out.push_back(kind == SeriesKind::lower_central ? commutator_subgroup(g, last)
                                                    : commutator_subgroup(last, last));
  }
  return out;
}

std::vector<HausdorffRow> hausdorff_profile(Quotients& q, int n_max) {
  const unsigned p = static_cast<unsigned>(q.group().degree());
  for (unsigned f = 2; f * f <= p; ++f) {
    if (p % f == 0) throw DomainError("Hausdorff dimension needs a prime alphabet size");
  }
  std::vector<HausdorffRow> out;
  for (int n = 0; n <= n_max; ++n) {
    const auto log = exact_log(q.ambient(n).order(), p);
    if (!log) throw DomainError("quotient order is not a power of the alphabet size");
    const Rational ratio = Rational((p - 1) * BigInt(*log)) / Rational(big_pow(p, static_cast<unsigned>(n)));
    out.push_back({n, *log, ratio});
  }
  return out;
}

bool verify_regular_branch(Quotients& q, const SubgroupExpr& k, int level) {
  if (level < 1) throw DomainError("regular branch check needs level >= 1");
  const PermGroup& whole = q.eval(k, level);
  const PermGroup& below = q.eval(k, level - 1);
  for (int i = 0; i < q.group().degree(); ++i) {
    for (const auto& g : below.generators()) {
      if (!whole.contains(lift(g, {i}, q.group().degree(), level))) return false;
    }
  }
  return true;
}

QcpReport verify_qcp(Quotients& q, const Word& g, int m, int n_const, int level) {
  if (q.group().is_trivial(g) == Decision::yes) throw DomainError("the element must be nontrivial");
  const Portrait portrait = q.group().portrait(g, static_cast<std::size_t>(level), PortraitLeaves::generators);
  if (!portrait.height) throw DepthUnknown("portrait does not close within the quotient level");
  QcpReport out;
  out.depth = *portrait.height;
  out.required_level = static_cast<int>(out.depth) + m + n_const;
  if (out.required_level >= level) {
    out.vacuous = true;
    out.holds = true;
    return out;
  }
  out.holds = verify_containment(q, SubgroupExpr::level_stab(out.required_level),
                                 SubgroupExpr::normal_closure({g}), level);
  return out;
}

}  // namespace arbor
