#include "arbor/parabolic.hpp"

#include <algorithm>
#include <numeric>

#include "arbor/errors.hpp"

namespace arbor {

Vertex RaySpec::prefix(int n) const {
  if (period.empty()) throw DomainError("a ray needs a nonempty period");
  Vertex out;
  for (int i = 0; i < n; ++i) out.push_back(period[static_cast<std::size_t>(i) % period.size()]);
  return out;
}

RaySpec default_ray(int degree) { return RaySpec{{degree - 1}}; }

namespace {

RaySpec shifted(const RaySpec& ray) {
  RaySpec out = ray;
  std::rotate(out.period.begin(), out.period.begin() + 1, out.period.end());
  return out;
}

void check_ray(const RaySpec& ray, int degree) {
  if (ray.period.empty()) throw DomainError("a ray needs a nonempty period");
  for (int x : ray.period) {
    if (x < 0 || x >= degree) throw DomainError("ray letter out of range");
  }
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

PermGroup parabolic_subgroup(Quotients& q, const RaySpec& ray, int n) {
  check_ray(ray, q.group().degree());
  return pointwise_stabilizer(q.ambient(n), path_to(ray.prefix(n), q.group().degree()));
}

bool is_transitive(const PermGroup& g) {
  const std::size_t points = g.shape().points();
  std::vector<bool> seen(points, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& s : g.generators()) {
      const std::size_t y = s[queue[k]];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return queue.size() == points;
}

OrbitReport orbit_report(Quotients& q, const RaySpec& ray, int n) {
  const int d = q.group().degree();
  const PermGroup p = parabolic_subgroup(q, ray, n);
  const std::size_t points = level_size(d, n);
  std::vector<std::size_t> parent(points);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& s : p.generators()) {
    for (std::size_t x = 0; x < points; ++x) {
      const std::size_t a = find_root(parent, x);
      const std::size_t b = find_root(parent, s[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OrbitReport out;
  out.level = n;
  std::vector<std::size_t> slot(points, points);
  for (std::size_t x = 0; x < points; ++x) {
    const std::size_t r = find_root(parent, x);
    if (slot[r] == points) {
      slot[r] = out.orbits.size();
      out.orbits.emplace_back();
    }
    out.orbits[slot[r]].push_back(x);
  }
  out.predicted_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(d - 1) + 1;

  const Vertex e = ray.prefix(n);
  std::vector<std::vector<std::size_t>> predicted;
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < d; ++x) {
      if (x == e[static_cast<std::size_t>(i)]) continue;
      Vertex head(e.begin(), e.begin() + i);
      head.push_back(x);
      const std::size_t below = level_size(d, n - 1 - i);
      const std::size_t start = encode_vertex(head, d) * below;
      std::vector<std::size_t> shell(below);
      std::iota(shell.begin(), shell.end(), start);
      predicted.push_back(std::move(shell));
    }
  }
  predicted.push_back({encode_vertex(e, d)});
  std::sort(predicted.begin(), predicted.end());
  out.shape_match = predicted == out.orbits;
  return out;
}

std::size_t double_coset_count(Quotients& q, const RaySpec& ray, int n) {
  if (!is_transitive(q.ambient(n))) throw NotTransitive("the quotient is not transitive on the level");
  return orbit_report(q, ray, n).orbits.size();
}

bool DecompositionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

DecompositionRecipe builtin_decomposition(const GroupDef& group) {
  auto expr = [&](std::string_view text) { return parse_subgroup_expr(text, group); };
  auto words = [&](std::initializer_list<std::string_view> texts) {
    std::vector<Word> out;
    for (auto t : texts) out.push_back(group.word(t));
    return out;
  };
  const RaySpec ray = default_ray(group.degree);
  if (group.name == "grigorchuk") return {ray, expr("ncl{b}"), words({"c", "(a c)^4"})};
  if (group.name == "grigorchuk-tilde") return {ray, expr("ncl{b, d}"), words({"b", "(a b)^4"})};
  if (group.name == "gamma") return {ray, expr("ncl{[a, t]}"), words({"t", "a t a^-1"})};
  if (group.name == "gamma-bar") {
    return {ray, expr("comm(gen{a t^-1, a^-1 t}, gen{a t^-1, a^-1 t})"),
            words({"t", "a t a^-1 a^-1 t^-1 a", "a t a^-1 t a t a^-1 t^-1 a^-1 t a"})};
  }
  if (group.name == "gamma-bar-bar") {
    return {ray, expr("ncl{[a, t]}"), words({"t", "a t a^-1 a^-1 t a"})};
  }
  throw NameError("no parabolic decomposition recorded for '" + group.name + "'");
}

DecompositionReport verify_parabolic_decomposition(Quotients& q, const DecompositionRecipe& recipe,
                                                   int n) {
  const int d = q.group().degree();
  check_ray(recipe.ray, d);
  if (n < 1) throw DomainError("decomposition needs level >= 1");
  DecompositionReport out;
  out.level = n;
  const PermGroup p = parabolic_subgroup(q, recipe.ray, n);
  out.parabolic_order = p.order();

  const int e1 = recipe.ray.period.front();
  const PermGroup& side = q.eval(recipe.side, n - 1);
  const PermGroup ray_part =
      pointwise_stabilizer(side, path_to(shifted(recipe.ray).prefix(n - 1), d));
  std::vector<Perm> pieces;
  for (int x = 0; x < d; ++x) {
    const auto& gens = x == e1 ? ray_part.generators() : side.generators();
    for (const auto& g : gens) pieces.push_back(lift(g, {x}, d, n));
  }
  for (const auto& w : recipe.extra) pieces.push_back(q.image(w, n));
  const PermGroup generated(q.shape(n), pieces);
  out.generated_order = generated.order();

  bool inside = true;
  for (const auto& g : pieces) inside = inside && p.contains(g);
  out.checks.push_back({"pieces lie in P_n", inside, ""});
  out.checks.push_back({"pieces generate P_n", inside && generated.order() == p.order(),
                        generated.order().str() + " vs " + p.order().str()});
  const BigInt expected = q.ambient(n).order() / big_pow(d, static_cast<unsigned>(n));
  out.checks.push_back({"|P_n| = |G_n| / d^n", p.order() == expected,
                        p.order().str() + " vs " + expected.str()});
  return out;
}

}  // namespace arbor
