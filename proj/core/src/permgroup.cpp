#include "arbor/permgroup.hpp"

#include "arbor/errors.hpp"

namespace arbor {

std::vector<TreeVertex> vertices_breadth_first(const TreeShape& shape, int last_level) {
  std::vector<TreeVertex> out;
  for (int l = 1; l <= last_level; ++l) {
    const std::size_t count = level_size(shape.degree, l);
    for (std::size_t i = 0; i < count; ++i) out.push_back({l, i});
  }
  return out;
}

std::vector<TreeVertex> path_to(const Vertex& v, int degree) {
  std::vector<TreeVertex> out;
  std::size_t index = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    index = index * static_cast<std::size_t>(degree) + static_cast<std::size_t>(v[k]);
    out.push_back({static_cast<int>(k + 1), index});
  }
  return out;
}

PermGroup::PermGroup(TreeShape shape, const std::vector<Perm>& generators,
                     const std::vector<TreeVertex>& base_prefix)
    : shape_(shape) {
  for (const auto& v : base_prefix) {
    if (v.level < 1 || v.level > shape_.level || v.index >= level_size(shape_.degree, v.level)) {
      throw DomainError("base point outside the tree");
    }
    levels_.push_back(make_level(v));
  }
  for (const auto& g : generators) extend(g);
}

std::size_t PermGroup::stride(int level) const { return level_size(shape_.degree, shape_.level - level); }

TreeVertex PermGroup::image(const Perm& p, const TreeVertex& v) const {
  const std::size_t s = stride(v.level);
  return {v.level, p[v.index * s] / s};
}

PermGroup::Level PermGroup::make_level(const TreeVertex& point) const {
  Level level;
  level.point = point;
  level.position.assign(level_size(shape_.degree, point.level), -1);
  level.position[point.index] = 0;
  level.orbit.push_back(point.index);
  level.transversal.emplace_back(shape_.points());
  level.transversal_inverse.emplace_back(shape_.points());
  level.checked.emplace_back();
  return level;
}

std::vector<TreeVertex> PermGroup::base() const {
  std::vector<TreeVertex> out;
  for (const auto& l : levels_) out.push_back(l.point);
  return out;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.orbit.size());
  return out;
}

BigInt PermGroup::order() const {
  BigInt out = 1;
  for (const auto& l : levels_) out *= l.orbit.size();
  return out;
}

std::size_t PermGroup::first_moved_level(const Perm& p) const {
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    if (image(p, levels_[k].point) != levels_[k].point) return k;
  }
  return levels_.size();
}

TreeVertex PermGroup::first_moved_vertex(const Perm& p) const {
  for (int l = 1; l <= shape_.level; ++l) {
    const std::size_t s = stride(l);
    const std::size_t count = level_size(shape_.degree, l);
    for (std::size_t i = 0; i < count; ++i) {
      if (p[i * s] / s != i) return {l, i};
    }
  }
  throw DomainError("identity has no moved vertex");
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm h, std::size_t start) const {
  for (std::size_t k = start; k < levels_.size(); ++k) {
    const Level& l = levels_[k];
    const int pos = l.position[image(h, l.point).index];
    if (pos < 0) return {std::move(h), k};
    if (pos != 0) h = l.transversal_inverse[static_cast<std::size_t>(pos)] * h;
  }
  return {std::move(h), levels_.size()};
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != shape_.points()) return false;
  const auto [residue, depth] = strip(p, 0);
  return depth == levels_.size() && residue.is_identity();
}

void PermGroup::grow_orbit(Level& level, std::size_t strong_index) {
  level.strong.push_back(strong_index);
  const std::size_t old = level.orbit.size();
  for (std::size_t pos = 0; pos < level.orbit.size(); ++pos) {
    const std::size_t first = pos < old ? level.strong.size() - 1 : 0;
    for (std::size_t g = first; g < level.strong.size(); ++g) {
      const Perm& s = strong_[level.strong[g]];
      const std::size_t delta = image(s, {level.point.level, level.orbit[pos]}).index;
      if (level.position[delta] >= 0) continue;
      level.position[delta] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(delta);
      Perm u = s * level.transversal[pos];
      level.transversal_inverse.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
      level.checked.emplace_back();
    }
  }
  for (auto& row : level.checked) row.resize(level.strong.size(), false);
}

void PermGroup::add_strong(Perm s) {
  std::size_t k = first_moved_level(s);
  if (k == levels_.size()) levels_.push_back(make_level(first_moved_vertex(s)));
  strong_.push_back(std::move(s));
  for (std::size_t l = 0; l <= k; ++l) grow_orbit(levels_[l], strong_.size() - 1);
}

void PermGroup::complete() {
  if (levels_.empty()) return;
  std::size_t i = levels_.size() - 1;
  for (;;) {
    bool added = false;
    for (std::size_t pos = 0; pos < levels_[i].orbit.size() && !added; ++pos) {
      for (std::size_t local = 0; local < levels_[i].strong.size(); ++local) {
        if (levels_[i].checked[pos][local]) continue;
        levels_[i].checked[pos][local] = true;
        const Level& l = levels_[i];
        const Perm& s = strong_[l.strong[local]];
        const std::size_t beta = l.orbit[pos];
        const std::size_t gamma = image(s, {l.point.level, beta}).index;
        // With an identity transversal on both sides the Schreier generator
        // is s itself, already a strong generator one level down.
        if (pos == 0 && gamma == beta) continue;
        const auto gpos = static_cast<std::size_t>(l.position[gamma]);
        Perm h = l.transversal_inverse[gpos] * (s * l.transversal[pos]);
        auto [residue, depth] = strip(std::move(h), i + 1);
        if (depth == levels_.size() && residue.is_identity()) continue;
        add_strong(std::move(residue));
        i = first_moved_level(strong_.back());
        added = true;
        break;
      }
    }
    if (added) continue;
    if (i == 0) break;
    --i;
  }
}

bool PermGroup::extend(const Perm& p) {
  if (p.degree() != shape_.points()) throw DomainError("permutation degree does not match the tree");
  if (p.is_identity() || contains(p)) return false;
  for (int l = 1; l < shape_.level; ++l) {
    const std::size_t s = stride(l);
    for (std::size_t i = 0; i < shape_.points(); ++i) {
      if (p[i] / s != p[(i / s) * s] / s) throw DomainError("permutation does not preserve the tree");
    }
  }
  generators_.push_back(p);
  add_strong(p);
  complete();
  return true;
}

std::vector<Perm> PermGroup::stabilizer_generators(std::size_t depth) const {
  std::vector<Perm> out;
  if (depth >= levels_.size()) return out;
  for (std::size_t idx : levels_[depth].strong) out.push_back(strong_[idx]);
  return out;
}

}  // namespace arbor
