#include "arbor/perm.hpp"

#include <numeric>

#include "arbor/errors.hpp"

namespace arbor {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), std::uint16_t{0});
}

Perm::Perm(std::vector<std::uint16_t> images) : images_(std::move(images)) {}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<std::uint16_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint16_t>(i);
  return Perm(std::move(inv));
}

BigInt Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  BigInt result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    unsigned length = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++length;
    }
    result = big_lcm(result, length);
  }
  return result;
}

Perm operator*(const Perm& p, const Perm& q) {
  const std::size_t n = q.images_.size();
  std::vector<std::uint16_t> out(n);
  const std::uint16_t* pi = p.images_.data();
  const std::uint16_t* qi = q.images_.data();
  for (std::size_t i = 0; i < n; ++i) out[i] = pi[qi[i]];
  return Perm(std::move(out));
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 0x84222325cbf29ce4ULL;
  for (auto x : p.images()) h = (h ^ x) * 0x100000001b3ULL;
  return h;
}

std::size_t level_size(int degree, int level) {
  if (level < 0) throw DomainError("negative level");
  std::size_t n = 1;
  for (int i = 0; i < level; ++i) {
    n *= static_cast<std::size_t>(degree);
    if (n > max_level_points) throw DomainError("level too large for a level permutation");
  }
  return n;
}

const Perm& LevelImages::letter(Letter l, int level) {
  const std::size_t points = level_size(group_.degree(), level);
  if (cache_.size() <= static_cast<std::size_t>(level)) cache_.resize(static_cast<std::size_t>(level) + 1);
  auto& row = cache_[static_cast<std::size_t>(level)];
  if (row.empty()) {
    row.resize(group_.letter_count());
    if (level == 0) {
      for (auto& p : row) p = Perm(1);
    } else {
      const std::size_t below = points / static_cast<std::size_t>(group_.degree());
      for (std::size_t code = 0; code < group_.letter_count(); ++code) {
        const Letter x{static_cast<std::uint32_t>(code)};
        std::vector<std::uint16_t> images(points);
        for (int i = 0; i < group_.degree(); ++i) {
          const Perm sub = of(group_.letter_section(x, i), level - 1);
          const std::size_t target =
              static_cast<std::size_t>(group_.letter_root(x)[static_cast<std::size_t>(i)]) * below;
          for (std::size_t r = 0; r < below; ++r) {
            images[static_cast<std::size_t>(i) * below + r] =
                static_cast<std::uint16_t>(target + sub[r]);
          }
        }
        row[code] = Perm(std::move(images));
      }
    }
  }
  return cache_[static_cast<std::size_t>(level)][l.code];
}

Perm LevelImages::of(const Word& w, int level) {
  Perm out(level_size(group_.degree(), level));
  for (Letter l : w) out = out * letter(l, level);
  return out;
}

Perm LevelImages::of(const LiftedElement& g, int level) {
  const int depth = static_cast<int>(g.prefix.size());
  if (depth > level) return Perm(level_size(group_.degree(), level));
  return lift(of(g.inner, level - depth), g.prefix, group_.degree(), level);
}

LevelPermutation level_permutation(const SelfSimilarGroup& group, const Word& w, int level) {
  LevelImages images(group);
  return images.of(w, level);
}

Perm lift(const Perm& p, const Vertex& prefix, int degree, int level) {
  const std::size_t points = level_size(degree, level);
  const std::size_t below = level_size(degree, level - static_cast<int>(prefix.size()));
  if (p.degree() != below) throw DomainError("lifted permutation has the wrong degree");
  std::vector<std::uint16_t> images(points);
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  const std::size_t offset = encode_vertex(prefix, degree) * below;
  for (std::size_t r = 0; r < below; ++r) {
    images[offset + r] = static_cast<std::uint16_t>(offset + p[r]);
  }
  return Perm(std::move(images));
}

}  // namespace arbor
