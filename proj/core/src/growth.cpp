#include "arbor/growth.hpp"

#include <cmath>
#include <unordered_set>

#include "arbor/errors.hpp"
#include "arbor/perm.hpp"

namespace arbor {

BallSizes ball_sizes(SelfSimilarGroup& group, const std::vector<Word>& generators, std::size_t radius,
                     std::size_t budget, std::size_t max_elements) {
  BallSizes out;
  std::vector<Word> steps;
  std::unordered_set<std::string> step_keys;
  for (const auto& g : generators) {
    for (const Word& s : {g, inverse(g)}) {
      const Word r = group.reduce(s);
      const auto key = group.canonical_key(r, budget);
      if (!key) {
        out.exhausted = true;
        return out;
      }
      if (step_keys.insert(*key).second) steps.push_back(r);
    }
  }
  std::unordered_set<std::string> seen;
  const auto identity = group.canonical_key({}, budget);
  seen.insert(*identity);
  out.sizes.push_back(1);
  std::vector<Word> frontier{Word{}};
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (const auto& s : steps) {
        Word u = group.reduce(concat(w, s));
        const auto key = group.canonical_key(u, budget);
        if (!key || seen.size() >= max_elements) {
          out.exhausted = true;
          return out;
        }
        if (seen.insert(*key).second) next.push_back(std::move(u));
      }
    }
    out.sizes.push_back(seen.size());
    frontier = std::move(next);
  }
  return out;
}

double weight_lower_bound() {
  double lo = 0;
  double hi = 1;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    if (mid * mid * mid + mid * mid + mid - 2 < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

Rational parse_decimal(std::string_view text) {
  BigInt num = 0;
  BigInt den = 1;
  bool point = false;
  bool digits = false;
  for (char ch : text) {
    if (ch == '.' && !point) {
      point = true;
    } else if (ch >= '0' && ch <= '9') {
      num = num * 10 + (ch - '0');
      if (point) den *= 10;
      digits = true;
    } else {
      throw DomainError("not a decimal number: '" + std::string(text) + "'");
    }
  }
  if (!digits) throw DomainError("not a decimal number: '" + std::string(text) + "'");
  return Rational(num, den);
}

WeightTable weight_table(const Rational& theta) {
  const double t = static_cast<double>(theta);
  if (!(t > weight_lower_bound() && theta < 1)) {
    throw DomainError("theta must lie strictly between the root of X^3+X^2+X-2 and 1");
  }
  const BigInt p = boost::multiprecision::numerator(theta);
  const BigInt q = boost::multiprecision::denominator(theta);
  const BigInt p2 = p * p, p3 = p2 * p, q2 = q * q, q3 = q2 * q;
  const std::array<BigInt, 8> scaled = {
      q3 - p3,                       // a
      p * q2 + p3,                   // b
      -q3 + p * q2 + p2 * q + p3,    // c
      -q3 + p * q2 + p3,             // b c
      p2 * q + p3,                   // d
      p3,                            // b d
      -q3 + p2 * q + p3,             // c d
      q3 + p3,                       // b c d
  };
  WeightTable table;
  table.theta = theta;
  for (std::size_t i = 0; i < 8; ++i) {
    if (scaled[i] > BigInt(std::numeric_limits<std::int64_t>::max() / 64)) {
      throw DomainError("theta has too large a denominator");
    }
    table.scaled[i] = static_cast<std::int64_t>(scaled[i]);
    table.weight[i] = Rational(scaled[i], scaled[0]);
  }
  return table;
}

namespace {

constexpr int kA = 0;

void push_token(std::vector<int>& stack, int token) {
  if (token == kA) {
    if (!stack.empty() && stack.back() == kA) {
      stack.pop_back();
    } else {
      stack.push_back(kA);
    }
    return;
  }
  if (token == 0) return;
  if (!stack.empty() && stack.back() != kA) {
    stack.back() ^= token;
    if (stack.back() == 0) stack.pop_back();
  } else {
    stack.push_back(token);
  }
}

/// `b -> c`, `c -> d`, `d -> b` on masks.
int rotate_mask(int m) { return ((m << 1) & 7) | (m >> 2); }

}  // namespace

std::array<std::vector<int>, 2> weighted_sections(const std::vector<int>& word) {
  std::array<std::vector<int>, 2> sec;
  for (int s : word) {
    if (s == kA) {
      std::swap(sec[0], sec[1]);
    } else {
      if (s & 1) push_token(sec[0], kA);
      push_token(sec[1], rotate_mask(s));
    }
  }
  return sec;
}

std::int64_t scaled_weight(const WeightTable& t, const std::vector<int>& word) {
  std::int64_t w = 0;
  for (int s : word) w += t.scaled[static_cast<std::size_t>(s)];
  return w;
}

ContractionReport contraction_certificate(const Rational& theta, const Rational& eta,
                                          std::size_t max_length) {
  if (!(eta > 0 && eta < 1)) throw DomainError("eta must lie strictly between 0 and 1");
  const WeightTable table = weight_table(theta);
  ContractionReport report;
  report.theta = theta;
  report.eta = eta;

  // Ratios are kept as exact fractions of scaled weights.
  std::int64_t best_num = 0, best_den = 1, rbest_num = 0, rbest_den = 1;
  auto better = [](std::int64_t n1, std::int64_t d1, std::int64_t n2, std::int64_t d2) {
    return static_cast<__int128>(n1) * d2 > static_cast<__int128>(n2) * d1;
  };
  std::vector<int> word;
  for (std::size_t k = 2; 2 * k <= max_length; k += 2) {
    std::vector<int> masks(k, 1);
    while (true) {
      std::size_t x_count = 0;
      for (int m : masks) x_count += m == 7 ? 1 : 0;
      const bool restricted = Rational(x_count) <= eta * Rational(k);
      for (int form = 0; form < 2; ++form) {
        word.clear();
        for (int m : masks) {
          if (form == 0) word.push_back(kA);
          word.push_back(m);
          if (form == 1) word.push_back(kA);
        }
        const auto sec = weighted_sections(word);
        const std::int64_t num = scaled_weight(table, sec[0]) + scaled_weight(table, sec[1]);
        const std::int64_t den = scaled_weight(table, word);
        ++report.sample_size;
        if (report.sample_size == 1 || better(num, den, best_num, best_den)) {
          best_num = num;
          best_den = den;
          report.argmax = word;
        }
        if (restricted) {
          if (report.restricted_size == 0 || better(num, den, rbest_num, rbest_den)) {
            rbest_num = num;
            rbest_den = den;
          }
          ++report.restricted_size;
        }
      }
      std::size_t i = 0;
      while (i < k && masks[i] == 7) masks[i++] = 1;
      if (i == k) break;
      ++masks[i];
    }
  }
  if (report.sample_size == 0) throw DomainError("sample is empty; the length must be at least 4");
  report.max_ratio = Rational(best_num, best_den);
  report.max_ratio_restricted = report.restricted_size ? Rational(rbest_num, rbest_den) : Rational(0);

  const double e = static_cast<double>(eta);
  const double th = static_cast<double>(theta);
  const double nx = table.value(7);
  double m = table.value(0);
  double mb = 1e300;
  for (std::size_t s = 1; s < 8; ++s) {
    m = std::min(m, table.value(s));
    if (s != 7) mb = std::min(mb, 1 + table.value(s));
  }
  report.zeta_literal = (e * nx + (1 - e) * m) / (e * nx + (1 - e) * th * m);
  report.zeta_corrected = (e * nx + (1 - e) * th * m) / (e * nx + (1 - e) * m);
  report.zeta_block = (e * (1 + nx) + (1 - e) * th * mb) / (e * (1 + nx) + (1 - e) * mb);
  return report;
}

CosetGrowth coset_growth(SelfSimilarGroup& group, const RaySpec& ray, std::size_t radius, int level_cap) {
  CosetGrowth out;
  out.level = level_cap;
  LevelImages images(group);
  std::vector<Perm> steps;
  for (std::size_t g = 0; g < group.rank(); ++g) {
    steps.push_back(images.letter(Letter::of(g), level_cap));
    steps.push_back(images.letter(Letter::of(g, true), level_cap));
  }
  const std::size_t points = level_size(group.degree(), level_cap);
  std::vector<bool> seen(points, false);
  std::vector<std::size_t> frontier{encode_vertex(ray.prefix(level_cap), group.degree())};
  seen[frontier[0]] = true;
  std::size_t total = 1;
  out.sizes.push_back(total);
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<std::size_t> next;
    for (std::size_t v : frontier) {
      for (const auto& s : steps) {
        const std::size_t u = s[v];
        if (!seen[u]) {
          seen[u] = true;
          next.push_back(u);
        }
      }
    }
    total += next.size();
    out.sizes.push_back(total);
    frontier = std::move(next);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t count = 0;
  for (std::size_t r = 1; r < out.sizes.size(); ++r) {
    if (out.sizes[r] >= points) break;
    const double x = std::log(static_cast<double>(r));
    const double y = std::log(static_cast<double>(out.sizes[r]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count >= 2) {
    const double n = static_cast<double>(count);
    out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return out;
}

}  // namespace arbor
