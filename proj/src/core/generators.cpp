#include "core/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/error.hpp"

namespace esat {

Formula gen_vdw(int j, int k, int n) {
  if (j < 2 || k < 2 || n < 0) throw Error("gen_vdw: need j,k >= 2 and n >= 0");
  Formula f(n);
  auto family = [&](int len, bool positive) {
    for (int d = 1; (len - 1) * d <= n - 1; ++d) {
      int last_start = n - (len - 1) * d;
      for (int i = 1; i <= last_start; ++i) {
        Clause c;
        c.reserve(len);
        for (int t = 0; t < len; ++t) c.push_back(positive ? i + t * d : -(i + t * d));
        ClauseMeta m;
        m.glide = GlideBounds{i - 1, last_start - i};
        f.add_clause(std::move(c), m);
      }
    }
  };
  family(j, true);
  family(k, false);
  return f;
}

std::vector<std::array<int, 3>> enumerate_triples(int n) {
  std::vector<std::array<int, 3>> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      long long cc = 1LL * a * a + 1LL * b * b;
      int c = static_cast<int>(std::llround(std::sqrt(static_cast<double>(cc))));
      while (1LL * c * c < cc) ++c;
      while (1LL * c * c > cc) --c;
      if (1LL * c * c == cc && c <= n) out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Formula gen_pythagorean(int n) {
  if (n < 0) throw Error("gen_pythagorean: need n >= 0");
  Formula f(n);
  for (const auto& [a, b, c] : enumerate_triples(n)) {
    ClauseMeta m;
    m.scale = ScaleCore{std::gcd(std::gcd(a, b), c), c};
    f.add_clause({a, b, c}, m);
    f.add_clause({-a, -b, -c}, m);
  }
  return f;
}

}  // namespace esat
