#include "maghyper/magnitude.hpp"

#include <utility>

#include "maghyper/errors.hpp"

namespace maghyper {

PolyMatrix z_matrix(const Hypergraph& h) {
  const DistanceMatrix dm = distance_matrix(h);
  const int n = dm.size;
  PolyMatrix z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::int64_t d2 = dm.d2(i, j);
      z(i, j) = d2 < 0 ? HalfPoly(0)
                       : HalfPoly::monomial(static_cast<int>(d2), Int(1));
    }
  }
  return z;
}

std::vector<RationalFn> weighting(const Hypergraph& h) {
  const PolyMatrix z = z_matrix(h);
  const int n = static_cast<int>(z.rows());
  PolyVector ones(n);
  for (int i = 0; i < n; ++i) ones(i) = HalfPoly(1);
  try {
    return linsolve_rational(z, ones);
  } catch (const InputError&) {
    // det Z(0) = det I = 1, so Z is never singular over Q(x).
    throw InternalError("Z-matrix reported singular");
  }
}

RationalFn magnitude_rational(const Hypergraph& h) {
  RationalFn total;
  for (const RationalFn& w : weighting(h)) total += w;
  return total;
}

HalfSeries magnitude_series(const Hypergraph& h, int order) {
  return series_expand(magnitude_rational(h), order);
}

HalfSeries neumann_magnitude(const Hypergraph& h, int order) {
  const DistanceMatrix dm = distance_matrix(h);
  const int n = dm.size;
  HalfSeries out = HalfSeries::zeros(order);

  // state[e][deg] = number of tuples of the current length ending at edge e
  // whose accumulated x-degree is deg. Length-1 tuples seed degree 0.
  std::vector<std::vector<Int>> state(n, std::vector<Int>(order + 1, Int(0)));
  for (int e = 0; e < n; ++e) state[e][0] = 1;
  out.coeffs[0] += Int(n);

  int sign = -1;
  for (;;) {
    std::vector<std::vector<Int>> next(n,
                                       std::vector<Int>(order + 1, Int(0)));
    bool any = false;
    for (int e = 0; e < n; ++e) {
      for (int deg = 0; deg <= order; ++deg) {
        if (state[e][deg].is_zero()) continue;
        for (int f = 0; f < n; ++f) {
          if (f == e) continue;
          const std::int64_t step = dm.d2(e, f);
          if (step < 0 || deg + step > order) continue;
          next[f][deg + static_cast<int>(step)] += state[e][deg];
          any = true;
        }
      }
    }
    if (!any) break;
    for (int f = 0; f < n; ++f) {
      for (int deg = 0; deg <= order; ++deg) {
        if (next[f][deg].is_zero()) continue;
        if (sign > 0) {
          out.coeffs[deg] += next[f][deg];
        } else {
          out.coeffs[deg] -= next[f][deg];
        }
      }
    }
    state = std::move(next);
    sign = -sign;
  }
  return out;
}

}  // namespace maghyper
