#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library: polynomials are plain degree -> coefficient maps, series
// are maps from coefficient vectors, and matrices are long long arrays.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

  using big  = boost::multiprecision::cpp_int;
  using poly = std::map<int, big>;  // Laurent polynomial, degree -> coeff

  inline poly trim(poly p) {
    for (auto it = p.begin(); it != p.end();) {
      it = it->second == 0 ? p.erase(it) : std::next(it);
    }
    return p;
  }

  inline poly mul(poly const& a, poly const& b) {
    poly c;
    for (auto const& [i, x] : a) {
      for (auto const& [j, y] : b) {
        c[i + j] += x * y;
      }
    }
    return trim(c);
  }

  inline poly power(poly const& a, int e) {
    poly r{{0, 1}};
    for (int i = 0; i < e; ++i) {
      r = mul(r, a);
    }
    return r;
  }

  // (t - t^-1)^(2n-1) (m t^2 - (2m-1) + m t^-2)^2 (t^2 - 1 + t^-2)^(2k), the
  // SW polynomial in the fiber direction (t = e^f).
  inline poly sw_fiber_polynomial(int n, int k, int m) {
    poly const odd{{1, 1}, {-1, -1}};
    poly const km{{2, m}, {0, -(2 * m - 1)}, {-2, m}};
    poly const k1{{2, 1}, {0, -1}, {-2, 1}};
    return mul(mul(power(odd, 2 * n - 1), power(km, 2)), power(k1, 2 * k));
  }

  inline big leading_coefficient(poly const& p) {
    return p.empty() ? big(0) : p.rbegin()->second;
  }

  // All blown-up basic classes c f + sum eps_i E_i, i = 1..4k+4, where E_1..
  // E_{2k+2} sit on the first section and the rest on the second. With
  // f.s = 1, s.E = 0, E.E = -1 the first configuration vertex
  // s - 2(E_1 + ... + E_{2k+2}) pairs to c + 2 * sum_{first half} eps_i.
  struct scan_result {
    int64_t max_abs_first  = 0;  // over all classes, first section
    int64_t max_abs_second = 0;
    // classes with |pairing| = p on both sides: (c, mask, coeff), bit i of
    // mask set iff eps_{i+1} = +1
    std::vector<std::tuple<int, uint64_t, big>> survivors;
    uint64_t                                    classes = 0;
  };

  inline scan_result scan_blown_up_classes(int n, int k, int m) {
    poly const  sw   = sw_fiber_polynomial(n, k, m);
    int const   half = 2 * k + 2;
    int const   p    = 2 * n + 7 + 8 * k;
    uint64_t    lo_mask = (uint64_t(1) << half) - 1;
    scan_result r;
    for (uint64_t mask = 0; mask < (uint64_t(1) << (2 * half)); ++mask) {
      int const s1 = 2 * std::popcount(mask & lo_mask) - half;
      int const s2 = 2 * std::popcount(mask >> half) - half;
      for (auto const& [c, coeff] : sw) {
        ++r.classes;
        int64_t const a1 = c + 2 * s1;
        int64_t const a2 = c + 2 * s2;
        r.max_abs_first  = std::max<int64_t>(r.max_abs_first, std::abs(a1));
        r.max_abs_second = std::max<int64_t>(r.max_abs_second, std::abs(a2));
        if (std::abs(a1) == p && std::abs(a2) == p) {
          r.survivors.emplace_back(c, mask, coeff);
        }
      }
    }
    return r;
  }

  // Naive group-ring arithmetic on integer vectors.
  using vec    = std::vector<int64_t>;
  using series = std::map<vec, big>;

  inline series convolve(series const& a, series const& b) {
    series c;
    for (auto const& [x, cx] : a) {
      for (auto const& [y, cy] : b) {
        vec z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
          z[i] = x[i] + y[i];
        }
        c[z] += cx * cy;
      }
    }
    for (auto it = c.begin(); it != c.end();) {
      it = it->second == 0 ? c.erase(it) : std::next(it);
    }
    return c;
  }

  inline series random_series(std::mt19937_64& rng, std::size_t rank) {
    std::uniform_int_distribution<int> terms(0, 5);
    std::uniform_int_distribution<int> coord(-3, 3);
    std::uniform_int_distribution<int> coeff(-4, 4);
    series                             s;
    int const                          count = terms(rng);
    for (int t = 0; t < count; ++t) {
      vec v(rank);
      for (auto& x : v) {
        x = coord(rng);
      }
      s[v] += coeff(rng);
    }
    for (auto it = s.begin(); it != s.end();) {
      it = it->second == 0 ? s.erase(it) : std::next(it);
    }
    return s;
  }

  // 2x2 integer matrices for torus words given as strings over a, b, A, B
  // (capitals are inverses).
  using mat = std::array<long long, 4>;

  inline mat mul(mat const& x, mat const& y) {
    return {x[0] * y[0] + x[1] * y[2],
            x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
  }

  inline mat torus(std::string const& w) {
    mat r{1, 0, 0, 1};
    for (char ch : w) {
      mat const g = ch == 'a'   ? mat{1, 1, 0, 1}
                    : ch == 'A' ? mat{1, -1, 0, 1}
                    : ch == 'b' ? mat{1, 0, -1, 1}
                                : mat{1, 0, 1, 1};
      r = mul(r, g);
    }
    return r;
  }

  // det(t V - V^T) by permutation expansion, shifted by -size/2: the
  // symmetrised Alexander polynomial.
  inline poly alexander(std::vector<std::vector<int64_t>> const& V) {
    std::size_t const d = V.size();
    std::vector<int>  perm(d);
    for (std::size_t i = 0; i < d; ++i) {
      perm[i] = static_cast<int>(i);
    }
    poly total;
    do {
      int sign = 1;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
          if (perm[i] > perm[j]) {
            sign = -sign;
          }
        }
      }
      poly term{{0, sign}};
      for (std::size_t i = 0; i < d; ++i) {
        auto const j = static_cast<std::size_t>(perm[i]);
        term         = mul(term, poly{{1, V[i][j]}, {0, -V[j][i]}});
      }
      for (auto const& [e, c] : term) {
        total[e - static_cast<int>(d / 2)] += c;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return trim(total);
  }

}  // namespace oracle
