#include "exotica/knots.hpp"

#include <utility>

namespace exotica {

  void KnotRecord::validate() const {
    if (genus < 0) {
      throw InvalidArgument("knot '" + name + "' has negative genus");
    }
    if (alexander.degree() > genus) {
      throw InvalidArgument("knot '" + name
                            + "': Alexander polynomial degree exceeds genus");
    }
    Integer const at_one = alexander.polynomial().evaluate_at_one();
    if (at_one != 1 && at_one != -1) {
      throw InvalidArgument("knot '" + name + "': Alexander polynomial at 1 is "
                            + at_one.str());
    }
  }

  KnotRecord unknot() {
    KnotRecord k{"unknot",
                 0,
                 SymmetricLaurentPolynomial(LaurentPolynomial::constant(1)),
                 false};
    k.validate();
    return k;
  }

  KnotRecord twist_knot(int m) {
    if (m < 1) {
      throw InvalidArgument("twist_knot: m must be at least 1, got "
                            + std::to_string(m));
    }
    Integer const     mm = m;
    LaurentPolynomial delta({{1, mm}, {0, -(2 * mm - 1)}, {-1, mm}});
    KnotRecord        k{"K_" + std::to_string(m),
                 1,
                 SymmetricLaurentPolynomial(std::move(delta)),
                 true};
    k.validate();
    return k;
  }

  KnotRecord left_handed_trefoil() {
    KnotRecord k = twist_knot(1);
    k.chirality  = "left-handed";
    return k;
  }

  IntMatrix twist_knot_seifert_matrix(int m) {
    if (m < 1) {
      throw InvalidArgument("twist_knot_seifert_matrix: m must be positive");
    }
    return {{-1, 1}, {0, -std::int64_t(m)}};
  }

  namespace {

    // q with a = q * b; throws if b does not divide a.
    LaurentPolynomial exact_divide(LaurentPolynomial a,
                                   LaurentPolynomial const& b) {
      if (b.is_zero()) {
        throw InvalidArgument("division by the zero polynomial");
      }
      if (a.is_zero()) {
        return a;
      }
      int const              bd     = b.max_degree();
      Integer const          lead   = b.coeff(bd);
      int const              lowest = a.min_degree() - b.min_degree();
      std::map<int, Integer> quotient;
      while (!a.is_zero()) {
        int const ad = a.max_degree();
        if (ad - bd < lowest) {
          throw InvalidArgument("inexact polynomial division");
        }
        Integer const ac = a.coeff(ad);
        if (ac % lead != 0) {
          throw InvalidArgument("inexact polynomial division");
        }
        Integer const q = ac / lead;
        quotient[ad - bd] += q;
        a = a - LaurentPolynomial::monomial(ad - bd, q) * b;
      }
      return LaurentPolynomial(std::move(quotient));
    }

    LaurentPolynomial bareiss_det(std::vector<std::vector<LaurentPolynomial>> M) {
      std::size_t const n = M.size();
      if (n == 0) {
        return LaurentPolynomial::constant(1);
      }
      bool              negate = false;
      LaurentPolynomial previous = LaurentPolynomial::constant(1);
      for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
          std::size_t swap_row = k + 1;
          while (swap_row < n && M[swap_row][k].is_zero()) {
            ++swap_row;
          }
          if (swap_row == n) {
            return LaurentPolynomial();
          }
          std::swap(M[k], M[swap_row]);
          negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
          for (std::size_t j = k + 1; j < n; ++j) {
            M[i][j] = exact_divide(M[k][k] * M[i][j] - M[i][k] * M[k][j],
                                   previous);
          }
          M[i][k] = LaurentPolynomial();
        }
        previous = M[k][k];
      }
      return negate ? -M[n - 1][n - 1] : M[n - 1][n - 1];
    }

  }  // namespace

  SymmetricLaurentPolynomial alexander_from_seifert(IntMatrix const& V) {
    std::size_t const n = V.size();
    for (auto const& row : V) {
      if (row.size() != n) {
        throw InvalidArgument("Seifert matrix is not square");
      }
    }
    if (n % 2 != 0) {
      throw InvalidArgument("Seifert matrix of odd size " + std::to_string(n)
                            + " has no symmetric normalisation");
    }
    // Entries of t V - V^T.
    std::vector<std::vector<LaurentPolynomial>> M(
        n, std::vector<LaurentPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        M[i][j] = LaurentPolynomial({{1, Integer(V[i][j])}, {0, -Integer(V[j][i])}});
      }
    }
    LaurentPolynomial const det = bareiss_det(std::move(M));
    // Multiply by t^{-n/2}.
    std::map<int, Integer> shifted;
    int const              shift = static_cast<int>(n / 2);
    for (auto const& [d, c] : det.coeffs()) {
      shifted[d - shift] = c;
    }
    LaurentPolynomial result(std::move(shifted));
    if (!result.is_palindromic()) {
      throw InvalidArgument("determinant " + result.to_string()
                            + " is not symmetric after normalisation");
    }
    return SymmetricLaurentPolynomial(std::move(result));
  }

}  // namespace exotica
