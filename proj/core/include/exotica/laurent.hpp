#pragma once

#include "exotica/common.hpp"

#include <map>
#include <string>

namespace exotica {

  // Integer Laurent polynomial in one variable t. Zero coefficients are never
  // stored.
  class LaurentPolynomial {
   public:
    LaurentPolynomial() = default;
    LaurentPolynomial(std::map<int, Integer> coeffs);

    static LaurentPolynomial constant(Integer c);
    static LaurentPolynomial monomial(int degree, Integer c = 1);

    Integer coeff(int degree) const;

    std::map<int, Integer> const& coeffs() const noexcept {
      return _coeffs;
    }

    bool is_zero() const noexcept {
      return _coeffs.empty();
    }

    // Throws InvalidArgument on the zero polynomial.
    int max_degree() const;
    int min_degree() const;

    Integer evaluate_at_one() const;

    // coeff(k) == coeff(-k) for every k.
    bool is_palindromic() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial pow(unsigned e) const;

    friend LaurentPolynomial operator+(LaurentPolynomial const&,
                                       LaurentPolynomial const&);
    friend LaurentPolynomial operator-(LaurentPolynomial const&,
                                       LaurentPolynomial const&);
    friend LaurentPolynomial operator*(LaurentPolynomial const&,
                                       LaurentPolynomial const&);

    bool operator==(LaurentPolynomial const&) const = default;

    // e.g. "2t - 3 + 2t^-1"
    std::string to_string() const;

   private:
    void normalize();

    std::map<int, Integer> _coeffs;
  };

  // A Laurent polynomial satisfying p(t) = p(1/t); the symmetric
  // normalisation of an Alexander polynomial.
  class SymmetricLaurentPolynomial {
   public:
    // Throws InvalidArgument if `p` is not palindromic.
    explicit SymmetricLaurentPolynomial(LaurentPolynomial p);

    LaurentPolynomial const& polynomial() const noexcept {
      return _p;
    }

    operator LaurentPolynomial const&() const noexcept {
      return _p;
    }

    int degree() const {
      return _p.is_zero() ? 0 : _p.max_degree();
    }

    friend SymmetricLaurentPolynomial
    operator*(SymmetricLaurentPolynomial const& x,
              SymmetricLaurentPolynomial const& y) {
      return SymmetricLaurentPolynomial(x._p * y._p);
    }

    bool operator==(SymmetricLaurentPolynomial const&) const = default;

   private:
    LaurentPolynomial _p;
  };

}  // namespace exotica
