#include "exotica/laurent.hpp"

#include <sstream>

namespace exotica {

  LaurentPolynomial::LaurentPolynomial(std::map<int, Integer> coeffs)
      : _coeffs(std::move(coeffs)) {
    normalize();
  }

  LaurentPolynomial LaurentPolynomial::constant(Integer c) {
    return monomial(0, std::move(c));
  }

  LaurentPolynomial LaurentPolynomial::monomial(int degree, Integer c) {
    return LaurentPolynomial({{degree, std::move(c)}});
  }

  void LaurentPolynomial::normalize() {
    for (auto it = _coeffs.begin(); it != _coeffs.end();) {
      it = it->second == 0 ? _coeffs.erase(it) : std::next(it);
    }
  }

  Integer LaurentPolynomial::coeff(int degree) const {
    auto it = _coeffs.find(degree);
    return it == _coeffs.end() ? Integer(0) : it->second;
  }

  int LaurentPolynomial::max_degree() const {
    if (_coeffs.empty()) {
      throw InvalidArgument("degree of the zero polynomial");
    }
    return _coeffs.rbegin()->first;
  }

  int LaurentPolynomial::min_degree() const {
    if (_coeffs.empty()) {
      throw InvalidArgument("degree of the zero polynomial");
    }
    return _coeffs.begin()->first;
  }

  Integer LaurentPolynomial::evaluate_at_one() const {
    Integer total = 0;
    for (auto const& [d, c] : _coeffs) {
      total += c;
    }
    return total;
  }

  bool LaurentPolynomial::is_palindromic() const {
    for (auto const& [d, c] : _coeffs) {
      if (coeff(-d) != c) {
        return false;
      }
    }
    return true;
  }

  LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(*this);
    for (auto& [d, c] : r._coeffs) {
      c = -c;
    }
    return r;
  }

  LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
    LaurentPolynomial result = constant(1);
    LaurentPolynomial base   = *this;
    while (e != 0) {
      if (e & 1U) {
        result = result * base;
      }
      e >>= 1U;
      if (e != 0) {
        base = base * base;
      }
    }
    return result;
  }

  LaurentPolynomial operator+(LaurentPolynomial const& x,
                              LaurentPolynomial const& y) {
    std::map<int, Integer> r = x._coeffs;
    for (auto const& [d, c] : y._coeffs) {
      r[d] += c;
    }
    return LaurentPolynomial(std::move(r));
  }

  LaurentPolynomial operator-(LaurentPolynomial const& x,
                              LaurentPolynomial const& y) {
    return x + (-y);
  }

  LaurentPolynomial operator*(LaurentPolynomial const& x,
                              LaurentPolynomial const& y) {
    std::map<int, Integer> r;
    for (auto const& [dx, cx] : x._coeffs) {
      for (auto const& [dy, cy] : y._coeffs) {
        r[dx + dy] += cx * cy;
      }
    }
    return LaurentPolynomial(std::move(r));
  }

  std::string LaurentPolynomial::to_string() const {
    if (_coeffs.empty()) {
      return "0";
    }
    std::ostringstream out;
    bool               first = true;
    for (auto it = _coeffs.rbegin(); it != _coeffs.rend(); ++it) {
      auto const& [d, c] = *it;
      Integer const mag  = abs(c);
      if (first) {
        if (c < 0) {
          out << '-';
        }
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (d == 0) {
        out << mag;
        continue;
      }
      if (mag != 1) {
        out << mag;
      }
      out << 't';
      if (d != 1) {
        out << '^' << d;
      }
    }
    return out.str();
  }

  SymmetricLaurentPolynomial::SymmetricLaurentPolynomial(LaurentPolynomial p)
      : _p(std::move(p)) {
    if (!_p.is_palindromic()) {
      throw InvalidArgument("polynomial " + _p.to_string()
                            + " is not symmetric under t -> 1/t");
    }
  }

}  // namespace exotica
