#include "exotica/swseries.hpp"

#include <set>
#include <sstream>

namespace exotica {

  SWSeries::SWSeries(LatticePtr lattice) : _lattice(std::move(lattice)) {
    if (!_lattice) {
      throw InvalidArgument("SW series without a lattice");
    }
  }

  SWSeries SWSeries::unit(LatticePtr lattice) {
    SWSeries s(lattice);
    s._terms.emplace(Key(lattice->rank(), 0), 1);
    return s;
  }

  SWSeries SWSeries::monomial(CohomologyClass const& c, Integer coeff) {
    SWSeries s(c.lattice());
    s.add_term(c, coeff);
    return s;
  }

  void SWSeries::add_term(CohomologyClass const& c, Integer const& coeff) {
    if (!same_lattice(*c.lattice(), *_lattice)) {
      throw LatticeMismatch("class does not belong to the series' lattice");
    }
    add_term(c.coeffs(), coeff);
  }

  void SWSeries::add_term(Key const& key, Integer const& coeff) {
    if (key.size() != _lattice->rank()) {
      throw InvalidArgument("SW series key has wrong length");
    }
    if (coeff == 0) {
      return;
    }
    auto [it, inserted] = _terms.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  Integer SWSeries::coefficient(CohomologyClass const& c) const {
    if (!same_lattice(*c.lattice(), *_lattice)) {
      throw LatticeMismatch("class does not belong to the series' lattice");
    }
    auto it = _terms.find(c.coeffs());
    return it == _terms.end() ? Integer(0) : it->second;
  }

  std::vector<std::pair<CohomologyClass, Integer>>
  SWSeries::basic_classes() const {
    std::vector<std::pair<CohomologyClass, Integer>> out;
    out.reserve(_terms.size());
    for (auto const& [key, coeff] : _terms) {
      out.emplace_back(CohomologyClass(_lattice, key), coeff);
    }
    return out;
  }

  std::vector<std::size_t> SWSeries::support() const {
    std::set<std::size_t> s;
    for (auto const& [key, coeff] : _terms) {
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] != 0) {
          s.insert(i);
        }
      }
    }
    return {s.begin(), s.end()};
  }

  SWSeries SWSeries::lifted(LatticePtr const& target) const {
    if (!target->extends(*_lattice)) {
      throw LatticeMismatch("cannot lift series: target lattice does not "
                            "extend the source lattice");
    }
    SWSeries out(target);
    for (auto const& [key, coeff] : _terms) {
      Key k(key);
      k.resize(target->rank(), 0);
      out._terms.emplace_hint(out._terms.end(), std::move(k), coeff);
    }
    return out;
  }

  SWSeries SWSeries::conjugated() const {
    SWSeries out(_lattice);
    for (auto const& [key, coeff] : _terms) {
      Key k(key);
      for (auto& c : k) {
        c = -c;
      }
      out._terms.emplace(std::move(k), coeff);
    }
    return out;
  }

  std::optional<int> SWSeries::conjugation_sign() const {
    SWSeries const c = conjugated();
    if (c == *this) {
      return 1;
    }
    if (c == -*this) {
      return -1;
    }
    return std::nullopt;
  }

  SWSeries SWSeries::operator-() const {
    SWSeries out(*this);
    for (auto& [key, coeff] : out._terms) {
      coeff = -coeff;
    }
    return out;
  }

  namespace {
    void require_same(SWSeries const& x, SWSeries const& y) {
      if (!same_lattice(*x.lattice(), *y.lattice())) {
        throw LatticeMismatch("SW series belong to different lattices");
      }
    }
  }  // namespace

  SWSeries operator+(SWSeries const& x, SWSeries const& y) {
    require_same(x, y);
    SWSeries out(x);
    for (auto const& [key, coeff] : y._terms) {
      out.add_term(key, coeff);
    }
    return out;
  }

  SWSeries operator-(SWSeries const& x, SWSeries const& y) {
    return x + (-y);
  }

  SWSeries operator*(SWSeries const& x, SWSeries const& y) {
    require_same(x, y);
    SWSeries          out(x._lattice);
    std::size_t const r = x._lattice->rank();
    SWSeries::Key     k(r);
    for (auto const& [kx, cx] : x._terms) {
      for (auto const& [ky, cy] : y._terms) {
        for (std::size_t i = 0; i < r; ++i) {
          k[i] = kx[i] + ky[i];
        }
        out.add_term(k, cx * cy);
      }
    }
    return out;
  }

  bool SWSeries::operator==(SWSeries const& other) const {
    return same_lattice(*_lattice, *other._lattice) && _terms == other._terms;
  }

  std::string SWSeries::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::ostringstream out;
    bool               first = true;
    for (auto it = _terms.rbegin(); it != _terms.rend(); ++it) {
      Integer const& c = it->second;
      if (!first) {
        out << (c < 0 ? " - " : " + ");
      } else if (c < 0) {
        out << '-';
      }
      first = false;
      Integer const mag = abs(c);
      if (mag != 1) {
        out << mag << '*';
      }
      out << "e^{" << CohomologyClass(_lattice, it->first).to_string() << '}';
    }
    return out.str();
  }

  SWSeries multiply(SWSeries const& A, SWSeries const& B) {
    return A * B;
  }

  SWSeries embed_laurent(LaurentPolynomial const& p,
                         CohomologyClass const&   direction) {
    if (direction.is_zero()) {
      throw InvalidArgument("embed_laurent: direction must be nonzero");
    }
    SWSeries out(direction.lattice());
    for (auto const& [degree, coeff] : p.coeffs()) {
      out.add_term(std::int64_t(degree) * direction, coeff);
    }
    return out;
  }

  std::vector<std::pair<CohomologyClass, Integer>>
  basic_classes(SWSeries const& S) {
    return S.basic_classes();
  }

  Integer const& LeadingTerms::unique_coefficient() const {
    if (terms.size() != 1) {
      throw PreconditionFailed(std::to_string(terms.size())
                               + " classes share the maximal degree "
                               + std::to_string(degree));
    }
    return terms.front().second;
  }

  LeadingTerms max_coefficient_in_direction(SWSeries const& S,
                                            std::size_t     index) {
    if (S.empty()) {
      throw InvalidArgument("max_coefficient_in_direction: empty series");
    }
    if (index >= S.lattice()->rank()) {
      throw InvalidArgument("max_coefficient_in_direction: index out of range");
    }
    LeadingTerms result{0, {}};
    bool         first = true;
    for (auto const& [key, coeff] : S.terms()) {
      std::int64_t const d = key[index];
      if (first || d > result.degree) {
        result.degree = d;
        result.terms.clear();
        first = false;
      }
      if (d == result.degree) {
        result.terms.emplace_back(CohomologyClass(S.lattice(), key), coeff);
      }
    }
    return result;
  }

  bool simple_type_check(SWSeries const& S, std::int64_t chi, std::int64_t sigma) {
    std::int64_t const expected = 3 * sigma + 2 * chi;
    for (auto const& [key, coeff] : S.terms()) {
      if (square(CohomologyClass(S.lattice(), key)) != expected) {
        return false;
      }
    }
    return true;
  }

}  // namespace exotica
