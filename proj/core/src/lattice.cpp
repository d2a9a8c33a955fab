#include "exotica/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace exotica {

  std::string to_string(Integer const& value) {
    return value.str();
  }

  std::string to_string(BasisRole role) {
    switch (role) {
      case BasisRole::fiber:
        return "fiber";
      case BasisRole::section:
        return "section";
      case BasisRole::exceptional:
        return "exceptional";
      case BasisRole::fiber_component:
        return "fiber-component";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // IntersectionLattice
  ////////////////////////////////////////////////////////////////////////

  LatticePtr
  IntersectionLattice::make(std::vector<BasisClass>                 basis,
                            std::vector<std::vector<std::int64_t>> gram) {
    std::size_t const     r = basis.size();
    std::set<std::string> names;
    for (auto const& b : basis) {
      if (b.name.empty()) {
        throw InvalidArgument("basis class with empty name");
      }
      if (!names.insert(b.name).second) {
        throw InvalidArgument("duplicate basis class name '" + b.name + "'");
      }
    }
    if (gram.size() != r) {
      throw InvalidArgument("gram matrix has " + std::to_string(gram.size())
                            + " rows, expected " + std::to_string(r));
    }
    auto* raw = new IntersectionLattice();
    LatticePtr result(raw);
    raw->_basis = std::move(basis);
    raw->_gram.resize(r * r);
    for (std::size_t i = 0; i < r; ++i) {
      if (gram[i].size() != r) {
        throw InvalidArgument("gram matrix row " + std::to_string(i)
                              + " has wrong length");
      }
      for (std::size_t j = 0; j < r; ++j) {
        raw->_gram[i * r + j] = gram[i][j];
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        if (gram[i][j] != gram[j][i]) {
          throw InvalidArgument("gram matrix is not symmetric at ("
                                + std::to_string(i) + ", " + std::to_string(j)
                                + ")");
        }
      }
    }
    return result;
  }

  LatticePtr IntersectionLattice::extended(
      std::vector<BasisClass> const&                new_classes,
      std::vector<std::vector<std::int64_t>> const& rows,
      std::vector<std::int64_t> const&              squares) const {
    if (rows.size() != new_classes.size()
        || squares.size() != new_classes.size()) {
      throw InvalidArgument("extended: mismatched argument lengths");
    }
    std::size_t const old_rank = rank();
    std::size_t const new_rank = old_rank + new_classes.size();

    auto*      raw = new IntersectionLattice();
    LatticePtr result(raw);
    raw->_basis = _basis;
    std::set<std::string> names;
    for (auto const& b : _basis) {
      names.insert(b.name);
    }
    for (auto const& b : new_classes) {
      if (!names.insert(b.name).second) {
        throw InvalidArgument("duplicate basis class name '" + b.name + "'");
      }
      raw->_basis.push_back(b);
    }
    raw->_gram.assign(new_rank * new_rank, 0);
    for (std::size_t i = 0; i < old_rank; ++i) {
      std::copy_n(_gram.begin() + i * old_rank,
                  old_rank,
                  raw->_gram.begin() + i * new_rank);
    }
    for (std::size_t j = 0; j < new_classes.size(); ++j) {
      std::size_t const row = old_rank + j;
      if (rows[j].size() != row) {
        throw InvalidArgument("extended: pairing row for '"
                              + new_classes[j].name + "' has length "
                              + std::to_string(rows[j].size()) + ", expected "
                              + std::to_string(row));
      }
      for (std::size_t i = 0; i < row; ++i) {
        raw->_gram[row * new_rank + i] = rows[j][i];
        raw->_gram[i * new_rank + row] = rows[j][i];
      }
      raw->_gram[row * new_rank + row] = squares[j];
    }
    return result;
  }

  std::optional<std::size_t>
  IntersectionLattice::index_of(std::string const& name) const {
    for (std::size_t i = 0; i < _basis.size(); ++i) {
      if (_basis[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::size_t IntersectionLattice::require_index(std::string const& name) const {
    auto i = index_of(name);
    if (!i) {
      throw InvalidArgument("no basis class named '" + name + "'");
    }
    return *i;
  }

  bool IntersectionLattice::extends(IntersectionLattice const& other) const {
    std::size_t const r = other.rank();
    if (r > rank()) {
      return false;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (!(_basis[i] == other._basis[i])) {
        return false;
      }
      for (std::size_t j = 0; j < r; ++j) {
        if (gram(i, j) != other.gram(i, j)) {
          return false;
        }
      }
    }
    return true;
  }

  bool IntersectionLattice::operator==(IntersectionLattice const& other) const {
    return _basis == other._basis && _gram == other._gram;
  }

  bool same_lattice(IntersectionLattice const& x, IntersectionLattice const& y) {
    return &x == &y || x == y;
  }

  ////////////////////////////////////////////////////////////////////////
  // CohomologyClass
  ////////////////////////////////////////////////////////////////////////

  CohomologyClass::CohomologyClass(LatticePtr                lattice,
                                   std::vector<std::int64_t> coeffs)
      : _lattice(std::move(lattice)), _coeffs(std::move(coeffs)) {
    if (!_lattice) {
      throw InvalidArgument("cohomology class without a lattice");
    }
    if (_coeffs.size() != _lattice->rank()) {
      throw InvalidArgument("coefficient vector has length "
                            + std::to_string(_coeffs.size())
                            + ", lattice rank is "
                            + std::to_string(_lattice->rank()));
    }
  }

  CohomologyClass CohomologyClass::zero(LatticePtr lattice) {
    std::size_t const r = lattice->rank();
    return CohomologyClass(std::move(lattice), std::vector<std::int64_t>(r, 0));
  }

  CohomologyClass CohomologyClass::basis(LatticePtr         lattice,
                                         std::string const& name) {
    std::size_t const         i = lattice->require_index(name);
    std::vector<std::int64_t> v(lattice->rank(), 0);
    v[i] = 1;
    return CohomologyClass(std::move(lattice), std::move(v));
  }

  std::int64_t CohomologyClass::coeff(std::string const& name) const {
    return _coeffs[_lattice->require_index(name)];
  }

  bool CohomologyClass::is_zero() const noexcept {
    return std::all_of(
        _coeffs.begin(), _coeffs.end(), [](auto c) { return c == 0; });
  }

  CohomologyClass CohomologyClass::lifted(LatticePtr const& target) const {
    if (!target->extends(*_lattice)) {
      throw LatticeMismatch("cannot lift class: target lattice does not extend "
                            "the source lattice");
    }
    std::vector<std::int64_t> v(_coeffs);
    v.resize(target->rank(), 0);
    return CohomologyClass(target, std::move(v));
  }

  namespace {
    void require_same(CohomologyClass const& x, CohomologyClass const& y) {
      if (!same_lattice(*x.lattice(), *y.lattice())) {
        throw LatticeMismatch("classes belong to different lattices");
      }
    }
  }  // namespace

  CohomologyClass CohomologyClass::operator-() const {
    std::vector<std::int64_t> v(_coeffs);
    for (auto& c : v) {
      c = -c;
    }
    return CohomologyClass(_lattice, std::move(v));
  }

  CohomologyClass operator+(CohomologyClass const& x, CohomologyClass const& y) {
    require_same(x, y);
    std::vector<std::int64_t> v(x._coeffs);
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] += y._coeffs[i];
    }
    return CohomologyClass(x._lattice, std::move(v));
  }

  CohomologyClass operator-(CohomologyClass const& x, CohomologyClass const& y) {
    return x + (-y);
  }

  CohomologyClass operator*(std::int64_t c, CohomologyClass const& x) {
    std::vector<std::int64_t> v(x._coeffs);
    for (auto& a : v) {
      a *= c;
    }
    return CohomologyClass(x._lattice, std::move(v));
  }

  bool CohomologyClass::operator==(CohomologyClass const& other) const {
    return same_lattice(*_lattice, *other._lattice) && _coeffs == other._coeffs;
  }

  bool CohomologyClass::operator<(CohomologyClass const& other) const {
    return _coeffs < other._coeffs;
  }

  std::string CohomologyClass::to_string() const {
    std::ostringstream out;
    bool               first = true;
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      std::int64_t const c = _coeffs[i];
      if (c == 0) {
        continue;
      }
      if (c < 0) {
        out << '-';
      } else if (!first) {
        out << '+';
      }
      if (c != 1 && c != -1) {
        out << (c < 0 ? -c : c);
      }
      out << _lattice->basis(i).name;
      first = false;
    }
    return first ? "0" : out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Pairing
  ////////////////////////////////////////////////////////////////////////

  std::int64_t pair(CohomologyClass const& x, CohomologyClass const& y) {
    require_same(x, y);
    auto const&       L = *x.lattice();
    std::size_t const r = L.rank();
    std::int64_t      total = 0;
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t const xi = x.coeff(i);
      if (xi == 0) {
        continue;
      }
      for (std::size_t j = 0; j < r; ++j) {
        total += xi * L.gram(i, j) * y.coeff(j);
      }
    }
    return total;
  }

  std::int64_t pair(IntersectionLattice const& lattice,
                    CohomologyClass const&     x,
                    CohomologyClass const&     y) {
    if (!same_lattice(lattice, *x.lattice())
        || !same_lattice(lattice, *y.lattice())) {
      throw LatticeMismatch("class does not belong to the given lattice");
    }
    return pair(x, y);
  }

  std::int64_t square(CohomologyClass const& x) {
    return pair(x, x);
  }

  std::vector<std::int64_t> pairing_functional(CohomologyClass const& x) {
    auto const&               L = *x.lattice();
    std::size_t const         r = L.rank();
    std::vector<std::int64_t> w(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
      std::int64_t const xj = x.coeff(j);
      if (xj == 0) {
        continue;
      }
      for (std::size_t i = 0; i < r; ++i) {
        w[i] += L.gram(i, j) * xj;
      }
    }
    return w;
  }

  LatticePtr make_surgery_lattice(int n,
                                  int num_exceptional,
                                  int num_fiber_components) {
    if (n < 1) {
      throw InvalidArgument("make_surgery_lattice: n must be positive");
    }
    if (num_exceptional < 0 || num_fiber_components < 0) {
      throw InvalidArgument("make_surgery_lattice: negative class count");
    }
    std::int64_t const section_square = -(2 * std::int64_t(n) + 1);
    auto               L = IntersectionLattice::make(
        {{"f", BasisRole::fiber},
         {"s", BasisRole::section},
         {"iota_s", BasisRole::section}},
        {{0, 1, 1}, {1, section_square, 0}, {1, 0, section_square}});

    std::vector<BasisClass>                new_classes;
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t>              squares;
    std::size_t                            width = L->rank();
    for (int i = 1; i <= num_exceptional; ++i) {
      new_classes.push_back({"E" + std::to_string(i), BasisRole::exceptional});
      rows.emplace_back(width++, 0);
      squares.push_back(-1);
    }
    for (int i = 1; i <= num_fiber_components; ++i) {
      new_classes.push_back(
          {"u" + std::to_string(i), BasisRole::fiber_component});
      std::vector<std::int64_t> row(width, 0);
      if (i == 1) {
        row[1] = 1;  // meets s
      } else {
        row[width - 1] = 1;  // previous sphere in the chain
      }
      rows.push_back(std::move(row));
      ++width;
      squares.push_back(-2);
    }
    return L->extended(new_classes, rows, squares);
  }

}  // namespace exotica
