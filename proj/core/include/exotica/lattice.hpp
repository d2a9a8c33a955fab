#pragma once

#include "exotica/common.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace exotica {

  enum class BasisRole { fiber, section, exceptional, fiber_component };

  std::string to_string(BasisRole role);

  struct BasisClass {
    std::string name;
    BasisRole   role;

    bool operator==(BasisClass const&) const = default;
  };

  class IntersectionLattice;
  using LatticePtr = std::shared_ptr<IntersectionLattice const>;

  // A finite-rank free Z-module with a symmetric integer pairing. Only the
  // classes the construction actually pairs are modelled; pairings that are
  // never declared are 0.
  class IntersectionLattice {
   public:
    // Throws InvalidArgument if names repeat, the matrix is not square of the
    // right size, or it is not symmetric.
    static LatticePtr make(std::vector<BasisClass>                 basis,
                           std::vector<std::vector<std::int64_t>> gram);

    // Copy of this lattice with extra basis classes appended. `rows[j]` holds
    // the pairings of the j-th new class with every class before it (old
    // basis first, then earlier new classes); `squares[j]` its self-pairing.
    LatticePtr
    extended(std::vector<BasisClass> const&                new_classes,
             std::vector<std::vector<std::int64_t>> const& rows,
             std::vector<std::int64_t> const&              squares) const;

    std::size_t rank() const noexcept {
      return _basis.size();
    }

    BasisClass const& basis(std::size_t i) const {
      return _basis.at(i);
    }

    std::vector<BasisClass> const& basis() const noexcept {
      return _basis;
    }

    std::int64_t gram(std::size_t i, std::size_t j) const {
      return _gram.at(i * _basis.size() + j);
    }

    std::optional<std::size_t> index_of(std::string const& name) const;

    // Throws InvalidArgument when the name is absent.
    std::size_t require_index(std::string const& name) const;

    // True if `other`'s basis and pairing are a prefix of ours.
    bool extends(IntersectionLattice const& other) const;

    bool operator==(IntersectionLattice const& other) const;

   private:
    IntersectionLattice() = default;

    std::vector<BasisClass>   _basis;
    std::vector<std::int64_t> _gram;  // row-major, rank x rank
  };

  class CohomologyClass {
   public:
    CohomologyClass(LatticePtr lattice, std::vector<std::int64_t> coeffs);

    static CohomologyClass zero(LatticePtr lattice);
    static CohomologyClass basis(LatticePtr lattice, std::string const& name);

    LatticePtr const& lattice() const noexcept {
      return _lattice;
    }

    std::vector<std::int64_t> const& coeffs() const noexcept {
      return _coeffs;
    }

    std::int64_t coeff(std::size_t i) const {
      return _coeffs.at(i);
    }

    std::int64_t coeff(std::string const& name) const;

    bool is_zero() const noexcept;

    // Re-express in a lattice that extends ours (pads with zeros).
    CohomologyClass lifted(LatticePtr const& target) const;

    CohomologyClass operator-() const;

    friend CohomologyClass operator+(CohomologyClass const& x,
                                     CohomologyClass const& y);
    friend CohomologyClass operator-(CohomologyClass const& x,
                                     CohomologyClass const& y);
    friend CohomologyClass operator*(std::int64_t c, CohomologyClass const& x);

    bool operator==(CohomologyClass const& other) const;
    bool operator<(CohomologyClass const& other) const;

    // Human readable, e.g. "7f+E1-E2". Zero prints as "0".
    std::string to_string() const;

   private:
    LatticePtr                _lattice;
    std::vector<std::int64_t> _coeffs;
  };

  bool same_lattice(IntersectionLattice const& x, IntersectionLattice const& y);

  // x^T * gram * y. Throws LatticeMismatch if x and y live in different
  // lattices.
  std::int64_t pair(CohomologyClass const& x, CohomologyClass const& y);

  // As above, additionally requiring both classes to live in `lattice`.
  std::int64_t pair(IntersectionLattice const& lattice,
                    CohomologyClass const&     x,
                    CohomologyClass const&     y);

  std::int64_t square(CohomologyClass const& x);

  // gram * x as a coefficient vector, i.e. the functional y -> pair(y, x).
  std::vector<std::int64_t> pairing_functional(CohomologyClass const& x);

  // The lattice used by the surgery pipeline, built in one go:
  //   f, s, iota_s (the image section), E1..EN, u1..uM
  // with f.f=0, f.s=f.iota_s=1, s.s=iota_s.iota_s=-(2n+1), s.iota_s=0,
  // Ei.Ej=-delta_ij,
  // and the u's forming a chain of (-2)-spheres in a fiber with u1.s=1.
  LatticePtr make_surgery_lattice(int n,
                                  int num_exceptional,
                                  int num_fiber_components);

}  // namespace exotica
