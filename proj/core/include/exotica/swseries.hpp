#pragma once

#include "exotica/laurent.hpp"
#include "exotica/lattice.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace exotica {

  // Finite formal sum  sum_a SW(a) e^a  over classes of one lattice, i.e. an
  // element of the integral group ring Z[H]. Zero coefficients are dropped.
  class SWSeries {
   public:
    using Key   = std::vector<std::int64_t>;
    using Terms = std::map<Key, Integer>;

    explicit SWSeries(LatticePtr lattice);

    // The unit e^0.
    static SWSeries unit(LatticePtr lattice);
    static SWSeries monomial(CohomologyClass const& c, Integer coeff = 1);

    LatticePtr const& lattice() const noexcept {
      return _lattice;
    }

    Terms const& terms() const noexcept {
      return _terms;
    }

    std::size_t size() const noexcept {
      return _terms.size();
    }

    bool empty() const noexcept {
      return _terms.empty();
    }

    void add_term(CohomologyClass const& c, Integer const& coeff);
    void add_term(Key const& key, Integer const& coeff);

    Integer coefficient(CohomologyClass const& c) const;

    // All (class, SW) pairs with SW != 0, in canonical (lexicographic
    // coefficient-vector) order.
    std::vector<std::pair<CohomologyClass, Integer>> basic_classes() const;

    // Coordinates on which some basic class is nonzero.
    std::vector<std::size_t> support() const;

    SWSeries lifted(LatticePtr const& target) const;

    // e^a -> e^-a.
    SWSeries conjugated() const;

    // +1 / -1 if conjugated() == +-*this, nullopt otherwise.
    std::optional<int> conjugation_sign() const;

    SWSeries operator-() const;

    friend SWSeries operator+(SWSeries const& x, SWSeries const& y);
    friend SWSeries operator-(SWSeries const& x, SWSeries const& y);
    friend SWSeries operator*(SWSeries const& x, SWSeries const& y);

    bool operator==(SWSeries const& other) const;

    std::string to_string() const;

   private:
    LatticePtr _lattice;
    Terms      _terms;
  };

  // Convolution product; throws LatticeMismatch on different lattices.
  SWSeries multiply(SWSeries const& A, SWSeries const& B);

  // sum_k p_k e^{k * direction}. Throws InvalidArgument for a zero direction.
  SWSeries embed_laurent(LaurentPolynomial const& p,
                         CohomologyClass const&   direction);

  std::vector<std::pair<CohomologyClass, Integer>>
  basic_classes(SWSeries const& S);

  struct LeadingTerms {
    std::int64_t                                     degree;
    std::vector<std::pair<CohomologyClass, Integer>> terms;

    // The single coefficient at maximal degree; throws PreconditionFailed
    // when several classes share that degree.
    Integer const& unique_coefficient() const;
  };

  // Terms of maximal coordinate `index` (e.g. the fiber coordinate).
  // Throws InvalidArgument on the empty series.
  LeadingTerms max_coefficient_in_direction(SWSeries const& S,
                                            std::size_t     index);

  // alpha^2 == 3 sigma + 2 chi for every basic class alpha.
  bool simple_type_check(SWSeries const& S, std::int64_t chi, std::int64_t sigma);

}  // namespace exotica
