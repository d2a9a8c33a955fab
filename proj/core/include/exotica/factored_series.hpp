#pragma once

#include "exotica/swseries.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace exotica {

  // Product of SW series over one lattice whose supports are pairwise
  // disjoint and pairwise orthogonal under the pairing. Every class of the
  // product then factors uniquely, coefficients multiply, and squares add.
  class SeriesProduct {
   public:
    explicit SeriesProduct(SWSeries factor);

    LatticePtr const& lattice() const noexcept {
      return _lattice;
    }

    std::vector<SWSeries> const& factors() const noexcept {
      return _factors;
    }

    // Multiplies in `s`, merging it with every factor it is not disjoint
    // from (or not orthogonal to).
    void multiply(SWSeries const& s);

    Integer term_count() const;

    bool empty() const;

    SWSeries expand() const;

    // Min/max of  alpha -> sum_i weights_i alpha_i  over all terms.
    std::pair<std::int64_t, std::int64_t>
    functional_range(std::vector<std::int64_t> const& weights) const;

    // The functional's value if it is the same on every term.
    std::optional<std::int64_t>
    constant_value(std::vector<std::int64_t> const& weights) const;

    // The common square of all terms if every factor has constant squares.
    std::optional<std::int64_t> constant_square() const;

    // Sub-product of terms where the functional attains its maximum (or
    // minimum). Empty product if this product is empty.
    SeriesProduct argmax(std::vector<std::int64_t> const& weights) const;
    SeriesProduct argmin(std::vector<std::int64_t> const& weights) const;

    SeriesProduct lifted(LatticePtr const& target) const;

   private:
    SeriesProduct select_extreme(std::vector<std::int64_t> const& weights,
                                 bool                             maximum) const;

    LatticePtr            _lattice;
    std::vector<SWSeries> _factors;
  };

  // Sum of SeriesProducts with pairwise disjoint sets of classes. This is how
  // the surgery pipeline carries large SW series: the blow-up formula
  // multiplies by (e^E + e^-E) factors that never need expanding, and
  // rational blow-down filters select extremal sub-products.
  class FactoredSeries {
   public:
    explicit FactoredSeries(SWSeries s);

    LatticePtr const& lattice() const noexcept {
      return _lattice;
    }

    std::vector<SeriesProduct> const& summands() const noexcept {
      return _summands;
    }

    // Number of basic classes.
    Integer term_count() const;

    bool empty() const;

    // Multiplies by `s`. A sum of several products is expanded first, since
    // distributing could make summands overlap.
    void multiply(SWSeries const& s);

    // Full expansion. Throws PreconditionFailed if it has more than `limit`
    // terms.
    SWSeries expand(std::size_t limit = std::size_t(1) << 22) const;

    FactoredSeries lifted(LatticePtr const& target) const;

    // Appends the summands of `other`, whose classes must not occur here.
    void add(FactoredSeries const& other);

    // Min/max of the functional over all classes; nullopt for the empty
    // series.
    std::optional<std::pair<std::int64_t, std::int64_t>>
    functional_range(std::vector<std::int64_t> const& weights) const;

    bool functional_is_constant(std::vector<std::int64_t> const& weights,
                                std::int64_t                     value) const;

    // Classes on which the functional equals `value`, with their
    // coefficients. Exact; summands where `value` is not an extreme are
    // expanded (subject to `limit`).
    FactoredSeries select(std::vector<std::int64_t> const& weights,
                          std::int64_t                     value,
                          std::size_t limit = std::size_t(1) << 22) const;

   private:
    FactoredSeries(LatticePtr lattice, std::vector<SeriesProduct> summands);

    LatticePtr                 _lattice;
    std::vector<SeriesProduct> _summands;
  };

  std::int64_t dot(std::vector<std::int64_t> const& key,
                   std::vector<std::int64_t> const& weights);

}  // namespace exotica
