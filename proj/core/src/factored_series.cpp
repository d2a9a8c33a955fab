#include "exotica/factored_series.hpp"

#include <algorithm>
#include <set>

namespace exotica {

  std::int64_t dot(std::vector<std::int64_t> const& key,
                   std::vector<std::int64_t> const& weights) {
    if (key.size() != weights.size()) {
      throw InvalidArgument("functional has wrong length");
    }
    std::int64_t total = 0;
    for (std::size_t i = 0; i < key.size(); ++i) {
      total += key[i] * weights[i];
    }
    return total;
  }

  namespace {

    bool interacts(IntersectionLattice const&      L,
                   std::vector<std::size_t> const& a,
                   std::vector<std::size_t> const& b) {
      for (auto i : a) {
        for (auto j : b) {
          if (i == j || L.gram(i, j) != 0) {
            return true;
          }
        }
      }
      return false;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SeriesProduct
  ////////////////////////////////////////////////////////////////////////

  SeriesProduct::SeriesProduct(SWSeries factor) : _lattice(factor.lattice()) {
    _factors.push_back(std::move(factor));
  }

  void SeriesProduct::multiply(SWSeries const& s) {
    if (!same_lattice(*s.lattice(), *_lattice)) {
      throw LatticeMismatch("SeriesProduct::multiply: different lattices");
    }
    auto const            s_support = s.support();
    SWSeries              merged    = s;
    std::vector<SWSeries> kept;
    for (auto& f : _factors) {
      if (interacts(*_lattice, f.support(), s_support)) {
        merged = merged * f;
      } else {
        kept.push_back(std::move(f));
      }
    }
    kept.push_back(std::move(merged));
    _factors = std::move(kept);
  }

  Integer SeriesProduct::term_count() const {
    Integer n = 1;
    for (auto const& f : _factors) {
      n *= f.size();
    }
    return n;
  }

  bool SeriesProduct::empty() const {
    return std::any_of(
        _factors.begin(), _factors.end(), [](auto const& f) { return f.empty(); });
  }

  SWSeries SeriesProduct::expand() const {
    SWSeries result = SWSeries::unit(_lattice);
    for (auto const& f : _factors) {
      result = result * f;
    }
    return result;
  }

  std::pair<std::int64_t, std::int64_t>
  SeriesProduct::functional_range(std::vector<std::int64_t> const& weights) const {
    if (empty()) {
      throw PreconditionFailed("functional range of an empty product");
    }
    std::int64_t lo = 0, hi = 0;
    for (auto const& f : _factors) {
      std::int64_t flo = 0, fhi = 0;
      bool         first = true;
      for (auto const& [key, c] : f.terms()) {
        std::int64_t const v = dot(key, weights);
        if (first) {
          flo = fhi = v;
          first     = false;
        } else {
          flo = std::min(flo, v);
          fhi = std::max(fhi, v);
        }
      }
      lo += flo;
      hi += fhi;
    }
    return {lo, hi};
  }

  std::optional<std::int64_t>
  SeriesProduct::constant_value(std::vector<std::int64_t> const& weights) const {
    auto const [lo, hi] = functional_range(weights);
    if (lo != hi) {
      return std::nullopt;
    }
    return lo;
  }

  std::optional<std::int64_t> SeriesProduct::constant_square() const {
    std::int64_t total = 0;
    for (auto const& f : _factors) {
      std::optional<std::int64_t> sq;
      for (auto const& [key, c] : f.terms()) {
        std::int64_t const v = square(CohomologyClass(_lattice, key));
        if (sq && *sq != v) {
          return std::nullopt;
        }
        sq = v;
      }
      if (!sq) {
        return std::nullopt;
      }
      total += *sq;
    }
    return total;
  }

  SeriesProduct
  SeriesProduct::select_extreme(std::vector<std::int64_t> const& weights,
                                bool maximum) const {
    SeriesProduct out(*this);
    for (auto& f : out._factors) {
      std::optional<std::int64_t> best;
      for (auto const& [key, c] : f.terms()) {
        std::int64_t const v = dot(key, weights);
        if (!best || (maximum ? v > *best : v < *best)) {
          best = v;
        }
      }
      SWSeries kept(_lattice);
      for (auto const& [key, c] : f.terms()) {
        if (dot(key, weights) == *best) {
          kept.add_term(key, c);
        }
      }
      f = std::move(kept);
    }
    return out;
  }

  SeriesProduct
  SeriesProduct::argmax(std::vector<std::int64_t> const& weights) const {
    return select_extreme(weights, true);
  }

  SeriesProduct
  SeriesProduct::argmin(std::vector<std::int64_t> const& weights) const {
    return select_extreme(weights, false);
  }

  SeriesProduct SeriesProduct::lifted(LatticePtr const& target) const {
    SeriesProduct out(*this);
    out._lattice = target;
    for (auto& f : out._factors) {
      f = f.lifted(target);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // FactoredSeries
  ////////////////////////////////////////////////////////////////////////

  FactoredSeries::FactoredSeries(SWSeries s) : _lattice(s.lattice()) {
    _summands.emplace_back(std::move(s));
  }

  FactoredSeries::FactoredSeries(LatticePtr                 lattice,
                                 std::vector<SeriesProduct> summands)
      : _lattice(std::move(lattice)), _summands(std::move(summands)) {}

  Integer FactoredSeries::term_count() const {
    Integer n = 0;
    for (auto const& p : _summands) {
      n += p.term_count();
    }
    return n;
  }

  bool FactoredSeries::empty() const {
    return std::all_of(
        _summands.begin(), _summands.end(), [](auto const& p) { return p.empty(); });
  }

  void FactoredSeries::multiply(SWSeries const& s) {
    if (_summands.size() != 1) {
      *this = FactoredSeries(expand());
    }
    _summands.front().multiply(s);
  }

  SWSeries FactoredSeries::expand(std::size_t limit) const {
    if (term_count() > limit) {
      throw PreconditionFailed("refusing to expand a series with "
                               + term_count().str() + " terms");
    }
    SWSeries result(_lattice);
    for (auto const& p : _summands) {
      result = result + p.expand();
    }
    return result;
  }

  FactoredSeries FactoredSeries::lifted(LatticePtr const& target) const {
    std::vector<SeriesProduct> summands;
    for (auto const& p : _summands) {
      summands.push_back(p.lifted(target));
    }
    return FactoredSeries(target, std::move(summands));
  }

  std::optional<std::pair<std::int64_t, std::int64_t>>
  FactoredSeries::functional_range(std::vector<std::int64_t> const& weights) const {
    std::optional<std::pair<std::int64_t, std::int64_t>> range;
    for (auto const& p : _summands) {
      if (p.empty()) {
        continue;
      }
      auto const r = p.functional_range(weights);
      if (!range) {
        range = r;
      } else {
        range->first  = std::min(range->first, r.first);
        range->second = std::max(range->second, r.second);
      }
    }
    return range;
  }

  bool FactoredSeries::functional_is_constant(
      std::vector<std::int64_t> const& weights,
      std::int64_t                     value) const {
    auto const r = functional_range(weights);
    return !r || (r->first == value && r->second == value);
  }

  void FactoredSeries::add(FactoredSeries const& other) {
    if (!same_lattice(*_lattice, *other._lattice)) {
      throw LatticeMismatch("FactoredSeries::add: different lattices");
    }
    std::erase_if(_summands, [](SeriesProduct const& p) { return p.empty(); });
    for (auto const& p : other._summands) {
      if (!p.empty()) {
        _summands.push_back(p);
      }
    }
    if (_summands.empty()) {
      _summands.emplace_back(SWSeries(_lattice));
    }
  }

  FactoredSeries FactoredSeries::select(std::vector<std::int64_t> const& weights,
                                        std::int64_t                     value,
                                        std::size_t limit) const {
    std::vector<SeriesProduct> out;
    for (auto const& p : _summands) {
      if (p.empty()) {
        continue;
      }
      auto const [lo, hi] = p.functional_range(weights);
      if (value < lo || value > hi) {
        continue;
      }
      if (value == hi) {
        out.push_back(p.argmax(weights));
      } else if (value == lo) {
        out.push_back(p.argmin(weights));
      } else {
        if (p.term_count() > limit) {
          throw PreconditionFailed("select: interior value needs expanding "
                                   + p.term_count().str() + " terms");
        }
        SWSeries kept(_lattice);
        SWSeries const expanded = p.expand();
        for (auto const& [key, c] : expanded.terms()) {
          if (dot(key, weights) == value) {
            kept.add_term(key, c);
          }
        }
        out.emplace_back(std::move(kept));
      }
    }
    if (out.empty()) {
      return FactoredSeries(SWSeries(_lattice));
    }
    return FactoredSeries(_lattice, std::move(out));
  }

}  // namespace exotica
