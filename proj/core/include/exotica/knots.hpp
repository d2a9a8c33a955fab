#pragma once

#include "exotica/laurent.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace exotica {

  // A knot as the surgery pipeline sees it: a Seifert genus and a symmetric
  // Alexander polynomial. No diagrams.
  struct KnotRecord {
    std::string                name;
    int                        genus;
    SymmetricLaurentPolynomial alexander;
    // Genus-one twist knots admit the loop needed to trade the surgery genus
    // for a positive double point in a double node neighbourhood.
    bool        double_node_eligible = false;
    std::string chirality            = {};  // metadata only

    // Throws InvalidArgument if deg(alexander) > genus or alexander(1) != +-1.
    void validate() const;
  };

  KnotRecord unknot();

  // K_m: (2m-1) half twists in the twist region; genus 1,
  // Delta = m t - (2m-1) + m t^-1. Throws InvalidArgument for m < 1.
  KnotRecord twist_knot(int m);

  // K_1 as used for the additional surgeries.
  KnotRecord left_handed_trefoil();

  using IntMatrix = std::vector<std::vector<std::int64_t>>;

  // det(t^{1/2} V - t^{-1/2} V^T), computed exactly with fraction-free
  // elimination over Z[t]. Throws InvalidArgument if V is not square, has odd
  // size, or the result is not symmetric.
  SymmetricLaurentPolynomial alexander_from_seifert(IntMatrix const& V);

  // Seifert matrix of K_m for which alexander_from_seifert reproduces
  // twist_knot(m).alexander exactly (sign +1).
  IntMatrix twist_knot_seifert_matrix(int m);

}  // namespace exotica
