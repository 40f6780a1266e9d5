#pragma once

#include <vector>

#include "qpf/freealg.hpp"

namespace qpf {

/// A quiver together with homogeneous relations. Relations must be
/// H-homogeneous, endpoint-pure, and supported on paths of length >= 2;
/// the constructor validates all three.
struct Presentation {
    GradedQuiver quiver;
    Field field;
    std::vector<AlgElement> relations;

    Presentation(GradedQuiver q, Field f, std::vector<AlgElement> rels);
};

/// A reduced, monic generating set of the two-sided ideal <relations> whose
/// leading paths are pairwise non-dividing and whose overlap ambiguities all
/// reduce to zero. Unique given the ideal and the global path order.
class GroebnerBasis {
  public:
    explicit GroebnerBasis(Field f) : field_(f) {}

    const std::vector<AlgElement>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }

    /// The unique reduced representative of x modulo the ideal. Idempotent;
    /// maps every ideal element to zero.
    AlgElement normal_form(const GradedQuiver& q, const AlgElement& x) const;

    /// True when some leading path occurs as a contiguous factor of p.
    bool is_reducible(const Path& p) const;

  private:
    friend GroebnerBasis complete(const Presentation& p, std::size_t length_cap);
    Field field_;
    std::vector<AlgElement> elems_;  // monic, sorted by leading path
};

/// Buchberger-style overlap completion under the global (length, lex) order.
/// Throws CapError when a candidate leading path would exceed length_cap.
GroebnerBasis complete(const Presentation& p, std::size_t length_cap);

/// All paths irreducible modulo the leading terms, in global path order.
/// Finiteness is detected, not assumed: once every path of some length is
/// reducible, all longer ones are too (the order is length-dominant).
/// Throws CapError when irreducible paths persist at length_cap.
std::vector<Path> normal_monomials(const Presentation& p, const GroebnerBasis& gb,
                                   std::size_t length_cap);

}  // namespace qpf
