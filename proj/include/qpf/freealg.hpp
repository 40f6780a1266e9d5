#pragma once

#include <map>

#include "qpf/matrix.hpp"
#include "qpf/quiver.hpp"

namespace qpf {

/// An element of the path algebra KQ: a finite K-linear combination of paths.
/// Zero coefficients are never stored, so equality is structural.
class AlgElement {
  public:
    explicit AlgElement(const Field& f) : field_(f) {}
    static AlgElement path_term(const Field& f, const Path& p,
                                const Scalar& c = Scalar());  // default: coefficient 1

    const Field& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<Path, Scalar, PathLess>& terms() const { return terms_; }
    Scalar coeff(const Path& p) const;

    void add_term(const Path& p, const Scalar& c);  // merges, drops zeros

    AlgElement operator+(const AlgElement& o) const;
    AlgElement operator-(const AlgElement& o) const;
    AlgElement operator-() const;
    AlgElement scaled(const Scalar& c) const;

    bool operator==(const AlgElement& o) const { return terms_ == o.terms_; }

    /// Largest support path in the global order. Requires a nonzero element.
    const Path& leading_path() const;
    const Scalar& leading_coeff() const;
    AlgElement monic() const;

    std::string str(const GradedQuiver& q) const;

  private:
    Field field_;
    std::map<Path, Scalar, PathLess> terms_;
};

/// Bilinear extension of path composition; non-composable pairs contribute 0.
AlgElement multiply(const GradedQuiver& q, const AlgElement& x, const AlgElement& y);

/// Partition of the support by path degree. The components sum to x; an empty
/// map iff x = 0.
std::map<Degree, AlgElement> homogeneous_components(const GradedQuiver& q, const AlgElement& x);

/// The unique degree when the support is degree-pure and endpoint-pure (all
/// paths share source and target); nullopt otherwise, and also for x = 0
/// (which is homogeneous of every degree by convention — test is_zero first).
std::optional<Degree> homogeneous_degree(const GradedQuiver& q, const AlgElement& x);

}  // namespace qpf
