#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpf/error.hpp"

namespace qpf {

/// An element of the grading group Z^d. d = 0 encodes the trivial grading;
/// all degrees attached to one quiver share the same length d.
using Degree = std::vector<std::int64_t>;

Degree zero_degree(int rank);
Degree add_degree(const Degree& a, const Degree& b);
Degree negate_degree(const Degree& d);
std::string degree_str(const Degree& d);

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
    Degree deg;
};

/// A finite quiver with a Z^d weight on every arrow. Vertices are indexed by
/// position in `vertices`; arrows by position in `arrows`.
class GradedQuiver {
  public:
    GradedQuiver(int grading_rank, std::vector<std::string> vertices, std::vector<Arrow> arrows);

    int grading_rank() const { return rank_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex_name(int v) const { return vertices_[v]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::optional<int> vertex_index(const std::string& name) const;
    std::optional<int> arrow_index(const std::string& name) const;

  private:
    int rank_;
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vertex_by_name_;
    std::map<std::string, int> arrow_by_name_;
};

/// A path: a start vertex plus a (possibly empty) run of composable arrows.
/// The empty run is the stationary path e_i at its start vertex. Arrows
/// compose left to right: arrows[k] ends where arrows[k+1] begins.
struct Path {
    int start = 0;
    std::vector<int> arrows;

    std::size_t length() const { return arrows.size(); }
    bool is_stationary() const { return arrows.empty(); }
    int source() const { return start; }
    int target(const GradedQuiver& q) const {
        return arrows.empty() ? start : q.arrow(arrows.back()).tgt;
    }

    bool operator==(const Path& o) const = default;
};

/// The global monomial order: by length, then lexicographically by arrow
/// indices, then by start vertex. Fixed once; every canonical basis and
/// every Groebner leading term downstream depends on it.
bool path_less(const Path& a, const Path& b);

struct PathLess {
    bool operator()(const Path& a, const Path& b) const { return path_less(a, b); }
};

Path stationary_path(int vertex);
Path arrow_path(const GradedQuiver& q, int arrow);

/// Concatenation p then q; empty when t(p) != i(q) (the caller maps that to
/// the zero element of the path algebra).
std::optional<Path> compose(const GradedQuiver& q, const Path& p, const Path& r);

/// Sum of the arrow degrees; the zero vector for stationary paths.
Degree path_degree(const GradedQuiver& q, const Path& p);

std::string path_str(const GradedQuiver& q, const Path& p);

/// All paths of length <= max_len, ordered by the global path order
/// (deterministic across runs).
std::vector<Path> enumerate_paths(const GradedQuiver& q, std::size_t max_len);

}  // namespace qpf
