#include "qpf/quiver.hpp"

#include <algorithm>

namespace qpf {

Degree zero_degree(int rank) { return Degree(rank, 0); }

Degree add_degree(const Degree& a, const Degree& b) {
    Degree r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Degree negate_degree(const Degree& d) {
    Degree r(d);
    for (auto& x : r) x = -x;
    return r;
}

std::string degree_str(const Degree& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

GradedQuiver::GradedQuiver(int grading_rank, std::vector<std::string> vertices,
                           std::vector<Arrow> arrows)
    : rank_(grading_rank), vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (int v = 0; v < num_vertices(); ++v) {
        if (!vertex_by_name_.emplace(vertices_[v], v).second)
            throw InputError("duplicate vertex name '" + vertices_[v] + "'");
    }
    for (int a = 0; a < num_arrows(); ++a) {
        const Arrow& ar = arrows_[a];
        if (!arrow_by_name_.emplace(ar.name, a).second)
            throw InputError("duplicate arrow name '" + ar.name + "'");
        if (ar.src < 0 || ar.src >= num_vertices() || ar.tgt < 0 || ar.tgt >= num_vertices())
            throw InputError("arrow '" + ar.name + "' references an undeclared vertex");
        if (static_cast<int>(ar.deg.size()) != rank_)
            throw InputError("arrow '" + ar.name + "' has degree arity " +
                             std::to_string(ar.deg.size()) + ", expected " +
                             std::to_string(rank_));
    }
}

std::optional<int> GradedQuiver::vertex_index(const std::string& name) const {
    auto it = vertex_by_name_.find(name);
    if (it == vertex_by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> GradedQuiver::arrow_index(const std::string& name) const {
    auto it = arrow_by_name_.find(name);
    if (it == arrow_by_name_.end()) return std::nullopt;
    return it->second;
}

bool path_less(const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.start < b.start;
}

Path stationary_path(int vertex) { return Path{vertex, {}}; }

Path arrow_path(const GradedQuiver& q, int arrow) {
    return Path{q.arrow(arrow).src, {arrow}};
}

std::optional<Path> compose(const GradedQuiver& q, const Path& p, const Path& r) {
    if (p.target(q) != r.source()) return std::nullopt;
    Path out = p;
    out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
    return out;
}

Degree path_degree(const GradedQuiver& q, const Path& p) {
    Degree d = zero_degree(q.grading_rank());
    for (int a : p.arrows) d = add_degree(d, q.arrow(a).deg);
    return d;
}

std::string path_str(const GradedQuiver& q, const Path& p) {
    if (p.is_stationary()) return "e_" + q.vertex_name(p.start);
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        if (k) s += ".";
        s += q.arrow(p.arrows[k]).name;
    }
    return s;
}

std::vector<Path> enumerate_paths(const GradedQuiver& q, std::size_t max_len) {
    std::vector<Path> all;
    std::vector<Path> level;
    for (int v = 0; v < q.num_vertices(); ++v) level.push_back(stationary_path(v));
    all = level;
    for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
        std::vector<Path> next;
        for (const Path& p : level) {
            int t = p.target(q);
            for (int a = 0; a < q.num_arrows(); ++a) {
                if (q.arrow(a).src != t) continue;
                Path ext = p;
                ext.arrows.push_back(a);
                next.push_back(std::move(ext));
            }
        }
        std::sort(next.begin(), next.end(), path_less);
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

}  // namespace qpf
