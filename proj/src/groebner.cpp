#include "qpf/groebner.hpp"

#include <algorithm>
#include <deque>

namespace qpf {

Presentation::Presentation(GradedQuiver q, Field f, std::vector<AlgElement> rels)
    : quiver(std::move(q)), field(f), relations(std::move(rels)) {
    for (const auto& r : relations) {
        if (r.is_zero()) throw InputError("zero relation");
        if (!homogeneous_degree(quiver, r))
            throw InputError("relation " + r.str(quiver) +
                             " is not homogeneous (degree- and endpoint-pure)");
        for (const auto& [p, c] : r.terms())
            if (p.length() < 2)
                throw InputError("relation " + r.str(quiver) +
                                 " has support on a path of length < 2");
    }
}

namespace {

/// Offset of the first occurrence of `factor.arrows` inside `p.arrows`, or -1.
int find_factor(const Path& p, const Path& factor) {
    const auto& hay = p.arrows;
    const auto& needle = factor.arrows;
    if (needle.empty() || needle.size() > hay.size()) return -1;
    for (std::size_t o = 0; o + needle.size() <= hay.size(); ++o) {
        if (std::equal(needle.begin(), needle.end(), hay.begin() + o))
            return static_cast<int>(o);
    }
    return -1;
}

Path subpath(const GradedQuiver& q, const Path& p, std::size_t from, std::size_t len) {
    Path s;
    s.start = from == 0 ? p.start : q.arrow(p.arrows[from - 1]).tgt;
    s.arrows.assign(p.arrows.begin() + from, p.arrows.begin() + from + len);
    return s;
}

/// pre * g * post, all compositions guaranteed by endpoint purity of g.
AlgElement sandwich(const GradedQuiver& q, const Path& pre, const AlgElement& g,
                    const Path& post) {
    AlgElement out(g.field());
    for (const auto& [t, c] : g.terms()) {
        Path full = *compose(q, *compose(q, pre, t), post);
        out.add_term(full, c);
    }
    return out;
}

}  // namespace

bool GroebnerBasis::is_reducible(const Path& p) const {
    for (const auto& g : elems_)
        if (find_factor(p, g.leading_path()) >= 0) return true;
    return false;
}

AlgElement GroebnerBasis::normal_form(const GradedQuiver& q, const AlgElement& x) const {
    AlgElement cur = x;
    // Always rewrite the largest reducible support path; each step replaces it
    // by strictly smaller paths, so this terminates.
    for (;;) {
        bool reduced = false;
        for (auto it = cur.terms().rbegin(); it != cur.terms().rend(); ++it) {
            const Path& p = it->first;
            for (const auto& g : elems_) {
                int off = find_factor(p, g.leading_path());
                if (off < 0) continue;
                Scalar c = it->second;
                Path pre = subpath(q, p, 0, off);
                Path post = subpath(q, p, off + g.leading_path().length(),
                                    p.length() - off - g.leading_path().length());
                cur = cur - sandwich(q, pre, g, post).scaled(c);
                reduced = true;
                break;
            }
            if (reduced) break;
        }
        if (!reduced) return cur;
    }
}

GroebnerBasis complete(const Presentation& p, std::size_t length_cap) {
    if (length_cap < 2) throw InputError("length cap must be at least 2");
    const GradedQuiver& q = p.quiver;
    GroebnerBasis gb(p.field);
    auto& basis = gb.elems_;

    std::deque<AlgElement> work(p.relations.begin(), p.relations.end());

    auto enqueue_overlaps = [&](const AlgElement& g1, const AlgElement& g2) {
        const Path& l1 = g1.leading_path();
        const Path& l2 = g2.leading_path();
        std::size_t maxs = std::min(l1.length(), l2.length()) - 1;
        for (std::size_t s = 1; s <= maxs; ++s) {
            // suffix of l1 of length s == prefix of l2 of length s
            if (!std::equal(l2.arrows.begin(), l2.arrows.begin() + s,
                            l1.arrows.end() - s))
                continue;
            Path u = subpath(q, l1, 0, l1.length() - s);
            Path v = subpath(q, l2, s, l2.length() - s);
            // S-polynomial g1*v - u*g2; the common leading path u*s*v cancels.
            AlgElement left = sandwich(q, stationary_path(l1.start), g1, v);
            AlgElement right = sandwich(q, u, g2, stationary_path(l2.target(q)));
            work.push_back(left - right);
        }
    };

    while (!work.empty()) {
        AlgElement cand = gb.normal_form(q, work.front());
        work.pop_front();
        if (cand.is_zero()) continue;
        if (cand.leading_path().length() > length_cap)
            throw CapError("completion produced a leading path of length " +
                           std::to_string(cand.leading_path().length()) +
                           " beyond the cap " + std::to_string(length_cap) +
                           " (quotient may be infinite dimensional or the cap too small)");
        cand = cand.monic();
        // Existing elements whose lead the new lead divides must be redone.
        std::vector<AlgElement> keep;
        for (auto& g : basis) {
            if (find_factor(g.leading_path(), cand.leading_path()) >= 0)
                work.push_back(g);
            else
                keep.push_back(std::move(g));
        }
        basis = std::move(keep);
        basis.push_back(cand);
        for (const auto& g : basis) {
            enqueue_overlaps(g, cand);
            if (!(g == cand)) enqueue_overlaps(cand, g);
        }
    }

    // Full inter-reduction: tails too. The reduced basis is unique.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            AlgElement g = basis[k];
            std::vector<AlgElement> others;
            for (std::size_t m = 0; m < basis.size(); ++m)
                if (m != k) others.push_back(basis[m]);
            GroebnerBasis rest(p.field);
            rest.elems_ = others;
            AlgElement red = rest.normal_form(q, g);
            if (!(red == g)) {
                changed = true;
                basis = std::move(others);
                if (!red.is_zero()) basis.push_back(red.monic());
                break;
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [](const AlgElement& a, const AlgElement& b) {
        return path_less(a.leading_path(), b.leading_path());
    });
    return gb;
}

std::vector<Path> normal_monomials(const Presentation& p, const GroebnerBasis& gb,
                                   std::size_t length_cap) {
    const GradedQuiver& q = p.quiver;
    std::vector<Path> result;
    std::vector<Path> level;
    for (int v = 0; v < q.num_vertices(); ++v) level.push_back(stationary_path(v));
    result = level;
    for (std::size_t len = 1; !level.empty(); ++len) {
        if (len > length_cap)
            throw CapError("normal monomials still appear at length " +
                           std::to_string(length_cap) +
                           "; quotient looks infinite dimensional (raise length_cap if not)");
        std::vector<Path> next;
        for (const Path& m : level) {
            int t = m.target(q);
            for (int a = 0; a < q.num_arrows(); ++a) {
                if (q.arrow(a).src != t) continue;
                Path ext = m;
                ext.arrows.push_back(a);
                // Only suffixes ending at the new arrow can newly match a lead.
                if (!gb.is_reducible(ext)) next.push_back(std::move(ext));
            }
        }
        std::sort(next.begin(), next.end(), path_less);
        result.insert(result.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return result;
}

}  // namespace qpf
