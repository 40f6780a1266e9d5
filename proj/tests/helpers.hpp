#pragma once

#include <random>

#include "qpf/report.hpp"

namespace qpftest {

using namespace qpf;

/// Cyclic Nakayama quiver: n vertices 1..n, arrows a1..an with a_i: i -> i+1,
/// all paths of length m as relations.
inline AlgebraHandle cyclic(int n, int m, Field f = Field::rationals()) {
    std::vector<std::string> vs;
    std::vector<Arrow> as;
    for (int i = 0; i < n; ++i) vs.push_back(std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        as.push_back(Arrow{"a" + std::to_string(i + 1), i, (i + 1) % n, Degree{1}});
    GradedQuiver q(1, vs, as);
    std::vector<AlgElement> rels;
    for (int i = 0; i < n; ++i) {
        Path p{i, {}};
        for (int k = 0; k < m; ++k) p.arrows.push_back((i + k) % n);
        rels.push_back(AlgElement::path_term(f, p));
    }
    return build_algebra(Presentation(q, f, rels));
}

/// Exterior algebra on two generators; length graded unless trivial_grading.
inline AlgebraHandle exterior(Field f = Field::rationals(), bool trivial_grading = false) {
    int d = trivial_grading ? 0 : 1;
    Degree one = trivial_grading ? Degree{} : Degree{1};
    GradedQuiver q(d, {"e"}, {Arrow{"y", 0, 0, one}, Arrow{"z", 0, 0, one}});
    AlgElement yy = AlgElement::path_term(f, Path{0, {0, 0}});
    AlgElement zz = AlgElement::path_term(f, Path{0, {1, 1}});
    AlgElement yz_zy = AlgElement::path_term(f, Path{0, {0, 1}}) +
                       AlgElement::path_term(f, Path{0, {1, 0}});
    return build_algebra(Presentation(q, f, {yy, zz, yz_zy}));
}

inline AlgebraHandle kronecker(Field f = Field::rationals()) {
    GradedQuiver q(1, {"1", "2"}, {Arrow{"a", 0, 1, {1}}, Arrow{"b", 0, 1, {1}}});
    return build_algebra(Presentation(q, f, {}));
}

/// Commutative square: a.b = c.d between opposite corners.
inline AlgebraHandle square_comm(Field f = Field::rationals()) {
    GradedQuiver q(1, {"1", "2", "3", "4"},
                   {Arrow{"a", 0, 1, {1}}, Arrow{"b", 1, 3, {1}}, Arrow{"c", 0, 2, {1}},
                    Arrow{"d", 2, 3, {1}}});
    AlgElement r = AlgElement::path_term(f, Path{0, {0, 1}}) -
                   AlgElement::path_term(f, Path{0, {2, 3}});
    return build_algebra(Presentation(q, f, {r}));
}

/// One loop with x^3 = x^2 (trivially graded, mixed-length relation): the
/// arrow ideal is not nilpotent and the algebra is not weakly basic.
inline AlgebraHandle loop_idempotentish(Field f = Field::rationals()) {
    GradedQuiver q(0, {"1"}, {Arrow{"x", 0, 0, {}}});
    AlgElement r = AlgElement::path_term(f, Path{0, {0, 0, 0}}) -
                   AlgElement::path_term(f, Path{0, {0, 0}});
    return build_algebra(Presentation(q, f, {r}));
}

inline AlgebraHandle loop_x2(Field f = Field::rationals()) {
    GradedQuiver q(1, {"1"}, {Arrow{"x", 0, 0, {1}}});
    return build_algebra(Presentation(q, f, {AlgElement::path_term(f, Path{0, {0, 0}})}));
}

/// Semisimple: n isolated vertices.
inline AlgebraHandle semisimple(int n, Field f = Field::rationals()) {
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back(std::to_string(i + 1));
    return build_algebra(Presentation(GradedQuiver(1, vs, {}), f, {}));
}

inline SubspaceFamily radical_of(const AlgebraHandle& h) { return radical_arrow_image(h); }

struct Analyzed {
    AlgebraHandle handle;
    SubspaceFamily J;
    Classification cls;
    PFReport pf;
};

inline Analyzed analyze_handle(AlgebraHandle h) {
    SubspaceFamily J = radical_arrow_image(h);
    Classification cls = classify(h.alg, J);
    PFReport pf = pf_check(h.alg, J, cls);
    return Analyzed{std::move(h), std::move(J), std::move(cls), std::move(pf)};
}

/// Deterministic small random element supported on paths of length <= 2.
inline AlgElement random_element(const GradedQuiver& q, const Field& f, std::mt19937& rng) {
    auto paths = enumerate_paths(q, 2);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
    AlgElement x(f);
    for (int t = 0; t < 3; ++t)
        x.add_term(paths[pick(rng)], Scalar::of_int(f, coeff(rng)));
    return x;
}

inline Vec random_vec(const Algebra& a, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    Vec v = zero_vec(a.field(), a.dim());
    for (int i = 0; i < a.dim(); ++i) v[i] = Scalar::of_int(a.field(), coeff(rng));
    return v;
}

}  // namespace qpftest
