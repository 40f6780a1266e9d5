#include "qpf/freealg.hpp"

namespace qpf {

AlgElement AlgElement::path_term(const Field& f, const Path& p, const Scalar& c) {
    AlgElement x(f);
    Scalar cc = (c == Scalar()) ? Scalar::one(f) : c;
    x.add_term(p, cc);
    return x;
}

Scalar AlgElement::coeff(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void AlgElement::add_term(const Path& p, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
    AlgElement r(*this);
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
}

AlgElement AlgElement::operator-(const AlgElement& o) const { return *this + (-o); }

AlgElement AlgElement::operator-() const { return scaled(-Scalar::one(field_)); }

AlgElement AlgElement::scaled(const Scalar& c) const {
    AlgElement r(field_);
    if (c.is_zero()) return r;
    for (const auto& [p, cc] : terms_) r.terms_.emplace(p, cc * c);
    return r;
}

const Path& AlgElement::leading_path() const {
    if (is_zero()) throw InvariantError("leading path of zero element");
    return terms_.rbegin()->first;
}

const Scalar& AlgElement::leading_coeff() const {
    if (is_zero()) throw InvariantError("leading coefficient of zero element");
    return terms_.rbegin()->second;
}

AlgElement AlgElement::monic() const { return scaled(leading_coeff().inverse()); }

std::string AlgElement::str(const GradedQuiver& q) const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (!c.is_one()) s += c.str() + "*";
        s += path_str(q, p);
    }
    return s;
}

AlgElement multiply(const GradedQuiver& q, const AlgElement& x, const AlgElement& y) {
    AlgElement r(x.field());
    for (const auto& [p, c] : x.terms())
        for (const auto& [r2, c2] : y.terms())
            if (auto pq = compose(q, p, r2)) r.add_term(*pq, c * c2);
    return r;
}

std::map<Degree, AlgElement> homogeneous_components(const GradedQuiver& q, const AlgElement& x) {
    std::map<Degree, AlgElement> parts;
    for (const auto& [p, c] : x.terms()) {
        Degree d = path_degree(q, p);
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, AlgElement(x.field())).first;
        it->second.add_term(p, c);
    }
    return parts;
}

std::optional<Degree> homogeneous_degree(const GradedQuiver& q, const AlgElement& x) {
    if (x.is_zero()) return std::nullopt;
    const Path& first = x.terms().begin()->first;
    Degree d = path_degree(q, first);
    int src = first.source(), tgt = first.target(q);
    for (const auto& [p, c] : x.terms()) {
        if (path_degree(q, p) != d) return std::nullopt;
        if (p.source() != src || p.target(q) != tgt) return std::nullopt;
    }
    return d;
}

}  // namespace qpf
