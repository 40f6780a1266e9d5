#pragma once

#include "qpf/covering.hpp"

namespace qpf {

/// A parsed input document: field, grading, quiver, relations, optional
/// group generators, options. parse(emit(doc)) must equal doc.
struct InputDocument {
    Field field = Field::rationals();
    int grading_rank = 0;
    GradedQuiver quiver{0, {}, {}};
    std::vector<AlgElement> relations;
    struct Generator {
        std::string name;
        MonomialAutomorphism autom;
        bool operator==(const Generator&) const = default;
    };
    std::vector<Generator> generators;
    std::size_t length_cap = 64;
    std::size_t order_cap = 1024;

    bool operator==(const InputDocument& o) const;
};

/// Parses the line-oriented document grammar:
///   field Q | field GF <p>
///   grading <d>
///   vertex <name>
///   arrow <name> : <src> -> <tgt> deg (<k1>,...,<kd>)
///   relation <expr>
///   group generator <name> { vertex <v> -> <v'> ... ; arrow <a> -> [c *] <a'> ... }
///   option length_cap <n> | option order_cap <n>
/// '#' starts a comment; newlines may be LF or CRLF. Syntax and semantic
/// errors throw InputError with a 1-based line:column position.
InputDocument parse_document(const std::string& text);

/// Canonical text whose parse equals the document.
std::string emit_document(const InputDocument& doc);

}  // namespace qpf
