#include "qpf/parser.hpp"

#include <algorithm>
#include <cctype>

namespace qpf {

bool InputDocument::operator==(const InputDocument& o) const {
    if (!(field == o.field) || grading_rank != o.grading_rank) return false;
    if (quiver.vertices() != o.quiver.vertices()) return false;
    if (quiver.num_arrows() != o.quiver.num_arrows()) return false;
    for (int a = 0; a < quiver.num_arrows(); ++a) {
        const Arrow &x = quiver.arrow(a), &y = o.quiver.arrow(a);
        if (x.name != y.name || x.src != y.src || x.tgt != y.tgt || !(x.deg == y.deg))
            return false;
    }
    return relations == o.relations && generators == o.generators &&
           length_cap == o.length_cap && order_cap == o.order_cap;
}

namespace {

struct Token {
    enum Kind { word, punct, newline, end } kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) {
        int line = 1, col = 1;
        std::size_t i = 0;
        auto push = [&](Token::Kind k, std::string t, int l, int c) {
            toks_.push_back(Token{k, std::move(t), l, c});
        };
        while (i < text.size()) {
            char ch = text[i];
            if (ch == '\r') { ++i; continue; }
            if (ch == '\n') {
                push(Token::newline, "\n", line, col);
                ++line; col = 1; ++i;
                continue;
            }
            if (ch == '#') {
                while (i < text.size() && text[i] != '\n') ++i;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(ch))) { ++i; ++col; continue; }
            int start_col = col;
            if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
                std::string w;
                while (i < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                    w += text[i++]; ++col;
                }
                push(Token::word, std::move(w), line, start_col);
                continue;
            }
            if (ch == '-' && i + 1 < text.size() && text[i + 1] == '>') {
                push(Token::punct, "->", line, start_col);
                i += 2; col += 2;
                continue;
            }
            static const std::string singles = ":(),{};*+-/.";
            if (singles.find(ch) != std::string::npos) {
                push(Token::punct, std::string(1, ch), line, start_col);
                ++i; ++col;
                continue;
            }
            throw InputError(std::string("unexpected character '") + ch + "'", line, col);
        }
        push(Token::end, "", line, col);
    }

    const Token& peek(int ahead = 0) const {
        std::size_t k = pos_ + ahead;
        return k < toks_.size() ? toks_[k] : toks_.back();
    }
    Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    void skip_newlines() {
        while (peek().kind == Token::newline) next();
    }

  private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

[[noreturn]] void fail(const Token& t, const std::string& expected) {
    std::string got = t.kind == Token::end      ? "end of input"
                      : t.kind == Token::newline ? "end of line"
                                                 : "'" + t.text + "'";
    throw InputError("expected " + expected + ", got " + got, t.line, t.col);
}

std::string expect_word(Lexer& lx, const std::string& what) {
    Token t = lx.next();
    if (t.kind != Token::word) fail(t, what);
    return t.text;
}

Token expect_punct(Lexer& lx, const std::string& p) {
    Token t = lx.next();
    if (t.kind != Token::punct || t.text != p) fail(t, "'" + p + "'");
    return t;
}

void expect_eol(Lexer& lx) {
    Token t = lx.next();
    if (t.kind != Token::newline && t.kind != Token::end) fail(t, "end of line");
}

long long parse_integer(Lexer& lx, const std::string& what) {
    bool neg = false;
    Token t = lx.peek();
    if (t.kind == Token::punct && (t.text == "-" || t.text == "+")) {
        neg = t.text == "-";
        lx.next();
    }
    Token w = lx.next();
    if (w.kind != Token::word ||
        !std::all_of(w.text.begin(), w.text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail(w, what);
    long long v = 0;
    try {
        v = std::stoll(w.text);
    } catch (const std::exception&) {
        throw InputError("integer out of range", w.line, w.col);
    }
    return neg ? -v : v;
}

struct Builder {
    Field field = Field::rationals();
    bool field_seen = false;
    int grading_rank = 0;
    bool grading_seen = false;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::map<std::string, std::pair<int, int>> vertex_pos;  // name -> (index, line)
    std::map<std::string, std::pair<int, int>> arrow_pos;
    struct PendingRel {
        std::vector<std::pair<Scalar, std::vector<int>>> terms;  // coeff, arrow indices
        int line, col;
    };
    std::vector<PendingRel> relations;
    std::vector<InputDocument::Generator> generators;
    std::size_t length_cap = 64, order_cap = 1024;
};

int lookup_vertex(const Builder& b, const Token& t) {
    auto it = b.vertex_pos.find(t.text);
    if (it == b.vertex_pos.end())
        throw InputError("unknown vertex '" + t.text + "'", t.line, t.col);
    return it->second.first;
}

int lookup_arrow(const Builder& b, const Token& t) {
    auto it = b.arrow_pos.find(t.text);
    if (it == b.arrow_pos.end())
        throw InputError("unknown arrow '" + t.text + "'", t.line, t.col);
    return it->second.first;
}

/// coeff ::= integer [ '/' integer ]; only consumed when clearly present.
Scalar parse_coeff(Lexer& lx, const Field& f) {
    long long num = parse_integer(lx, "integer coefficient");
    long long den = 1;
    if (lx.peek().kind == Token::punct && lx.peek().text == "/") {
        lx.next();
        long long d = parse_integer(lx, "denominator");
        Token prev = lx.peek();
        if (d == 0) throw InputError("zero denominator", prev.line, prev.col);
        den = d;
    }
    return Scalar::fraction(f, mpz_class(static_cast<long>(num)),
                            mpz_class(static_cast<long>(den)));
}

bool starts_coeff(Lexer& lx) {
    const Token& t = lx.peek();
    if (t.kind == Token::punct && (t.text == "-" || t.text == "+")) {
        const Token& w = lx.peek(1);
        return w.kind == Token::word &&
               std::isdigit(static_cast<unsigned char>(w.text[0]));
    }
    return t.kind == Token::word && std::isdigit(static_cast<unsigned char>(t.text[0])) &&
           std::all_of(t.text.begin(), t.text.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
           lx.peek(1).kind == Token::punct &&
           (lx.peek(1).text == "*" || lx.peek(1).text == "/");
}

void parse_relation(Lexer& lx, Builder& b) {
    Builder::PendingRel rel;
    rel.line = lx.peek().line;
    rel.col = lx.peek().col;
    Scalar sign = Scalar::one(b.field);
    bool first = true;
    for (;;) {
        Scalar coeff = sign;
        if (starts_coeff(lx)) {
            coeff = sign * parse_coeff(lx, b.field);
            expect_punct(lx, "*");
        }
        std::vector<int> path;
        Token a = lx.next();
        if (a.kind != Token::word) fail(a, "arrow name");
        path.push_back(lookup_arrow(b, a));
        while (lx.peek().kind == Token::punct && lx.peek().text == ".") {
            lx.next();
            Token nxt = lx.next();
            if (nxt.kind != Token::word) fail(nxt, "arrow name");
            path.push_back(lookup_arrow(b, nxt));
        }
        rel.terms.emplace_back(coeff, std::move(path));
        first = false;
        const Token& t = lx.peek();
        if (t.kind == Token::punct && (t.text == "+" || t.text == "-")) {
            sign = t.text == "+" ? Scalar::one(b.field) : -Scalar::one(b.field);
            lx.next();
            continue;
        }
        break;
    }
    (void)first;
    expect_eol(lx);
    b.relations.push_back(std::move(rel));
}

void parse_group_generator(Lexer& lx, Builder& b) {
    std::string name = expect_word(lx, "generator name");
    expect_punct(lx, "{");
    MonomialAutomorphism g;
    g.vperm.assign(b.vertices.size(), -1);
    g.aperm.assign(b.arrows.size(), -1);
    g.ascale.assign(b.arrows.size(), Scalar::zero(b.field));

    lx.skip_newlines();
    while (lx.peek().kind == Token::word && lx.peek().text == "vertex") {
        lx.next();
        Token from = lx.next();
        if (from.kind != Token::word) fail(from, "vertex name");
        expect_punct(lx, "->");
        Token to = lx.next();
        if (to.kind != Token::word) fail(to, "vertex name");
        int vf = lookup_vertex(b, from), vt = lookup_vertex(b, to);
        if (g.vperm[vf] != -1)
            throw InputError("vertex '" + from.text + "' mapped twice", from.line, from.col);
        g.vperm[vf] = vt;
        lx.skip_newlines();
    }
    Token semi = lx.next();
    if (semi.kind != Token::punct || semi.text != ";") fail(semi, "';'");
    lx.skip_newlines();
    while (lx.peek().kind == Token::word && lx.peek().text == "arrow") {
        lx.next();
        Token from = lx.next();
        if (from.kind != Token::word) fail(from, "arrow name");
        expect_punct(lx, "->");
        Scalar coeff = Scalar::one(b.field);
        if (starts_coeff(lx)) {
            coeff = parse_coeff(lx, b.field);
            expect_punct(lx, "*");
        }
        Token to = lx.next();
        if (to.kind != Token::word) fail(to, "arrow name");
        int af = lookup_arrow(b, from), at = lookup_arrow(b, to);
        if (g.aperm[af] != -1)
            throw InputError("arrow '" + from.text + "' mapped twice", from.line, from.col);
        if (coeff.is_zero())
            throw InputError("zero coefficient in arrow image", from.line, from.col);
        g.aperm[af] = at;
        g.ascale[af] = coeff;
        lx.skip_newlines();
    }
    Token close = lx.next();
    if (close.kind != Token::punct || close.text != "}") fail(close, "'}'");
    expect_eol(lx);

    for (std::size_t v = 0; v < b.vertices.size(); ++v)
        if (g.vperm[v] < 0)
            throw InputError("generator '" + name + "' does not map vertex '" + b.vertices[v] +
                                 "'",
                             close.line, close.col);
    for (std::size_t a = 0; a < b.arrows.size(); ++a)
        if (g.aperm[a] < 0)
            throw InputError("generator '" + name + "' does not map arrow '" +
                                 b.arrows[a].name + "'",
                             close.line, close.col);
    b.generators.push_back(InputDocument::Generator{std::move(name), std::move(g)});
}

}  // namespace

InputDocument parse_document(const std::string& text) {
    Lexer lx(text);
    Builder b;

    for (;;) {
        lx.skip_newlines();
        Token t = lx.peek();
        if (t.kind == Token::end) break;
        if (t.kind != Token::word) fail(t, "a statement keyword");
        const std::string& kw = t.text;

        if (kw == "field") {
            lx.next();
            Token f = lx.next();
            if (f.kind != Token::word) fail(f, "'Q' or 'GF'");
            if (f.text == "Q") {
                b.field = Field::rationals();
            } else if (f.text == "GF") {
                long long p = parse_integer(lx, "prime modulus");
                if (p < 2) throw InputError("modulus must be at least 2", f.line, f.col);
                try {
                    b.field = Field::prime(static_cast<unsigned long>(p));
                } catch (const InputError& e) {
                    throw InputError(e.what(), f.line, f.col);
                }
            } else {
                fail(f, "'Q' or 'GF'");
            }
            if (b.field_seen) throw InputError("duplicate field statement", t.line, t.col);
            b.field_seen = true;
            expect_eol(lx);
        } else if (kw == "grading") {
            lx.next();
            long long d = parse_integer(lx, "grading rank");
            if (d < 0) throw InputError("grading rank must be >= 0", t.line, t.col);
            if (b.grading_seen) throw InputError("duplicate grading statement", t.line, t.col);
            b.grading_rank = static_cast<int>(d);
            b.grading_seen = true;
            expect_eol(lx);
        } else if (kw == "vertex") {
            lx.next();
            Token n = lx.next();
            if (n.kind != Token::word) fail(n, "vertex name");
            if (b.vertex_pos.count(n.text))
                throw InputError("duplicate vertex '" + n.text + "'", n.line, n.col);
            b.vertex_pos[n.text] = {static_cast<int>(b.vertices.size()), n.line};
            b.vertices.push_back(n.text);
            expect_eol(lx);
        } else if (kw == "arrow") {
            lx.next();
            Token n = lx.next();
            if (n.kind != Token::word) fail(n, "arrow name");
            if (b.arrow_pos.count(n.text))
                throw InputError("duplicate arrow '" + n.text + "'", n.line, n.col);
            expect_punct(lx, ":");
            Token src = lx.next();
            if (src.kind != Token::word) fail(src, "source vertex");
            expect_punct(lx, "->");
            Token tgt = lx.next();
            if (tgt.kind != Token::word) fail(tgt, "target vertex");
            Degree deg;
            if (lx.peek().kind == Token::word && lx.peek().text == "deg") {
                Token dt = lx.next();
                if (b.grading_rank == 0)
                    throw InputError("deg clause is forbidden when the grading rank is 0",
                                     dt.line, dt.col);
                expect_punct(lx, "(");
                for (int k = 0; k < b.grading_rank; ++k) {
                    if (k) expect_punct(lx, ",");
                    deg.push_back(parse_integer(lx, "degree component"));
                }
                Token paren = lx.next();
                if (paren.kind != Token::punct || paren.text == ",")
                    throw InputError("degree arity mismatch: expected " +
                                         std::to_string(b.grading_rank) + " components",
                                     paren.line, paren.col);
                if (paren.text != ")") fail(paren, "')'");
            } else if (b.grading_rank > 0) {
                Token here = lx.peek();
                throw InputError("missing deg clause (grading rank is " +
                                     std::to_string(b.grading_rank) + ")",
                                 here.line, here.col);
            }
            int vs = lookup_vertex(b, src), vt = lookup_vertex(b, tgt);
            b.arrow_pos[n.text] = {static_cast<int>(b.arrows.size()), n.line};
            b.arrows.push_back(Arrow{n.text, vs, vt, std::move(deg)});
            expect_eol(lx);
        } else if (kw == "relation") {
            lx.next();
            parse_relation(lx, b);
        } else if (kw == "group") {
            lx.next();
            Token gen = lx.next();
            if (gen.kind != Token::word || gen.text != "generator") fail(gen, "'generator'");
            parse_group_generator(lx, b);
        } else if (kw == "option") {
            lx.next();
            Token which = lx.next();
            if (which.kind != Token::word) fail(which, "option name");
            long long v = parse_integer(lx, "option value");
            if (v <= 0) throw InputError("option must be positive", which.line, which.col);
            if (which.text == "length_cap")
                b.length_cap = static_cast<std::size_t>(v);
            else if (which.text == "order_cap")
                b.order_cap = static_cast<std::size_t>(v);
            else
                throw InputError("unknown option '" + which.text + "'", which.line, which.col);
            expect_eol(lx);
        } else {
            fail(t, "one of field/grading/vertex/arrow/relation/group/option");
        }
    }

    if (b.vertices.empty()) throw InputError("document declares no vertices", 1, 1);

    InputDocument doc;
    doc.field = b.field;
    doc.grading_rank = b.grading_rank;
    doc.quiver = GradedQuiver(b.grading_rank, b.vertices, b.arrows);
    for (const auto& rel : b.relations) {
        AlgElement x(b.field);
        for (const auto& [coeff, arrow_idx] : rel.terms) {
            Path p{b.arrows[arrow_idx[0]].src, arrow_idx};
            for (std::size_t k = 1; k < arrow_idx.size(); ++k)
                if (b.arrows[arrow_idx[k]].src != b.arrows[arrow_idx[k - 1]].tgt)
                    throw InputError("path is not composable: arrow '" +
                                         b.arrows[arrow_idx[k]].name + "' does not start where '" +
                                         b.arrows[arrow_idx[k - 1]].name + "' ends",
                                     rel.line, rel.col);
            x.add_term(p, coeff);
        }
        if (x.is_zero()) throw InputError("relation is zero", rel.line, rel.col);
        if (!homogeneous_degree(doc.quiver, x))
            throw InputError("relation is not homogeneous (degree- and endpoint-pure)",
                             rel.line, rel.col);
        for (const auto& [p, c] : x.terms())
            if (p.length() < 2)
                throw InputError("relation has support on a path of length < 2", rel.line,
                                 rel.col);
        doc.relations.push_back(std::move(x));
    }
    doc.generators = b.generators;
    doc.length_cap = b.length_cap;
    doc.order_cap = b.order_cap;
    return doc;
}

std::string emit_document(const InputDocument& doc) {
    std::string out;
    if (doc.field.kind() == FieldKind::rationals)
        out += "field Q\n";
    else
        out += "field GF " + std::to_string(doc.field.p()) + "\n";
    out += "grading " + std::to_string(doc.grading_rank) + "\n";
    for (const auto& v : doc.quiver.vertices()) out += "vertex " + v + "\n";
    for (int a = 0; a < doc.quiver.num_arrows(); ++a) {
        const Arrow& ar = doc.quiver.arrow(a);
        out += "arrow " + ar.name + " : " + doc.quiver.vertex_name(ar.src) + " -> " +
               doc.quiver.vertex_name(ar.tgt);
        if (doc.grading_rank > 0) {
            out += " deg (";
            for (int k = 0; k < doc.grading_rank; ++k) {
                if (k) out += ",";
                out += std::to_string(ar.deg[k]);
            }
            out += ")";
        }
        out += "\n";
    }
    for (const auto& r : doc.relations) {
        out += "relation ";
        bool first = true;
        for (const auto& [p, c] : r.terms()) {
            Scalar cc = c;
            if (!first) {
                bool neg = doc.field.kind() == FieldKind::rationals && cc.raw() < 0;
                out += neg ? " - " : " + ";
                if (neg) cc = -cc;
            }
            if (!cc.is_one()) out += cc.str() + "*";
            std::string sep;
            for (int a : p.arrows) {
                out += sep + doc.quiver.arrow(a).name;
                sep = ".";
            }
            first = false;
        }
        out += "\n";
    }
    for (const auto& g : doc.generators) {
        out += "group generator " + g.name + " {\n";
        for (std::size_t v = 0; v < g.autom.vperm.size(); ++v)
            out += "  vertex " + doc.quiver.vertex_name((int)v) + " -> " +
                   doc.quiver.vertex_name(g.autom.vperm[v]) + "\n";
        out += "  ;\n";
        for (std::size_t a = 0; a < g.autom.aperm.size(); ++a) {
            out += "  arrow " + doc.quiver.arrow((int)a).name + " -> ";
            if (!g.autom.ascale[a].is_one()) out += g.autom.ascale[a].str() + "*";
            out += doc.quiver.arrow(g.autom.aperm[a]).name + "\n";
        }
        out += "}\n";
    }
    out += "option length_cap " + std::to_string(doc.length_cap) + "\n";
    out += "option order_cap " + std::to_string(doc.order_cap) + "\n";
    return out;
}

}  // namespace qpf
