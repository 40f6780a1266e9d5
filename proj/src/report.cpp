#include "qpf/report.hpp"

#include <json.hpp>

namespace qpf {

using json = nlohmann::ordered_json;

namespace {

std::string degree_json_str(const Degree& d) { return degree_str(d); }

json degree_to_json(const Degree& d) {
    json a = json::array();
    for (auto x : d) a.push_back(x);
    return a;
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace

std::string form_digest(const BilinearForm& f) {
    std::uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < f.nu.size(); ++i)
        h = fnv1a(h, "nu:" + std::to_string(i) + "->" + std::to_string(f.nu[i]) +
                         ";h=" + degree_json_str(f.h[i]));
    for (const auto& [key, m] : f.blocks) {
        h = fnv1a(h, "block:" + std::to_string(key.src) + "," + std::to_string(key.tgt) + "," +
                         degree_json_str(key.deg) + ":" + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) h = fnv1a(h, m.at(r, c).str() + ",");
    }
    return hex64(h);
}

Report analyze(const InputDocument& doc, const std::string& input_text) {
    json out;
    std::string text;
    auto line = [&text](const std::string& s) { text += s + "\n"; };

    out["input"] = input_text;
    out["field"] = doc.field.name();
    out["grading_rank"] = doc.grading_rank;
    out["vertices"] = doc.quiver.vertices();
    {
        json arrows = json::array();
        for (int a = 0; a < doc.quiver.num_arrows(); ++a) {
            const Arrow& ar = doc.quiver.arrow(a);
            json ja;
            ja["name"] = ar.name;
            ja["src"] = doc.quiver.vertex_name(ar.src);
            ja["tgt"] = doc.quiver.vertex_name(ar.tgt);
            ja["deg"] = degree_to_json(ar.deg);
            arrows.push_back(ja);
        }
        out["arrows"] = arrows;
        json rels = json::array();
        for (const auto& r : doc.relations) rels.push_back(r.str(doc.quiver));
        out["relations"] = rels;
        out["options"] = {{"length_cap", doc.length_cap}, {"order_cap", doc.order_cap}};
    }
    line("field: " + doc.field.name() + "   grading rank: " +
         std::to_string(doc.grading_rank));

    Presentation pres(doc.quiver, doc.field, doc.relations);
    AlgebraHandle A = build_algebra(pres, doc.length_cap);
    const Algebra& alg = A.alg;

    {
        json ja;
        ja["dimension"] = alg.dim();
        ja["groebner_size"] = A.gb.size();
        json basis = json::array();
        for (const auto& m : A.monomials) basis.push_back(path_str(doc.quiver, m));
        ja["basis"] = basis;
        json dims = json::array();
        for (const auto& [key, idxs] : alg.pieces()) {
            json p;
            p["src"] = alg.vertex_name(key.src);
            p["tgt"] = alg.vertex_name(key.tgt);
            p["deg"] = degree_to_json(key.deg);
            p["dim"] = idxs.size();
            dims.push_back(p);
        }
        ja["graded_dimensions"] = dims;
        out["algebra"] = ja;
        line("dimension: " + std::to_string(alg.dim()) + "   (groebner basis size " +
             std::to_string(A.gb.size()) + ")");
    }

    SubspaceFamily J = radical_arrow_image(A);
    SubspaceFamily Jc = radical_by_criterion(alg);
    int nilp = 0;
    J.is_nilpotent(alg, &nilp);
    {
        json jr;
        jr["dimension"] = J.dim();
        jr["criterion_agrees"] = (J == Jc);
        jr["nilpotency_index"] = nilp;
        out["radical"] = jr;
        line("radical: dimension " + std::to_string(J.dim()) + ", J^" + std::to_string(nilp) +
             " = 0, criterion agreement: " + ((J == Jc) ? "yes" : "NO"));
        if (!(J == Jc)) throw InvariantError("radical algorithms disagree");
    }

    Classification cls = classify(alg, J);
    {
        json jc;
        jc["weakly_basic"] = cls.weakly_basic;
        jc["basic"] = cls.basic;
        jc["split"] = cls.split;
        jc["connected"] = cls.connected;
        jc["local_dims"] = cls.local_dim;
        jc["local_radical_dims"] = cls.local_rad_dim;
        jc["notes"] = cls.notes;
        out["classification"] = jc;
        std::string flags;
        if (cls.weakly_basic) flags += " weakly-basic";
        if (cls.basic) flags += " basic";
        if (cls.split) flags += " split";
        if (cls.connected) flags += " connected";
        line("classification:" + (flags.empty() ? " (none)" : flags));
        for (const auto& n : cls.notes) line("  note: " + n);
    }

    json jpf;
    bool have_form = false;
    BilinearForm form;
    if (!cls.weakly_basic) {
        jpf["skipped"] = "not weakly basic";
        line("pf check: skipped (not weakly basic)");
        out["pf"] = jpf;
        out["form"] = {{"skipped", "not weakly basic"}};
        out["nakayama_automorphism"] = {{"skipped", "not weakly basic"}};
        out["constant_degree"] = {{"skipped", "not weakly basic"}};
    } else {
        PFReport r = pf_check(alg, J, cls);
        jpf["is_pf"] = r.is_pf;
        jpf["socles_match"] = r.socles_match;
        {
            json sup = json::array();
            for (int v = 0; v < alg.num_vertices(); ++v) {
                json entry;
                entry["vertex"] = alg.vertex_name(v);
                json ss = json::array();
                for (const auto& e : r.right_support[v]) {
                    json one;
                    one["tgt"] = alg.vertex_name(e.tgt);
                    one["deg"] = degree_to_json(e.deg);
                    one["dim"] = e.dim;
                    ss.push_back(one);
                }
                entry["socle_support"] = ss;
                sup.push_back(entry);
            }
            jpf["socle"] = sup;
        }
        jpf["witnesses"] = r.witnesses;
        if (r.is_pf) {
            json nu, hh;
            for (int v = 0; v < alg.num_vertices(); ++v) {
                nu[alg.vertex_name(v)] = alg.vertex_name(r.nu[v]);
                hh[alg.vertex_name(v)] = degree_to_json(r.h[v]);
            }
            jpf["nu"] = nu;
            jpf["degree_map"] = hh;
            std::string nus, hs;
            for (int v = 0; v < alg.num_vertices(); ++v) {
                nus += (v ? ", " : "") + alg.vertex_name(v) + "->" + alg.vertex_name(r.nu[v]);
                hs += (v ? ", " : "") + alg.vertex_name(v) + ":" + degree_str(r.h[v]);
            }
            line("pseudo-Frobenius (equivalently Quasi-Frobenius at finite dimension): YES");
            line("  nakayama permutation: " + nus);
            line("  degree map: " + hs);
        } else {
            line("pseudo-Frobenius: NO");
            for (const auto& w : r.witnesses) line("  witness: " + w);
        }
        out["pf"] = jpf;

        if (r.is_pf && cls.split) {
            FormBasis fb = default_form_basis(alg, r);
            form = nakayama_form_from_basis(alg, r, cls, fb);
            have_form = true;
            json jf;
            json blocks = json::array();
            for (const auto& [key, m] : form.blocks) {
                json b;
                b["src"] = alg.vertex_name(key.src);
                b["tgt"] = alg.vertex_name(key.tgt);
                b["deg"] = degree_to_json(key.deg);
                b["rows"] = m.rows();
                b["cols"] = m.cols();
                json entries = json::array();
                for (std::size_t rr = 0; rr < m.rows(); ++rr)
                    for (std::size_t cc = 0; cc < m.cols(); ++cc)
                        entries.push_back(m.at(rr, cc).str());
                b["entries"] = entries;
                blocks.push_back(b);
            }
            jf["blocks"] = blocks;
            jf["digest"] = form_digest(form);
            out["form"] = jf;
            line("nakayama form: " + std::to_string(form.blocks.size()) +
                 " pairing blocks, digest " + form_digest(form));

            AlgebraAutomorphism eta = nakayama_automorphism(alg, form);
            json je;
            json vm;
            for (int v = 0; v < alg.num_vertices(); ++v)
                vm[alg.vertex_name(v)] = alg.vertex_name(eta.vertex_map[v]);
            je["vertex_map"] = vm;
            json imgs;
            for (int a = 0; a < doc.quiver.num_arrows(); ++a) {
                Path ap = arrow_path(doc.quiver, a);
                int idx = A.index_of.at(ap);
                Vec img = eta.matrix.apply(alg.unit_vec(idx));
                imgs[doc.quiver.arrow(a).name] = alg.elem_str(img);
                line("  eta(" + doc.quiver.arrow(a).name + ") = " + alg.elem_str(img));
            }
            je["arrow_images"] = imgs;
            out["nakayama_automorphism"] = je;

            ConstantDegreeResult cd = constant_degree_check(alg, J, form, eta);
            json jcd;
            jcd["passed"] = cd.passed;
            if (cd.passed) {
                jcd["value"] = cd.value;
                line("constant degree: " + std::to_string(cd.value));
            } else {
                jcd["witness"] = cd.witness;
                line("constant degree: hypotheses fail (" + cd.witness + ")");
            }
            out["constant_degree"] = jcd;
        } else {
            std::string why = !r.is_pf ? "not pseudo-Frobenius" : "not split";
            out["form"] = {{"skipped", why}};
            out["nakayama_automorphism"] = {{"skipped", why}};
            out["constant_degree"] = {{"skipped", why}};
            line("nakayama form: skipped (" + why + ")");
        }
    }

    if (!doc.generators.empty()) {
        std::vector<MonomialAutomorphism> gens;
        for (const auto& g : doc.generators) gens.push_back(g.autom);
        GroupAction G = close_group(A, gens, doc.order_cap);
        json jc;
        jc["group_order"] = G.order();
        line("group action: order " + std::to_string(G.order()));
        try {
            TransferReport tr = verify_transfer(A, G);
            jc["skew_dimension"] = tr.skew_dim;
            jc["skew_radical_dimension"] = tr.skew_radical_dim;
            jc["skew_radical_is_JG"] = tr.skew_radical_matches;
            jc["skew_quotient_semisimple"] = tr.skew_quotient_semisimple;
            jc["covering_ok"] = tr.covering_ok;
            jc["a_is_pf"] = tr.a_is_pf;
            jc["orbit_is_pf"] = tr.orbit_is_pf;
            jc["pf_flags_agree"] = tr.flags_agree;
            jc["invariant_form_ok"] = tr.invariant_form_ok;
            jc["pushdown_ok"] = tr.pushdown_ok;
            jc["lift_ok"] = tr.lift_ok;
            jc["eta_commutes_with_action"] = tr.eta_commutes;
            jc["eta_descends"] = tr.eta_descends;
            line("covering: skew dim " + std::to_string(tr.skew_dim) +
                 ", rad(A*G) = J*G: " + (tr.skew_radical_matches ? "yes" : "NO") +
                 ", covering bijections: " + (tr.covering_ok ? "yes" : "NO"));
            line("transfer: A " + std::string(tr.a_is_pf ? "PF" : "not PF") + ", A/G " +
                 std::string(tr.orbit_is_pf ? "PF" : "not PF") +
                 (tr.flags_agree ? " (agree)" : " (DISAGREE)"));
        } catch (const PreconditionError& e) {
            jc["skipped"] = e.what();
            line("covering: skipped (" + std::string(e.what()) + ")");
        }
        out["covering"] = jc;
    }

    (void)have_form;
    Report rep;
    rep.json = out.dump(2) + "\n";
    rep.text = text;
    return rep;
}

}  // namespace qpf
