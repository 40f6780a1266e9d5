// qpf: analyze finite graded quiver algebras for the pseudo-Frobenius
// property, Nakayama data, and covering/orbit-algebra transfer.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qpf/report.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qpf::InputError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

qpf::Field parse_field_flag(const std::string& s) {
    if (s == "Q") return qpf::Field::rationals();
    if (s.rfind("GF", 0) == 0) {
        try {
            return qpf::Field::prime(std::stoul(s.substr(2)));
        } catch (const std::exception&) {
            throw qpf::InputError("bad --field value '" + s + "' (use Q or GF<p>)");
        }
    }
    throw qpf::InputError("bad --field value '" + s + "' (use Q or GF<p>)");
}

struct Options {
    std::string file;
    bool json = false;
    std::size_t length_cap = 0;  // 0 = keep document value
    std::size_t order_cap = 0;
    std::string field;
};

int run_analyze(const Options& opt) {
    std::string text = read_file(opt.file);
    qpf::InputDocument doc = qpf::parse_document(text);
    if (opt.length_cap) doc.length_cap = opt.length_cap;
    if (opt.order_cap) doc.order_cap = opt.order_cap;
    if (!opt.field.empty()) {
        // Re-parse under the overridden field so coefficients are reinterpreted.
        qpf::InputDocument base = doc;
        std::string re = qpf::emit_document(base);
        std::string want = parse_field_flag(opt.field).name() == "Q"
                               ? "field Q"
                               : "field GF " + std::to_string(parse_field_flag(opt.field).p());
        re = want + re.substr(re.find('\n'));
        doc = qpf::parse_document(re);
        text = re;
    }
    qpf::Report rep = qpf::analyze(doc, text);
    std::cout << (opt.json ? rep.json : rep.text);
    return 0;
}

int run_check_form(const std::string& path) {
    auto report = nlohmann::ordered_json::parse(read_file(path));
    if (!report.contains("input") || !report.contains("form"))
        throw qpf::InputError("report file lacks input/form sections");
    if (!report["form"].contains("digest"))
        throw qpf::InputError("report has no form digest (analysis did not build a form)");
    std::string input = report["input"].get<std::string>();
    std::string want = report["form"]["digest"].get<std::string>();

    qpf::InputDocument doc = qpf::parse_document(input);
    qpf::Report rep = qpf::analyze(doc, input);
    auto fresh = nlohmann::ordered_json::parse(rep.json);
    if (!fresh.contains("form") || !fresh["form"].contains("digest"))
        throw qpf::InvariantError("re-analysis did not produce a form");
    std::string got = fresh["form"]["digest"].get<std::string>();
    if (got != want) {
        std::cout << "form digest mismatch: report " << want << ", recomputed " << got << "\n";
        throw qpf::InvariantError("form digest mismatch");
    }
    std::cout << "form digest verified: " << got << "\n";
    return 0;
}

int run_corpus(const std::string& dir) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".alg") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw qpf::InputError("no .alg files under '" + dir + "'");

    int failures = 0;
    for (const auto& f : files) {
        std::string verdict;
        try {
            std::string text = read_file(f.string());
            qpf::InputDocument doc = qpf::parse_document(text);
            qpf::Report rep = qpf::analyze(doc, text);
            auto j = nlohmann::ordered_json::parse(rep.json);
            if (j["pf"].contains("is_pf"))
                verdict = j["pf"]["is_pf"].get<bool>() ? "PF" : "not PF";
            else
                verdict = "pf skipped";
            if (j.contains("covering") && j["covering"].contains("pf_flags_agree"))
                verdict += j["covering"]["pf_flags_agree"].get<bool>()
                               ? ", transfer ok"
                               : ", transfer MISMATCH";
            std::cout << "pass  " << f.filename().string() << "  (" << verdict << ")\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL  " << f.filename().string() << "  (" << e.what() << ")\n";
        }
    }
    std::cout << files.size() - failures << "/" << files.size() << " analyzed\n";
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pseudo-Frobenius analysis of graded quiver algebras"};
    app.require_subcommand(1);

    Options opt;
    auto* analyze = app.add_subcommand("analyze", "analyze an algebra document");
    analyze->add_option("file", opt.file, "input document")->required();
    analyze->add_flag("--json", opt.json, "emit the machine-readable report");
    analyze->add_option("--length-cap", opt.length_cap, "override option length_cap");
    analyze->add_option("--order-cap", opt.order_cap, "override option order_cap");
    analyze->add_option("--field", opt.field, "override the coefficient field (Q or GF<p>)");

    std::string report_path;
    auto* check = app.add_subcommand("check-form", "re-verify a reported form digest");
    check->add_option("report", report_path, "report JSON produced by analyze --json")
        ->required();

    std::string corpus_dir = QPF_CORPUS_DIR;
    auto* corpus = app.add_subcommand("corpus", "run the bundled example corpus");
    corpus->add_option("--dir", corpus_dir, "corpus directory (default: bundled)");

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return run_analyze(opt);
        if (check->parsed()) return run_check_form(report_path);
        if (corpus->parsed()) return run_corpus(corpus_dir);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const qpf::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const qpf::CapError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const qpf::Error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
