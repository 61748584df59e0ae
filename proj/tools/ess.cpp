// Command-line front end: validate documents, compute curvature data, decide
// fullness, reduce to the full morphism, produce equivalence witnesses, run
// the closure construction, and export catalog entries.
//
// Exit codes: 0 success / property holds; 1 a checked mathematical property
// fails; 2 malformed input; 3 internal assertion failure (a bug).

#include "ess/document.hpp"
#include "ess/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using nlohmann::json;

namespace {

struct Report {
    std::string command;
    json data = json::object();
    std::vector<std::string> errors;
    int exit_code = 0;

    void fail(int code, const std::string& msg) {
        exit_code = code;
        errors.push_back(msg);
    }
};

void print_text(const json& v, const std::string& prefix) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            print_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
        for (std::size_t i = 0; i < v.size(); ++i)
            print_text(v[i], prefix + "[" + std::to_string(i) + "]");
    } else {
        std::cout << prefix << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

int emit(const Report& r, const std::string& format) {
    if (format == "json") {
        json out;
        out["command"] = r.command;
        out["exit_code"] = r.exit_code;
        out["ok"] = r.exit_code == 0;
        out["data"] = r.data;
        out["errors"] = r.errors;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "command: " << r.command << "\n";
        print_text(r.data, "");
        for (const auto& e : r.errors) std::cout << "error: " << e << "\n";
        std::cout << "ok: " << (r.exit_code == 0 ? "true" : "false") << "\n";
    }
    return r.exit_code;
}

json matrix_json(const ess::Matrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(ess::to_string(m.at(i, j)));
    return a;
}

json subspace_json(const ess::Subspace& s) {
    return {{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", matrix_json(s.basis())}};
}

/// The standing summary block: derived splitting, srk, dimension bound.
json morphism_summary(const ess::ExtrinsicMorphism& m) {
    json s;
    s["dim_V"] = m.space().dim();
    s["dim_p"] = m.pair().pair.dim_p;
    s["w1_dim"] = m.w1().dim();
    s["w2_dim"] = m.w2().dim();
    std::size_t r = ess::srk(m.pair());
    s["srk"] = r;
    s["dim_bound_ok"] = m.space().dim() >= m.pair().pair.dim_p + r;
    return s;
}

const ess::SymplecticSymmetricPair& need_pair(const ess::Document& doc) {
    if (!doc.pair) throw ess::MalformedDocument("document has no pair");
    return *doc.pair;
}

const ess::ExtrinsicMorphism& need_morphism(const ess::Document& doc) {
    if (!doc.morphism) throw ess::MalformedDocument("document has no morphism");
    return *doc.morphism;
}

json bivector_json(const ess::CurvatureBivector& b) {
    json factors = json::array();
    for (const auto& f : b.factors) factors.push_back(matrix_json(f));
    return {{"rank", b.rank()}, {"factors", factors}, {"coeffs", matrix_json(b.coeffs)}};
}

void run_validate(const std::string& file, Report& r) {
    ess::Document doc = ess::parse_document(ess::read_file(file));
    r.data["space_ok"] = true; // construction already checked the gram
    if (doc.pair) r.data["pair_ok"] = true;
    if (doc.morphism) {
        auto violations = doc.morphism->validate();
        json v = json::array();
        for (const auto& s : violations) v.push_back(s);
        r.data["morphism_violations"] = v;
        r.data["morphism_ok"] = violations.empty();
        r.data["summary"] = morphism_summary(*doc.morphism);
        if (!violations.empty()) r.fail(1, "morphism invalid: " + violations.front());
    } else if (doc.pair) {
        r.data["srk"] = ess::srk(*doc.pair);
    }
    if (doc.alpha) r.data["alpha_ok"] = true;
}

void run_curvature(const std::string& file, Report& r) {
    const auto& pair = need_pair(ess::parse_document(ess::read_file(file)));
    ess::CurvatureOperator R = ess::curvature(pair);
    json table = json::array();
    std::size_t d = pair.pair.dim_p;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            table.push_back(json::array({i, j, matrix_json(R.at(i, j))}));
    r.data["R"] = table;
    r.data["bianchi"] = ess::bianchi_check(R);
    ess::CurvatureBivector b = ess::bivector_solve(pair.p_space(), R);
    r.data["bivector"] = bivector_json(b);
    r.data["srk"] = b.rank();
}

void run_srk(const std::string& file, Report& r) {
    const auto& pair = need_pair(ess::parse_document(ess::read_file(file)));
    r.data["srk"] = ess::srk(pair);
}

void run_full(const std::string& file, bool expect_full, Report& r) {
    ess::Document doc = ess::parse_document(ess::read_file(file));
    const auto& m = need_morphism(doc);
    ess::FullnessReport rep = ess::fullness(m);
    r.data["full"] = rep.is_full;
    r.data["criteria"] = {{"minimal_stable", rep.c1_minimal_stable},
                          {"dim_matches_srk", rep.c2_dim_matches_srk},
                          {"A_injective", rep.c3_A_injective},
                          {"span_condition", rep.c4_span_condition}};
    r.data["witness"] = subspace_json(rep.witness);
    r.data["summary"] = morphism_summary(m);
    if (expect_full && !rep.is_full) r.fail(1, "morphism is not full");
}

void run_reduce(const std::string& file, const std::string& out, Report& r) {
    ess::Document doc = ess::parse_document(ess::read_file(file));
    const auto& m = need_morphism(doc);
    ess::ReductionResult res = ess::reduce_to_full(m);
    ess::write_file(out, ess::serialize_document(ess::document_from_morphism(res.reduced)));
    r.data["reduced_dim_V"] = res.reduced.space().dim();
    r.data["null_dim"] = res.quotient.null.dim();
    r.data["vprime_dim"] = res.quotient.source.dim();
    r.data["summary"] = morphism_summary(res.reduced);
    r.data["output"] = out;
}

void run_equiv(const std::string& f1, const std::string& f2, Report& r) {
    ess::Document d1 = ess::parse_document(ess::read_file(f1));
    ess::Document d2 = ess::parse_document(ess::read_file(f2));
    ess::EquivalenceWitness w = ess::affine_equivalence(need_morphism(d1), need_morphism(d2));
    r.data["iota"] = matrix_json(w.iota);
    r.data["dim"] = need_morphism(d1).space().dim();
}

void run_construct(const std::string& file, const std::string& out, Report& r) {
    ess::Document doc = ess::parse_document(ess::read_file(file));
    if (!doc.alpha) throw ess::MalformedDocument("document has no alpha block");
    auto res = ess::ferus_construct(*doc.alpha);
    if (auto* fail = std::get_if<ess::ClosureFailure>(&res)) {
        r.data["closed"] = false;
        r.data["failure_kind"] = ess::to_string(fail->kind);
        r.data["failure_detail"] = fail->detail;
        r.fail(1, std::string("closure failed: ") + ess::to_string(fail->kind));
        return;
    }
    auto& ok = std::get<ess::FerusResult>(res);
    ess::write_file(out, ess::serialize_document(ess::document_from_morphism(ok.morphism)));
    r.data["closed"] = true;
    r.data["dim_k"] = ok.pair.pair.dim_k;
    r.data["dim_p"] = ok.pair.pair.dim_p;
    r.data["summary"] = morphism_summary(ok.morphism);
    r.data["output"] = out;
}

void run_catalog(const std::string& name, const std::string& out, Report& r) {
    auto e = ess::catalog_entry(name);
    if (!e) throw ess::MalformedDocument("unknown catalog entry: " + name);
    r.data["name"] = e->name;
    r.data["srk"] = e->expected.srk;
    r.data["full"] = e->expected.full;
    if (e->expected.nilpotency_class)
        r.data["nilpotency_class"] = *e->expected.nilpotency_class;
    if (e->morphism) r.data["summary"] = morphism_summary(*e->morphism);
    if (!out.empty()) {
        ess::write_file(out, ess::serialize_document(ess::document_from_entry(*e)));
        r.data["output"] = out;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with symplectic symmetric pairs and "
                 "extrinsic symplectic morphisms"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string file, file2, out, name;
    bool expect_full = false;

    auto* c_validate = app.add_subcommand("validate", "run all invariants on a document");
    c_validate->add_option("file", file)->required();
    auto* c_curv = app.add_subcommand("curvature", "curvature operator, presentation, Bianchi");
    c_curv->add_option("file", file)->required();
    auto* c_srk = app.add_subcommand("srk", "symplectic curvature rank");
    c_srk->add_option("file", file)->required();
    auto* c_full = app.add_subcommand("full", "fullness report");
    c_full->add_option("file", file)->required();
    c_full->add_flag("--expect-full", expect_full, "exit 1 when not full");
    auto* c_reduce = app.add_subcommand("reduce", "reduce to the full morphism");
    c_reduce->add_option("file", file)->required();
    c_reduce->add_option("-o,--output", out)->required();
    auto* c_equiv = app.add_subcommand("equiv", "affine equivalence witness");
    c_equiv->add_option("file1", file)->required();
    c_equiv->add_option("file2", file2)->required();
    auto* c_construct = app.add_subcommand("construct", "build a morphism from alpha data");
    c_construct->add_option("file", file)->required();
    c_construct->add_option("-o,--output", out)->required();
    auto* c_catalog = app.add_subcommand("catalog", "export a catalog entry");
    c_catalog->add_option("name", name)->required();
    c_catalog->add_option("-o,--output", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    Report r;
    try {
        if (c_validate->parsed()) {
            r.command = "validate";
            run_validate(file, r);
        } else if (c_curv->parsed()) {
            r.command = "curvature";
            run_curvature(file, r);
        } else if (c_srk->parsed()) {
            r.command = "srk";
            run_srk(file, r);
        } else if (c_full->parsed()) {
            r.command = "full";
            run_full(file, expect_full, r);
        } else if (c_reduce->parsed()) {
            r.command = "reduce";
            run_reduce(file, out, r);
        } else if (c_equiv->parsed()) {
            r.command = "equiv";
            run_equiv(file, file2, r);
        } else if (c_construct->parsed()) {
            r.command = "construct";
            run_construct(file, out, r);
        } else if (c_catalog->parsed()) {
            r.command = "catalog";
            run_catalog(name, out, r);
        }
    } catch (const ess::MalformedDocument& e) {
        r.fail(2, e.what());
    } catch (const ess::MathFailure& e) {
        r.fail(1, e.what());
    } catch (const ess::InternalError& e) {
        r.fail(3, e.what());
    } catch (const std::invalid_argument& e) {
        r.fail(2, e.what());
    } catch (const std::exception& e) {
        r.fail(3, e.what());
    }
    return emit(r, format);
}
