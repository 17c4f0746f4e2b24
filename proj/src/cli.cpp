#include "mlde/cli.hpp"

#include "CLI11.hpp"
#include "mlde/catalog.hpp"
#include "mlde/characters.hpp"
#include "mlde/classifier.hpp"
#include "mlde/errors.hpp"
#include "mlde/forms.hpp"
#include "mlde/frobenius.hpp"
#include "mlde/operator.hpp"
#include "mlde/relations.hpp"
#include "mlde/series_json.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

namespace mlde {

namespace {

struct RunConfig {
    std::string format = "json";
    std::string output;
    std::optional<long> order;
    unsigned parallelism = std::max(1u, std::thread::hardware_concurrency());

    long order_or_default() const { return order ? *order : default_order(); }
};

// Runs fn(i) for i in [0, n) on up to `workers` threads; results land by index.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

Json rationals(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(to_string(r));
    return a;
}

// ---- table rendering ----

bool is_series(const Json& j) { return j.is_object() && j.contains("base_exponent") && j.contains("coeffs"); }

std::string monomial(const Rational& e) {
    if (e == 0) return "";
    if (e == 1) return "q";
    return "q^" + (is_integer(e) ? to_string(e) : "(" + to_string(e) + ")");
}

std::string render_coeff_list(const Json& coeffs, const Rational& base, long grid, std::size_t limit) {
    std::string s;
    std::size_t shown = 0;
    for (std::size_t i = 0; i < coeffs.size() && shown < limit; ++i) {
        Rational c = parse_rational(coeffs[i].get<std::string>());
        if (sgn(c) == 0) continue;
        Rational e = base + make_rational(static_cast<long>(i), grid);
        std::string mono = monomial(e);
        std::string mag = to_string(abs(c));
        if (s.empty())
            s += sgn(c) < 0 ? "-" : "";
        else
            s += sgn(c) < 0 ? " - " : " + ";
        if (mono.empty())
            s += mag;
        else
            s += (mag == "1" ? "" : mag + " ") + mono;
        ++shown;
    }
    return s.empty() ? "0" : s;
}

std::string render_series(const Json& j) {
    Rational base = parse_rational(j["base_exponent"].get<std::string>());
    long grid = j["grid"].get<long>();
    const Json& coeffs = j["coeffs"];
    Rational precision = base + make_rational(static_cast<long>(coeffs.size()), grid);
    std::string s = render_coeff_list(coeffs, base, grid, 12);
    if (j.contains("log_coeffs")) s += " + log(q) (" + render_coeff_list(j["log_coeffs"], base, grid, 12) + ")";
    return s + " + O(" + monomial(precision) + ")";
}

std::string render_scalar(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    if (is_series(j)) return render_series(j);
    if (j.is_array()) {
        std::string s = "{";
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + render_scalar(j[i]);
        return s + "}";
    }
    if (j.is_object()) {
        std::string s;
        for (auto it = j.begin(); it != j.end(); ++it) s += (s.empty() ? "" : " ") + it.key() + "=" + render_scalar(it.value());
        return s;
    }
    return j.dump();
}

bool all_objects(const Json& a) {
    if (!a.is_array() || a.empty()) return false;
    for (const auto& x : a)
        if (!x.is_object() || is_series(x)) return false;
    return true;
}

void render_table(const Json& rows, std::ostream& os, const std::string& indent) {
    std::vector<std::string> cols;
    for (const auto& r : rows)
        for (auto it = r.begin(); it != r.end(); ++it)
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    for (const auto& r : rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            line.push_back(r.contains(cols[c]) ? render_scalar(r[cols[c]]) : "");
            width[c] = std::max(width[c], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
        os << indent;
        for (std::size_t c = 0; c < line.size(); ++c) {
            os << line[c];
            if (c + 1 < line.size()) os << std::string(width[c] - line[c].size() + 2, ' ');
        }
        os << "\n";
    };
    emit(cols);
    for (const auto& line : cells) emit(line);
}

void render(const Json& j, std::ostream& os, const std::string& indent = "") {
    if (all_objects(j)) {
        render_table(j, os, indent);
        return;
    }
    if (j.is_object() && !is_series(j)) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const Json& v = it.value();
            if (all_objects(v) || (v.is_object() && !is_series(v))) {
                os << indent << it.key() << ":\n";
                render(v, os, indent + "  ");
            } else if (v.is_array() && !v.empty() && is_series(v[0])) {
                os << indent << it.key() << ":\n";
                for (const auto& x : v) os << indent << "  " << render_series(x) << "\n";
            } else {
                os << indent << it.key() << ": " << render_scalar(v) << "\n";
            }
        }
        return;
    }
    os << indent << render_scalar(j) << "\n";
}

// ---- commands ----

struct Outcome {
    Json body;
    int code = kExitOk;
};

Outcome cmd_forms_dump(const std::string& name, long order) { return {to_json(form_series(name, order))}; }

Json relation_json(const RelationResult& r) {
    Json j;
    j["label"] = r.label;
    j["status"] = status_name(r.status);
    j["order"] = r.order;
    if (r.residual_exponent) j["first_bad_exponent"] = to_string(*r.residual_exponent);
    if (r.residual_coefficient) j["residual"] = to_string(*r.residual_coefficient);
    if (!r.correction.empty()) j["correction"] = r.correction;
    return j;
}

struct FormsSummary {
    Json results = Json::array();
    std::vector<std::string> failed;
    std::vector<std::string> unexpected;
};

FormsSummary verify_forms(const std::string& group, std::optional<long> order, unsigned workers) {
    std::vector<RelationRecord> recs = relations(group);
    std::vector<RelationResult> res(recs.size());
    parallel_for(recs.size(), workers, [&](std::size_t i) {
        res[i] = verify_relation(recs[i], order ? *order : default_relation_order(recs[i].group));
    });
    FormsSummary s;
    const auto& doc = documented_relation_quarantine();
    for (const auto& r : res) {
        s.results.push_back(relation_json(r));
        if (r.status == RelationStatus::Verified) continue;
        s.failed.push_back(r.label);
        if (std::find(doc.begin(), doc.end(), r.label) == doc.end()) s.unexpected.push_back(r.label);
    }
    return s;
}

Outcome cmd_forms_verify(const std::string& group, std::optional<long> order, unsigned workers) {
    FormsSummary s = verify_forms(group, order, workers);
    return {s.results, s.unexpected.empty() ? kExitOk : kExitVerificationFailure};
}

Outcome cmd_indicial(const Rational& s) {
    IndicialReport r = indicial(build_flat(s));
    Json j;
    j["s"] = to_string(s);
    j["roots"] = rationals(r.roots);
    j["root_sum"] = to_string(r.root_sum);
    j["grid"] = r.grid;
    auto pairs = [&](const std::vector<std::pair<std::size_t, std::size_t>>& v) {
        Json a = Json::array();
        for (auto [x, y] : v) a.push_back(Json::array({to_string(r.roots[x]), to_string(r.roots[y])}));
        return a;
    };
    j["degenerate"] = pairs(r.degenerate);
    j["resonant"] = pairs(r.resonant);
    return {j};
}

Outcome cmd_solve(const Rational& s, const Rational& alpha, long order, bool log) {
    MLDEOperator op = build_flat(s);
    long steps = order * indicial(op).grid;
    if (log) return {to_json(frobenius_solve_log(op, alpha, steps))};
    return {to_json(frobenius_solve(op, alpha, steps))};
}

Outcome cmd_apply(const Rational& s, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError(path + " is not valid JSON");
    LogSeries f = log_series_from_json(j);
    LogSeries image = apply(build_flat(s), f);
    Json out;
    out["s"] = to_string(s);
    out["result"] = to_json(image);
    out["annihilated"] = image.plain().empty() && image.log_part().empty();
    return {out};
}

Json case_json(const CandidateReport& r) {
    Json j;
    j["case"] = r.case_id;
    Json raw = Json::array();
    for (const auto& c : r.raw) raw.push_back(to_string(c.s));
    j["raw"] = raw;
    Json surv = Json::object();
    for (const auto& [d, v] : r.survivors_by_depth) surv[std::to_string(d)] = rationals(v);
    j["survivors"] = surv;
    j["final"] = rationals(r.final);
    return j;
}

Outcome cmd_classify(std::optional<int> case_id, bool all, std::optional<long> depth) {
    if (!all) return {case_json(classify_case(*case_id, depth))};
    Json j;
    Json cases = Json::array();
    std::map<int, long> depths;
    for (int c = 1; c <= 4; ++c) {
        if (depth) depths[c] = *depth;
        cases.push_back(case_json(classify_case(c, depth)));
    }
    j["cases"] = cases;
    j["final"] = rationals(classify_all(depths));
    return {j};
}

Outcome cmd_catalog_list() {
    Json a = Json::array();
    for (const auto& e : catalog()) {
        Json j;
        j["label"] = e.label;
        j["s"] = to_string(e.s);
        j["exponent"] = to_string(e.exponent);
        j["fundamental"] = e.fundamental;
        j["operator"] = e.op.third_order ? "third_order" : "flat";
        if (e.quasimodular_depth) j["quasimodular_depth"] = e.quasimodular_depth;
        if (!e.restates.empty()) j["restates"] = e.restates;
        a.push_back(j);
    }
    for (const auto& l : log_entry_labels()) {
        Json j;
        j["label"] = l;
        j["log"] = true;
        a.push_back(j);
    }
    return {a};
}

Outcome cmd_catalog_build(const std::string& label, long order) {
    const auto logs = log_entry_labels();
    if (std::find(logs.begin(), logs.end(), label) != logs.end()) return {to_json(build_log_entry(label, order))};
    return {to_json(build_entry(label, order))};
}

Json entry_json(const EntryReport& r) {
    Json j;
    j["label"] = r.label;
    j["status"] = status_name(r.status);
    j["order"] = r.order;
    j["annihilated"] = r.annihilated;
    j["prefix_ok"] = r.prefix_ok;
    if (r.first_bad_exponent) j["first_bad_exponent"] = to_string(*r.first_bad_exponent);
    if (r.quasimodular_ok) j["quasimodular_ok"] = *r.quasimodular_ok;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

struct CatalogSummary {
    Json entries = Json::array();
    Json log_entries = Json::array();
    std::vector<std::string> quarantined;
    std::vector<std::string> unexpected;
    long verified = 0;
};

CatalogSummary verify_catalog(const std::optional<Rational>& s, const std::optional<std::string>& label,
                              std::optional<long> order, unsigned workers) {
    std::vector<std::string> labels, logs;
    for (const auto& e : catalog())
        if ((!s || e.s == *s) && (!label || e.label == *label)) labels.push_back(e.label);
    for (const auto& l : log_entry_labels()) {
        if (label && l != *label) continue;
        if (s) {
            std::string base = l.substr(0, l.rfind('.'));
            bool match = false;
            for (const auto& e : catalog())
                if (e.section == base && e.s == *s) match = true;
            if (!match) continue;
        }
        logs.push_back(l);
    }
    if (label && labels.empty() && logs.empty()) throw UnknownLabel("no catalog entry " + *label);
    std::vector<EntryReport> reps(labels.size() + logs.size());
    parallel_for(reps.size(), workers, [&](std::size_t i) {
        reps[i] = i < labels.size() ? verify_entry(labels[i], order) : verify_log_entry(logs[i - labels.size()], order);
    });
    CatalogSummary c;
    const auto& doc = documented_catalog_quarantine();
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto& r = reps[i];
        (i < labels.size() ? c.entries : c.log_entries).push_back(entry_json(r));
        if (r.status == EntryStatus::Verified) {
            ++c.verified;
            continue;
        }
        c.quarantined.push_back(r.label);
        if (std::find(doc.begin(), doc.end(), r.label) == doc.end()) c.unexpected.push_back(r.label);
    }
    return c;
}

Json strings(const std::vector<std::string>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x);
    return a;
}

Outcome cmd_catalog_verify(const std::optional<Rational>& s, const std::optional<std::string>& label,
                           std::optional<long> order, unsigned workers) {
    CatalogSummary c = verify_catalog(s, label, order, workers);
    Json j;
    j["entries"] = c.entries;
    j["log_entries"] = c.log_entries;
    j["verified"] = c.verified;
    j["quarantined"] = strings(c.quarantined);
    j["unexpected_failures"] = strings(c.unexpected);
    return {j, c.unexpected.empty() ? kExitOk : kExitVerificationFailure};
}

Json characters_json(const std::string& algebra, long order, bool verify) {
    const DeligneDatum& d = deligne_datum(algebra);
    Json j;
    j["algebra"] = algebra;
    j["s"] = to_string(d.s);
    j["exponents"] = rationals(d.ramond_exponents);
    Json chars = Json::array();
    if (verify) {
        Theorem71Report r = verify_theorem71(algebra, order, d.lattice_case);
        j["exponents"] = rationals(r.exponents);
        j["indicial_roots"] = rationals(r.roots);
        for (const auto& c : r.characters) chars.push_back(to_json(c.series));
        j["labels"] = Json::array();
        for (const auto& c : r.characters) j["labels"].push_back(c.label);
        j["characters"] = chars;
        j["mode"] = d.lattice_case ? "full" : "exponent_only";
        j["verified"] = r.verified;
        if (!r.notes.empty()) j["notes"] = strings(r.notes);
        return j;
    }
    if (d.lattice_case) {
        Json labels = Json::array();
        for (const auto& c : ramond_characters(algebra, order)) {
            chars.push_back(to_json(c.series));
            labels.push_back(c.label);
        }
        j["labels"] = labels;
    }
    j["characters"] = chars;
    j["verified"] = false;
    return j;
}

Outcome cmd_characters(const std::string& algebra, long order, bool verify) {
    Json j = characters_json(algebra, order, verify);
    return {j, verify && !j["verified"].get<bool>() ? kExitVerificationFailure : kExitOk};
}

Outcome cmd_reproduce(unsigned workers) {
    Json report;
    bool ok = true;

    FormsSummary f = verify_forms("all", std::nullopt, workers);
    Json forms;
    forms["relations"] = f.results.size();
    forms["failed"] = strings(f.failed);
    forms["documented_quarantine"] = strings(documented_relation_quarantine());
    forms["unexpected_failures"] = strings(f.unexpected);
    ok = ok && f.unexpected.empty();
    report["forms"] = forms;

    Json cls;
    cls["final"] = rationals(classify_all());
    report["classify"] = cls;

    CatalogSummary c = verify_catalog(std::nullopt, std::nullopt, std::nullopt, workers);
    Json cat;
    cat["verified"] = c.verified;
    cat["quarantined"] = strings(c.quarantined);
    cat["documented_quarantine"] = strings(documented_catalog_quarantine());
    cat["unexpected_failures"] = strings(c.unexpected);
    ok = ok && c.unexpected.empty();
    std::vector<Rational> svals = catalog_s_values();
    std::vector<SystemReport> systems(svals.size());
    parallel_for(svals.size(), workers, [&](std::size_t i) { systems[i] = check_fundamental_system(svals[i], 25); });
    Json sys = Json::array();
    for (const auto& r : systems) {
        bool good = r.exponents_match_roots && r.root_sum == 1 && r.wronskian_constant && r.wronskian_nonzero;
        ok = ok && good;
        Json j;
        j["s"] = to_string(r.s);
        j["ok"] = good;
        sys.push_back(j);
    }
    cat["systems"] = sys;
    report["catalog"] = cat;

    const std::vector<std::string> algebras{"A2", "G2", "D4", "F4", "E6", "E7", "E8"};
    std::vector<Json> ch(algebras.size());
    parallel_for(algebras.size(), workers, [&](std::size_t i) { ch[i] = characters_json(algebras[i], 25, true); });
    Json chars;
    for (std::size_t i = 0; i < algebras.size(); ++i) {
        Json j;
        j["s"] = ch[i]["s"];
        j["mode"] = ch[i]["mode"];
        j["exponents"] = ch[i]["exponents"];
        j["verified"] = ch[i]["verified"];
        ok = ok && ch[i]["verified"].get<bool>();
        chars[algebras[i]] = j;
    }
    report["characters"] = chars;
    report["status"] = ok ? "ok" : "failure";
    return {report, ok ? kExitOk : kExitVerificationFailure};
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const InsufficientOrder*>(&e)) return kExitInsufficientOrder;
    return kExitUsage;
}

Rational rational_arg(const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const Error&) {
        throw CLI::ValidationError("not a rational number: " + text);
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact workbench for the flat_s and sharp_s modular differential equations", "mlde"};
    app.require_subcommand(1);
    RunConfig cfg;
    long order_value = 0;
    app.add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--output", cfg.output, "write the result to this file");
    CLI::Option* order_opt = app.add_option("--order", order_value, "truncation order (relative, in q)")->check(CLI::NonNegativeNumber);
    app.add_option("--parallelism", cfg.parallelism, "worker threads")->check(CLI::PositiveNumber);
    app.fallthrough();

    std::string name, group = "all", s_text, alpha_text, label, algebra, series_path;
    int case_id = 0;
    long depth = 0;
    bool log = false, all = false, verify = false;

    auto* forms = app.add_subcommand("forms", "named modular forms and relations");
    forms->require_subcommand(1);
    auto* forms_dump = forms->add_subcommand("dump", "print the q-expansion of a named form");
    forms_dump->add_option("--name", name)->required();
    auto* forms_verify = forms->add_subcommand("verify", "check the relation groups");
    forms_verify->add_option("--group", group)->check(CLI::IsMember({"all", "a", "b", "c", "d", "e", "f", "g"}));

    auto* ind = app.add_subcommand("indicial", "indicial roots of flat_s");
    ind->add_option("--s", s_text)->required();

    auto* solve = app.add_subcommand("solve", "Frobenius solution of flat_s");
    solve->add_option("--s", s_text)->required();
    solve->add_option("--alpha", alpha_text)->required();
    solve->add_flag("--log", log, "logarithmic solution");

    auto* apply_cmd = app.add_subcommand("apply", "apply flat_s to a JSON series");
    apply_cmd->add_option("--s", s_text)->required();
    apply_cmd->add_option("--series", series_path)->required();

    auto* classify = app.add_subcommand("classify", "parameters admitting CFT-type solutions");
    auto* case_opt = classify->add_option("--case", case_id)->check(CLI::Range(1, 4));
    auto* all_opt = classify->add_flag("--all", all);
    auto* depth_opt = classify->add_option("--depth", depth)->check(CLI::PositiveNumber);
    case_opt->excludes(all_opt);
    classify->callback([&] {
        if (!case_opt->count() && !all_opt->count()) throw CLI::RequiredError("--case or --all");
    });

    auto* cat = app.add_subcommand("catalog", "closed-form solutions");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "list entries");
    auto* cat_build = cat->add_subcommand("build", "expand one entry");
    cat_build->add_option("--label", label)->required();
    auto* cat_verify = cat->add_subcommand("verify", "verify entries");
    auto* cv_s = cat_verify->add_option("--s", s_text);
    auto* cv_label = cat_verify->add_option("--label", label);
    auto* cv_all = cat_verify->add_flag("--all", all);
    cv_s->excludes(cv_all);
    cv_label->excludes(cv_all);

    auto* chars = app.add_subcommand("characters", "Ramond-twisted characters of the Deligne series");
    chars->add_option("--algebra", algebra)->required()->check(CLI::IsMember({"A2", "G2", "D4", "F4", "E6", "E7", "E8"}));
    chars->add_flag("--verify", verify);

    auto* repro = app.add_subcommand("reproduce", "run every check and print one report");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (order_opt->count()) cfg.order = order_value;

    try {
        Outcome o;
        if (forms_dump->parsed())
            o = cmd_forms_dump(name, cfg.order_or_default());
        else if (forms_verify->parsed())
            o = cmd_forms_verify(group, cfg.order, cfg.parallelism);
        else if (ind->parsed())
            o = cmd_indicial(rational_arg(s_text));
        else if (solve->parsed())
            o = cmd_solve(rational_arg(s_text), rational_arg(alpha_text), cfg.order_or_default(), log);
        else if (apply_cmd->parsed())
            o = cmd_apply(rational_arg(s_text), series_path);
        else if (classify->parsed())
            o = cmd_classify(case_opt->count() ? std::optional<int>(case_id) : std::nullopt, all,
                             depth_opt->count() ? std::optional<long>(depth) : std::nullopt);
        else if (cat_list->parsed())
            o = cmd_catalog_list();
        else if (cat_build->parsed())
            o = cmd_catalog_build(label, cfg.order_or_default());
        else if (cat_verify->parsed())
            o = cmd_catalog_verify(cv_s->count() ? std::optional<Rational>(rational_arg(s_text)) : std::nullopt,
                                   cv_label->count() ? std::optional<std::string>(label) : std::nullopt, cfg.order,
                                   cfg.parallelism);
        else if (chars->parsed())
            o = cmd_characters(algebra, cfg.order ? *cfg.order : 25, verify);
        else if (repro->parsed())
            o = cmd_reproduce(cfg.parallelism);

        std::ostringstream text;
        if (cfg.format == "table")
            render(o.body, text);
        else
            text << o.body.dump(2) << "\n";
        if (cfg.output.empty()) {
            out << text.str();
        } else {
            std::ofstream f(cfg.output);
            if (!f) {
                err << "error: cannot write " << cfg.output << "\n";
                return kExitUsage;
            }
            f << text.str();
        }
        return o.code;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        Json j;
        j["error"] = e.kind();
        j["message"] = e.what();
        err << j.dump() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace mlde
