#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>

#include "nsemi/json_io.hpp"

#ifdef _WIN32
#include <io.h>
#define NSEMI_ISATTY _isatty(1)
#else
#include <unistd.h>
#define NSEMI_ISATTY isatty(1)
#endif

namespace nsemi::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string join_i64(const std::vector<i64>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

enum class Format { table, json_fmt, csv };

Format pick_format(const std::string& requested) {
    if (requested == "json") return Format::json_fmt;
    if (requested == "csv") return Format::csv;
    if (requested == "table") return Format::table;
    if (!requested.empty()) raise(errc::bad_input, "unknown format: " + requested);
    return NSEMI_ISATTY ? Format::table : Format::json_fmt;
}

void require_not_csv(Format fmt, const char* cmd) {
    if (fmt == Format::csv)
        raise(errc::bad_input, std::string("csv output is not defined for '") + cmd +
                                   "'; use --format json or table");
}

void print_ideal_line(std::ostream& out, const char* label, const RelativeIdeal& E) {
    out << label << " = " << E.to_string() << "  (offset " << E.min() << ")\n";
}

void print_classification_table(std::ostream& out, const ClassificationReport& r) {
    const NumericalSemigroup& H = *r.semigroup;
    out << "H = <" << join_i64(H.generators()) << ">\n";
    out << "multiplicity = " << H.multiplicity() << ", frobenius = " << H.frobenius()
        << ", genus = " << H.genus() << ", type = " << r.cm_type << "\n";
    out << "can_red = " << r.can_red << "\n";
    out << "e0 = " << r.e0 << ", e1 = " << r.e1 << "\n";
    out << "gorenstein = " << (r.gorenstein ? "true" : "false")
        << ", almost_gorenstein = " << (r.almost_gorenstein ? "true" : "false")
        << ", nearly_gorenstein = " << (r.nearly_gorenstein ? "true" : "false") << "\n";
    print_ideal_line(out, "trace", r.trace);
    print_ideal_line(out, "blow_up", r.blowup);
    out << "hilbert: e0 = " << r.hilbert.e0 << ", e1 = " << r.hilbert.e1
        << ", stabilization = " << r.hilbert.stabilization << ", values =";
    for (i64 v : r.hilbert.values) out << ' ' << v;
    out << "\n";
    out << "checks passed:";
    for (const auto& c : r.checks_passed) out << ' ' << c;
    out << "\n";
}

int cmd_info(const std::string& gens, Format fmt, std::ostream& out) {
    SgPtr H = make_semigroup(parse_generator_list(gens));
    if (fmt == Format::json_fmt) {
        out << to_json(*H).dump(2) << "\n";
    } else if (fmt == Format::csv) {
        const InvariantBundle b = compute_invariants(H, false);
        out << kCsvHeader << "\n" << csv_row(b) << "\n";
    } else {
        out << "H = <" << join_i64(H->generators()) << ">\n";
        out << "multiplicity = " << H->multiplicity() << "\n";
        out << "frobenius = " << H->frobenius() << ", conductor = " << H->conductor() << "\n";
        out << "genus = " << H->genus() << ", type = " << H->type() << "\n";
        out << "pf = {" << join_i64(H->pseudo_frobenius()) << "}\n";
        out << "symmetric = " << (H->is_symmetric() ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_canred(const std::string& gens, bool show_powers, Format fmt, std::ostream& out) {
    require_not_csv(fmt, "canred");
    SgPtr H = make_semigroup(parse_generator_list(gens));
    const RelativeIdeal K = canonical_ideal(H);
    const i64 cr = can_red(H);
    const RelativeIdeal B = blow_up(H, K);
    json powers = json::array();
    std::vector<RelativeIdeal> plist;
    if (show_powers) {
        RelativeIdeal P = RelativeIdeal::unit(H);
        for (i64 n = 0; n <= cr + 1; ++n) {
            plist.push_back(P);
            powers.push_back(to_json(P));
            P = P.add(K);
        }
    }
    if (fmt == Format::json_fmt) {
        json j{{"semigroup", to_json(*H)},
               {"canonical", to_json(K)},
               {"can_red", cr},
               {"blow_up", to_json(B)}};
        if (show_powers) j["powers"] = powers;
        out << j.dump(2) << "\n";
    } else {
        out << "H = <" << join_i64(H->generators()) << ">\n";
        print_ideal_line(out, "K", K);
        out << "can_red = " << cr << "\n";
        print_ideal_line(out, "blow_up", B);
        for (std::size_t n = 0; n < plist.size(); ++n)
            out << "K^" << n << " = " << plist[n].to_string() << "\n";
    }
    return 0;
}

int cmd_hilbert(const std::string& gens, i64 n_max, Format fmt, std::ostream& out) {
    require_not_csv(fmt, "hilbert");
    SgPtr H = make_semigroup(parse_generator_list(gens));
    const HilbertTable t = hilbert_table(H, n_max);
    if (fmt == Format::json_fmt) {
        json j{{"semigroup", to_json(*H)}, {"hilbert", to_json(t)}};
        out << j.dump(2) << "\n";
    } else {
        out << "H = <" << join_i64(H->generators()) << ">\n";
        out << "e0 = " << t.e0 << ", e1 = " << t.e1 << ", stabilization = " << t.stabilization
            << "\n";
        out << "n : HF(n)\n";
        for (std::size_t n = 0; n < t.values.size(); ++n)
            out << n << " : " << t.values[n] << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& gens, Format fmt, std::ostream& out) {
    SgPtr H = make_semigroup(parse_generator_list(gens));
    const ClassificationReport r = classify(H);
    if (fmt == Format::json_fmt)
        out << to_json(r).dump(2) << "\n";
    else if (fmt == Format::csv)
        out << kCsvHeader << "\n" << csv_row(compute_invariants(H, false)) << "\n";
    else
        print_classification_table(out, r);
    return 0;
}

int cmd_idealize(const std::string& gens, const std::string& module_arg, Format fmt,
                 std::ostream& out) {
    require_not_csv(fmt, "idealize");
    SgPtr H = make_semigroup(parse_generator_list(gens));
    const RelativeIdeal E = RelativeIdeal::from_elements(H, parse_generator_list(module_arg));
    const IdealizationReport r = analyze_idealization(H, E);
    if (fmt == Format::json_fmt) {
        out << to_json(r).dump(2) << "\n";
    } else {
        out << "H = <" << join_i64(H->generators()) << ">\n";
        print_ideal_line(out, "module", r.module);
        out << "trace_iso = " << (r.trace_iso ? "true" : "false")
            << ", canred_le2 = " << (r.canred_le2 ? "true" : "false") << "\n";
        if (r.witness) print_ideal_line(out, "witness_I", *r.witness);
        if (r.gorenstein_idealization)
            out << "idealization is Gorenstein (module is the canonical class), type = 1\n";
        if (r.type_via_socle)
            out << "type = " << *r.type_via_socle << " (socle route " << *r.type_via_socle
                << ", mu route " << *r.type_via_mu << ")\n";
    }
    return 0;
}

int cmd_overrings(const std::string& gens, Format fmt, std::ostream& out) {
    require_not_csv(fmt, "overrings");
    SgPtr H = make_semigroup(parse_generator_list(gens));
    const auto over = over_semigroups(H);

    std::vector<SgPtr> as_semigroups;
    for (const RelativeIdeal& B : over) {
        const i64 len = std::max<i64>(H->conductor(), 1);
        BitVec bits(static_cast<std::size_t>(len));
        for (i64 z = 0; z < len; ++z) bits.set(static_cast<std::size_t>(z), B.contains(z));
        as_semigroups.push_back(
            std::make_shared<const NumericalSemigroup>(NumericalSemigroup::from_members(bits)));
    }
    const bool symmetric = H->is_symmetric();
    bool bijection = false;
    if (symmetric) bijection = verify_trace_extension_bijection(H);

    if (fmt == Format::json_fmt) {
        json list = json::array();
        for (const auto& B : as_semigroups) list.push_back(to_json(*B));
        json j{{"semigroup", to_json(*H)},
               {"count", as_semigroups.size()},
               {"over_semigroups", list}};
        j["trace_bijection"] = symmetric ? json(bijection) : json(nullptr);
        out << j.dump(2) << "\n";
    } else {
        out << "H = <" << join_i64(H->generators()) << ">\n";
        out << "over-semigroups: " << as_semigroups.size() << "\n";
        for (const auto& B : as_semigroups) out << "  <" << join_i64(B->generators()) << ">\n";
        if (symmetric)
            out << "trace-extension bijection: " << (bijection ? "ok" : "FAILED") << "\n";
        else
            out << "trace-extension bijection: n/a (H not symmetric)\n";
    }
    if (symmetric && !bijection) return 2;
    return 0;
}

int cmd_survey(int genus, const std::string& checks_arg, int jobs, const std::string& csv_path,
               Format fmt, std::ostream& out) {
    SurveyOptions opt;
    opt.genus_max = genus;
    opt.jobs = jobs;
    opt.want_csv = !csv_path.empty() || fmt == Format::csv;
    if (!checks_arg.empty())
        for (auto& name : split(checks_arg, ',')) opt.checks.push_back(name);
    const SurveyReport r = survey(opt);
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) raise(errc::bad_input, "cannot write " + csv_path);
        f << r.csv;
    }
    if (fmt == Format::csv) {
        out << r.csv;
    } else if (fmt == Format::json_fmt) {
        out << to_json(r).dump(2) << "\n";
    } else {
        out << "genus <= " << r.genus_max << ": " << r.total << " semigroups\n";
        out << "gorenstein = " << r.count_gorenstein
            << ", almost (not gor) = " << r.count_ag_not_gorenstein
            << ", nearly (not almost) = " << r.count_ng_not_ag
            << ", neither = " << r.count_neither << "\n";
        out << "can_red histogram:";
        for (const auto& [k, n] : r.can_red_histogram) out << "  " << k << ":" << n;
        out << "\n";
        for (const auto& c : r.checks)
            out << "check " << c.name << ": visited " << c.visited << "\n";
        out << "violations: " << r.violations.size() << "\n";
        for (const auto& v : r.violations)
            out << "  [" << v.check << "] <" << join_i64(v.generators) << "> " << v.lhs
                << " vs " << v.rhs << "\n";
    }
    return r.violations.empty() ? 0 : 2;
}

}  // namespace

std::vector<std::int64_t> parse_generator_list(const std::string& text) {
    std::string cleaned;
    for (std::size_t i = 0; i < text.size();) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == 0xE2 && i + 2 < text.size()) {
            // UTF-8 angle brackets from the printed form.
            i += 3;
            continue;
        }
        if (c == '<' || c == '>' || c == '[' || c == ']' || std::isspace(c)) {
            ++i;
            continue;
        }
        cleaned += static_cast<char>(c);
        ++i;
    }
    if (cleaned.empty()) raise(errc::bad_input, "empty generator list");
    std::vector<std::int64_t> out;
    for (const std::string& tok : split(cleaned, ',')) {
        if (tok.empty()) raise(errc::bad_input, "empty token in generator list '" + text + "'");
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            raise(errc::bad_input, "not an integer: '" + tok + "'");
        }
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants of numerical semigroup rings"};
    app.require_subcommand(1);
    std::string format;
    app.add_option("--format", format, "output format: table, json or csv");

    std::string gens, module_arg, checks_arg, csv_path;
    bool show_powers = false;
    i64 n_max = 0;
    int genus = 0, jobs = 1;

    // every subcommand also accepts --format after its own arguments
    auto with_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: table, json or csv");
        return sub;
    };

    auto* info = with_format(app.add_subcommand("info", "semigroup invariants"));
    info->add_option("gens", gens, "generators, e.g. 3,4,5")->required();

    auto* canred = with_format(app.add_subcommand("canred", "canonical ideal, can_red, blow-up"));
    canred->add_option("gens", gens)->required();
    canred->add_flag("--show-powers", show_powers, "list the canonical powers");

    auto* hilbert = with_format(app.add_subcommand("hilbert", "Hilbert table of the canonical ideal"));
    hilbert->add_option("gens", gens)->required();
    hilbert->add_option("--n", n_max, "largest power")->required();

    auto* classify_cmd = with_format(app.add_subcommand("classify", "full classification report"));
    classify_cmd->add_option("gens", gens)->required();

    auto* idealize = with_format(app.add_subcommand("idealize", "idealization report for a module"));
    idealize->add_option("gens", gens)->required();
    idealize->add_option("--module", module_arg, "module generators, e.g. 0,2")->required();

    auto* overrings = with_format(app.add_subcommand("overrings", "over-semigroups and the trace bijection"));
    overrings->add_option("gens", gens)->required();

    auto* survey_cmd = with_format(app.add_subcommand("survey", "run identity checks over all semigroups"));
    survey_cmd->add_option("--genus", genus, "largest genus")->required();
    survey_cmd->add_option("--checks", checks_arg, "comma-separated check names (default all)");
    survey_cmd->add_option("--jobs", jobs, "worker threads");
    survey_cmd->add_option("--csv", csv_path, "write one CSV row per semigroup to this file");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        const Format fmt = pick_format(format);
        if (info->parsed()) return cmd_info(gens, fmt, out);
        if (canred->parsed()) return cmd_canred(gens, show_powers, fmt, out);
        if (hilbert->parsed()) return cmd_hilbert(gens, n_max, fmt, out);
        if (classify_cmd->parsed()) return cmd_classify(gens, fmt, out);
        if (idealize->parsed()) return cmd_idealize(gens, module_arg, fmt, out);
        if (overrings->parsed()) return cmd_overrings(gens, fmt, out);
        if (survey_cmd->parsed())
            return cmd_survey(genus, checks_arg, jobs, csv_path, fmt, out);
        err << "error: no command\n";
        return 1;
    } catch (const violation_error& e) {
        err << "violation: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == errc::bound_exceeded ? 3 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace nsemi::cli
