#include "cyctri/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cyctri/io.hpp"
#include "cyctri/report.hpp"

namespace cyctri::cli {

namespace {

struct CommonFlags {
    std::string format = "text";
};

void add_format(CLI::App* cmd, CommonFlags& common) {
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

void emit(std::ostream& out, const CommonFlags& common, const report::json& j,
          const std::string& text) {
    if (common.format == "json")
        out << j.dump(2) << "\n";
    else
        out << text;
}

std::vector<Filter> parse_filters(const std::string& csv, std::ostream& err, bool& ok) {
    std::vector<Filter> filters;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        auto f = filter_from_string(tok);
        if (!f) {
            err << "unknown filter '" << tok
                << "' (expected ridge, edgelink, vertexdeg or ds)\n";
            ok = false;
            return {};
        }
        filters.push_back(*f);
    }
    ok = true;
    return filters;
}

std::optional<std::pair<Vertex, Vertex>> parse_diagonal(const std::string& s, std::ostream& err,
                                                        bool& ok) {
    ok = true;
    if (s.empty()) return std::nullopt;
    int a = 0, b = 0;
    char comma = 0;
    std::istringstream is(s);
    if (!(is >> a >> comma >> b) || comma != ',') {
        err << "bad --diagonal '" << s << "' (expected e.g. 0,6)\n";
        ok = false;
        return std::nullopt;
    }
    return std::make_pair(a, b);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"difference-cycle triangulation workbench"};
    app.require_subcommand(1);

    // expand
    auto* cmd_expand = app.add_subcommand("expand", "Expand difference cycles into facets");
    std::string expand_input;
    CommonFlags expand_common;
    cmd_expand->add_option("input", expand_input, "Input .dc file")->required();
    add_format(cmd_expand, expand_common);

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "Search difference-cycle candidate sets");
    SearchConfig cfg;
    std::string enum_filters = "ridge,edgelink";
    std::string enum_diagonal;
    CommonFlags enum_common;
    cmd_enum->add_option("--n", cfg.n, "Modulus")->capture_default_str();
    cmd_enum->add_option("--d", cfg.d, "Facet dimension")->capture_default_str();
    cmd_enum->add_option("--orbits", cfg.orbit_count, "Number of orbits")->capture_default_str();
    cmd_enum->add_option("--diagonal", enum_diagonal, "Required diagonal, e.g. 0,6");
    cmd_enum->add_option("--filters", enum_filters, "Comma list: ridge,edgelink,vertexdeg,ds")
        ->capture_default_str();
    cmd_enum->add_option("--jobs", cfg.parallelism, "Worker threads")->capture_default_str();
    add_format(cmd_enum, enum_common);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Certify the combinatorial-manifold property");
    std::string verify_input;
    std::string strategy = "auto";
    VerifyOptions vopts;
    bool witness = false, strict = false, no_transitivity = false;
    CommonFlags verify_common;
    cmd_verify->add_option("input", verify_input, "Input .dc or .fct file")->required();
    cmd_verify->add_option("--strategy", strategy, "Vertex-link strategy")
        ->check(CLI::IsMember({"auto", "ballunion", "bistellar"}))
        ->capture_default_str();
    cmd_verify->add_option("--budget", vopts.budget, "Bistellar flip budget")
        ->capture_default_str();
    cmd_verify->add_option("--seed", vopts.seed, "Random seed")->capture_default_str();
    cmd_verify->add_option("--jobs", vopts.jobs, "Worker threads")->capture_default_str();
    cmd_verify->add_flag("--witness", witness, "Include certificate witnesses");
    cmd_verify->add_flag("--strict", strict, "Exit 2 on a negative verdict");
    cmd_verify->add_flag("--no-transitivity", no_transitivity, "Check every face");
    add_format(cmd_verify, verify_common);

    // aut
    auto* cmd_aut = app.add_subcommand("aut", "Automorphism group and fingerprint");
    std::string aut_input;
    CommonFlags aut_common;
    cmd_aut->add_option("input", aut_input, "Input .dc or .fct file")->required();
    add_format(cmd_aut, aut_common);

    // homology
    auto* cmd_hom = app.add_subcommand("homology", "Homology profile and intersection form");
    std::string hom_input;
    CommonFlags hom_common;
    cmd_hom->add_option("input", hom_input, "Input .dc or .fct file")->required();
    add_format(cmd_hom, hom_common);

    // iso
    auto* cmd_iso = app.add_subcommand("iso", "Combinatorial isomorphism test");
    std::string iso_a, iso_b;
    CommonFlags iso_common;
    cmd_iso->add_option("first", iso_a, "First complex")->required();
    cmd_iso->add_option("second", iso_b, "Second complex")->required();
    add_format(cmd_iso, iso_common);

    std::vector<const char*> argv{"cyctri"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (cmd_expand->parsed()) {
            auto c = load_complex(expand_input);
            emit(out, expand_common, report::facets_json(c), report::facets_text(c));
            return 0;
        }
        if (cmd_enum->parsed()) {
            bool ok = true;
            cfg.filters = parse_filters(enum_filters, err, ok);
            if (!ok) return 1;
            cfg.required_diagonal = parse_diagonal(enum_diagonal, err, ok);
            if (!ok) return 1;
            auto cands = enumerate(cfg);
            emit(out, enum_common, report::candidates_json(cands),
                 report::candidates_text(cands));
            return 0;
        }
        if (cmd_verify->parsed()) {
            auto c = load_complex(verify_input);
            vopts.use_transitivity = !no_transitivity;
            if (strategy == "ballunion") vopts.strategy = VertexLinkStrategy::ball_union_search;
            if (strategy == "bistellar") vopts.strategy = VertexLinkStrategy::bistellar_only;
            auto rep = verify_manifold(c, vopts);
            std::optional<SingularLocus> locus;
            if (rep.is_manifold == Trivalent::no)
                locus = singular_locus(c, vopts.budget, vopts.seed);
            emit(out, verify_common,
                 report::verification_json(rep, locus ? &*locus : nullptr, witness),
                 report::verification_text(rep, locus ? &*locus : nullptr, witness));
            if (strict && rep.is_manifold != Trivalent::yes) return 2;
            return 0;
        }
        if (cmd_aut->parsed()) {
            auto c = load_complex(aut_input);
            report::AutReport r;
            r.group = automorphisms(c);
            r.fingerprint = analyze_group(r.group, &c);
            try {
                r.multipliers = multipliers(c);
            } catch (const std::invalid_argument&) {
                // shift is not an automorphism; leave empty
            }
            emit(out, aut_common, report::aut_json(r), report::aut_text(r));
            return 0;
        }
        if (cmd_hom->parsed()) {
            auto c = load_complex(hom_input);
            report::HomologyReport r;
            r.profile = homology(c);
            try {
                r.orientable = orient(c).has_value();
            } catch (const std::invalid_argument&) {
                r.orientable = false;
            }
            if (c.dim() == 4) {
                try {
                    r.form = intersection_form(c);
                    r.has_form = true;
                } catch (const std::exception& e) {
                    r.form_note = e.what();
                }
            } else {
                r.form_note = "complex is not 4-dimensional";
            }
            emit(out, hom_common, report::homology_json(r), report::homology_text(r));
            return 0;
        }
        if (cmd_iso->parsed()) {
            auto a = load_complex(iso_a);
            auto b = load_complex(iso_b);
            auto r = is_isomorphic(a, b);
            emit(out, iso_common, report::iso_json(r), report::iso_text(r));
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 1;
}

} // namespace cyctri::cli
