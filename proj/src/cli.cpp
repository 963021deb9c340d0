#include "minell/cli.hpp"

#include <fstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "minell/classify.hpp"
#include "minell/deform.hpp"
#include "minell/errors.hpp"
#include "minell/graph.hpp"
#include "minell/hj.hpp"
#include "minell/quotient.hpp"

namespace minell {

namespace {

using nlohmann::json;

DualGraph load_graph(const std::string& path, std::istream& in) {
    if (path == "-") return parse_graph(in);
    std::ifstream file(path);
    if (!file) throw input_error("cannot open graph file '" + path + "'");
    return parse_graph(file);
}

std::vector<HJExpansion> parse_catalog(const std::string& arg) {
    std::vector<HJExpansion> out;
    std::size_t pos = 0;
    while (pos < arg.size()) {
        auto semi = arg.find(';', pos);
        std::string part = arg.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        if (!part.empty()) out.push_back(parse_chain(part));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (out.empty()) throw input_error("--chains needs at least one [b1,...] entry");
    return out;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

json move_json(const Move& mv) {
    json e;
    e["source"] = mv.source.str();
    e["target"] = mv.target.str();
    e["rule"] = std::string(rule_id(mv.rule));
    e["degree_drop"] = mv.degree_drop;
    e["chains"] = json::array();
    for (const HJExpansion& c : mv.chains) e["chains"].push_back(c.str());
    return e;
}

int cmd_classify(const std::string& path, bool as_json, std::istream& in, std::ostream& out) {
    DualGraph g = load_graph(path, in);
    SingularityClass c = classify_graph(g);  // exits 2 when not negative definite
    bool named = c.family() != Family::CyclicQuotient && c.family() != Family::Unknown;
    if (as_json) {
        json j;
        j["class"] = c.str();
        j["family"] = std::string(family_name(c.family()));
        j["negative_definite"] = true;
        if (named) {
            j["degree"] = degree(c);
            ClassPredicates p = predicates(c);
            j["predicates"] = {{"is_lci", p.is_lci},
                               {"is_hypersurface", p.is_hypersurface},
                               {"el_smoothable", p.el_smoothable},
                               {"nf_component", p.nf_component},
                               {"fc_chi_smooth", p.fc_chi_smooth}};
        } else {
            j["degree"] = nullptr;
            j["predicates"] = nullptr;
        }
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "class: " << c.str() << '\n';
    out << "negative definite: yes\n";
    if (named) {
        ClassPredicates p = predicates(c);
        out << "degree: " << degree(c) << '\n';
        out << "lci: " << yesno(p.is_lci) << '\n';
        out << "hypersurface: " << yesno(p.is_hypersurface) << '\n';
        out << "el-smoothable: " << yesno(p.el_smoothable) << '\n';
        out << "nf-component: " << yesno(p.nf_component) << '\n';
        out << "fc-chi-smooth: " << yesno(p.fc_chi_smooth) << '\n';
    } else {
        out << "degree: n/a (not a minimally elliptic family)\n";
    }
    return 0;
}

int cmd_cycle(const std::string& path, bool as_json, std::istream& in, std::ostream& out) {
    DualGraph g = load_graph(path, in);
    Cycle z = fundamental_cycle(g);
    long long zz = self_intersection(g, z);
    long long chi_z = chi(g, z);
    long long sp = singular_point_count(g);
    if (as_json) {
        json j;
        j["vertices"] = json::array();
        j["coefficients"] = json::array();
        for (std::size_t i = 0; i < g.size(); ++i) {
            j["vertices"].push_back(g.vertices()[i].name);
            j["coefficients"].push_back(z.coeff[i]);
        }
        j["self_intersection"] = zz;
        j["chi"] = chi_z;
        j["singular_points"] = sp;
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "fundamental cycle:";
    for (std::size_t i = 0; i < g.size(); ++i) out << ' ' << g.vertices()[i].name << '=' << z.coeff[i];
    out << '\n';
    out << "Z.Z: " << zz << '\n';
    out << "chi(Z): " << chi_z << '\n';
    out << "singular points: " << sp << '\n';
    return 0;
}

int cmd_hj(const std::string& frac, bool as_json, std::ostream& out) {
    auto slash = frac.find('/');
    if (slash == std::string::npos) throw input_error("hj expects n/q, e.g. 9/2");
    long long n = 0, q = 0;
    try {
        n = std::stoll(frac.substr(0, slash));
        q = std::stoll(frac.substr(slash + 1));
    } catch (const std::exception&) {
        throw input_error("bad fraction '" + frac + "'");
    }
    HJExpansion e = hj_expand(n, q);
    CqInvariants inv = cq_multiplicity(e);
    long long ell = ell_invariant(e);
    auto wahl = recognize_wahl(e);
    if (as_json) {
        json j;
        j["fraction"] = std::to_string(n) + "/" + std::to_string(q);
        j["expansion"] = e.str();
        j["multiplicity"] = inv.mult;
        j["embdim"] = inv.embdim;
        j["ell"] = ell;
        j["wahl"] = wahl ? json{{"n", wahl->n}, {"q", wahl->q}} : json(nullptr);
        if (inv.mult == 4) {
            ArtinDims a = artin_dims(e);
            j["artin"] = {{"t", a.t}, {"artin", a.artin}, {"non_artin", a.non_artin}};
        } else {
            j["artin"] = nullptr;
        }
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "fraction: " << n << '/' << q << '\n';
    out << "expansion: " << e.str() << '\n';
    out << "multiplicity: " << inv.mult << '\n';
    out << "embedding dimension: " << inv.embdim << '\n';
    out << "ell: " << ell << '\n';
    if (wahl)
        out << "wahl: n=" << wahl->n << " q=" << wahl->q << '\n';
    else
        out << "wahl: none\n";
    if (inv.mult == 4) {
        ArtinDims a = artin_dims(e);
        out << "artin: t=" << a.t << " artin=" << a.artin << " non-artin=" << a.non_artin << '\n';
    } else {
        out << "artin: n/a (multiplicity " << inv.mult << " != 4)\n";
    }
    return 0;
}

int cmd_moves(const std::string& expr, const std::string& chains, bool as_json, std::ostream& out) {
    std::vector<Move> moves;
    std::string source_str;
    std::size_t marked_chains = 0;
    if (expr.find('[') != std::string::npos) {
        MarkedClass m = parse_marked_class(expr);
        source_str = m.str();
        marked_chains = m.chain_count();
        moves = lowering_moves(m);
    } else {
        SingularityClass c = parse_class(expr);
        source_str = c.str();
        moves = constant_moves(c);
        if (!chains.empty()) {
            auto catalog = parse_catalog(chains);
            auto lows = catalog_lowering_moves(c, catalog);
            moves.insert(moves.end(), lows.begin(), lows.end());
        }
    }
    if (as_json) {
        json j;
        j["source"] = source_str;
        j["moves"] = json::array();
        for (const Move& mv : moves) j["moves"].push_back(move_json(mv));
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "source: " << source_str << '\n';
    if (marked_chains > 1)
        out << "note: " << marked_chains << " chains marked; each move consumes one chain\n";
    out << "moves: " << moves.size() << '\n';
    for (const Move& mv : moves) out << "  " << mv.str() << '\n';
    return 0;
}

int cmd_reach(const std::string& src_expr, const std::string& tgt_expr, int max_steps,
              const std::string& chains, bool as_json, std::ostream& out) {
    SingularityClass src = parse_class(src_expr);
    SingularityClass tgt = parse_class(tgt_expr);
    std::vector<HJExpansion> catalog;
    if (!chains.empty()) catalog = parse_catalog(chains);
    auto path = reach(src, tgt, max_steps, catalog);
    if (as_json) {
        json j;
        j["source"] = src.str();
        j["target"] = tgt.str();
        j["reachable"] = path.has_value();
        if (path) {
            j["steps"] = path->size();
            j["path"] = json::array();
            for (const Move& mv : *path) j["path"].push_back(move_json(mv));
        } else {
            j["steps"] = nullptr;
            j["path"] = nullptr;
        }
        out << j.dump(2) << '\n';
        return path ? 0 : 3;
    }
    if (!path) {
        out << "none\n";
        return 3;
    }
    out << "path: " << path->size() << " steps\n";
    for (const Move& mv : *path) out << "  " << mv.str() << '\n';
    return 0;
}

int cmd_dag(long long max_degree, long long max_length, const std::string& chains,
            const std::string& dot_file, const std::string& json_file, std::ostream& out) {
    std::vector<HJExpansion> catalog;
    if (!chains.empty()) catalog = parse_catalog(chains);
    AdjacencyDag dag = adjacency_dag(max_degree, max_length, catalog);
    out << "nodes: " << dag.nodes.size() << '\n';
    out << "edges: " << dag.edges.size() << '\n';
    if (!dot_file.empty()) {
        std::ofstream f(dot_file, std::ios::binary);
        if (!f) throw input_error("cannot write '" + dot_file + "'");
        f << to_dot(dag);
        out << "wrote dot: " << dot_file << '\n';
    }
    if (!json_file.empty()) {
        std::ofstream f(json_file, std::ios::binary);
        if (!f) throw input_error("cannot write '" + json_file + "'");
        f << to_json_text(dag);
        out << "wrote json: " << json_file << '\n';
    }
    return 0;
}

int cmd_quotient_z2(const std::string& cusp, std::ostream& out) {
    std::vector<long long> e;
    std::size_t pos = 0;
    while (pos <= cusp.size()) {
        auto comma = cusp.find(',', pos);
        std::string tok = cusp.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            e.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw input_error("bad --cusp entry '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    Z2CuspGraphs graphs = z2_cusp_graphs({e});
    SingularityClass cover_class = classify_graph(graphs.cover);
    SingularityClass quotient_class = classify_graph(graphs.quotient);
    out << "# cover\n" << to_graph_text(graphs.cover);
    out << "# cover class: " << cover_class.str() << ", degree " << degree(cover_class) << '\n';
    out << "# quotient\n" << to_graph_text(graphs.quotient);
    out << "# quotient class: " << quotient_class.str() << ", minimally elliptic: "
        << yesno(is_minimally_elliptic(graphs.quotient)) << '\n';
    return 0;
}

int cmd_fixtures(bool as_json, std::ostream& out) {
    auto fixtures = mu3_fixtures();  // self-verifying
    if (as_json) {
        json j;
        j["fixtures"] = json::array();
        for (const QuotientFixture& f : fixtures) {
            json e;
            e["group"] = f.group;
            e["cover"] = {{"class", f.cover_class.str()},
                          {"type", f.cover_equation.str()},
                          {"equation", f.cover_equation.equation()},
                          {"t1", f.t1_cover},
                          {"degree", degree(f.cover_class)}};
            e["quotient"] = {{"class", f.quotient_class.str()},
                             {"type", f.quotient_equation.str()},
                             {"equation", f.quotient_equation.equation()},
                             {"t1", f.t1_quotient}};
            j["fixtures"].push_back(std::move(e));
        }
        j["verified"] = true;
        out << j.dump(2) << '\n';
        return 0;
    }
    int i = 0;
    for (const QuotientFixture& f : fixtures) {
        out << "fixture " << ++i << " [" << f.group << "]\n";
        out << "  cover:    " << f.cover_class.str() << "  " << f.cover_equation.str() << "  "
            << f.cover_equation.equation() << "  dim T^1 = " << f.t1_cover << '\n';
        out << "  quotient: " << f.quotient_class.str() << "  " << f.quotient_equation.str() << "  "
            << f.quotient_equation.equation() << "  dim T^1 = " << f.t1_quotient << '\n';
    }
    out << "verification: ok (T^1 values, cover degrees, adjacency Cu(2,5) -> Cu(3), "
           "orderings 11 < 12 and 15 < 18)\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact toolkit for resolution dual graphs of normal surface singularities"};
    app.name("minell");
    app.require_subcommand(1);
    app.failure_message([](const CLI::App*, const CLI::Error& e) {
        return std::string("error: ") + e.what() + "\n";
    });

    std::string graph_file, fraction, class_expr, src_expr, tgt_expr, chains, cusp, dot_file, json_file;
    bool as_json = false;
    int max_steps = 0;
    long long max_degree = 0, max_length = 0;

    auto* c_classify = app.add_subcommand("classify", "classify a graph file");
    c_classify->add_option("graph-file", graph_file, "graph text file, or - for stdin")->required();
    c_classify->add_flag("--json", as_json, "emit JSON");

    auto* c_cycle = app.add_subcommand("cycle", "fundamental cycle and intersection data");
    c_cycle->add_option("graph-file", graph_file, "graph text file, or - for stdin")->required();
    c_cycle->add_flag("--json", as_json, "emit JSON");

    auto* c_hj = app.add_subcommand("hj", "continued-fraction invariants of n/q");
    c_hj->add_option("fraction", fraction, "n/q, e.g. 9/2")->required();
    c_hj->add_flag("--json", as_json, "emit JSON");

    auto* c_moves = app.add_subcommand("moves", "applicable adjacency moves");
    c_moves->add_option("class", class_expr, "class expression, chains may be marked inline")->required();
    c_moves->add_option("--chains", chains, "Wahl chain catalog, e.g. \"[4];[5,2]\"");
    c_moves->add_flag("--json", as_json, "emit JSON");

    auto* c_reach = app.add_subcommand("reach", "shortest move sequence between classes");
    c_reach->add_option("source", src_expr)->required();
    c_reach->add_option("target", tgt_expr)->required();
    c_reach->add_option("--max-steps", max_steps, "search depth bound")->required();
    c_reach->add_option("--chains", chains, "Wahl chain catalog");
    c_reach->add_flag("--json", as_json, "emit JSON");

    auto* c_dag = app.add_subcommand("dag", "materialize the bounded adjacency graph");
    c_dag->add_option("--max-degree", max_degree, "parameter bound")->required();
    c_dag->add_option("--max-length", max_length, "cusp cycle length bound")->required();
    c_dag->add_option("--chains", chains, "Wahl chain catalog");
    c_dag->add_option("--dot", dot_file, "write DOT here");
    c_dag->add_option("--json", json_file, "write JSON here");

    auto* c_quotient = app.add_subcommand("quotient", "group-quotient constructions");
    auto* c_q_z2 = c_quotient->add_subcommand("z2", "involution quotient of a cusp cycle");
    c_q_z2->add_option("--cusp", cusp, "e1,e2,... (all >= 2, some > 2)")->required();
    c_quotient->require_subcommand(1);

    auto* c_fixtures = app.add_subcommand("fixtures", "bundled verified examples");
    auto* c_f_mu3 = c_fixtures->add_subcommand("mu3", "the mu3 cusp-quotient pair");
    c_f_mu3->add_flag("--json", as_json, "emit JSON");
    c_fixtures->require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("minell");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*c_classify) return cmd_classify(graph_file, as_json, in, out);
        if (*c_cycle) return cmd_cycle(graph_file, as_json, in, out);
        if (*c_hj) return cmd_hj(fraction, as_json, out);
        if (*c_moves) return cmd_moves(class_expr, chains, as_json, out);
        if (*c_reach) return cmd_reach(src_expr, tgt_expr, max_steps, chains, as_json, out);
        if (*c_dag) return cmd_dag(max_degree, max_length, chains, dot_file, json_file, out);
        if (*c_quotient) return cmd_quotient_z2(cusp, out);
        if (*c_fixtures) return cmd_fixtures(as_json, out);
    } catch (const not_resolution_graph& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand selected\n";
    return 1;
}

}  // namespace minell
