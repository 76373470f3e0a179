// Command-line surface over the skew-shape threshold-genus library.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewgenus/bounds.hpp"
#include "skewgenus/brill_noether.hpp"
#include "skewgenus/elliptic.hpp"

using namespace skewgenus;
using nlohmann::json;

namespace {

std::size_t effective_budget(long long flag_value) {
    if (flag_value > 0) return static_cast<std::size_t>(flag_value);
    if (const char* env = std::getenv("SKEWGENUS_BUDGET")) {
        const long long parsed = std::atoll(env);
        if (parsed > 0) return static_cast<std::size_t>(parsed);
    }
    return kDefaultStateBudget;
}

std::string plain(const RamSeq& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(seq[i]);
    }
    return out;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json chain_to_json(const LinkChain& chain) {
    json steps = json::array();
    for (const auto& s : chain.steps) steps.push_back(to_string(s));
    return json{{"steps", std::move(steps)}};
}

void print_chain(const LinkChain& chain) {
    const auto verdicts = replay_chain(chain);
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        std::cout << to_string(chain.steps[i]);
        if (i < verdicts.size()) std::cout << "  --" << to_string(verdicts[i]) << "-->";
        std::cout << "\n";
    }
}

// Diagram of `upper` with the boxes beyond `mid` hatched.
std::string render_marked(const RamSeq& mid, const RamSeq& upper) {
    std::string out;
    for (int i = upper.rank(); i >= 0; --i) {
        const auto idx = static_cast<std::size_t>(i);
        std::string line;
        for (int c = 0; c < mid[idx]; ++c) line += "[]";
        for (int c = mid[idx]; c < upper[idx]; ++c) line += "##";
        if (line.empty()) line = "|";
        out += line + "\n";
    }
    return out;
}

// ---- repro targets ------------------------------------------------------

std::string repro_fig_disp() {
    const RamSeq alpha = parse_ram_seq("2,2,4");
    const Progression lam = Progression::residue(1, 3);
    const RamSeq up = disp_up(alpha, lam);
    const RamSeq zero = RamSeq::constant(0, static_cast<int>(alpha.size()));
    std::ostringstream out;
    out << "alpha = " << to_string(alpha) << "\n"
        << render_diagram(SkewShape::make(zero, alpha)) << "\n"
        << "Lambda = " << to_string(lam) << " (added boxes marked ##)\n"
        << render_marked(alpha, up) << "\n"
        << "disp_up(alpha) = " << to_string(up) << "\n"
        << render_diagram(SkewShape::make(zero, up));
    return out.str();
}

std::string repro_tau_links() {
    std::ostringstream out;
    const struct {
        int n, a1, b1, c1, a0, b0, c0;
    } rows[] = {{10, 9, 5, 4, 8, 5, 3}, {9, 9, 5, 4, 8, 4, 4}};
    for (const auto& r : rows) {
        const SkewShape s = SkewShape::make(tau(r.n, r.a0, r.b0, r.c0),
                                            tau(r.n, r.a1, r.b1, r.c1));
        const LinkVerdict v = classify_link(s);
        out << "tau(" << r.n << ";" << r.a1 << "," << r.b1 << "," << r.c1 << ") / tau("
            << r.n << ";" << r.a0 << "," << r.b0 << "," << r.c0
            << ") = " << to_string(s) << "\n"
            << "verdict: " << to_string(v) << "\n"
            << render_diagram(s) << "\n";
    }
    return out.str();
}

std::string repro_four_stage(long long a, long long b) {
    const BoundCertificate cert = main2_decomposition(a, b);
    const auto& split = std::get<BoundCertificate::SplitNode>(cert.node);
    std::ostringstream out;
    out << "four-stage decomposition of " << a << "x" << b << "\n";
    for (std::size_t i = 0; i < split.children.size(); ++i) {
        const auto& piece = split.children[i];
        const auto& shape = std::get<SkewShape>(piece.target);
        const char* kind = std::holds_alternative<BoundCertificate::KomedaNode>(piece.node)
                               ? "komeda"
                               : "chain";
        out << "stage " << (i + 1) << ": " << to_string(shape) << "  cost "
            << piece.upper << "  [" << kind << "]\n";
    }
    out << "total " << cert.upper << " <= floor(ab/2 + 2) = " << (a * b + 4) / 2 << "\n";
    return out.str();
}

std::string repro_comparison() {
    const long long main2 = main2_upper(61, 61).upper;
    const long long asy = asy_upper(61, 61);
    std::ostringstream out;
    out << "main2: " << main2 << ", asy: " << asy << ", "
        << (main2 < asy ? "main2 stronger" : "asy stronger") << "\n";
    return out.str();
}

std::string repro_pareschi_crossover() {
    std::ostringstream out;
    out << "b    tg4b   2b+2   cmp\n";
    for (long long b = 45; b <= 55; ++b) {
        const long long bound = base_tg_upper(4, b);
        const long long line = 2 * b + 2;
        const char cmp = bound > line ? '>' : bound == line ? '=' : '<';
        out << b << "   " << bound << "   " << line << "   " << cmp << "\n";
    }
    return out.str();
}

std::string repro_stage_one_semigroups() {
    std::ostringstream out;
    out << "k   genus   weight   primitive   gaps\n";
    for (int k = 1; k <= 10; ++k) {
        const auto s = stage_one_semigroup(k);
        out << k << "   " << s.genus() << "   " << s.weight() << "   "
            << (s.is_primitive() ? "yes" : "no") << "   " << to_string(s) << "\n";
    }
    return out.str();
}

int run_repro(const std::string& target, const std::string& golden_dir, bool update,
              long long a, long long b) {
    std::string content;
    bool diffable = true;
    if (target == "fig-disp") content = repro_fig_disp();
    else if (target == "tau-links") content = repro_tau_links();
    else if (target == "four-stage") {
        content = repro_four_stage(a, b);
        diffable = (a == 9 && b == 9);
    } else if (target == "comparison") content = repro_comparison();
    else if (target == "pareschi-crossover") content = repro_pareschi_crossover();
    else if (target == "stage-one-semigroups") content = repro_stage_one_semigroups();
    else {
        std::cerr << "error: unknown repro target '" << target << "'\n";
        return 2;
    }

    std::cout << content;
    if (!diffable) {
        std::cerr << "note: non-default parameters, golden comparison skipped\n";
        return 0;
    }

    const std::filesystem::path path =
        std::filesystem::path(golden_dir) / (target + ".txt");
    if (update) {
        std::ofstream out(path);
        out << content;
        std::cerr << "updated " << path.string() << "\n";
        return 0;
    }
    std::ifstream in(path);
    if (!in.good()) {
        std::cerr << "error: missing golden file " << path.string() << "\n";
        return 1;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string expected = buffer.str();
    if (expected == content) return 0;

    std::istringstream got(content), want(expected);
    std::string got_line, want_line;
    for (int line = 1;; ++line) {
        const bool has_got = static_cast<bool>(std::getline(got, got_line));
        const bool has_want = static_cast<bool>(std::getline(want, want_line));
        if (!has_got && !has_want) break;
        if (got_line != want_line || has_got != has_want) {
            std::cerr << "error: mismatch at line " << line << "\n"
                      << "  expected: " << (has_want ? want_line : "<eof>") << "\n"
                      << "  actual:   " << (has_got ? got_line : "<eof>") << "\n";
            return 1;
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact threshold-genus bounds for fixed-height skew shapes"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    long long budget_flag = 0;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_option("--budget", budget_flag, "search state budget (overrides SKEWGENUS_BUDGET)");

    // disp
    auto* disp_cmd = app.add_subcommand("disp", "apply a displacement operator");
    std::string disp_dir, disp_seq, disp_prog;
    disp_cmd->add_option("direction", disp_dir, "up or down")
        ->required()
        ->check(CLI::IsMember({"up", "down"}));
    disp_cmd->add_option("sequence", disp_seq)->required();
    disp_cmd->add_option("progression", disp_prog)->required();

    // loose
    auto* loose_cmd = app.add_subcommand("loose", "loose set of a sequence");
    std::string loose_seq;
    loose_cmd->add_option("sequence", loose_seq)->required();

    // link
    auto* link_cmd = app.add_subcommand("link", "classify a skew shape");
    std::string link_shape;
    bool link_diagram = false;
    link_cmd->add_option("shape", link_shape, "\"upper / lower\"")->required();
    link_cmd->add_flag("--diagram", link_diagram, "also draw the shape");

    // elliptic
    auto* ell_cmd = app.add_subcommand("elliptic", "genus-1 locus of a shape");
    ell_cmd->require_subcommand(1);
    auto* ell_status = ell_cmd->add_subcommand("status", "locus status at a torsion order");
    std::string ell_shape;
    long long ell_m = 0;
    ell_status->add_option("shape", ell_shape)->required();
    ell_status->add_option("torsion", ell_m, "torsion order (0 = nontorsion)")->required();
    auto* ell_mark = ell_cmd->add_subcommand("markings", "ramification at both marked points");
    std::string ell_gamma, ell_prog;
    ell_mark->add_option("sequence", ell_gamma)->required();
    ell_mark->add_option("progression", ell_prog)->required();

    // difficulty
    auto* diff_cmd = app.add_subcommand("difficulty", "chain threshold by exact search");
    std::string diff_shape;
    diff_cmd->add_option("shape", diff_shape)->required();

    // tau
    auto* tau_cmd = app.add_subcommand("tau", "three-column sequence");
    int tau_n = 0, tau_a = 0, tau_b = 0, tau_c = 0;
    tau_cmd->add_option("n", tau_n)->required();
    tau_cmd->add_option("a", tau_a)->required();
    tau_cmd->add_option("b", tau_b)->required();
    tau_cmd->add_option("c", tau_c)->required();

    // chain
    auto* chain_cmd = app.add_subcommand("chain", "scripted link chains");
    chain_cmd->require_subcommand(1);
    auto* chain_ac = chain_cmd->add_subcommand("increase-ac", "first/third column step");
    int ac_n = 0, ac_a = 0, ac_b = 0, ac_c = 0;
    chain_ac->add_option("n", ac_n)->required();
    chain_ac->add_option("a", ac_a)->required();
    chain_ac->add_option("b", ac_b)->required();
    chain_ac->add_option("c", ac_c)->required();
    auto* chain_ab = chain_cmd->add_subcommand("increase-ab", "first/second column step");
    int ab_n = 0;
    chain_ab->add_option("n", ab_n)->required();
    auto* chain_fc = chain_cmd->add_subcommand("floor-ceil", "one-translate ladder");
    int fc_n = 0;
    bool fc_from_ceil = false;
    chain_fc->add_option("n", fc_n)->required();
    chain_fc->add_flag("--from-ceil", fc_from_ceil);

    // semigroup
    auto* semi_cmd = app.add_subcommand("semigroup", "numerical semigroup tools");
    semi_cmd->require_subcommand(1);
    auto* semi_info = semi_cmd->add_subcommand("info", "genus, weight, primitivity");
    std::string semi_gaps;
    semi_info->add_option("gaps", semi_gaps, "gaps:{1,2,5}")->required();
    auto* semi_stage = semi_cmd->add_subcommand("stage-one", "the weight = genus-1 family");
    int semi_k = 0;
    semi_stage->add_option("k", semi_k)->required();
    auto* semi_shape = semi_cmd->add_subcommand("shape", "associated skew shape");
    std::string semi_shape_gaps;
    int semi_shape_r = 0;
    semi_shape->add_option("gaps", semi_shape_gaps)->required();
    semi_shape->add_option("rank", semi_shape_r)->required();
    auto* semi_tg = semi_cmd->add_subcommand("tg", "axiom-backed threshold genus");
    std::string semi_tg_gaps;
    int semi_tg_r = 0;
    semi_tg->add_option("gaps", semi_tg_gaps)->required();
    semi_tg->add_option("rank", semi_tg_r)->required();
    auto* semi_shift = semi_cmd->add_subcommand("shift", "lower the movable gap");
    std::string semi_shift_gaps;
    semi_shift->add_option("gaps", semi_shift_gaps)->required();

    // tg-bound
    auto* tg_cmd = app.add_subcommand("tg-bound", "certified rectangle bounds");
    long long tg_a = 0, tg_b = 0;
    tg_cmd->add_option("a", tg_a)->required();
    tg_cmd->add_option("b", tg_b)->required();

    // exists
    auto* ex_cmd = app.add_subcommand("exists", "dimensionally proper series for (g,r,d)");
    long long ex_g = 0, ex_r = 0, ex_d = 0;
    ex_cmd->add_option("g", ex_g)->required();
    ex_cmd->add_option("r", ex_r)->required();
    ex_cmd->add_option("d", ex_d)->required();

    // repro
    auto* repro_cmd = app.add_subcommand("repro", "regenerate and diff golden reports");
    std::string repro_target, golden_dir = "goldens";
    long long repro_a = 9, repro_b = 9;
    bool repro_update = false;
    repro_cmd
        ->add_option("target", repro_target,
                     "fig-disp | tau-links | four-stage | comparison | "
                     "pareschi-crossover | stage-one-semigroups")
        ->required();
    repro_cmd->add_option("--golden-dir", golden_dir, "golden file directory");
    repro_cmd->add_option("--a", repro_a, "four-stage width");
    repro_cmd->add_option("--b", repro_b, "four-stage height");
    repro_cmd->add_flag("--update", repro_update, "rewrite the golden file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    const std::size_t budget = effective_budget(budget_flag);
    try {
        if (*disp_cmd) {
            const RamSeq seq = parse_ram_seq(disp_seq);
            const Progression lam = parse_progression(disp_prog);
            const RamSeq out = disp_dir == "up" ? disp_up(seq, lam) : disp_down(seq, lam);
            if (as_json)
                emit(json{{"input", to_string(seq)},
                          {"progression", to_string(lam)},
                          {"result", to_string(out)}});
            else
                std::cout << plain(out) << "\n";
        } else if (*loose_cmd) {
            const auto values = loose_set(parse_ram_seq(loose_seq));
            if (as_json) {
                emit(json{{"loose", values}});
            } else {
                std::cout << "{";
                for (std::size_t i = 0; i < values.size(); ++i)
                    std::cout << (i ? "," : "") << values[i];
                std::cout << "}\n";
            }
        } else if (*link_cmd) {
            const SkewShape s = parse_shape(link_shape);
            const LinkVerdict v = classify_link(s);
            if (as_json) {
                json j{{"shape", to_string(s)}, {"size", s.size()}};
                j["kind"] = v.kind == LinkKind::NotALink  ? "not-a-link"
                            : v.kind == LinkKind::OneLink ? "1-link"
                                                          : "2-link";
                if (v.progression) j["progression"] = to_string(*v.progression);
                emit(j);
            } else {
                std::cout << to_string(v) << "\n";
            }
            if (link_diagram) std::cout << render_diagram(s);
        } else if (*ell_status) {
            const EllipticStatus st = elliptic_status(parse_shape(ell_shape), ell_m);
            if (as_json)
                emit(json{{"status", to_string(st)}, {"torsion", ell_m}});
            else
                std::cout << to_string(st) << "\n";
        } else if (*ell_mark) {
            const auto m =
                elliptic_markings(parse_ram_seq(ell_gamma), parse_progression(ell_prog));
            if (as_json)
                emit(json{{"at_p", to_string(m.at_p)}, {"at_q", to_string(m.at_q)}});
            else
                std::cout << "p: " << plain(m.at_p) << "\nq: " << plain(m.at_q) << "\n";
        } else if (*diff_cmd) {
            const auto result = chain_threshold(parse_shape(diff_shape), budget);
            if (as_json) {
                json j{{"ct", result.ct}, {"c_delta", result.c_delta}};
                j["witness"] = chain_to_json(result.witness);
                emit(j);
            } else {
                std::cout << "ct = " << result.ct << ", c_delta = " << result.c_delta
                          << "\n";
                print_chain(result.witness);
            }
        } else if (*tau_cmd) {
            const RamSeq out = tau(tau_n, tau_a, tau_b, tau_c);
            if (as_json)
                emit(json{{"sequence", to_string(out)}});
            else
                std::cout << plain(out) << "\n";
        } else if (*chain_cmd) {
            LinkChain chain;
            if (*chain_ac)
                chain = build_corollary_chain(
                    CorollaryChain::IncreaseAC,
                    CorollaryParams{.n = ac_n, .a = ac_a, .b = ac_b, .c = ac_c}, budget);
            else if (*chain_ab)
                chain = build_corollary_chain(CorollaryChain::IncreaseAB,
                                              CorollaryParams{.n = ab_n}, budget);
            else
                chain = build_corollary_chain(
                    CorollaryChain::FloorCeil,
                    CorollaryParams{.n = fc_n, .from_ceil = fc_from_ceil}, budget);
            if (as_json)
                emit(chain_to_json(chain));
            else
                print_chain(chain);
        } else if (*semi_cmd) {
            if (*semi_info) {
                const auto s = parse_semigroup(semi_gaps);
                if (as_json)
                    emit(json{{"gaps", s.gaps()},
                              {"genus", s.genus()},
                              {"weight", s.weight()},
                              {"primitive", s.is_primitive()}});
                else
                    std::cout << "genus " << s.genus() << ", weight " << s.weight()
                              << ", primitive " << (s.is_primitive() ? "yes" : "no")
                              << "\n";
            } else if (*semi_stage) {
                const auto s = stage_one_semigroup(semi_k);
                if (as_json)
                    emit(json{{"gaps", s.gaps()},
                              {"genus", s.genus()},
                              {"weight", s.weight()}});
                else
                    std::cout << to_string(s) << "\n";
            } else if (*semi_shape) {
                const auto shape =
                    komeda_shape(parse_semigroup(semi_shape_gaps), semi_shape_r);
                if (as_json)
                    emit(json{{"shape", to_string(shape)}});
                else
                    std::cout << to_string(shape) << "\n" << render_diagram(shape);
            } else if (*semi_tg) {
                const auto cert = komeda_tg(parse_semigroup(semi_tg_gaps), semi_tg_r);
                if (as_json)
                    emit(json{{"shape", to_string(cert.shape)}, {"tg", cert.tg_value}});
                else
                    std::cout << "tg(" << to_string(cert.shape) << ") = " << cert.tg_value
                              << "\n";
            } else {
                const auto s = gap_shift(parse_semigroup(semi_shift_gaps));
                if (as_json)
                    emit(json{{"gaps", s.gaps()}, {"weight", s.weight()}});
                else
                    std::cout << to_string(s) << "\n";
            }
        } else if (*tg_cmd) {
            BoundEngine engine(budget);
            const BoundCertificate cert = engine.upper_certificate(tg_a, tg_b);
            if (as_json)
                std::cout << certificate_to_canonical_json(cert) << "\n";
            else
                std::cout << tg_lower(tg_a, tg_b) << " <= tg(" << tg_a << "x" << tg_b
                          << ") <= " << cert.upper << "\n";
        } else if (*ex_cmd) {
            const auto result = exists_dimensionally_proper(ex_g, ex_r, ex_d, budget);
            if (as_json) {
                json j{{"verdict", to_string(result.verdict)},
                       {"a", result.a},
                       {"b", result.b},
                       {"rho", rho(ex_g, ex_r, ex_d)}};
                if (result.certificate)
                    j["certificate"] =
                        json::parse(certificate_to_canonical_json(*result.certificate));
                emit(j);
            } else {
                std::cout << to_string(result.verdict) << "\n";
            }
        } else if (*repro_cmd) {
            return run_repro(repro_target, golden_dir, repro_update, repro_a, repro_b);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
