#include "augres/driver.hpp"

#include "augres/augment.hpp"
#include "augres/braid.hpp"
#include "augres/category.hpp"
#include "augres/diagram.hpp"
#include "augres/disks.hpp"
#include "augres/dga.hpp"
#include "augres/fixtures.hpp"
#include "augres/json_io.hpp"
#include "augres/resolution.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace augres {
namespace {

DiskEngine engine_from(const std::string& name) {
    if (name == "walk") return DiskEngine::Walk;
    if (name == "oracle") return DiskEngine::Oracle;
    return DiskEngine::Both;
}

WalkLimits limits_from(long long cli_cap) {
    WalkLimits lim;
    if (cli_cap >= 0) {
        lim.cap_events = static_cast<std::size_t>(cli_cap);
        return lim;
    }
    if (const char* env = std::getenv("AUGRESOLVE_CAP")) {
        std::size_t pos = 0;
        const std::string text(env);
        const unsigned long long v = std::stoull(text, &pos);
        if (pos != text.size())
            throw std::invalid_argument("AUGRESOLVE_CAP must be an integer");
        lim.cap_events = static_cast<std::size_t>(v);
    }
    return lim;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::size_t> parse_indices(const std::string& text,
                                       std::size_t bound,
                                       const std::string& what) {
    std::vector<std::size_t> out;
    for (const auto& piece : split_csv(text)) {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(piece, &pos);
        if (pos != piece.size() || v >= bound)
            throw std::invalid_argument(what + " index '" + piece +
                                        "' out of range (have " +
                                        std::to_string(bound) + ")");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

// ----------------------------------------------------------------- dga --

int cmd_dga(const std::string& braid, DiskEngine engine, const WalkLimits& lim,
            bool json, bool dump_disks, std::ostream& out) {
    BraidSpec spec = parse_braid_any(braid);
    ClosureDiagram diagram = build_closure(spec);
    Dga dga = differential_dga(diagram, engine, lim);
    AlgebraReport d2 = check_d_squared(dga);

    if (json) {
        Json doc = dga_document(spec, dga, d2.ok());
        if (dump_disks) {
            Json disks = Json::array();
            for (const auto& g : dga.generators)
                disks.push_back(disks_json(
                    diagram, g, harvest_disks(diagram, g, engine, lim)));
            doc["disks"] = disks;
        }
        out << dump_stable(doc);
        return d2.ok() ? 0 : 1;
    }

    Census c = census_of(spec);
    std::size_t degree0 = dga.generators_of_degree(0).size();
    out << "braid: " << braid_to_text(spec) << "\n";
    out << c.total() << (c.total() == 1 ? " generator (" : " generators (")
        << c.num_b << " b, " << c.num_c << " c, " << c.num_s << " s), "
        << degree0 << " in degree 0\n";
    for (const auto& g : dga.generators)
        out << "d(" << g.name() << ") = " << dga.d_of(g).str() << "\n";
    out << "d^2 = 0: " << yesno(d2.ok()) << "\n";
    for (const auto& v : d2.violations)
        out << "  violation at " << v.at.name() << ": " << v.residual.str()
            << "\n";
    return d2.ok() ? 0 : 1;
}

// ---------------------------------------------------------------- augs --

int cmd_augs(const std::string& braid, DiskEngine engine, const WalkLimits& lim,
             bool json, bool naive, std::ostream& out) {
    BraidSpec spec = parse_braid_any(braid);
    ClosureDiagram diagram = build_closure(spec);
    Dga dga = differential_dga(diagram, engine, lim);
    auto augs = naive ? enumerate_augmentations_naive(dga)
                      : enumerate_augmentations(dga);
    if (json) {
        out << dump_stable(augs_document(spec, dga, augs));
        return 0;
    }
    const auto deg0 = dga.generators_of_degree(0);
    out << augs.size() << (augs.size() == 1 ? " augmentation" : " augmentations")
        << " of " << braid_to_text(spec) << "\n";
    for (std::size_t k = 0; k < augs.size(); ++k) {
        out << "aug " << k << ":";
        if (deg0.empty()) out << " (no degree-0 chords)";
        for (const auto& g : deg0)
            out << " " << g.name() << "=" << (augs[k].value(g) ? 1 : 0);
        out << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- lch --

int cmd_lch(const std::string& braid, DiskEngine engine, const WalkLimits& lim,
            bool json, const std::vector<std::string>& pair_specs,
            std::ostream& out) {
    BraidSpec spec = parse_braid_any(braid);
    ClosureDiagram diagram = build_closure(spec);
    Dga dga = differential_dga(diagram, engine, lim);
    auto augs = enumerate_augmentations(dga);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (pair_specs.empty()) {
        for (std::size_t a = 0; a < augs.size(); ++a)
            for (std::size_t b = 0; b < augs.size(); ++b) pairs.push_back({a, b});
    } else {
        for (const auto& ps : pair_specs) {
            auto idx = parse_indices(ps, augs.size(), "augmentation");
            if (idx.size() != 2)
                throw std::invalid_argument("--pair wants two indices, got '" +
                                            ps + "'");
            pairs.push_back({idx[0], idx[1]});
        }
    }

    std::vector<LchPairEntry> entries;
    entries.reserve(pairs.size());
    for (const auto& [a, b] : pairs)
        entries.push_back({a, b, bilinearized_cohomology(dga, augs[a], augs[b])});

    if (json) {
        out << dump_stable(lch_document(spec, entries));
        return 0;
    }
    out << "eps1\teps2\tdim0\tdim1\n";
    for (const auto& e : entries)
        out << e.eps1 << "\t" << e.eps2 << "\t" << e.data.dim0 << "\t"
            << e.data.dim1 << "\n";
    return 0;
}

// ------------------------------------------------------------- resolve --

GeneratorId parse_resolved(const std::string& at) {
    GeneratorId g = parse_generator(at);
    if (g.kind != GenKind::B)
        throw std::invalid_argument(
            "only braid-portion crossings b[i,j] can be resolved, got " +
            g.name());
    return g;
}

int cmd_resolve(const std::string& braid, const std::string& at,
                const std::string& engine_name, const WalkLimits& lim,
                std::ostream& out) {
    BraidSpec spec = parse_braid_any(braid);
    GeneratorId g = parse_resolved(at);
    auto res = build_resolution(spec, g, engine_from(engine_name), lim);
    out << dump_stable(resolve_document(*res, engine_name));
    return 0;
}

// ------------------------------------------------------------------ mu --

int cmd_mu(const std::string& braid, DiskEngine engine, const WalkLimits& lim,
           bool json, const std::string& inputs_text, const std::string& augs_text,
           std::ostream& out) {
    BraidSpec spec = parse_braid_any(braid);
    ClosureDiagram diagram = build_closure(spec);
    Dga dga = differential_dga(diagram, engine, lim);
    auto augs = enumerate_augmentations(dga);

    std::vector<GeneratorId> inputs;
    for (const auto& name : split_csv(inputs_text)) {
        GeneratorId g = parse_generator(name);
        if (!dga.has_generator(g))
            throw std::invalid_argument("no chord " + g.name() + " in " +
                                        braid_to_text(spec));
        inputs.push_back(g);
    }
    auto idx = parse_indices(augs_text, augs.size(), "augmentation");
    if (idx.size() != inputs.size() + 1)
        throw std::invalid_argument(
            "mu_k wants k+1 augmentations for k inputs: got " +
            std::to_string(idx.size()) + " for " +
            std::to_string(inputs.size()));
    std::vector<const Augmentation*> eps;
    eps.reserve(idx.size());
    for (std::size_t k : idx) eps.push_back(&augs[k]);

    std::set<GeneratorId> result = mu(dga, eps, inputs);
    if (json) {
        out << dump_stable(mu_document(spec, idx, inputs, result));
        return 0;
    }
    out << "mu_" << inputs.size() << "(";
    for (std::size_t k = 0; k < inputs.size(); ++k)
        out << (k ? ", " : "") << inputs[k].name();
    out << ") = ";
    if (result.empty()) {
        out << "0";
    } else {
        bool first = true;
        for (const auto& g : result) {
            out << (first ? "" : " + ") << g.name();
            first = false;
        }
    }
    out << "\n";
    return 0;
}

// -------------------------------------------------------------- verify --

int cmd_verify(const std::string& braid, const std::string& at,
               DiskEngine engine, const WalkLimits& lim, bool json,
               bool do_l31, bool do_t32, bool do_c33,
               const std::vector<std::string>& pair_specs, std::ostream& out) {
    if (!do_l31 && !do_t32 && !do_c33) do_l31 = do_t32 = do_c33 = true;
    BraidSpec spec = parse_braid_any(braid);
    GeneratorId g = parse_resolved(at);
    auto res = build_resolution(spec, g, engine, lim);
    auto augs = enumerate_augmentations(res->minus);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (pair_specs.empty()) {
        for (std::size_t a = 0; a < augs.size(); ++a)
            for (std::size_t b = 0; b < augs.size(); ++b) pairs.push_back({a, b});
    } else {
        for (const auto& ps : pair_specs) {
            auto idx = parse_indices(ps, augs.size(), "augmentation");
            if (idx.size() != 2)
                throw std::invalid_argument("--pair wants two indices");
            pairs.push_back({idx[0], idx[1]});
        }
    }

    std::vector<VerifyAssertion> assertions;

    if (do_l31) {
        Lemma31Report rep = verify_lemma31(*res);
        VerifyAssertion a;
        a.name = "lemma31";
        a.passed = rep.ok();
        std::ostringstream os;
        os << rep.letters_checked << " letters within their index windows";
        if (!rep.permissive_notes.empty())
            os << " (" << rep.permissive_notes.size()
               << " case-4 non-b letters logged)";
        a.detail = os.str();
        for (std::size_t k = 0; k < rep.violations.size() && k < 5; ++k)
            a.counterexamples.push_back(rep.violations[k]);
        assertions.push_back(std::move(a));
    }

    if (do_t32) {
        VerifyAssertion a;
        a.name = "thm32";
        std::size_t ok = 0;
        for (const auto& [x, y] : pairs) {
            Thm32Report rep = verify_theorem32(*res, augs[x], augs[y]);
            if (rep.ok()) {
                ++ok;
            } else if (a.counterexamples.size() < 5) {
                std::ostringstream os;
                os << "pair (" << x << "," << y << "): "
                   << (rep.violations.empty() ? "structure violation"
                                              : rep.violations[0]);
                a.counterexamples.push_back(os.str());
            }
        }
        a.passed = ok == pairs.size();
        a.detail = "triangular with unit diagonal, injective cochain map on " +
                   std::to_string(ok) + "/" + std::to_string(pairs.size()) +
                   " pairs";
        assertions.push_back(std::move(a));
    }

    if (do_c33) {
        VerifyAssertion a;
        a.name = "cor33";
        std::size_t ok = 0, book = 0;
        for (const auto& [x, y] : pairs) {
            Cor33Report rep = verify_corollary33(*res, augs[x], augs[y]);
            if (rep.ok()) ++ok;
            if (rep.les_consistent && rep.quotient_structure) ++book;
            if (!rep.ok() && a.counterexamples.size() < 5) {
                std::ostringstream os;
                os << "pair (" << x << "," << y << "): resolved side ("
                   << rep.plus_dim0 << "," << rep.plus_dim1
                   << "), surgered side (" << rep.minus_dim0 << ","
                   << rep.minus_dim1 << "), connecting rank "
                   << rep.connecting_rank;
                a.counterexamples.push_back(os.str());
            }
        }
        a.passed = ok == pairs.size();
        std::ostringstream os;
        os << "direct-sum relation on " << ok << "/" << pairs.size()
           << " pairs; exact-sequence bookkeeping (with connecting rank) on "
           << book << "/" << pairs.size();
        a.detail = os.str();
        assertions.push_back(std::move(a));
    }

    bool all = true;
    for (const auto& a : assertions) all = all && a.passed;

    if (json) {
        out << dump_stable(
            verify_document(spec, g, pairs.size(), assertions));
        return all ? 0 : 1;
    }
    out << "verify " << braid_to_text(spec) << " resolved at " << g.name()
        << " over " << pairs.size() << " augmentation pairs\n";
    for (const auto& a : assertions) {
        out << (a.passed ? "[PASS] " : "[FAIL] ") << a.name << ": " << a.detail
            << "\n";
        for (const auto& ce : a.counterexamples)
            out << "       counterexample " << ce << "\n";
    }
    return all ? 0 : 1;
}

// -------------------------------------------------------- verify-paper --

int cmd_verify_paper(const std::string& fixtures_text, DiskEngine engine,
                     const WalkLimits& lim, bool json, std::ostream& out) {
    std::vector<std::string> ids =
        fixtures_text.empty() ? fixture_ids() : split_csv(fixtures_text);
    std::vector<FixtureResult> results = run_fixtures(ids, engine, lim);

    bool all = true;
    for (const auto& f : results) all = all && f.passed;

    if (json) {
        out << dump_stable(verify_paper_document(results));
        return all ? 0 : 1;
    }
    for (const auto& f : results) {
        out << (f.passed ? "[PASS] " : "[FAIL] ") << f.id << ": " << f.verdict
            << "\n";
        if (!f.passed)
            for (const auto& d : f.details) out << "       " << d << "\n";
    }
    return all ? 0 : 1;
}

// --------------------------------------------------------------- sweep --

int cmd_sweep(int p_max, int q_max, const std::string& engine_name,
              const WalkLimits& lim, bool json, bool do_t32, bool do_c33,
              std::ostream& out) {
    if (p_max < 1 || q_max < 1)
        throw std::invalid_argument("sweep bounds must be at least 1");
    DiskEngine engine = engine_from(engine_name);
    std::vector<SweepRow> rows;

    for (int p = 2; p <= p_max; ++p) {
        for (int q = 1; q <= q_max; ++q) {
            BraidSpec spec = torus_braid(p, q);
            ClosureDiagram diagram = build_closure(spec);
            Dga dga = differential_dga(diagram, engine, lim);
            SweepRow base;
            base.braid = braid_to_text(spec);
            base.d_squared_zero = check_d_squared(dga).ok();
            rows.push_back(base);

            for (const auto& g : closure_generators(spec)) {
                if (g.kind != GenKind::B) continue;
                auto res = build_resolution(spec, g, engine, lim);
                SweepRow row;
                row.braid = base.braid;
                row.resolved = g.name();
                row.d_squared_zero = check_d_squared(res->minus).ok();
                row.chain_map = verify_chain_map(res->psi).ok();
                row.lemma31 = verify_lemma31(*res).ok();
                if (do_t32 || do_c33) {
                    auto augs = enumerate_augmentations(res->minus);
                    row.pairs = augs.size() * augs.size();
                    std::size_t tfail = 0, cfail = 0;
                    for (const auto& e1 : augs)
                        for (const auto& e2 : augs) {
                            if (do_t32 && !verify_theorem32(*res, e1, e2).ok())
                                ++tfail;
                            if (do_c33 && !verify_corollary33(*res, e1, e2).ok())
                                ++cfail;
                        }
                    if (do_t32) row.thm32_failures = tfail;
                    if (do_c33) row.cor33_failures = cfail;
                }
                rows.push_back(std::move(row));
            }
        }
    }

    bool sound = true, thm_all = true;
    std::size_t cor_failures = 0;
    for (const auto& row : rows) {
        sound = sound && row.d_squared_zero && row.chain_map.value_or(true) &&
                row.lemma31.value_or(true);
        if (row.thm32_failures) thm_all = thm_all && *row.thm32_failures == 0;
        if (row.cor33_failures) cor_failures += *row.cor33_failures;
    }

    if (json) {
        out << dump_stable(sweep_document(p_max, q_max, engine_name, rows));
    } else {
        out << "braid\tresolved\td2\tchain\tlemma31\tpairs\tthm32_fail\t"
               "cor33_fail\n";
        for (const auto& row : rows) {
            out << row.braid << "\t" << (row.resolved ? *row.resolved : "-")
                << "\t" << yesno(row.d_squared_zero) << "\t"
                << (row.chain_map ? yesno(*row.chain_map) : "-") << "\t"
                << (row.lemma31 ? yesno(*row.lemma31) : "-") << "\t";
            if (row.pairs) out << *row.pairs; else out << "-";
            out << "\t";
            if (row.thm32_failures) out << *row.thm32_failures; else out << "-";
            out << "\t";
            if (row.cor33_failures) out << *row.cor33_failures; else out << "-";
            out << "\n";
        }
        out << "# rows=" << rows.size() << " all_sound=" << yesno(sound)
            << " thm32_all_pass=" << yesno(thm_all)
            << " cor33_failures=" << cor_failures << "\n";
    }
    const bool pass = sound && (!do_t32 || thm_all) && (!do_c33 || cor_failures == 0);
    return pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{
        "augresolve: Chekanov-Eliashberg algebras of positive braid closures, "
        "crossing resolutions, and machine verification of their induced "
        "maps"};
    app.require_subcommand(1);

    struct {
        std::string braid, engine = "walk";
        long long cap = -1;
        bool json = false, disks = false, naive = false;
        std::string at, inputs, augs, fixtures;
        std::vector<std::string> pairs;
        bool lemma31 = false, thm32 = false, cor33 = false;
        int p_max = 3, q_max = 4;
    } opt;

    auto add_common = [&](CLI::App* cmd, bool with_braid) {
        if (with_braid)
            cmd->add_option("braid", opt.braid,
                            "braid: torus(p,q) [minus (i,j) ...], word(...), "
                            "or JSON {\"p\",\"q\",\"deleted\"}")
                ->required();
        cmd->add_option("--engine", opt.engine, "disk engine")
            ->check(CLI::IsMember({"walk", "oracle", "both"}))
            ->capture_default_str();
        cmd->add_option("--cap", opt.cap,
                        "absolute cap on boundary events per disk walk");
        cmd->add_flag("--json", opt.json, "emit a JSON document");
    };

    CLI::App* dga_cmd = app.add_subcommand(
        "dga", "generator census and differential of the closure algebra");
    add_common(dga_cmd, true);
    dga_cmd->add_flag("--disks", opt.disks, "include per-chord disk dumps");

    CLI::App* augs_cmd =
        app.add_subcommand("augs", "enumerate augmentations");
    add_common(augs_cmd, true);
    augs_cmd->add_flag("--naive", opt.naive, "use the 2^n oracle enumerator");

    CLI::App* lch_cmd = app.add_subcommand(
        "lch", "bilinearized cohomology dims (TSV; --json adds cocycles)");
    add_common(lch_cmd, true);
    lch_cmd->add_option("--pair", opt.pairs,
                        "augmentation pair i,j (repeatable; default all)");

    CLI::App* resolve_cmd = app.add_subcommand(
        "resolve", "0-resolve a braid crossing and emit the morphism table");
    add_common(resolve_cmd, true);
    resolve_cmd->add_option("--at", opt.at, "crossing to resolve, e.g. b[1,1]")
        ->required();

    CLI::App* mu_cmd = app.add_subcommand(
        "mu", "composition operation mu_k of the augmentation category");
    add_common(mu_cmd, true);
    mu_cmd->add_option("--inputs", opt.inputs, "chord names, comma separated")
        ->required();
    mu_cmd->add_option("--augs", opt.augs,
                       "k+1 augmentation indices, comma separated")
        ->required();

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "structural assertions for one resolution");
    add_common(verify_cmd, true);
    verify_cmd->add_option("--at", opt.at, "crossing to resolve")->required();
    verify_cmd->add_flag("--lemma31", opt.lemma31, "index windows");
    verify_cmd->add_flag("--thm32", opt.thm32,
                         "triangularity and injective cochain map");
    verify_cmd->add_flag("--cor33", opt.cor33, "direct-sum dimension relation");
    verify_cmd->add_option("--pair", opt.pairs,
                           "augmentation pair i,j (repeatable; default all)");

    CLI::App* paper_cmd = app.add_subcommand(
        "verify-paper", "re-derive the worked reproduction fixtures");
    add_common(paper_cmd, false);
    paper_cmd->add_option("--fixtures", opt.fixtures,
                          "fixture ids, comma separated (default: all)");

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "soundness sweep over torus braids and their resolutions");
    add_common(sweep_cmd, false);
    sweep_cmd->add_option("--pmax", opt.p_max, "strand bound")
        ->capture_default_str();
    sweep_cmd->add_option("--qmax", opt.q_max, "row bound")
        ->capture_default_str();
    sweep_cmd->add_flag("--thm32", opt.thm32, "include per-pair structure checks");
    sweep_cmd->add_flag("--cor33", opt.cor33, "include per-pair dimension checks");

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("augresolve");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const auto& s : full) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        WalkLimits lim = limits_from(opt.cap);
        DiskEngine engine = engine_from(opt.engine);
        if (dga_cmd->parsed())
            return cmd_dga(opt.braid, engine, lim, opt.json, opt.disks, out);
        if (augs_cmd->parsed())
            return cmd_augs(opt.braid, engine, lim, opt.json, opt.naive, out);
        if (lch_cmd->parsed())
            return cmd_lch(opt.braid, engine, lim, opt.json, opt.pairs, out);
        if (resolve_cmd->parsed())
            return cmd_resolve(opt.braid, opt.at, opt.engine, lim, out);
        if (mu_cmd->parsed())
            return cmd_mu(opt.braid, engine, lim, opt.json, opt.inputs,
                          opt.augs, out);
        if (verify_cmd->parsed())
            return cmd_verify(opt.braid, opt.at, engine, lim, opt.json,
                              opt.lemma31, opt.thm32, opt.cor33, opt.pairs,
                              out);
        if (paper_cmd->parsed())
            return cmd_verify_paper(opt.fixtures, engine, lim, opt.json, out);
        if (sweep_cmd->parsed())
            return cmd_sweep(opt.p_max, opt.q_max, opt.engine, lim, opt.json,
                             opt.thm32, opt.cor33, out);
        err << "no subcommand\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const FaceBoundExceeded& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace augres
