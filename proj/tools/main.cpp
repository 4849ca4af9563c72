#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ramsey/arrowing.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/containment.hpp"
#include "ramsey/densities.hpp"
#include "ramsey/families.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/montecarlo.hpp"

namespace {

using nlohmann::json;
using namespace ramsey;

constexpr std::uint64_t kDefaultSeed = 20260810ULL;

// Exit codes: 0 definite answer, 1 usage or precondition error, 2 undecided
// within budget.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kUnknown = 2;

Hypergraph resolve_input(const std::string& spec) {
    if (auto hit = catalog_lookup(spec)) return *hit;
    std::ifstream in(spec);
    if (!in)
        throw std::invalid_argument("'" + spec +
                                    "' is neither a catalog name nor a readable file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_hypergraph(ss.str());
}

std::vector<Hypergraph> resolve_list(const std::string& spec) {
    std::vector<Hypergraph> out;
    std::string item;
    std::stringstream ss(spec);
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(resolve_input(item));
    if (out.empty()) throw std::invalid_argument("empty hypergraph list '" + spec + "'");
    return out;
}

std::vector<int> parse_int_list(const std::string& spec) {
    std::vector<int> out;
    std::string item;
    std::stringstream ss(spec);
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

std::vector<double> parse_double_list(const std::string& spec) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(spec);
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

// Event grammar: "contains:F", "arrows:F1,F2[,...]", "containment:s:Q1,Q2,...".
EventSpec parse_event(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("event must look like contains:F, arrows:F1,F2 or "
                                    "containment:s:Q1,Q2,...");
    const std::string kind = spec.substr(0, colon);
    EventSpec ev;
    if (kind == "contains") {
        ev.kind = EventSpec::Kind::ContainsCopy;
        ev.targets = resolve_list(spec.substr(colon + 1));
    } else if (kind == "arrows") {
        ev.kind = EventSpec::Kind::ArrowsTuple;
        ev.targets = resolve_list(spec.substr(colon + 1));
    } else if (kind == "containment") {
        ev.kind = EventSpec::Kind::ContainmentHolds;
        const std::string rest = spec.substr(colon + 1);
        const auto colon2 = rest.find(':');
        if (colon2 == std::string::npos)
            throw std::invalid_argument("containment event needs a source count: "
                                        "containment:s:Q1,Q2,...");
        ev.sources = std::stoi(rest.substr(0, colon2));
        ev.targets = resolve_list(rest.substr(colon2 + 1));
    } else {
        throw std::invalid_argument("unknown event kind '" + kind + "'");
    }
    validate_event(ev);
    return ev;
}

json witness_json(const Hypergraph& host, const ArrowWitness& w) {
    json arr = json::array();
    for (std::size_t e = 0; e < w.size(); ++e)
        arr.push_back({{"edge", host.edge(static_cast<int>(e))}, {"color", w[e] + 1}});
    return arr;
}

json certificate_json(const PartitionCertificate& cert) {
    json assignment = json::array();
    for (int i : cert.assignment) assignment.push_back(i + 1);
    return {{"assignment", assignment}};
}

json refutations_json(const std::vector<Hypergraph>& fs,
                      const std::vector<AssignmentRefutation>& refs) {
    json arr = json::array();
    for (const AssignmentRefutation& ref : refs) {
        json assignment = json::array();
        for (int i : ref.assignment) assignment.push_back(i + 1);
        arr.push_back({{"assignment", assignment},
                       {"failingIndex", ref.failing_source + 1},
                       {"witness", witness_json(fs[static_cast<std::size_t>(ref.failing_source)],
                                                ref.witness)}});
    }
    return arr;
}

json fit_json(const ThresholdFit& fit) {
    json ph = json::object();
    for (const auto& [n, p] : fit.p_half_by_n) ph[std::to_string(n)] = p;
    return {{"pHalfByN", ph},
            {"slope", fit.slope},
            {"predictedSlope", fit.predicted_slope},
            {"predictedSlopeExact", (-Rational(1) / fit.predicted_exponent_density).str()},
            {"residuals", fit.residuals}};
}

struct GlobalOptions {
    bool json_out = false;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t budget = SearchLimits{}.node_budget;
    int threads = 1;
    SearchLimits limits() const { return SearchLimits{budget}; }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph Ramsey toolkit: exact densities, arrowing decisions, Ramsey-class "
                 "containment and equivalence, and Monte Carlo threshold estimation"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_flag("--json", g.json_out, "machine-readable JSON output");
    app.add_option("--seed", g.seed, "master seed for randomized subcommands");
    app.add_option("--budget", g.budget, "arrowing search node budget");
    app.add_option("--threads", g.threads, "worker cap for Monte Carlo trials");

    // density
    std::string d_input, d_kind = "mr", d_second;
    auto* density = app.add_subcommand("density", "exact density parameters");
    density->add_option("--input", d_input, "hypergraph (catalog name or file)")->required();
    density->add_option("--kind", d_kind, "m | mr | asym");
    density->add_option("--second", d_second, "second hypergraph for --kind asym");

    // classes
    std::string c_input;
    auto* classes = app.add_subcommand("classes", "family membership with witnesses");
    classes->add_option("--input", c_input)->required();

    // dense
    std::string de_t, de_f;
    auto* dense = app.add_subcommand("dense", "sufficient Ramsey-denseness check");
    dense->add_option("--t", de_t)->required();
    dense->add_option("--f", de_f)->required();

    // arrow
    std::string a_host, a_targets;
    auto* arrow = app.add_subcommand("arrow", "decide host -> (targets)");
    arrow->add_option("--host", a_host)->required();
    arrow->add_option("--targets", a_targets, "comma-separated targets")->required();

    // ramsey
    std::string rn_targets;
    int rn_cap = 8;
    auto* ramsey_cmd = app.add_subcommand("ramsey", "smallest complete arrowing host");
    ramsey_cmd->add_option("--targets", rn_targets)->required();
    ramsey_cmd->add_option("--cap", rn_cap, "largest host size searched");

    // contain
    std::string ct_fs, ct_qs;
    auto* contain = app.add_subcommand("contain", "Ramsey-class containment");
    contain->add_option("--fs", ct_fs)->required();
    contain->add_option("--qs", ct_qs)->required();

    // equiv
    std::string eq_fs, eq_qs;
    auto* equiv = app.add_subcommand("equiv", "Ramsey equivalence of tuples");
    equiv->add_option("--fs", eq_fs)->required();
    equiv->add_option("--qs", eq_qs)->required();

    // cor71
    std::string co_item = "i";
    int co_r = 2, co_k = 3, co_l = 2, co_cap = 8;
    auto* cor71 = app.add_subcommand("cor71", "certified clique separation instances");
    cor71->add_option("--item", co_item, "i | ii | iii");
    cor71->add_option("--r", co_r);
    cor71->add_option("--k", co_k);
    cor71->add_option("--l", co_l);
    cor71->add_option("--cap", co_cap, "cap for the Ramsey number of item i");

    // sample
    int sm_r = 2, sm_n = 10;
    double sm_p = 0.5;
    auto* sample_cmd = app.add_subcommand("sample", "draw one random hypergraph");
    sample_cmd->add_option("--r", sm_r);
    sample_cmd->add_option("--n", sm_n)->required();
    sample_cmd->add_option("--p", sm_p)->required();

    // sweep
    std::string sw_event, sw_grid, sw_output;
    int sw_n = 10, sw_trials = 100;
    auto* sweep_cmd = app.add_subcommand("sweep", "success fraction across a p grid (CSV)");
    sweep_cmd->add_option("--event", sw_event)->required();
    sweep_cmd->add_option("--n", sw_n)->required();
    sweep_cmd->add_option("--p-grid", sw_grid, "comma-separated probabilities")->required();
    sweep_cmd->add_option("--trials", sw_trials);
    sweep_cmd->add_option("--output", sw_output, "write CSV here instead of stdout");

    // fit
    std::string ft_event, ft_nlist;
    int ft_trials = 200;
    double ft_tol = 1.0 / 4096.0;
    auto* fit_cmd = app.add_subcommand("fit", "threshold exponent fit across n");
    fit_cmd->add_option("--event", ft_event)->required();
    fit_cmd->add_option("--n-list", ft_nlist, "comma-separated n values (>= 3)")->required();
    fit_cmd->add_option("--trials", ft_trials, "trials per bisection probe");
    fit_cmd->add_option("--tol", ft_tol, "bisection width target");

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "list bundled hypergraphs");

    // Global flags remain usable after the subcommand name.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*density) {
            const Hypergraph f = resolve_input(d_input);
            DensityReport rep;
            if (d_kind == "m")
                rep = max_density(f);
            else if (d_kind == "mr")
                rep = max_r_density(f);
            else if (d_kind == "asym") {
                if (d_second.empty())
                    throw std::invalid_argument("--kind asym needs --second");
                rep = asym_density(f, resolve_input(d_second));
            } else
                throw std::invalid_argument("unknown density kind '" + d_kind + "'");
            if (g.json_out)
                std::cout << json{{"kind", d_kind},
                                  {"value", rep.value.str()},
                                  {"maximizer", rep.maximizer},
                                  {"uniqueAtWhole", rep.unique_at_whole}}
                                 .dump()
                          << "\n";
            else
                std::cout << rep.value.str() << "\n";
            return kOk;
        }

        if (*classes) {
            const Hypergraph f = resolve_input(c_input);
            const ClassReport rep = family_membership(f);
            if (g.json_out) {
                json j{{"inXr", rep.in_xr}, {"inYr", rep.in_yr}};
                j["xrWitness"] = rep.xr_witness ? json(*rep.xr_witness) : json();
                j["yrWitness"] = rep.yr_witness
                                     ? json{rep.yr_witness->first, rep.yr_witness->second}
                                     : json();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "inXr: " << (rep.in_xr ? "true" : "false");
                if (rep.xr_witness) {
                    std::cout << " (cut witness:";
                    for (int v : *rep.xr_witness) std::cout << " " << v;
                    std::cout << ")";
                }
                std::cout << "\ninYr: " << (rep.in_yr ? "true" : "false");
                if (rep.yr_witness)
                    std::cout << " (uncovered pair: " << rep.yr_witness->first << " "
                              << rep.yr_witness->second << ")";
                std::cout << "\n";
            }
            return kOk;
        }

        if (*dense) {
            const DensenessResult res =
                ramsey_dense_sufficient(resolve_input(de_t), resolve_input(de_f));
            const bool proven = res.verdict == Denseness::Proven;
            if (g.json_out) {
                json j{{"verdict", proven ? "proven" : "inconclusive"}, {"rule", res.rule}};
                j["fPrime"] = res.f_prime ? json::parse(serialize_hypergraph_json(*res.f_prime))
                                          : json();
                std::cout << j.dump() << "\n";
            } else if (proven) {
                std::cout << "PROVEN (" << res.rule << ")\n";
                if (res.f_prime) std::cout << serialize_hypergraph(*res.f_prime) << "\n";
            } else {
                std::cout << "INCONCLUSIVE\n";
            }
            return kOk;
        }

        if (*arrow) {
            const Hypergraph host = resolve_input(a_host);
            const ArrowInstance inst{host, resolve_list(a_targets)};
            const ArrowResult res = arrows(inst, g.limits());
            if (g.json_out) {
                json j{{"outcome", res.status == ArrowStatus::Arrows      ? "arrows"
                                   : res.status == ArrowStatus::NotArrows ? "not_arrows"
                                                                          : "unknown"},
                       {"nodes", res.nodes}};
                j["witness"] = res.witness ? witness_json(host, *res.witness) : json();
                std::cout << j.dump() << "\n";
            } else if (res.status == ArrowStatus::Arrows) {
                std::cout << "ARROWS\n";
            } else if (res.status == ArrowStatus::NotArrows) {
                std::cout << "NOT ARROWS\n" << witness_json(host, *res.witness).dump() << "\n";
            } else {
                std::cout << "UNKNOWN (budget exhausted after " << res.nodes << " nodes)\n";
            }
            return res.status == ArrowStatus::Unknown ? kUnknown : kOk;
        }

        if (*ramsey_cmd) {
            const RamseyNumberOutcome out =
                ramsey_number(resolve_list(rn_targets), rn_cap, g.limits());
            if (out.status == RamseyNumberOutcome::Status::Unknown) {
                std::cout << "UNKNOWN at host size " << out.stopped_at << "\n";
                return kUnknown;
            }
            if (out.status == RamseyNumberOutcome::Status::CapExceeded)
                throw std::invalid_argument("no arrowing host within cap " +
                                            std::to_string(rn_cap));
            if (g.json_out)
                std::cout << json{{"value", out.result->value},
                                  {"witnessBelow",
                                   witness_json(out.result->host_below, out.result->witness_below)}}
                                 .dump()
                          << "\n";
            else
                std::cout << out.result->value << "\n"
                          << witness_json(out.result->host_below, out.result->witness_below).dump()
                          << "\n";
            return kOk;
        }

        if (*contain) {
            const std::vector<Hypergraph> fs = resolve_list(ct_fs);
            const ContainmentVerdict v = containment_decision(fs, resolve_list(ct_qs), g.limits());
            if (v.status == PartitionStatus::Unknown) {
                std::cout << "UNKNOWN\n";
                return kUnknown;
            }
            if (g.json_out) {
                json j{{"holds", v.holds}};
                j["certificate"] = v.certificate ? certificate_json(*v.certificate) : json();
                j["refutations"] = refutations_json(fs, v.refutations);
                std::cout << j.dump() << "\n";
            } else if (v.holds) {
                std::cout << "HOLDS " << certificate_json(*v.certificate).dump() << "\n";
            } else {
                std::cout << "DOES NOT HOLD " << refutations_json(fs, v.refutations).dump()
                          << "\n";
            }
            return kOk;
        }

        if (*equiv) {
            const EquivalenceResult res =
                equivalence_decision(resolve_list(eq_fs), resolve_list(eq_qs));
            if (g.json_out) {
                json mapping = json::array();
                for (int j : res.mapping) mapping.push_back(j + 1);
                std::cout << json{{"equivalent", res.equivalent}, {"mapping", mapping}}.dump()
                          << "\n";
            } else if (res.equivalent) {
                std::cout << "EQUIVALENT";
                for (std::size_t i = 0; i < res.mapping.size(); ++i)
                    std::cout << " " << (i + 1) << "->" << res.mapping[i] + 1;
                std::cout << "\n";
            } else {
                std::cout << "NOT EQUIVALENT\n";
            }
            return kOk;
        }

        if (*cor71) {
            SeparationItem item;
            if (co_item == "i")
                item = SeparationItem::I;
            else if (co_item == "ii")
                item = SeparationItem::II;
            else if (co_item == "iii")
                item = SeparationItem::III;
            else
                throw std::invalid_argument("--item must be i, ii or iii");
            const SeparationReport rep =
                verify_clique_separation(item, co_r, co_k, co_l, co_cap, g.limits());
            if (rep.verdict.status == PartitionStatus::Unknown) {
                std::cout << "UNKNOWN\n";
                return kUnknown;
            }
            json j{{"item", co_item},
                   {"r", rep.r},
                   {"k", rep.k},
                   {"l", rep.l},
                   {"separationCertified", rep.separation_certified},
                   {"refutations", refutations_json(rep.fs, rep.verdict.refutations)}};
            if (rep.q >= 0) j["q"] = rep.q;
            if (g.json_out) {
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (rep.separation_certified ? "SEPARATION CERTIFIED"
                                                       : "NO SEPARATION (containment holds)")
                          << "\n"
                          << j.dump() << "\n";
            }
            return kOk;
        }

        if (*sample_cmd) {
            const Hypergraph h = sample({sm_r, sm_n, sm_p, g.seed});
            std::cout << (g.json_out ? serialize_hypergraph_json(h) : serialize_hypergraph(h))
                      << "\n";
            return kOk;
        }

        if (*sweep_cmd) {
            const EventSpec ev = parse_event(sw_event);
            const SampleConfig base{validate_event(ev), sw_n, 0.0, g.seed};
            const std::vector<SweepRecord> records =
                sweep(base, ev, parse_double_list(sw_grid), sw_trials, g.limits(), g.threads);
            if (sw_output.empty()) {
                write_csv(std::cout, records);
            } else {
                std::ofstream out(sw_output);
                if (!out) throw std::invalid_argument("cannot write '" + sw_output + "'");
                write_csv(out, records);
            }
            return kOk;
        }

        if (*fit_cmd) {
            const EventSpec ev = parse_event(ft_event);
            const std::vector<int> n_list = parse_int_list(ft_nlist);
            const ThresholdFit fit =
                fit_threshold(ev, n_list, ft_trials, ft_tol, g.seed, g.limits(), g.threads);
            std::cout << fit_json(fit).dump() << "\n";
            return kOk;
        }

        if (*catalog_cmd) {
            if (g.json_out) {
                json arr = json::array();
                for (const CatalogEntry& e : catalog())
                    arr.push_back({{"name", e.name},
                                   {"hypergraph",
                                    json::parse(serialize_hypergraph_json(e.hypergraph))}});
                std::cout << arr.dump() << "\n";
            } else {
                for (const CatalogEntry& e : catalog())
                    std::cout << e.name << ": " << serialize_hypergraph(e.hypergraph) << "\n";
            }
            return kOk;
        }
    } catch (const UnknownError& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return kUnknown;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
