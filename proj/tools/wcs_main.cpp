// Command-line front end. Every command prints a single JSON envelope
// {command, params, result, version} on stdout; diagnostics go to stderr.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wcs/density.hpp"
#include "wcs/enumerate.hpp"
#include "wcs/generate.hpp"
#include "wcs/intervals.hpp"
#include "wcs/permutation.hpp"
#include "wcs/primes.hpp"

using nlohmann::json;
using namespace wcs;

namespace {

constexpr const char* kVersion = "0.1.0";

class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

json envelope(const std::string& command, json params, json result) {
    return json{{"command", command},
                {"params", std::move(params)},
                {"result", std::move(result)},
                {"version", kVersion}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<uint32_t> parse_sequence(const std::string& text) {
    std::vector<uint32_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        long long v = -1;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw CLI::ValidationError("sequence", "cannot parse '" + tok + "' as an integer");
        }
        while (pos < tok.size() && std::isspace((unsigned char)tok[pos])) ++pos;
        if (pos != tok.size() || v < 0)
            throw CLI::ValidationError("sequence", "cannot parse '" + tok + "' as an integer");
        out.push_back((uint32_t)v);
    }
    if (out.empty()) throw CLI::ValidationError("sequence", "empty sequence");
    return out;
}

Permutation parse_permutation(const std::string& text) {
    std::string err;
    auto perm = Permutation::parse_checked(parse_sequence(text), &err);
    if (!perm) throw DomainError("not a permutation: " + err);
    return *perm;
}

json perm_to_json(const Permutation& p) {
    json a = json::array();
    for (uint32_t i = 1; i <= p.size(); ++i) a.push_back(p.at(i));
    return a;
}

json derivation_to_json(const Derivation& d) {
    json start{{"kind", to_string(d.start.kind)}};
    if (d.start.p) start["p"] = *d.start.p;
    json steps = json::array();
    for (const RuleStep& s : d.steps) {
        switch (s.kind) {
            case RuleKind::Reversal: steps.push_back({{"kind", "reversal"}}); break;
            case RuleKind::PrimePowerSwap:
                steps.push_back({{"kind", "prime_power_swap"}, {"p", s.p}, {"c", s.c}});
                break;
            case RuleKind::TwinPrimeSwap:
                steps.push_back({{"kind", "twin_prime_swap"}, {"q", s.q}});
                break;
        }
    }
    return json{{"start", start}, {"steps", steps}, {"result", perm_to_json(d.result)}};
}

uint32_t enumeration_ceiling(uint32_t flag_value) {
    if (flag_value != 0) return flag_value;
    if (const char* env = std::getenv("WCS_CEILING")) {
        long v = std::atol(env);
        if (v >= 1) return (uint32_t)v;
    }
    return 500;
}

struct ProgressFlag {
    bool on = false;
    void note(const std::string& msg) const {
        if (on) std::cerr << msg << "\n";
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weakly consecutive sequence toolkit"};
    app.require_subcommand(1);
    ProgressFlag progress;
    app.add_flag("--progress", progress.on, "report progress on stderr");
    uint32_t ceiling_flag = 0;
    app.add_option("--ceiling", ceiling_flag,
                   "override the enumeration ceiling (default 500 or WCS_CEILING; large values "
                   "get expensive)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "check a sequence for weak consecutiveness");
    std::string seq_text;
    cmd_verify->add_option("sequence", seq_text, "comma-separated values")->required();

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "list all WCS of length k");
    uint32_t enum_k = 0;
    std::string format = "json";
    cmd_enum->add_option("--k", enum_k, "sequence length")->required();
    cmd_enum->add_option("--format", format, "json|csv|table");

    // count
    auto* cmd_count = app.add_subcommand("count", "count WCS for a range of lengths");
    uint32_t count_k = 0, count_from = 0, count_to = 0;
    std::string count_format = "json";
    cmd_count->add_option("--k", count_k, "single length");
    cmd_count->add_option("--from", count_from, "range start");
    cmd_count->add_option("--to", count_to, "range end");
    cmd_count->add_option("--format", count_format, "json|csv|rows10");

    // generate
    auto* cmd_gen = app.add_subcommand("generate", "closure of the starting sequences under the rules");
    uint32_t gen_k = 0;
    bool gen_derivations = false;
    cmd_gen->add_option("--k", gen_k, "sequence length")->required();
    cmd_gen->add_flag("--derivations", gen_derivations, "include a derivation per sequence");

    // derive
    auto* cmd_derive = app.add_subcommand("derive", "derivation of a given WCS, if the rules reach it");
    std::string derive_seq;
    cmd_derive->add_option("sequence", derive_seq, "comma-separated values")->required();

    // check
    auto* cmd_check = app.add_subcommand("check", "conjecture harness");
    std::string conjecture;
    uint32_t k_max = 100;
    cmd_check->add_option("conjecture", conjecture, "main|one-at-end|m-near-end|power-of-two|commute")
        ->required();
    cmd_check->add_option("--k-max", k_max, "check all k up to this bound");

    // intervals
    auto* cmd_intervals = app.add_subcommand("intervals", "prime power interval memberships of k");
    uint64_t intervals_k = 0;
    cmd_intervals->add_option("--k", intervals_k, "length")->required();

    // search-swaps
    auto* cmd_search = app.add_subcommand("search-swaps", "least k admitting n proper prime power swaps");
    uint32_t search_n = 0;
    uint64_t search_bound = 0;
    cmd_search->add_option("--n", search_n, "target swap count")->required();
    cmd_search->add_option("--bound", search_bound, "search bound")->required();

    // dirichlet
    auto* cmd_dirichlet = app.add_subcommand("dirichlet", "simultaneous-approximation witness for n swaps");
    uint32_t dirichlet_n = 0;
    cmd_dirichlet->add_option("--n", dirichlet_n, "target interval count (1..3)")->required();

    // density
    auto* cmd_density = app.add_subcommand("density", "density analyses");
    cmd_density->require_subcommand(1);
    auto* cmd_delta = cmd_density->add_subcommand("delta", "partial product for the N(k)=2 density");
    uint64_t prime_limit = 10'000'000;
    cmd_delta->add_option("--prime-limit", prime_limit, "product over primes up to this limit");
    auto* cmd_zero = cmd_density->add_subcommand("zero-interval", "empirical density of predicted N(k)=2");
    uint64_t zero_k_max = 1'000'000;
    cmd_zero->add_option("--k-max", zero_k_max, "scan k up to this bound");
    auto* cmd_rprime = cmd_density->add_subcommand("rprime-bound", "analytic upper bound on E[R']");
    double rprime_n = 0;
    cmd_rprime->add_option("--N", rprime_n, "perfect square window parameter")->required();
    auto* cmd_rp = cmd_density->add_subcommand("rp-bound", "upper bound on E[R_p]");
    uint64_t rp_p = 0;
    double rp_a = 0, rp_b = 0;
    cmd_rp->add_option("--p", rp_p, "prime")->required();
    cmd_rp->add_option("--a", rp_a, "window start")->required();
    cmd_rp->add_option("--b", rp_b, "window end")->required();
    auto* cmd_measure = cmd_density->add_subcommand("measure-check", "Monte Carlo check of the grid measure bound");
    double mx = 0, my = 0, ma = 0, mb = 0;
    uint64_t m_samples = 100000, m_seed = 1;
    cmd_measure->add_option("--x", mx, "grid period")->required();
    cmd_measure->add_option("--y", my, "interval width")->required();
    cmd_measure->add_option("--a", ma, "window start")->required();
    cmd_measure->add_option("--b", mb, "window end")->required();
    cmd_measure->add_option("--samples", m_samples, "sample count");
    cmd_measure->add_option("--seed", m_seed, "PRNG seed");

    // sample-r
    auto* cmd_sample = app.add_subcommand("sample-r", "Monte Carlo E[R], E[R'] under log-uniform K");
    double sr_a = 0, sr_b = 0;
    uint64_t sr_samples = 100000, sr_seed = 1;
    cmd_sample->add_option("--a", sr_a, "window start")->required();
    cmd_sample->add_option("--b", sr_b, "window end")->required();
    cmd_sample->add_option("--samples", sr_samples, "sample count");
    cmd_sample->add_option("--seed", sr_seed, "PRNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        EnumerateOptions opts;
        opts.ceiling = enumeration_ceiling(ceiling_flag);

        if (*cmd_verify) {
            Permutation p = parse_permutation(seq_text);
            auto violation = find_wcs_violation(p);
            json result{{"k", p.size()}, {"is_wcs", !violation.has_value()}};
            if (violation)
                result["failing_triple"] = {{"m", violation->m}, {"i", violation->i}, {"j", violation->j}};
            emit(envelope("verify", {{"sequence", seq_text}}, result));
        } else if (*cmd_enum) {
            progress.note("enumerating k=" + std::to_string(enum_k));
            auto seqs = enumerate_wcs(enum_k, opts);
            if (format == "csv") {
                json result{{"k", enum_k}, {"count", seqs.size()}};
                emit(envelope("enumerate", {{"k", enum_k}, {"format", format}}, result));
                for (const auto& s : seqs) std::cout << to_string(s) << "\n";
            } else if (format == "table") {
                json result{{"k", enum_k}, {"count", seqs.size()}};
                emit(envelope("enumerate", {{"k", enum_k}, {"format", format}}, result));
                for (const auto& s : seqs) std::cout << "(" << to_string(s) << ")\n";
            } else {
                json arr = json::array();
                for (const auto& s : seqs) arr.push_back(perm_to_json(s));
                json result{{"k", enum_k}, {"count", seqs.size()}, {"sequences", arr}};
                emit(envelope("enumerate", {{"k", enum_k}, {"format", format}}, result));
            }
        } else if (*cmd_count) {
            uint32_t lo = count_k ? count_k : count_from;
            uint32_t hi = count_k ? count_k : count_to;
            if (lo == 0 || hi == 0) throw DomainError("need --k or --from/--to");
            auto counts = count_range(lo, hi, opts);
            if (count_format == "csv") {
                json result{{"from", lo}, {"to", hi}};
                emit(envelope("count", {{"from", lo}, {"to", hi}, {"format", count_format}}, result));
                std::cout << "k,n\n";
                for (auto [k, n] : counts) std::cout << k << "," << n << "\n";
            } else if (count_format == "rows10") {
                json result{{"from", lo}, {"to", hi}};
                emit(envelope("count", {{"from", lo}, {"to", hi}, {"format", count_format}}, result));
                // Rows of ten, one row per decade, mirroring the published table layout.
                for (size_t i = 0; i < counts.size(); i += 10) {
                    std::cout << counts[i].first / 10 * 10;
                    for (size_t j = i; j < std::min(i + 10, counts.size()); ++j)
                        std::cout << "," << counts[j].second;
                    std::cout << "\n";
                }
            } else {
                json arr = json::array();
                for (auto [k, n] : counts) arr.push_back({{"k", k}, {"n", n}});
                emit(envelope("count", {{"from", lo}, {"to", hi}, {"format", count_format}},
                              json{{"counts", arr}}));
            }
        } else if (*cmd_gen) {
            auto cl = closure(gen_k);
            json arr = json::array();
            for (const auto& s : cl.sequences) arr.push_back(perm_to_json(s));
            json result{{"k", gen_k}, {"count", cl.sequences.size()}, {"sequences", arr}};
            if (gen_derivations) {
                json ds = json::array();
                for (const auto& d : cl.derivations) ds.push_back(derivation_to_json(d));
                result["derivations"] = ds;
            }
            emit(envelope("generate", {{"k", gen_k}}, result));
        } else if (*cmd_derive) {
            Permutation p = parse_permutation(derive_seq);
            auto cl = closure(p.size());
            json result{{"k", p.size()}};
            bool found = false;
            for (size_t i = 0; i < cl.sequences.size(); ++i) {
                if (cl.sequences[i] == p) {
                    result["derivation"] = derivation_to_json(cl.derivations[i]);
                    found = true;
                    break;
                }
            }
            result["derivable"] = found;
            if (!found && is_wcs_definition(p))
                result["note"] = "weakly consecutive but not generated by the rules";
            emit(envelope("derive", {{"sequence", derive_seq}}, result));
            if (!found) return 1;
        } else if (*cmd_check) {
            json rows = json::array();
            uint64_t violations = 0;
            if (conjecture == "main") {
                for (uint32_t k = 1; k <= k_max; ++k) {
                    progress.note("main: k=" + std::to_string(k));
                    auto rep = check_conjecture_main(k, opts);
                    if (!rep.equal) ++violations;
                    rows.push_back({{"k", k},
                                    {"enumerated", rep.n_enumerated},
                                    {"generated", rep.n_generated},
                                    {"missing", rep.missing.size()},
                                    {"extra", rep.extra.size()},
                                    {"pass", rep.equal}});
                }
            } else if (conjecture == "one-at-end") {
                for (uint32_t k = 1; k <= k_max; ++k) {
                    progress.note("one-at-end: k=" + std::to_string(k));
                    bool pass = check_one_at_end(k, opts);
                    if (!pass) ++violations;
                    rows.push_back({{"k", k}, {"pass", pass}});
                }
            } else if (conjecture == "m-near-end") {
                for (uint32_t k = 1; k <= k_max; ++k) {
                    progress.note("m-near-end: k=" + std::to_string(k));
                    bool pass = check_m_near_end(k, opts);
                    if (!pass) ++violations;
                    rows.push_back({{"k", k}, {"pass", pass}});
                }
            } else if (conjecture == "power-of-two") {
                for (uint32_t k = 1; k <= k_max; ++k) {
                    progress.note("power-of-two: k=" + std::to_string(k));
                    uint64_t n = count_wcs(k, opts);
                    auto cls = check_power_of_two(k, n);
                    if (cls == PowerOfTwoClass::Violation) ++violations;
                    rows.push_back({{"k", k}, {"n", n}, {"class", to_string(cls)},
                                    {"pass", cls != PowerOfTwoClass::Violation}});
                }
            } else if (conjecture == "commute") {
                for (uint32_t k = 1; k <= k_max; ++k) {
                    progress.note("commute: k=" + std::to_string(k));
                    bool pass = check_commutation(k);
                    if (!pass) ++violations;
                    rows.push_back({{"k", k}, {"pass", pass}});
                }
            } else {
                throw CLI::ValidationError("conjecture", "unknown conjecture '" + conjecture + "'");
            }
            json result{{"conjecture", conjecture},
                        {"k_max", k_max},
                        {"violations", violations},
                        {"all_pass", violations == 0},
                        {"rows", rows}};
            emit(envelope("check", {{"conjecture", conjecture}, {"k_max", k_max}}, result));
            if (violations > 0) return 1;
        } else if (*cmd_intervals) {
            auto hits = interval_hits(intervals_k);
            json arr = json::array();
            for (const auto& h : hits) arr.push_back({{"p", h.p}, {"c", h.c}});
            emit(envelope("intervals", {{"k", intervals_k}},
                          json{{"k", intervals_k}, {"hits", arr}, {"count", hits.size()}}));
        } else if (*cmd_search) {
            progress.note("sweeping intervals up to " + std::to_string(search_bound));
            auto rec = least_k_with_swaps(search_n, search_bound);
            json hits = json::array();
            for (const auto& h : rec.hits) hits.push_back({{"p", std::to_string(h.p)}, {"c", h.c}});
            json result{{"n", rec.n},
                        {"found", rec.found},
                        {"bound", std::to_string(search_bound)},
                        {"exhaustive", rec.exhaustive},
                        {"hits", hits}};
            if (rec.found) result["least_k"] = std::to_string(rec.least_k);
            emit(envelope("search-swaps", {{"n", search_n}, {"bound", std::to_string(search_bound)}},
                          result));
        } else if (*cmd_dirichlet) {
            auto w = dirichlet_witness(dirichlet_n);
            json result{{"n", w.n},
                        {"found", w.found},
                        {"primes", w.primes},
                        {"epsilon", w.epsilon},
                        {"c_bound", w.c_bound},
                        {"C", w.C},
                        {"side", w.upper_side ? "upper" : "lower"},
                        {"chosen_primes", w.chosen_primes},
                        {"z", w.z},
                        {"k_log2_floor", w.k_log2_floor},
                        {"verified_count", w.verified_count},
                        {"exact", w.exact},
                        {"precision_bits", w.precision_bits}};
            if (!w.k_decimal.empty()) result["k"] = w.k_decimal;
            emit(envelope("dirichlet", {{"n", dirichlet_n}}, result));
            if (!w.found) return 1;
        } else if (*cmd_delta) {
            auto d = delta_product(prime_limit);
            emit(envelope("density delta", {{"prime_limit", prime_limit}},
                          json{{"prime_limit", d.prime_limit},
                               {"partial_product", d.partial_product},
                               {"tail_correction", d.tail_correction},
                               {"delta_estimate", d.delta_estimate}}));
        } else if (*cmd_zero) {
            auto z = empirical_zero_interval_density(zero_k_max);
            emit(envelope("density zero-interval", {{"k_max", zero_k_max}},
                          json{{"k_max", z.k_max}, {"count", z.count}, {"fraction", z.fraction}}));
        } else if (*cmd_rprime) {
            auto rb = expected_rprime_bound(rprime_n);
            emit(envelope("density rprime-bound", {{"N", rprime_n}},
                          json{{"N", rb.n},
                               {"first_sum", rb.first_sum},
                               {"second_sum", rb.second_sum},
                               {"value", rb.value},
                               {"beyond_sieve", rb.beyond_sieve}}));
        } else if (*cmd_rp) {
            emit(envelope("density rp-bound", {{"p", rp_p}, {"a", rp_a}, {"b", rp_b}},
                          json{{"bound", rp_upper_bound(rp_p, rp_a, rp_b)}}));
        } else if (*cmd_measure) {
            auto r = measure_lemma_check(mx, my, ma, mb, m_samples, m_seed);
            emit(envelope("density measure-check",
                          {{"x", mx}, {"y", my}, {"a", ma}, {"b", mb}, {"samples", m_samples},
                           {"seed", m_seed}},
                          json{{"estimate", r.estimate},
                               {"bound", r.bound},
                               {"standard_error", r.standard_error},
                               {"pass", r.pass}}));
        } else if (*cmd_sample) {
            auto r = sample_R(sr_a, sr_b, sr_samples, sr_seed);
            emit(envelope("sample-r",
                          {{"a", sr_a}, {"b", sr_b}, {"samples", sr_samples}, {"seed", sr_seed}},
                          json{{"mean_r", r.mean_r}, {"mean_r_prime", r.mean_r_prime}}));
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
