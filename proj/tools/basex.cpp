// Command-line front end: base enumeration, exchange-graph statistics,
// explicit path construction, binomial decomposition, and the small-graph
// sweeps. All payloads go to stdout as JSON; diagnostics to stderr.
// Exit codes: 0 success, 1 property falsified, 2 usage/parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "basex/json_io.hpp"

namespace {

basex::MultiGraph load_graph(const std::string& input) {
    if (input.empty() || input == "-") return basex::parse_graph(std::cin);
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open input file: " + input);
    return basex::parse_graph(in);
}

std::vector<int> parse_exponent(const std::string& s, int edge_count) {
    std::vector<int> expo;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        std::string tok = s.substr(pos, next - pos);
        try {
            size_t used = 0;
            expo.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid exponent entry '" + tok + "'");
        }
        pos = next + 1;
        if (next == s.size()) break;
    }
    if (static_cast<int>(expo.size()) != edge_count)
        throw std::invalid_argument("exponent vector length does not match edge count");
    return expo;
}

void print(const basex::Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"double-swap exchange graphs of graphic matroids"};
    app.require_subcommand(1);

    std::string input;
    bool json_flag = true;
    int seed = 0;
    app.add_option("--input", input, "graph file (default: stdin)");
    app.add_flag("--json", json_flag, "JSON output (always on; reserved)");
    app.add_option("--seed", seed, "seed for random sampling");

    auto* cmd_bases = app.add_subcommand("bases", "enumerate spanning forests");
    bool count_only = false;
    cmd_bases->add_flag("--count", count_only, "print the number of bases only");

    auto* cmd_graph = app.add_subcommand("graph", "exchange graph statistics");
    std::string mode = "k-base";
    int k = 3;
    std::string exponent;
    bool expect_connected = false;
    cmd_graph->add_option("--mode", mode, "k-base|single|fiber")->required();
    cmd_graph->add_option("-k,--k", k, "number of bases per tuple");
    cmd_graph->add_option("--exponent", exponent, "fiber exponent, comma-joined per edge");
    cmd_graph->add_flag("--expect-connected", expect_connected, "exit 1 if disconnected");

    auto* cmd_path = app.add_subcommand("path", "explicit path between two vertices");
    std::string from_s, to_s;
    bool ordered = false;
    int path_k = 0;
    cmd_path->add_option("--from", from_s, "start tuple, e.g. 0,1;2,3")->required();
    cmd_path->add_option("--to", to_s, "end tuple")->required();
    cmd_path->add_option("-k,--k", path_k, "tuple size (default: inferred)");
    cmd_path->add_flag("--ordered", ordered, "ordered pair mode (single exchange graph)");

    auto* cmd_decompose = app.add_subcommand("decompose", "binomial to quadric certificate");
    std::string lhs_s, rhs_s, verify_only;
    cmd_decompose->add_option("--lhs", lhs_s, "left monomial, bases joined by ';'");
    cmd_decompose->add_option("--rhs", rhs_s, "right monomial");
    cmd_decompose->add_option("--verify-only", verify_only, "verify a certificate JSON file");

    auto* cmd_sweep = app.add_subcommand("sweep", "exhaustive small-graph sweep");
    int max_edges = 6;
    int sweep_k = 3;
    std::string sweep_mode;
    bool up_to_iso = false;
    int samples = 3;
    cmd_sweep->add_option("--max-edges", max_edges, "edge bound (<= 12)")->required();
    cmd_sweep->add_option("-k,--k", sweep_k, "tuple size for theorem4/white");
    cmd_sweep->add_option("--mode", sweep_mode, "theorem4|theorem7|white")->required();
    cmd_sweep->add_flag("--up-to-iso", up_to_iso, "one representative per isomorphism class");
    cmd_sweep->add_option("--samples", samples, "certificate samples per fiber (white mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cmd_bases->parsed()) {
            basex::MultiGraph g = load_graph(input);
            if (count_only) {
                long long n = 0;
                basex::for_each_base(g, [&](const basex::Base&) {
                    ++n;
                    return true;
                });
                print(basex::Json{{"count", n}});
            } else {
                auto bases = basex::enumerate_bases(g);
                print(basex::Json{{"count", static_cast<long long>(bases.size())},
                                  {"bases", basex::tuple_json(bases)}});
            }
            return 0;
        }
        if (cmd_graph->parsed()) {
            basex::MultiGraph g = load_graph(input);
            basex::ExchangeGraph xg;
            if (mode == "k-base") {
                xg = basex::build_k_base_graph(g, k);
            } else if (mode == "single") {
                xg = basex::build_single_exchange_graph(g);
            } else if (mode == "fiber") {
                if (exponent.empty())
                    throw std::invalid_argument("fiber mode requires --exponent");
                xg = basex::build_multiset_fiber_graph(g, parse_exponent(exponent, g.edge_count()),
                                                       k);
            } else {
                throw std::invalid_argument("unknown mode: " + mode);
            }
            basex::Json stats = basex::stats_json(xg);
            print(stats);
            if (expect_connected && !stats.at("connected").get<bool>()) {
                std::cerr << "expected connected exchange graph\n";
                return 1;
            }
            return 0;
        }
        if (cmd_path->parsed()) {
            basex::MultiGraph g = load_graph(input);
            auto from = basex::parse_tuple_string(from_s);
            auto to = basex::parse_tuple_string(to_s);
            if (ordered) {
                if (from.size() != 2 || to.size() != 2)
                    throw std::invalid_argument("ordered mode requires exactly two bases per side");
                basex::OrderedPair f{from[0], from[1]}, t{to[0], to[1]};
                try {
                    basex::PairPath p = basex::find_path_single(g, f, t);
                    basex::verify_pair_path(g, p, f, t);
                    print(basex::pair_path_json(g, p));
                } catch (const std::invalid_argument&) {
                    throw;  // input contract violation, exit 2
                } catch (const std::logic_error& e) {
                    print(basex::Json{{"error", e.what()}});
                    std::cerr << e.what() << "\n";
                    return 1;
                }
                return 0;
            }
            int kk = path_k > 0 ? path_k : static_cast<int>(from.size());
            basex::KTuple f{from}, t{to};
            try {
                basex::KPath p = basex::find_path_k(g, f, t, kk);
                basex::verify_kpath(g, kk, p, f, t);
                print(basex::kpath_json(g, kk, p));
            } catch (const std::invalid_argument&) {
                throw;  // input contract violation, exit 2
            } catch (const std::logic_error& e) {
                print(basex::Json{{"error", e.what()}});
                std::cerr << e.what() << "\n";
                return 1;
            }
            return 0;
        }
        if (cmd_decompose->parsed()) {
            basex::MultiGraph g = load_graph(input);
            if (!verify_only.empty()) {
                std::ifstream in(verify_only);
                if (!in) throw std::invalid_argument("cannot open certificate: " + verify_only);
                basex::Json j = basex::Json::parse(in);
                auto cert = basex::certificate_from_json(j);
                auto vr = basex::verify_certificate(g, cert);
                print(basex::Json{{"ok", vr.ok}, {"message", vr.message}});
                return vr.ok ? 0 : 1;
            }
            auto lhs = basex::parse_tuple_string(lhs_s);
            auto rhs = basex::parse_tuple_string(rhs_s);
            try {
                auto cert = basex::decompose_to_quadrics(g, lhs, rhs);
                auto vr = basex::verify_certificate(g, cert);
                if (!vr.ok) {
                    print(basex::Json{{"error", "self-verification failed: " + vr.message}});
                    std::cerr << vr.message << "\n";
                    return 1;
                }
                print(basex::certificate_json(cert));
            } catch (const std::invalid_argument&) {
                throw;  // input contract violation, exit 2
            } catch (const std::logic_error& e) {
                print(basex::Json{{"error", e.what()}});
                std::cerr << e.what() << "\n";
                return 1;
            }
            return 0;
        }
        if (cmd_sweep->parsed()) {
            if (max_edges > 12) throw std::invalid_argument("--max-edges bound is 12");
            basex::SweepSummary s;
            if (sweep_mode == "theorem7") {
                s = basex::sweep_theorem7(max_edges, up_to_iso);
            } else if (sweep_mode == "theorem4") {
                s = basex::sweep_theorem4(max_edges, sweep_k, up_to_iso);
            } else if (sweep_mode == "white") {
                s = basex::sweep_white(max_edges, sweep_k, up_to_iso, samples,
                                       static_cast<unsigned>(seed));
            } else {
                throw std::invalid_argument("unknown sweep mode: " + sweep_mode);
            }
            print(basex::sweep_json(s));
            if (s.failures > 0) {
                for (const auto& f : s.failure_samples) std::cerr << f << "\n";
                return 1;
            }
            return 0;
        }
    } catch (const basex::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
