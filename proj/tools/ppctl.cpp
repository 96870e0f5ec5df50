// ppctl: command-line front end for the protocol analysis library.

#include <CLI11.hpp>
#include <iostream>

#include "pp/bb.hpp"
#include "pp/io.hpp"

namespace {

pp::Protocol load_protocol(const std::string& path, bool normalize, bool strip) {
    pp::Protocol p = pp::protocol_from_json(pp::read_file(path));
    if (normalize || strip) p = pp::normalize_protocol(p, strip).protocol;
    return p;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        pp::write_file(out_path, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"population protocol analysis toolkit"};
    app.require_subcommand(1);

    std::string protocol_path, out_path, cert_path, matrix_path;
    std::string family = "binary", which = "S";
    unsigned k = 1;
    unsigned n_states = 1;
    long max_input = 10;
    long input = 2;
    std::string eta_str = "2";
    bool normalize = false, strip = false, nondet = false, det_xi = false;
    pp::Limits limits;

    auto add_protocol_opt = [&](CLI::App* cmd) {
        cmd->add_option("protocol,--protocol", protocol_path, "protocol file (JSON)")->required();
        cmd->add_flag("--normalize", normalize, "complete missing pairs with identities");
        cmd->add_flag("--strip", strip, "drop uncoverable states");
    };

    auto* gen = app.add_subcommand("gen", "generate a flock protocol file");
    gen->add_option("--family", family, "unary|binary")
        ->check(CLI::IsMember({"unary", "binary"}));
    gen->add_option("-k,--k", k, "threshold exponent (eta = 2^k)")->required();
    gen->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "exact threshold verification");
    add_protocol_opt(verify);
    verify->add_option("--eta", eta_str, "threshold")->required();
    verify->add_option("--max-input", max_input, "largest input to check");

    auto* reach = app.add_subcommand("reach", "reachable configurations from IC(input)");
    add_protocol_opt(reach);
    reach->add_option("--input", input, "input size")->required();

    auto* stable = app.add_subcommand("stable-basis", "ideal decomposition of a stable set");
    add_protocol_opt(stable);
    stable->add_option("--which", which, "0, 1, or S")->check(CLI::IsMember({"0", "1", "S"}));
    stable->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* pottier = app.add_subcommand("pottier", "Hilbert basis and Pottier bound");
    pottier->add_option("--matrix", matrix_path, "matrix file (JSON)");
    pottier->add_option("--protocol", protocol_path, "protocol file (uses its system)");
    pottier->add_flag("--normalize", normalize, "complete missing pairs with identities");
    pottier->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* saturate = app.add_subcommand("saturate", "saturation sequence");
    add_protocol_opt(saturate);

    auto* certify = app.add_subcommand("certify", "build a pumping certificate");
    add_protocol_opt(certify);
    certify->add_option("-o,--out", out_path, "certificate file (default stdout)");

    auto* check = app.add_subcommand("check", "verify a pumping certificate");
    add_protocol_opt(check);
    check->add_option("--cert", cert_path, "certificate file")->required();

    auto* constants = app.add_subcommand("constants", "theoretical constants");
    add_protocol_opt(constants);
    constants->add_flag("--deterministic-xi", det_xi, "report the deterministic-protocol variant too");

    auto* bb = app.add_subcommand("busybeaver", "exhaustive search over tiny protocols");
    bb->add_option("-n,--states", n_states, "state count")->required();
    bb->add_flag("--nondet", nondet, "include non-deterministic protocols");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            pp::Protocol p = family == "unary" ? pp::flock_unary(k) : pp::flock_binary(k);
            emit(out_path, pp::protocol_to_json(p));
            return 0;
        }
        if (verify->parsed()) {
            pp::Protocol p = load_protocol(protocol_path, normalize, strip);
            pp::Verdict v = pp::verify_threshold(p, pp::Nat(eta_str), max_input, limits);
            if (v.accept) {
                std::cout << "Accept\n";
                return 0;
            }
            std::cout << "Reject: input " << v.input.str() << " cannot converge to output "
                      << v.wanted_output << "\n";
            return 1;
        }
        if (reach->parsed()) {
            pp::Protocol p = load_protocol(protocol_path, normalize, strip);
            pp::ReachGraph g =
                pp::reachable_configs(p, pp::initial_configuration(p, input), limits);
            std::cout << "nodes: " << g.nodes.size() << "\n";
            return 0;
        }
        if (stable->parsed()) {
            pp::Protocol p = load_protocol(protocol_path, normalize, strip);
            pp::IdealDecomposition d = pp::stable_set_ideals(p, which[0], limits);
            emit(out_path, pp::decomposition_to_json(p, d));
            return 0;
        }
        if (pottier->parsed()) {
            pp::DiophSystem sys;
            if (!matrix_path.empty()) {
                sys = pp::matrix_from_json(pp::read_file(matrix_path));
            } else if (!protocol_path.empty()) {
                sys = pp::realisable_system(load_protocol(protocol_path, normalize, false));
            } else {
                std::cerr << "pottier needs --matrix or --protocol\n";
                return 2;
            }
            pp::HilbertBasis basis = pp::hilbert_basis(sys, limits);
            std::cout << "bound: " << pp::pottier_bound(sys).str() << "\n";
            for (const auto& el : basis.elements) {
                std::cout << "(";
                for (std::size_t i = 0; i < el.size(); ++i)
                    std::cout << (i ? "," : "") << el[i].str();
                std::cout << ")\n";
            }
            return 0;
        }
        if (saturate->parsed()) {
            pp::Protocol p = load_protocol(protocol_path, normalize, strip);
            pp::Saturation s = pp::saturation_sequence(p);
            std::cout << "j: " << s.j << "\nlength: " << s.sigma.size() << "\nresult:";
            for (std::size_t q = 0; q < p.state_count(); ++q)
                std::cout << " " << p.states[q] << "=" << s.result[q].str();
            std::cout << "\n";
            return 0;
        }
        if (certify->parsed()) {
            pp::Protocol p = load_protocol(protocol_path, normalize, strip);
            pp::Certificate cert = pp::build_leaderless_certificate(p, limits);
            emit(out_path, pp::certificate_to_json(p, cert));
            std::cerr << "a: " << cert.a.str() << "\n";
            return 0;
        }
        if (check->parsed()) {
            pp::Protocol p = load_protocol(protocol_path, normalize, strip);
            pp::Certificate cert = pp::certificate_from_json(p, pp::read_file(cert_path));
            pp::CheckResult res = pp::check_certificate(p, cert, limits);
            if (res.accepted) {
                std::cout << "Accept\n";
                return 0;
            }
            std::cout << "Reject: " << res.condition << "\n";
            return 1;
        }
        if (constants->parsed()) {
            pp::Protocol p = load_protocol(protocol_path, normalize, strip);
            pp::Constants c = pp::theoretical_constants(p);
            std::cout << "n: " << c.n << "\ntransitions: " << c.transition_count
                      << "\nxi: " << c.xi.str() << "\nbeta: 2^" << c.beta_exponent.str()
                      << "\ntheta: 2^" << c.theta_exponent.str()
                      << "\nfinal-bound-ok: " << (c.final_bound_ok ? "yes" : "no") << "\n";
            if (det_xi)
                std::cout << "xi-deterministic: " << pp::pottier_constant(p, true).str() << "\n";
            return 0;
        }
        if (bb->parsed()) {
            pp::BBReport report = pp::busy_beaver_search(n_states, limits, !nondet);
            std::cout << "n: " << report.n << "\nprotocols: " << report.table.size()
                      << "\ncomputes: " << report.computes
                      << "\nnon-threshold: " << report.non_threshold
                      << "\ndoes-not-compute: " << report.does_not_compute
                      << "\nundecided: " << report.undecided << "\n";
            if (report.best)
                std::cout << "best: " << report.best->second.str() << "\n";
            else
                std::cout << "best: none\n";
            return 0;
        }
    } catch (const pp::Error& e) {
        std::cerr << e.what() << "\n";
        if (e.code() == pp::ErrorCode::LimitExceeded) return 3;
        if (e.code() == pp::ErrorCode::NotFound) return 1;
        return 1;
    }
    return 2;
}
