#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "qdense/bell.hpp"
#include "qdense/dense_coding.hpp"
#include "qdense/protocol.hpp"
#include "qdense/serialize.hpp"
#include "qdense/tensor.hpp"
#include "qdense/transfer.hpp"

namespace {

using qdense::json;

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitVerificationFailed = 3;

constexpr const char* kSchemaVersion = "1";
constexpr double kFidelityGate = 1.0 - 1e-10;

struct Options {
    std::size_t p = 2;
    std::size_t q = 2;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    std::string mode = "deterministic";
    bool use_transfer = false;
    std::string format = "text";
};

void emit(const std::string& command, const json& parameters, const json& result,
          const std::string& text_body, const std::string& format) {
    if (format == "json") {
        json doc = {{"schema_version", kSchemaVersion},
                    {"command", command},
                    {"parameters", parameters},
                    {"result", result}};
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::cout << "schema_version: " << kSchemaVersion << "\n";
    std::cout << "command: " << command << "\n";
    for (const auto& [key, value] : parameters.items()) {
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
    }
    std::cout << text_body;
}

int cmd_basis(const Options& opt) {
    if (opt.p * opt.q > 1000) {
        throw std::invalid_argument("basis: p*q must be at most 1000");
    }
    const qdense::BellBasis basis = qdense::full_basis(opt.p, opt.q);

    json states = json::array();
    std::string text;
    for (std::size_t m = 0; m < opt.p; ++m) {
        for (std::size_t n = 0; n < opt.q; ++n) {
            const qdense::StateVector& state = basis.state(m, n);
            states.push_back({{"m", m}, {"n", n}, {"state", qdense::sparse_state_to_json(state)}});
            text += "|Psi_" + std::to_string(m) + std::to_string(n) +
                    "> = " + qdense::state_to_text(state) + "\n";
        }
    }
    emit("basis", {{"p", opt.p}, {"q", opt.q}}, {{"states", std::move(states)}}, text, opt.format);
    return kExitOk;
}

int cmd_encode(const Options& opt) {
    const qdense::UnitaryOperator unitary = qdense::encoding_unitary(opt.p, opt.q, opt.m, opt.n);
    const qdense::StateVector channel = qdense::channel_state(opt.p, opt.q);
    const qdense::StateVector encoded = qdense::encode(channel, {opt.m, opt.n});
    const qdense::cplx overlap = qdense::inner(channel, encoded);

    json result = {{"unitary", qdense::matrix_to_json(unitary.matrix())},
                   {"encoded_state", qdense::sparse_state_to_json(encoded)},
                   {"overlap_with_channel", qdense::complex_to_json(overlap)}};
    std::string text = "U_" + std::to_string(opt.m) + std::to_string(opt.n) + " =\n" +
                       qdense::matrix_to_text(unitary.matrix()) + "encoded state = " +
                       qdense::state_to_text(encoded) + "\noverlap with channel = " +
                       std::to_string(std::abs(overlap)) + "\n";
    emit("encode", {{"p", opt.p}, {"q", opt.q}, {"m", opt.m}, {"n", opt.n}}, result, text,
         opt.format);
    return kExitOk;
}

int cmd_transfer(const Options& opt) {
    const qdense::TransferReport report = qdense::run_transfer(opt.q, opt.p);
    json result = qdense::to_json(report);
    std::string text;
    if (opt.p * opt.q <= 36) {
        const auto [first, second] = qdense::transfer_unitaries(opt.q, opt.p);
        result["transfer_unitary_first"] = qdense::matrix_to_json(first.matrix());
        result["transfer_unitary_second"] = qdense::matrix_to_json(second.matrix());
        text += "U_13 =\n" + qdense::matrix_to_text(first.matrix());
        text += "U'_13 =\n" + qdense::matrix_to_text(second.matrix());
    }
    text += "initial state = " + qdense::state_to_text(report.initial_state) + "\n";
    text += "final state   = " + qdense::state_to_text(report.final_state) + "\n";
    text += "particle-1 purity   = " + std::to_string(report.particle1_purity) + "\n";
    text += "channel fidelity    = " + std::to_string(report.channel23_fidelity) + "\n";
    text += "capacity before     = " + std::to_string(report.capacity_before) + " bits\n";
    text += "capacity after      = " + std::to_string(report.capacity_after) + " bits\n";
    text += "capacity gain       = " +
            std::to_string(report.capacity_after - report.capacity_before) + " bits\n";
    emit("transfer", {{"q", opt.q}, {"p", opt.p}}, result, text, opt.format);

    if (report.channel23_fidelity < kFidelityGate) {
        std::cerr << "transfer verification failed: fidelity " << report.channel23_fidelity
                  << "\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int cmd_session(const Options& opt) {
    if (opt.mode != "deterministic" && opt.mode != "sampled") {
        throw std::invalid_argument("session: mode must be 'deterministic' or 'sampled'");
    }
    qdense::SessionConfig cfg;
    cfg.p = opt.p;
    cfg.q = opt.q;
    cfg.num_symbols = opt.count;
    cfg.seed = opt.seed;
    cfg.decode_mode = opt.mode == "deterministic" ? qdense::DecodeMode::kDeterministic
                                                  : qdense::DecodeMode::kSampled;
    cfg.use_transfer = opt.use_transfer;

    const qdense::SessionReport report = qdense::run_session(cfg);

    std::string text;
    text += "symbols sent        = " + std::to_string(cfg.num_symbols) + "\n";
    text += "errors              = " + std::to_string(report.error_count) + "\n";
    text += "empirical MI        = " + std::to_string(report.empirical_mutual_information) +
            " bits\n";
    text += "per-symbol capacity = " + std::to_string(report.per_symbol_bits) + " bits\n";
    if (report.pre_transfer_bits) {
        text += "pre-transfer bits   = " + std::to_string(*report.pre_transfer_bits) + "\n";
    }
    emit("session",
         {{"p", cfg.p},
          {"q", cfg.q},
          {"count", cfg.num_symbols},
          {"seed", cfg.seed},
          {"mode", opt.mode},
          {"use_transfer", cfg.use_transfer}},
         qdense::to_json(report, cfg), text, opt.format);

    if (cfg.decode_mode == qdense::DecodeMode::kDeterministic && report.error_count > 0) {
        std::cerr << "session verification failed: " << report.error_count
                  << " decoding errors in deterministic mode\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Qudit dense-coding simulator: generalized Bell bases, encoding unitaries, "
                 "entanglement transfer and protocol sessions."};
    app.require_subcommand(1);

    Options opt;

    auto add_dims = [&opt](CLI::App* cmd) {
        cmd->add_option("--p", opt.p, "sender particle dimension")->required();
        cmd->add_option("--q", opt.q, "receiver particle dimension")->required();
        cmd->add_option("--format", opt.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* basis = app.add_subcommand("basis", "dump the generalized Bell family");
    add_dims(basis);

    CLI::App* encode = app.add_subcommand("encode", "print U_mn and the encoded state");
    add_dims(encode);
    encode->add_option("--m", opt.m, "message shift index")->required();
    encode->add_option("--n", opt.n, "message phase index")->required();

    CLI::App* transfer =
        app.add_subcommand("transfer", "run the symmetric-to-non-symmetric channel transfer");
    add_dims(transfer);

    CLI::App* session = app.add_subcommand("session", "run an end-to-end coding session");
    add_dims(session);
    session->add_option("--count", opt.count, "number of symbols to send")->required();
    session->add_option("--seed", opt.seed, "session seed");
    session->add_option("--mode", opt.mode, "decode mode: deterministic|sampled")
        ->check(CLI::IsMember({"deterministic", "sampled"}));
    session->add_flag("--use-transfer", opt.use_transfer,
                      "start from a q x q channel and transfer it to p x q first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        if (basis->parsed()) return cmd_basis(opt);
        if (encode->parsed()) return cmd_encode(opt);
        if (transfer->parsed()) return cmd_transfer(opt);
        if (session->parsed()) return cmd_session(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    }
    return kExitBadArgs;
}
