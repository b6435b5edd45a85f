// xent: command-line front end for the X-state engine. Subcommands:
//   sweep           channel sweep over a p grid, CSV or JSON rows
//   esd             per-qubit negativity death report plus witness thresholds
//   verify          closed-form vs dense-reference property suite
//   counterexample  two-qubit state outside the generalized GHZ-diagonal set
//   membership      generalized GHZ-diagonal membership test
//
// Exit codes: 0 success, 1 verification failure, 2 input error (unreadable
// or invalid state/channel data), 3 configuration error (bad flags).

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xent/builtin_states.hpp"
#include "xent/channels.hpp"
#include "xent/concurrence.hpp"
#include "xent/esd.hpp"
#include "xent/json_io.hpp"
#include "xent/membership.hpp"
#include "xent/parallel.hpp"
#include "xent/sampling.hpp"
#include "xent/spectra.hpp"
#include "xent/verify.hpp"
#include "xent/xstate.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitConfigError = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

xent::XState load_state(const std::string& ref) {
    constexpr const char* kPrefix = "builtin:";
    if (ref.rfind(kPrefix, 0) == 0) {
        const std::string name = ref.substr(std::string(kPrefix).size());
        if (auto s = xent::builtin_state(name)) return *s;
        std::string known;
        for (const std::string& k : xent::builtin_state_names()) {
            if (!known.empty()) known += ", ";
            known += k;
        }
        throw xent::IoError("unknown builtin state \"" + name + "\" (known: " + known + ")");
    }
    return xent::read_state_json(ref);
}

xent::ChannelKind parse_channel(const std::string& name) {
    if (name == "dephasing") return xent::ChannelKind::dephasing;
    if (name == "depolarizing") return xent::ChannelKind::depolarizing;
    throw ConfigError("unknown channel \"" + name + "\" (use dephasing or depolarizing)");
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw xent::IoError("cannot open " + out_path + " for writing");
    out << content;
    if (!out) throw xent::IoError("cannot write " + out_path);
}

// ---------------------------------------------------------------- sweep ---

struct SweepOptions {
    std::string state_ref;
    std::string channel = "dephasing";
    double p_start = 0.0;
    double p_end = 1.0;
    int steps = 101;
    std::vector<std::string> metrics;
    int qubit = 0;  // 0: all qubits for pt-eigs
    std::string format = "csv";
    std::string out_path;
};

std::vector<std::string> canonical_metrics(const std::vector<std::string>& raw) {
    bool want[5] = {false, false, false, false, false};
    static const char* kNames[5] = {"pt-eigs", "negativity", "n3", "witness", "tau3"};
    std::vector<std::string> tokens;
    for (const std::string& entry : raw) {
        std::stringstream ss(entry);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) tokens.push_back(tok);
        }
    }
    if (tokens.empty()) tokens.push_back("negativity");
    for (const std::string& tok : tokens) {
        bool known = false;
        for (int i = 0; i < 5; ++i)
            if (tok == kNames[i]) {
                want[i] = true;
                known = true;
            }
        if (!known)
            throw ConfigError("unknown metric \"" + tok +
                              "\" (known: pt-eigs, negativity, n3, witness, tau3)");
    }
    std::vector<std::string> out;
    for (int i = 0; i < 5; ++i)
        if (want[i]) out.push_back(kNames[i]);
    return out;
}

std::vector<double> p_grid(double start, double end, int steps) {
    if (!(start >= 0.0 && end <= 1.0 && start <= end))
        throw ConfigError("p grid must satisfy 0 <= p-start <= p-end <= 1");
    if (steps < 1) throw ConfigError("steps must be at least 1");
    if (steps == 1) {
        if (start != end) throw ConfigError("steps = 1 requires p-start == p-end");
        return {start};
    }
    if (start == end) throw ConfigError("steps >= 2 requires p-start < p-end");
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        grid[std::size_t(i)] = start + double(i) * (end - start) / double(steps - 1);
    return grid;
}

xent::XState evolve(const xent::XState& s, xent::ChannelKind kind, double p) {
    if (kind == xent::ChannelKind::depolarizing && s.qubits() != 3) {
        if (s.qubits() > 6)
            throw ConfigError("depolarizing sweeps support at most 6 qubits");
        return xent::x_from_dense(
            xent::apply_kraus_dense(xent::to_dense(s), {kind, p}));
    }
    return xent::apply_channel(s, {kind, p});
}

int cmd_sweep(const SweepOptions& opt) {
    const xent::XState initial = load_state(opt.state_ref);
    const xent::ChannelKind kind = parse_channel(opt.channel);
    const std::vector<std::string> metrics = canonical_metrics(opt.metrics);
    const std::vector<double> grid = p_grid(opt.p_start, opt.p_end, opt.steps);
    const int n = initial.qubits();
    const std::size_t dim = initial.dim();

    if (opt.qubit < 0 || opt.qubit > n) throw ConfigError("--qubit out of range");
    for (const std::string& m : metrics)
        if ((m == "n3" || m == "witness" || m == "tau3") && n != 3)
            throw ConfigError("metric " + m + " requires a three-qubit state");

    std::vector<std::string> header{"p"};
    for (const std::string& m : metrics) {
        if (m == "pt-eigs") {
            if (opt.qubit >= 1) {
                for (std::size_t i = 1; i <= dim; ++i)
                    header.push_back("ptq" + std::to_string(opt.qubit) + "_ev" +
                                     std::to_string(i));
            } else {
                for (int q = 1; q <= n; ++q)
                    header.push_back("ptmin_q" + std::to_string(q));
            }
        } else if (m == "negativity") {
            for (int q = 1; q <= n; ++q) header.push_back("neg_q" + std::to_string(q));
            for (int q = 1; q <= n; ++q) header.push_back("negstd_q" + std::to_string(q));
        } else if (m == "n3") {
            header.push_back("n3");
        } else if (m == "witness") {
            for (int k = 1; k <= 4; ++k) header.push_back("wit_k" + std::to_string(k));
            header.push_back("wit_min");
            header.push_back("wit_kmin");
        } else {  // tau3
            header.push_back("tau3");
        }
    }

    std::vector<std::vector<double>> rows(grid.size());
    xent::parallel_for_index(grid.size(), [&](std::size_t i) {
        const double p = grid[i];
        const xent::XState ev = evolve(initial, kind, p);
        std::vector<double> row{p};
        for (const std::string& m : metrics) {
            if (m == "pt-eigs") {
                if (opt.qubit >= 1) {
                    const xent::PTSpectrum ps = xent::pt_spectrum(ev, opt.qubit);
                    row.insert(row.end(), ps.eigenvalues.begin(), ps.eigenvalues.end());
                } else {
                    for (int q = 1; q <= n; ++q)
                        row.push_back(xent::pt_spectrum(ev, q).min_eigenvalue);
                }
            } else if (m == "negativity") {
                for (int q = 1; q <= n; ++q)
                    row.push_back(xent::pt_spectrum(ev, q).min_eigenvalue);
                for (int q = 1; q <= n; ++q)
                    row.push_back(xent::standard_negativity(ev, q));
            } else if (m == "n3") {
                row.push_back(*xent::negativities(ev).tri_partite);
            } else if (m == "witness") {
                double best = 0.0;
                int best_k = 1;
                for (int k = 1; k <= 4; ++k) {
                    const double v = xent::witness_expectation(initial, k, {kind, p}).value;
                    row.push_back(v);
                    if (k == 1 || v < best) {
                        best = v;
                        best_k = k;
                    }
                }
                row.push_back(best);
                row.push_back(double(best_k));
            } else {  // tau3
                row.push_back(xent::concurrence_terms_x(ev).tau3);
            }
        }
        rows[i] = std::move(row);
    });

    std::string content;
    if (opt.format == "csv") {
        std::string text;
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (c) text += ',';
            text += header[c];
        }
        text += '\n';
        for (const std::vector<double>& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) text += ',';
                text += xent::format_number(row[c]);
            }
            text += '\n';
        }
        content = std::move(text);
    } else if (opt.format == "json") {
        json j;
        j["header"] = header;
        j["rows"] = rows;
        content = j.dump(2) + "\n";
    } else {
        throw ConfigError("unknown format \"" + opt.format + "\" (use csv or json)");
    }
    write_output(opt.out_path, content);
    return kExitOk;
}

// ------------------------------------------------------------------ esd ---

struct EsdOptions {
    std::string state_ref;
    std::string channel = "dephasing";
    std::string format = "text";
    std::string out_path;
};

int cmd_esd(const EsdOptions& opt) {
    const xent::XState s = load_state(opt.state_ref);
    const xent::ChannelKind kind = parse_channel(opt.channel);
    if (s.qubits() != 3)
        throw ConfigError("esd reports require a three-qubit state");

    std::vector<xent::EsdResult> results;
    for (int q = 1; q <= 3; ++q)
        results.push_back(kind == xent::ChannelKind::dephasing
                              ? xent::esd_dephasing(s, q)
                              : xent::esd_depolarizing(s, q));

    std::vector<xent::WitnessThreshold> thresholds;
    for (int k = 1; k <= 4; ++k)
        thresholds.push_back(kind == xent::ChannelKind::dephasing
                                 ? xent::witness_threshold_dephasing(s, k)
                                 : xent::witness_threshold_depolarizing(s, k));

    bool any_negative = false;
    for (const xent::EsdResult& r : results) any_negative = any_negative || r.negative_at_zero;

    std::string content;
    if (opt.format == "json") {
        json j;
        j["channel"] = opt.channel;
        j["entangled_at_zero"] = any_negative;
        json qubits = json::array();
        for (const xent::EsdResult& r : results) {
            json q;
            q["qubit"] = r.qubit;
            q["negative_at_zero"] = r.negative_at_zero;
            q["crossings"] = r.crossings;
            if (r.dies_at)
                q["dies_at"] = *r.dies_at;
            else
                q["dies_at"] = nullptr;  // stays negative up to p = 1
            qubits.push_back(std::move(q));
        }
        j["qubits"] = std::move(qubits);
        json wit = json::array();
        for (std::size_t k = 0; k < thresholds.size(); ++k) {
            json w;
            w["k"] = int(k) + 1;
            if (thresholds[k].p)
                w["p"] = *thresholds[k].p;
            else
                w["p"] = nullptr;  // expectation never negative
            w["clamped"] = thresholds[k].clamped;
            wit.push_back(std::move(w));
        }
        j["witness_thresholds"] = std::move(wit);
        content = j.dump(2) + "\n";
    } else {
        std::ostringstream text;
        text << "channel: " << opt.channel << "\n";
        if (!any_negative)
            text << "not entangled (by negativity) at p=0\n";
        for (const xent::EsdResult& r : results) {
            text << "qubit " << r.qubit << ": negative at p=0: "
                 << (r.negative_at_zero ? "yes" : "no") << "; crossings:";
            if (r.crossings.empty()) text << " none";
            for (double c : r.crossings) text << " " << xent::format_number(c);
            text << "; dies at: ";
            if (!r.dies_at)
                text << "never";
            else
                text << xent::format_number(*r.dies_at);
            text << "\n";
        }
        for (std::size_t k = 0; k < thresholds.size(); ++k) {
            text << "witness k=" << (k + 1) << ": threshold p = ";
            if (thresholds[k].p)
                text << xent::format_number(*thresholds[k].p)
                     << (thresholds[k].clamped ? " (clamped)" : "");
            else
                text << "none (expectation nonnegative at p=0)";
            text << "\n";
        }
        content = text.str();
    }
    write_output(opt.out_path, content);
    return kExitOk;
}

// --------------------------------------------------------------- verify ---

struct VerifyOptions {
    std::uint64_t seed = 42;
    int trials = 100;
    std::string format = "text";
    std::string out_path;
};

int cmd_verify(const VerifyOptions& opt) {
    if (opt.trials < 0) throw ConfigError("--trials must be nonnegative");
    const xent::VerifyReport report = xent::run_verification(opt.seed, opt.trials);

    std::string content;
    if (opt.format == "json") {
        json j;
        j["seed"] = opt.seed;
        j["trials"] = report.trials;
        j["ok"] = report.ok();
        json props = json::array();
        for (const xent::PropertyResult& p : report.properties) {
            json e;
            e["name"] = p.name;
            e["max_residual"] = p.max_residual;
            e["tolerance"] = p.tolerance;
            e["pass"] = p.pass;
            props.push_back(std::move(e));
        }
        j["properties"] = std::move(props);
        content = j.dump(2) + "\n";
    } else {
        std::ostringstream text;
        text << "trials: " << report.trials << " (seed " << opt.seed << ")\n";
        for (const xent::PropertyResult& p : report.properties) {
            text << (p.pass ? "PASS" : "FAIL") << "  " << p.name
                 << ": max residual " << xent::format_number(p.max_residual)
                 << " (tolerance " << xent::format_number(p.tolerance) << ")\n";
        }
        text << (report.ok() ? "all properties passed\n" : "failures detected\n");
        content = text.str();
    }
    write_output(opt.out_path, content);
    return report.ok() ? kExitOk : kExitVerifyFailure;
}

// ------------------------------------------------- counterexample ---------

struct CounterexampleOptions {
    double a1 = 1.0 / 3.0;
    double a2 = 1.0 / 3.0;
    double b2 = 1.0 / 3.0;
    double r = 0.25;
    double phi = std::numbers::pi / 4.0;
    std::string format = "text";
    std::string out_path;
};

json membership_json(const xent::MembershipReport& rep) {
    json j;
    switch (rep.status) {
        case xent::MembershipStatus::member_by_construction: j["status"] = "member"; break;
        case xent::MembershipStatus::excluded: j["status"] = "excluded"; break;
        case xent::MembershipStatus::undecided: j["status"] = "undecided"; break;
    }
    j["violated_conditions"] = rep.violated_conditions;
    j["note"] = rep.note;
    if (rep.witness) {
        json w;
        w["alpha"] = {rep.witness->alpha.real(), rep.witness->alpha.imag()};
        w["beta"] = {rep.witness->beta.real(), rep.witness->beta.imag()};
        w["lambda_plus"] = rep.witness->lambda_plus;
        w["lambda_minus"] = rep.witness->lambda_minus;
        j["witness"] = std::move(w);
    }
    return j;
}

std::string membership_text(const xent::MembershipReport& rep) {
    std::ostringstream text;
    switch (rep.status) {
        case xent::MembershipStatus::member_by_construction:
            text << "generalized GHZ-diagonal: yes (explicit construction found)\n";
            break;
        case xent::MembershipStatus::excluded: {
            text << "generalized GHZ-diagonal: NO";
            if (!rep.violated_conditions.empty()) {
                text << "; conditions";
                for (int c : rep.violated_conditions) text << " " << c;
                text << " violated";
            }
            text << "\n";
            break;
        }
        case xent::MembershipStatus::undecided:
            text << "generalized GHZ-diagonal: undecided\n";
            break;
    }
    if (!rep.note.empty()) text << "note: " << rep.note << "\n";
    return text.str();
}

int cmd_counterexample(const CounterexampleOptions& opt) {
    xent::XState s = [&] {
        try {
            return xent::counterexample_state(opt.a1, opt.a2, opt.b2, opt.r, opt.phi);
        } catch (const std::invalid_argument& ex) {
            throw ConfigError(ex.what());
        }
    }();

    const xent::ValidationReport validation = xent::validate(s);
    const xent::MembershipReport membership = xent::is_generalized_ghz_diagonal(s);

    std::string content;
    if (opt.format == "json") {
        json j;
        j["parameters"] = {{"a1", opt.a1}, {"a2", opt.a2}, {"b2", opt.b2},
                           {"r", opt.r},   {"phi", opt.phi}};
        j["valid_state"] = validation.ok();
        j["validation_max_residual"] = validation.max_residual();
        j["membership"] = membership_json(membership);
        content = j.dump(2) + "\n";
    } else {
        std::ostringstream text;
        text << "state: diag(" << xent::format_number(opt.a1) << ", "
             << xent::format_number(opt.a2) << ", " << xent::format_number(opt.b2)
             << ", 0) with inner coherence r=" << xent::format_number(opt.r)
             << " phi=" << xent::format_number(opt.phi) << "\n";
        text << "valid X-state: " << (validation.ok() ? "yes" : "no") << "\n";
        text << membership_text(membership);
        content = text.str();
    }
    write_output(opt.out_path, content);
    return kExitOk;
}

// ----------------------------------------------------------- membership ---

struct MembershipOptions {
    std::string state_ref;
    std::string format = "text";
    std::string out_path;
};

int cmd_membership(const MembershipOptions& opt) {
    const xent::XState s = load_state(opt.state_ref);
    const xent::MembershipReport rep = [&] {
        try {
            return xent::is_generalized_ghz_diagonal(s);
        } catch (const std::invalid_argument& ex) {
            throw xent::IoError(ex.what());
        }
    }();

    std::string content;
    if (opt.format == "json")
        content = membership_json(rep).dump(2) + "\n";
    else
        content = membership_text(rep);
    write_output(opt.out_path, content);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form engine for n-qubit X-state entanglement dynamics"};
    app.require_subcommand(1);

    SweepOptions sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Evaluate metrics over a channel-strength grid");
    sweep_cmd->add_option("--state", sweep.state_ref, "State file or builtin:NAME")->required();
    sweep_cmd->add_option("--channel", sweep.channel, "dephasing or depolarizing");
    sweep_cmd->add_option("--p-start", sweep.p_start, "Grid start (default 0)");
    sweep_cmd->add_option("--p-end", sweep.p_end, "Grid end (default 1)");
    sweep_cmd->add_option("--steps", sweep.steps, "Grid points (default 101)");
    sweep_cmd->add_option("--metrics", sweep.metrics,
                          "Comma-separated subset of pt-eigs,negativity,n3,witness,tau3");
    sweep_cmd->add_option("--qubit", sweep.qubit, "Qubit for pt-eigs (default: all qubits)");
    sweep_cmd->add_option("--format", sweep.format, "csv or json");
    sweep_cmd->add_option("--out", sweep.out_path, "Output path (default stdout)");

    EsdOptions esd;
    CLI::App* esd_cmd = app.add_subcommand("esd", "Report negativity death points and witness thresholds");
    esd_cmd->add_option("--state", esd.state_ref, "State file or builtin:NAME")->required();
    esd_cmd->add_option("--channel", esd.channel, "dephasing or depolarizing");
    esd_cmd->add_option("--format", esd.format, "text (default) or json");
    esd_cmd->add_option("--out", esd.out_path, "Output path (default stdout)");

    VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Cross-check closed forms against the dense reference");
    verify_cmd->add_option("--seed", verify.seed, "Random seed (default 42)");
    verify_cmd->add_option("--trials", verify.trials, "Number of random states (default 100)");
    verify_cmd->add_option("--format", verify.format, "text (default) or json");
    verify_cmd->add_option("--out", verify.out_path, "Output path (default stdout)");

    CounterexampleOptions cex;
    CLI::App* cex_cmd = app.add_subcommand(
        "counterexample", "Valid X-state that is not a generalized GHZ-diagonal mixture");
    cex_cmd->add_option("--a1", cex.a1, "Outer-block population (default 1/3)");
    cex_cmd->add_option("--a2", cex.a2, "Inner-block population (default 1/3)");
    cex_cmd->add_option("--b2", cex.b2, "Inner-block partner population (default 1/3)");
    cex_cmd->add_option("--r", cex.r, "Inner coherence magnitude (default 1/4)");
    cex_cmd->add_option("--phi", cex.phi, "Inner coherence phase (default pi/4)");
    cex_cmd->add_option("--format", cex.format, "text (default) or json");
    cex_cmd->add_option("--out", cex.out_path, "Output path (default stdout)");

    MembershipOptions member;
    CLI::App* member_cmd = app.add_subcommand("membership", "Generalized GHZ-diagonal membership test");
    member_cmd->add_option("--state", member.state_ref, "State file or builtin:NAME")->required();
    member_cmd->add_option("--format", member.format, "text (default) or json");
    member_cmd->add_option("--out", member.out_path, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitConfigError;
    }

    try {
        if (sweep_cmd->parsed()) return cmd_sweep(sweep);
        if (esd_cmd->parsed()) return cmd_esd(esd);
        if (verify_cmd->parsed()) return cmd_verify(verify);
        if (cex_cmd->parsed()) return cmd_counterexample(cex);
        if (member_cmd->parsed()) return cmd_membership(member);
        std::cerr << "no subcommand selected\n";
        return kExitConfigError;
    } catch (const ConfigError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitConfigError;
    } catch (const xent::IoError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return kExitVerifyFailure;
    }
}
