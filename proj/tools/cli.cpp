#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qmac/channel.hpp"
#include "qmac/decode.hpp"
#include "qmac/error.hpp"
#include "qmac/region.hpp"
#include "qmac/rm.hpp"

namespace qmac::cli {

namespace {

using nlohmann::ordered_json;

std::string single_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

// Reals in machine-readable outputs carry 9 significant digits with a '.'
// separator regardless of locale.
std::string fmt9(double v) {
    char buf[48];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
    return {buf, res.ptr};
}

// Optional QMAC_THREADS cap: unset -> pick automatically, unparsable -> serial.
unsigned env_threads() {
    const char* s = std::getenv("QMAC_THREADS");
    if (!s || !*s) return 0;
    char* end = nullptr;
    const unsigned long v = std::strtoul(s, &end, 10);
    if (end == s || *end != '\0' || v == 0) return 1;
    return v > 256 ? 256u : static_cast<unsigned>(v);
}

void write_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream f(path);
    if (!f) raise(ErrorKind::IoError, "cannot open output file: " + path);
    f << "p_x,p_y,p_z,joint,successive,hashing_margin\n";
    for (const SweepRow& r : rows)
        f << fmt9(r.p_x) << ',' << fmt9(r.p_y) << ',' << fmt9(r.p_z) << ','
          << (r.joint ? '1' : '0') << ',' << (r.successive ? '1' : '0') << ','
          << fmt9(r.hashing_margin) << '\n';
    f.flush();
    if (!f) raise(ErrorKind::IoError, "failed while writing: " + path);
}

void emit_json(const ordered_json& j, const std::string& out_path,
               std::ostream& out) {
    if (out_path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) raise(ErrorKind::IoError, "cannot open output file: " + out_path);
    f << j.dump(2) << "\n";
    f.flush();
    if (!f) raise(ErrorKind::IoError, "failed while writing: " + out_path);
}

DecoderKind parse_decoder(const std::string& name) {
    if (name == "joint") return DecoderKind::Joint;
    if (name == "succ-x") return DecoderKind::SuccessiveX;
    if (name == "succ-z") return DecoderKind::SuccessiveZ;
    return DecoderKind::SuccessiveXor;
}

ordered_json report_json(const SimReport& rep) {
    ordered_json j;
    j["decoder"] = decoder_name(rep.decoder_id);
    j["trials"] = rep.trials;
    j["failures"] = rep.failures;
    j["error_rate"] = rep.error_rate;
    j["ci_low"] = rep.ci_low;
    j["ci_high"] = rep.ci_high;
    j["seed"] = rep.seed;
    return j;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reed-Muller code pairs over two-user Pauli channels"};
    app.name("qmac");
    app.require_subcommand(1);

    // info
    auto* info = app.add_subcommand(
        "info", "Entropy, mutual-information, and induced-channel figures");
    double i_px = 0, i_py = 0, i_pz = 0, i_pi = 0;
    info->add_option("--px", i_px, "X-error probability")->required();
    info->add_option("--py", i_py, "Y-error probability")->required();
    info->add_option("--pz", i_pz, "Z-error probability")->required();
    auto* i_pi_opt =
        info->add_option("--pi", i_pi, "identity probability (default 1-px-py-pz)");

    // code
    auto* code = app.add_subcommand("code", "Parameters of one RM(r,m) code");
    int c_r = 0, c_m = 0;
    code->add_option("--r", c_r, "code order r")->required();
    code->add_option("--m", c_m, "number of variables m")->required();

    // css-check
    auto* css = app.add_subcommand(
        "css-check", "Validity and size of the CSS pair RM(rx,m)/RM(rz,m)");
    int q_rx = 0, q_rz = 0, q_m = 0;
    css->add_option("--rx", q_rx, "X-code order")->required();
    css->add_option("--rz", q_rz, "Z-code order")->required();
    css->add_option("--m", q_m, "number of variables m")->required();

    // region
    auto* region = app.add_subcommand(
        "region", "Sweep the (p_x,p_y,p_z) grid and write decodability CSV");
    double g_r1 = 0, g_r2 = 0, g_pmax = 0.05, g_step = 0.0025, g_delta = 0.0;
    std::string g_mode = "both", g_out;
    region->add_option("--r1", g_r1, "rate of user 1")->required();
    region->add_option("--r2", g_r2, "rate of user 2")->required();
    region->add_option("--pmax", g_pmax, "grid upper endpoint")->capture_default_str();
    region->add_option("--step", g_step, "grid step")->capture_default_str();
    region->add_option("--delta", g_delta, "achievability margin threshold")->capture_default_str();
    region->add_option("--mode", g_mode, "row filter: joint|successive|both")->capture_default_str()
        ->check(CLI::IsMember({"joint", "successive", "both"}));
    region->add_option("--out", g_out, "output CSV path")->required();

    // cross-section
    auto* cross = app.add_subcommand(
        "cross-section", "Sweep the p_x=p_y plane and write decodability CSV");
    double x_r1 = 0, x_r2 = 0, x_pmax = 0.05, x_step = 0.0025, x_delta = 0.0;
    std::string x_out;
    cross->add_option("--r1", x_r1, "rate of user 1")->required();
    cross->add_option("--r2", x_r2, "rate of user 2")->required();
    cross->add_option("--pmax", x_pmax, "grid upper endpoint")->capture_default_str();
    cross->add_option("--step", x_step, "grid step")->capture_default_str();
    cross->add_option("--delta", x_delta, "achievability margin threshold")->capture_default_str();
    cross->add_option("--out", x_out, "output CSV path")->required();

    // simulate
    auto* sim = app.add_subcommand(
        "simulate", "Monte Carlo block-error estimate for one decoder");
    int s_r1 = 0, s_r2 = 0, s_m = 0;
    double s_px = 0, s_py = 0, s_pz = 0;
    std::string s_decoder, s_out;
    std::uint64_t s_trials = 0, s_seed = 0;
    sim->add_option("--r1", s_r1, "order of code 1")->required();
    sim->add_option("--r2", s_r2, "order of code 2")->required();
    sim->add_option("--m", s_m, "number of variables m")->required();
    sim->add_option("--px", s_px, "X-error probability")->required();
    sim->add_option("--py", s_py, "Y-error probability")->required();
    sim->add_option("--pz", s_pz, "Z-error probability")->required();
    sim->add_option("--decoder", s_decoder, "joint|succ-x|succ-z|succ-xor")
        ->required()
        ->check(CLI::IsMember({"joint", "succ-x", "succ-z", "succ-xor"}));
    sim->add_option("--trials", s_trials, "number of trials")->required();
    sim->add_option("--seed", s_seed, "random seed")->capture_default_str();
    sim->add_option("--out", s_out, "write the JSON report here instead of stdout");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));

        if (info->parsed()) {
            const PauliChannel ch =
                i_pi_opt->count() ? make_channel(i_px, i_py, i_pz, i_pi)
                                  : make_channel(i_px, i_py, i_pz);
            const InducedChannels ind = induced_channels(ch);
            ordered_json j;
            j["p_i"] = ch.p_i;
            j["p_x"] = ch.p_x;
            j["p_y"] = ch.p_y;
            j["p_z"] = ch.p_z;
            j["entropy"] = entropy4(ch);
            j["hashing_bound"] = hashing_bound(ch);
            j["mi_sum"] = mi_sum(ch);
            j["mi_user1"] = mi_single(ch, MiTarget::User1);
            j["mi_user2"] = mi_single(ch, MiTarget::User2);
            j["mi_xor"] = mi_single(ch, MiTarget::Xor);
            j["wx_crossover"] = ind.wx_crossover;
            j["wz_branches"] =
                ordered_json{{"flag_probability", ind.wz_flag_probability},
                             {"flagged", ind.wz_flagged_crossover},
                             {"unflagged", ind.wz_unflagged_crossover}};
            emit_json(j, "", out);
        } else if (code->parsed()) {
            const RmCode c = build_rm(c_r, c_m);
            ordered_json j;
            j["n"] = c.n;
            j["k"] = c.k;
            j["rate"] = c.rate();
            j["dual_r"] = c_m - c_r - 1;
            j["self_dual"] = c_m - c_r - 1 == c_r;
            emit_json(j, "", out);
        } else if (css->parsed()) {
            const CssPair p = make_css_pair(q_rx, q_rz, q_m);
            ordered_json j;
            j["valid"] = p.valid;
            j["logical_qubits"] = p.logical_qubits;
            j["rate"] = static_cast<double>(p.logical_qubits) /
                        static_cast<double>(p.code_x.n);
            emit_json(j, "", out);
        } else if (region->parsed()) {
            const RatePair rp = make_rate_pair(g_r1, g_r2);
            std::vector<SweepRow> rows = sweep_grid(rp, g_pmax, g_step, g_delta);
            if (g_mode != "both") {
                const bool want_joint = g_mode == "joint";
                std::erase_if(rows, [&](const SweepRow& r) {
                    return want_joint ? !r.joint : !r.successive;
                });
            }
            write_csv(rows, g_out);
        } else if (cross->parsed()) {
            const RatePair rp = make_rate_pair(x_r1, x_r2);
            write_csv(cross_section(rp, x_pmax, x_step, x_delta), x_out);
        } else if (sim->parsed()) {
            const RmCode c1 = build_rm(s_r1, s_m);
            const RmCode c2 = build_rm(s_r2, s_m);
            const PauliChannel ch = make_channel(s_px, s_py, s_pz);
            const SimReport rep =
                monte_carlo(c1, c2, ch, parse_decoder(s_decoder), s_trials,
                            s_seed, env_threads());
            emit_json(report_json(rep), s_out, out);
        }
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << single_line(e.what()) << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << error_kind_name(e.kind()) << ": " << e.what()
            << "\n";
        return 3;
    }
}

} // namespace qmac::cli
