#include "sigloc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sigloc/catalog.hpp"
#include "sigloc/io.hpp"
#include "sigloc/localization.hpp"
#include "sigloc/twisted.hpp"

namespace sigloc::cli {

namespace {

using nlohmann::json;

int load_manifold(const std::string& path, std::ostream& err, std::optional<ManifoldData>& out) {
    std::ifstream in(path);
    if (!in) {
        err << "cannot open file: " << path << "\n";
        return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    ParseResult parsed = parse_manifold(buffer.str());
    if (!parsed.ok()) {
        for (const auto& issue : parsed.issues) err << "error: " << issue.str() << "\n";
        return kExitUsage;
    }
    out = std::move(parsed.data);
    return kExitOk;
}

EvalMode resolve_mode(const std::string& mode_name, const ManifoldData& data, std::ostream& err,
                      int& exit_code) {
    if (mode_name == "symbolic") return EvalMode::symbolic();
    if (mode_name == "zero") return EvalMode::at_zero();
    // mode "xi": needs the prime certificate of this manifold.
    const PrimeDecision decision = prime_check(data);
    if (!decision.is_prime()) {
        err << "mode xi requires a prime action; refusal witness:";
        for (int w : decision.witness) err << " " << w;
        err << "\n";
        exit_code = kExitCheckFailed;
        return EvalMode::symbolic();
    }
    return EvalMode::at_xi(*decision.certificate);
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "cannot open file: " << path << "\n";
        return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    ParseResult parsed = parse_manifold(buffer.str());
    if (!parsed.ok()) {
        for (const auto& issue : parsed.issues) out << "violation: " << issue.str() << "\n";
        return kExitUsage;
    }
    out << "ok: " << parsed.data->name << " (dim " << parsed.data->dim << ", "
        << parsed.data->components.size() << " components)\n";
    return kExitOk;
}

int cmd_signature(const std::string& path, const std::string& mode_name,
                  const std::string& format, std::ostream& out, std::ostream& err) {
    std::optional<ManifoldData> data;
    if (int rc = load_manifold(path, err, data); rc != kExitOk) return rc;
    int exit_code = kExitOk;
    const EvalMode mode = resolve_mode(mode_name, *data, err, exit_code);
    if (exit_code != kExitOk) return exit_code;

    const LocalizationReport report = equivariant_signature(*data, mode);
    if (format == "json")
        out << report_to_json(report, data->name).dump(2) << "\n";
    else
        out << report_to_text(report);
    if (mode.kind == EvalMode::Kind::Symbolic && !report.constant) return kExitCheckFailed;
    return kExitOk;
}

int cmd_prime(const std::string& path, const std::string& format, std::ostream& out,
              std::ostream& err) {
    std::optional<ManifoldData> data;
    if (int rc = load_manifold(path, err, data); rc != kExitOk) return rc;
    const PrimeDecision decision = prime_check(*data);
    if (format == "json")
        out << report_to_json(decision, data->name).dump(2) << "\n";
    else
        out << report_to_text(decision);
    return kExitOk;  // a completed decision is a success either way
}

int cmd_twisted(const std::string& path, int q_order, const std::string& mode_name,
                const std::string& format, std::ostream& out, std::ostream& err) {
    std::optional<ManifoldData> data;
    if (int rc = load_manifold(path, err, data); rc != kExitOk) return rc;
    int exit_code = kExitOk;
    const EvalMode mode = resolve_mode(mode_name, *data, err, exit_code);
    if (exit_code != kExitOk) return exit_code;

    const TwistedSeriesReport report = twisted_signature_series(*data, q_order, mode);
    if (format == "json")
        out << report_to_json(report, data->name).dump(2) << "\n";
    else
        out << report_to_text(report);
    return kExitOk;
}

int cmd_verify(const std::string& path, int q_order, const std::string& format, std::ostream& out,
               std::ostream& err) {
    std::optional<ManifoldData> data;
    if (int rc = load_manifold(path, err, data); rc != kExitOk) return rc;

    bool all_ok = true;
    json checks = json::array();
    std::ostringstream text;

    // Symbolic rigidity and mode coherence.
    const auto symbolic = equivariant_signature(*data, EvalMode::symbolic());
    all_ok = all_ok && symbolic.constant;
    text << "rigid: " << (symbolic.constant ? "true" : "false") << " (total "
         << symbolic.total.str() << ")\n";
    checks.push_back({{"name", "rigid"}, {"pass", symbolic.constant}, {"total", symbolic.total.str()}});

    const auto at_zero = equivariant_signature(*data, EvalMode::at_zero());
    const bool zero_coherent = !symbolic.constant || at_zero.total == symbolic.total;
    all_ok = all_ok && zero_coherent;
    text << "g->0 limit equals constant: " << (zero_coherent ? "true" : "false") << "\n";
    checks.push_back({{"name", "mode_coherence_zero"}, {"pass", zero_coherent}});

    const PrimeDecision prime = prime_check(*data);
    checks.push_back(report_to_json(prime, data->name));
    text << report_to_text(prime);
    if (prime.is_prime()) {
        const auto at_xi = equivariant_signature(*data, EvalMode::at_xi(*prime.certificate));
        const bool xi_coherent = !symbolic.constant || at_xi.total == symbolic.total;
        all_ok = all_ok && xi_coherent;
        text << "substitution at xi equals constant: " << (xi_coherent ? "true" : "false") << "\n";
        checks.push_back({{"name", "mode_coherence_xi"}, {"pass", xi_coherent}});
    }

    if (data->dim % 4 == 0) {
        const auto verdict = theorem_1_4_check(*data);
        all_ok = all_ok && !verdict.hard_failure;
        text << report_to_text(verdict);
        json v = report_to_json(verdict);
        v["name"] = "signature_vanishing";
        checks.push_back(std::move(v));
    }

    const auto twisted_verdict = theorem_1_6_check(*data, q_order);
    all_ok = all_ok && !twisted_verdict.hard_failure;
    text << report_to_text(twisted_verdict);
    {
        json v = report_to_json(twisted_verdict);
        v["name"] = "twisted_vanishing";
        checks.push_back(std::move(v));
    }

    // Expected-value comparison when the file carries a golden block.
    if (data->expected) {
        const auto& expected = *data->expected;
        if (expected.signature) {
            const bool match =
                symbolic.constant && *symbolic.constant_value == *expected.signature;
            all_ok = all_ok && match;
            text << "expected signature " << expected.signature->str() << ": "
                 << (match ? "match" : "MISMATCH") << "\n";
            checks.push_back({{"name", "expected_signature"}, {"pass", match}});
        }
        if (expected.prime) {
            const bool want_prime = expected.prime->status != "refused";
            bool match = prime.is_prime() == want_prime;
            if (match && want_prime && expected.prime->t)
                match = prime.certificate->t == *expected.prime->t;
            if (match && !want_prime && !expected.prime->witness.empty())
                match = prime.witness == expected.prime->witness;
            all_ok = all_ok && match;
            text << "expected prime status: " << (match ? "match" : "MISMATCH") << "\n";
            checks.push_back({{"name", "expected_prime"}, {"pass", match}});
        }
    }

    if (format == "json") {
        json root;
        root["schema_version"] = kReportSchemaVersion;
        root["command"] = "verify";
        root["manifold"] = data->name;
        root["checks"] = std::move(checks);
        root["pass"] = all_ok;
        out << root.dump(2) << "\n";
    } else {
        out << text.str();
        out << (all_ok ? "verify: all checks passed\n" : "verify: FAILED\n");
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_catalog(const std::string& action, const std::string& name, const std::string& out_path,
                const std::string& format, std::ostream& out, std::ostream& err) {
    if (action == "list") {
        for (const auto& entry : catalog_entries())
            out << entry.data.name << "  (dim " << entry.data.dim << ", "
                << entry.data.components.size() << " components)\n";
        return kExitOk;
    }
    if (action == "run") {
        CatalogReport report;
        try {
            report = run_catalog(name.empty() ? std::nullopt : std::optional<std::string>(name));
        } catch (const std::invalid_argument& e) {
            err << e.what() << "\n";
            return kExitUsage;
        }
        if (format == "json")
            out << report_to_json(report).dump(2) << "\n";
        else
            out << report_to_text(report);
        return report.all_pass() ? kExitOk : kExitCheckFailed;
    }
    if (action == "export") {
        const CatalogEntry* entry = find_catalog_entry(name);
        if (entry == nullptr) {
            err << "unknown catalog entry \"" << name << "\"\n";
            return kExitUsage;
        }
        const std::string text = serialize_manifold(entry->data, /*include_expected=*/true);
        if (out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(out_path);
            if (!file) {
                err << "cannot write file: " << out_path << "\n";
                return kExitUsage;
            }
            file << text;
        }
        return kExitOk;
    }
    err << "unknown catalog action \"" << action << "\" (expected list, run, or export)\n";
    return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact localization engine for circle-action fixed-point data"};
    app.require_subcommand(1);

    std::string file;
    std::string mode = "symbolic";
    std::string format = "text";
    int q_order = 3;
    std::string catalog_action;
    std::string catalog_name;
    std::string out_path;

    auto* validate_cmd = app.add_subcommand("validate", "check a manifold description file");
    validate_cmd->add_option("file", file, "manifold description (JSON)")->required();

    auto* signature_cmd =
        app.add_subcommand("signature", "equivariant signature from fixed-point data");
    signature_cmd->add_option("file", file)->required();
    signature_cmd->add_option("--mode", mode)->check(CLI::IsMember({"symbolic", "zero", "xi"}));
    signature_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* prime_cmd = app.add_subcommand("prime", "decide whether the action is prime");
    prime_cmd->add_option("file", file)->required();
    prime_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* twisted_cmd = app.add_subcommand("twisted", "twisted signature q-series");
    twisted_cmd->add_option("file", file)->required();
    twisted_cmd->add_option("--q-order", q_order)->check(CLI::Range(0, 16));
    twisted_cmd->add_option("--mode", mode)->check(CLI::IsMember({"symbolic", "xi"}));
    twisted_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd =
        app.add_subcommand("verify", "run vanishing checks and coherence invariants");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_option("--q-order", q_order)->check(CLI::Range(0, 16));
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* catalog_cmd = app.add_subcommand("catalog", "built-in example manifolds");
    catalog_cmd->add_option("action", catalog_action, "list | run | export")->required();
    catalog_cmd->add_option("name", catalog_name, "entry name");
    catalog_cmd->add_option("--out", out_path, "write exported entry to a file");
    catalog_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // drop program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(validate_cmd)) return cmd_validate(file, out, err);
        if (app.got_subcommand(signature_cmd)) return cmd_signature(file, mode, format, out, err);
        if (app.got_subcommand(prime_cmd)) return cmd_prime(file, format, out, err);
        if (app.got_subcommand(twisted_cmd)) return cmd_twisted(file, q_order, mode, format, out, err);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(file, q_order, format, out, err);
        if (app.got_subcommand(catalog_cmd))
            return cmd_catalog(catalog_action, catalog_name, out_path, format, out, err);
    } catch (const ModeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    err << "no subcommand\n";
    return kExitUsage;
}

}  // namespace sigloc::cli
