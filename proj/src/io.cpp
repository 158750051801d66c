#include "sigloc/io.hpp"

#include <sstream>

namespace sigloc {

using nlohmann::json;

namespace {

struct Collector {
    std::vector<ParseIssue>& issues;
    void add(const std::string& path, const std::string& message) {
        issues.push_back({path, message});
    }
};

std::optional<Rational> read_rational(const json& j, const std::string& path, Collector& issues) {
    if (!j.is_string()) {
        issues.add(path, "rationals are decimal strings \"p/q\" or \"p\"");
        return std::nullopt;
    }
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        issues.add(path, e.what());
        return std::nullopt;
    }
}

std::optional<CohClass<Rational>> read_linear_expression(const json& j, const RingPtr& ring,
                                                         const std::string& path,
                                                         Collector& issues) {
    if (!j.is_array()) {
        issues.add(path, "linear expressions are arrays of {generator, coefficient}");
        return std::nullopt;
    }
    CohClass<Rational> result(ring);
    bool ok = true;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& term = j[i];
        const std::string term_path = path + "[" + std::to_string(i) + "]";
        if (!term.is_object() || !term.contains("generator") || !term.contains("coefficient") ||
            !term["generator"].is_string()) {
            issues.add(term_path, "expected {\"generator\": name, \"coefficient\": \"p/q\"}");
            ok = false;
            continue;
        }
        const std::string gen_name = term["generator"].get<std::string>();
        std::size_t index = ring->generator_count();
        for (std::size_t k = 0; k < ring->generator_count(); ++k)
            if (ring->generators()[k].name == gen_name) index = k;
        if (index == ring->generator_count()) {
            issues.add(term_path, "unknown generator \"" + gen_name + "\"");
            ok = false;
            continue;
        }
        if (ring->generators()[index].degree != 2) {
            issues.add(term_path, "generator \"" + gen_name + "\" does not have degree 2");
            ok = false;
            continue;
        }
        auto coeff = read_rational(term["coefficient"], term_path + ".coefficient", issues);
        if (!coeff) {
            ok = false;
            continue;
        }
        result = result + CohClass<Rational>::generator(ring, index) * *coeff;
    }
    if (!ok) return std::nullopt;
    return result;
}

std::optional<FixedComponent> read_component(const json& j, const std::string& path,
                                             Collector& issues) {
    FixedComponent comp;
    if (!j.is_object()) {
        issues.add(path, "component must be an object");
        return std::nullopt;
    }
    for (const char* field : {"name", "dim", "generators", "fundamental", "tangent_roots", "normal"})
        if (!j.contains(field)) {
            issues.add(path, std::string("missing field \"") + field + "\"");
            return std::nullopt;
        }
    if (!j["name"].is_string() || !j["dim"].is_number_integer()) {
        issues.add(path, "\"name\" must be a string and \"dim\" an integer");
        return std::nullopt;
    }
    comp.name = j["name"].get<std::string>();
    comp.dim = j["dim"].get<int>();
    if (comp.dim < 0 || comp.dim % 2 != 0) {
        issues.add(path + ".dim", "component dimension must be even and nonnegative");
        return std::nullopt;
    }

    std::vector<GeneratorSpec> gens;
    if (!j["generators"].is_array()) {
        issues.add(path + ".generators", "must be an array");
        return std::nullopt;
    }
    for (std::size_t i = 0; i < j["generators"].size(); ++i) {
        const json& g = j["generators"][i];
        if (!g.is_object() || !g.contains("name") || !g.contains("degree") ||
            !g["name"].is_string() || !g["degree"].is_number_integer()) {
            issues.add(path + ".generators[" + std::to_string(i) + "]",
                       "expected {\"name\": str, \"degree\": even int}");
            return std::nullopt;
        }
        gens.push_back({g["name"].get<std::string>(), g["degree"].get<int>()});
    }
    try {
        comp.ring = make_ring(std::move(gens), comp.dim);
    } catch (const std::exception& e) {
        issues.add(path + ".generators", e.what());
        return std::nullopt;
    }

    bool ok = true;
    if (!j["fundamental"].is_array()) {
        issues.add(path + ".fundamental", "must be an array of {exponents, value}");
        return std::nullopt;
    }
    for (std::size_t i = 0; i < j["fundamental"].size(); ++i) {
        const json& f = j["fundamental"][i];
        const std::string f_path = path + ".fundamental[" + std::to_string(i) + "]";
        if (!f.is_object() || !f.contains("exponents") || !f.contains("value") ||
            !f["exponents"].is_array()) {
            issues.add(f_path, "expected {\"exponents\": [ints], \"value\": \"p/q\"}");
            ok = false;
            continue;
        }
        std::vector<int> exponents;
        bool exp_ok = true;
        for (const json& e : f["exponents"]) {
            if (!e.is_number_integer() || e.get<int>() < 0) {
                issues.add(f_path + ".exponents", "exponents must be nonnegative integers");
                exp_ok = false;
                break;
            }
            exponents.push_back(e.get<int>());
        }
        if (!exp_ok) {
            ok = false;
            continue;
        }
        if (exponents.size() != comp.ring->generator_count()) {
            issues.add(f_path + ".exponents", "length must match the generator count");
            ok = false;
            continue;
        }
        auto value = read_rational(f["value"], f_path + ".value", issues);
        if (!value) {
            ok = false;
            continue;
        }
        if (comp.fundamental.count(exponents)) {
            issues.add(f_path, "duplicate exponent vector");
            ok = false;
            continue;
        }
        comp.fundamental[exponents] = *value;
    }

    if (!j["tangent_roots"].is_array()) {
        issues.add(path + ".tangent_roots", "must be an array of linear expressions");
        return std::nullopt;
    }
    for (std::size_t i = 0; i < j["tangent_roots"].size(); ++i) {
        auto root = read_linear_expression(j["tangent_roots"][i], comp.ring,
                                           path + ".tangent_roots[" + std::to_string(i) + "]",
                                           issues);
        if (root)
            comp.tangent_roots.push_back(std::move(*root));
        else
            ok = false;
    }

    if (!j["normal"].is_array()) {
        issues.add(path + ".normal", "must be an array of {weight, c1}");
        return std::nullopt;
    }
    for (std::size_t i = 0; i < j["normal"].size(); ++i) {
        const json& s = j["normal"][i];
        const std::string s_path = path + ".normal[" + std::to_string(i) + "]";
        if (!s.is_object() || !s.contains("weight") || !s.contains("c1") ||
            !s["weight"].is_number_integer()) {
            issues.add(s_path, "expected {\"weight\": int, \"c1\": linear expression}");
            ok = false;
            continue;
        }
        auto c1 = read_linear_expression(s["c1"], comp.ring, s_path + ".c1", issues);
        if (!c1) {
            ok = false;
            continue;
        }
        comp.normal.push_back({s["weight"].get<int>(), std::move(*c1)});
    }

    if (!ok) return std::nullopt;
    return comp;
}

std::optional<ExpectedValues> read_expected(const json& j, const std::string& path,
                                            Collector& issues) {
    ExpectedValues expected;
    if (!j.is_object()) {
        issues.add(path, "expected block must be an object");
        return std::nullopt;
    }
    bool ok = true;
    if (j.contains("signature")) {
        auto v = read_rational(j["signature"], path + ".signature", issues);
        if (v)
            expected.signature = *v;
        else
            ok = false;
    }
    if (j.contains("rigid")) {
        if (j["rigid"].is_boolean())
            expected.rigid = j["rigid"].get<bool>();
        else {
            issues.add(path + ".rigid", "must be a boolean");
            ok = false;
        }
    }
    if (j.contains("prime")) {
        const json& p = j["prime"];
        if (!p.is_object() || !p.contains("status") || !p["status"].is_string()) {
            issues.add(path + ".prime", "expected {\"status\": prime|refused|vacuous, ...}");
            ok = false;
        } else {
            ExpectedPrime prime;
            prime.status = p["status"].get<std::string>();
            if (prime.status != "prime" && prime.status != "refused" && prime.status != "vacuous") {
                issues.add(path + ".prime.status", "must be prime, refused, or vacuous");
                ok = false;
            }
            if (p.contains("t")) {
                auto t = read_rational(p["t"], path + ".prime.t", issues);
                if (t)
                    prime.t = *t;
                else
                    ok = false;
            }
            if (p.contains("witness")) {
                if (!p["witness"].is_array()) {
                    issues.add(path + ".prime.witness", "must be an array of integers");
                    ok = false;
                } else {
                    for (const json& w : p["witness"]) prime.witness.push_back(w.get<int>());
                }
            }
            expected.prime = std::move(prime);
        }
    }
    if (j.contains("theorem_1_4_applicable"))
        expected.theorem_1_4_applicable = j["theorem_1_4_applicable"].get<bool>();
    if (j.contains("theorem_1_6_applicable"))
        expected.theorem_1_6_applicable = j["theorem_1_6_applicable"].get<bool>();
    if (j.contains("twisted")) {
        const json& t = j["twisted"];
        if (!t.is_object() || !t.contains("q_order") || !t.contains("coefficients")) {
            issues.add(path + ".twisted", "expected {\"q_order\": int, \"coefficients\": [str]}");
            ok = false;
        } else {
            ExpectedTwisted twisted;
            twisted.q_order = t["q_order"].get<int>();
            for (const json& c : t["coefficients"]) twisted.coefficients.push_back(c.get<std::string>());
            expected.twisted = std::move(twisted);
        }
    }
    if (j.contains("provenance"))
        for (const auto& [key, value] : j["provenance"].items())
            expected.provenance[key] = value.get<std::string>();
    if (!ok) return std::nullopt;
    return expected;
}

}  // namespace

ParseResult parse_manifold(const std::string& text) {
    ParseResult result;
    Collector issues{result.issues};

    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        issues.add("byte " + std::to_string(e.byte), e.what());
        return result;
    }

    if (!root.is_object()) {
        issues.add("", "top level must be an object");
        return result;
    }
    for (const char* field : {"name", "dim", "spin", "components"})
        if (!root.contains(field)) {
            issues.add("", std::string("missing field \"") + field + "\"");
            return result;
        }
    if (!root["name"].is_string() || !root["dim"].is_number_integer() ||
        !root["spin"].is_boolean() || !root["components"].is_array()) {
        issues.add("", "expected name: string, dim: int, spin: bool, components: array");
        return result;
    }

    ManifoldData data;
    data.name = root["name"].get<std::string>();
    data.dim = root["dim"].get<int>();
    data.spin = root["spin"].get<bool>();

    bool ok = true;
    for (std::size_t i = 0; i < root["components"].size(); ++i) {
        auto comp = read_component(root["components"][i], "components[" + std::to_string(i) + "]",
                                   issues);
        if (comp)
            data.components.push_back(std::move(*comp));
        else
            ok = false;
    }
    if (root.contains("expected")) {
        auto expected = read_expected(root["expected"], "expected", issues);
        if (expected)
            data.expected = std::move(*expected);
        else
            ok = false;
    }
    if (!ok) return result;

    for (const auto& violation : validate(data))
        issues.add(violation.component.empty() ? "manifold" : "component " + violation.component,
                   violation.field + ": " + violation.rule);
    if (result.issues.empty()) result.data = std::move(data);
    return result;
}

namespace {

json linear_expression_to_json(const CohClass<Rational>& c) {
    json out = json::array();
    const auto& gens = c.ring()->generators();
    for (const auto& [e, v] : c.terms()) {
        std::size_t index = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] == 1) index = i;
        out.push_back({{"generator", gens[index].name}, {"coefficient", v.str()}});
    }
    return out;
}

json expected_to_json(const ExpectedValues& expected) {
    json out = json::object();
    if (expected.signature) out["signature"] = expected.signature->str();
    if (expected.rigid) out["rigid"] = *expected.rigid;
    if (expected.prime) {
        json p = {{"status", expected.prime->status}};
        if (expected.prime->t) p["t"] = expected.prime->t->str();
        if (!expected.prime->witness.empty()) p["witness"] = expected.prime->witness;
        out["prime"] = std::move(p);
    }
    if (expected.theorem_1_4_applicable)
        out["theorem_1_4_applicable"] = *expected.theorem_1_4_applicable;
    if (expected.theorem_1_6_applicable)
        out["theorem_1_6_applicable"] = *expected.theorem_1_6_applicable;
    if (expected.twisted)
        out["twisted"] = {{"q_order", expected.twisted->q_order},
                          {"coefficients", expected.twisted->coefficients}};
    if (!expected.provenance.empty()) out["provenance"] = expected.provenance;
    return out;
}

}  // namespace

std::string serialize_manifold(const ManifoldData& data, bool include_expected) {
    json root;
    root["name"] = data.name;
    root["dim"] = data.dim;
    root["spin"] = data.spin;
    root["components"] = json::array();
    for (const auto& comp : data.components) {
        json c;
        c["name"] = comp.name;
        c["dim"] = comp.dim;
        c["generators"] = json::array();
        for (const auto& gen : comp.ring->generators())
            c["generators"].push_back({{"name", gen.name}, {"degree", gen.degree}});
        c["fundamental"] = json::array();
        for (const auto& [e, v] : comp.fundamental)
            c["fundamental"].push_back({{"exponents", e}, {"value", v.str()}});
        c["tangent_roots"] = json::array();
        for (const auto& root_class : comp.tangent_roots)
            c["tangent_roots"].push_back(linear_expression_to_json(root_class));
        c["normal"] = json::array();
        for (const auto& summand : comp.normal)
            c["normal"].push_back(
                {{"weight", summand.weight}, {"c1", linear_expression_to_json(summand.c1)}});
        root["components"].push_back(std::move(c));
    }
    if (include_expected && data.expected) root["expected"] = expected_to_json(*data.expected);
    return root.dump(2) + "\n";
}

// ---- reports ----

json report_to_json(const LocalizationReport& report, const std::string& manifold) {
    json out;
    out["schema_version"] = kReportSchemaVersion;
    out["command"] = "signature";
    out["manifold"] = manifold;
    out["mode"] = report.mode == EvalMode::Kind::Symbolic ? "symbolic"
                 : report.mode == EvalMode::Kind::AtZero  ? "zero"
                                                          : "xi";
    out["contributions"] = json::array();
    for (const auto& [name, value] : report.contributions)
        out["contributions"].push_back({{"component", name}, {"value", value.str()}});
    out["total"] = report.total.str();
    out["rigid"] = report.constant;
    if (report.constant_value) out["signature"] = report.constant_value->str();
    return out;
}

json report_to_json(const PrimeDecision& decision, const std::string& manifold) {
    json out;
    out["schema_version"] = kReportSchemaVersion;
    out["command"] = "prime";
    out["manifold"] = manifold;
    out["prime"] = decision.is_prime();
    if (decision.is_prime()) {
        out["t"] = decision.certificate->t.str();
        out["order"] = decision.certificate->order;
        out["vacuous"] = decision.certificate->vacuous;
    } else {
        out["witness"] = decision.witness;
    }
    return out;
}

json report_to_json(const TwistedSeriesReport& report, const std::string& manifold) {
    json out;
    out["schema_version"] = kReportSchemaVersion;
    out["command"] = "twisted";
    out["manifold"] = manifold;
    out["mode"] = report.mode == EvalMode::Kind::Symbolic ? "symbolic" : "xi";
    out["q_order"] = report.q_order;
    out["coefficients"] = json::array();
    for (std::size_t i = 0; i < report.coefficients.size(); ++i) {
        json c = {{"q", i},
                  {"value", report.coefficients[i].str()},
                  {"constant", static_cast<bool>(report.constant[i])}};
        if (report.constant_value[i]) c["sign"] = report.constant_value[i]->str();
        out["coefficients"].push_back(std::move(c));
    }
    return out;
}

json report_to_json(const SignatureVanishingVerdict& verdict) {
    json out;
    out["prime"] = verdict.prime.is_prime();
    if (!verdict.prime.is_prime()) out["witness"] = verdict.prime.witness;
    out["fixed_set_dim"] = verdict.fixed_set_dim ? json(*verdict.fixed_set_dim) : json(nullptr);
    out["dim_hypothesis"] = verdict.dim_hypothesis;
    out["hypotheses_hold"] = verdict.hypotheses_hold;
    out["rigid"] = verdict.rigid;
    out["total"] = verdict.symbolic.total.str();
    if (verdict.signature) out["signature"] = verdict.signature->str();
    if (verdict.at_xi) out["at_xi_total"] = verdict.at_xi->total.str();
    if (!verdict.euler.empty()) {
        out["euler_factorization"] = json::array();
        for (const auto& e : verdict.euler)
            out["euler_factorization"].push_back({{"component", e.component},
                                                  {"required_degree", e.required_degree},
                                                  {"product_vanishes", e.product_vanishes},
                                                  {"degree_bound_holds", e.degree_bound_holds},
                                                  {"factorization_exact", e.factorization_exact}});
    }
    out["vanishing_verified"] = verdict.vanishing_verified;
    out["hard_failure"] = verdict.hard_failure;
    return out;
}

json report_to_json(const TwistedVanishingVerdict& verdict) {
    json out;
    out["spin"] = verdict.spin;
    out["prime"] = verdict.prime.is_prime();
    out["fixed_set_dim"] = verdict.fixed_set_dim ? json(*verdict.fixed_set_dim) : json(nullptr);
    out["dim_hypothesis"] = verdict.dim_hypothesis;
    out["hypotheses_hold"] = verdict.hypotheses_hold;
    out["coefficients"] = json::array();
    for (std::size_t i = 0; i < verdict.symbolic.coefficients.size(); ++i)
        out["coefficients"].push_back({{"q", i},
                                       {"value", verdict.symbolic.coefficients[i].str()},
                                       {"constant", static_cast<bool>(verdict.symbolic.constant[i])}});
    if (verdict.at_xi) {
        out["at_xi_coefficients"] = json::array();
        for (const auto& c : verdict.at_xi->coefficients)
            out["at_xi_coefficients"].push_back(c.str());
    }
    out["vanishing_verified"] = verdict.vanishing_verified;
    out["hard_failure"] = verdict.hard_failure;
    return out;
}

json report_to_json(const CatalogReport& report) {
    json out;
    out["schema_version"] = kReportSchemaVersion;
    out["command"] = "catalog_run";
    out["checks"] = json::array();
    for (const auto& check : report.checks) {
        json c = {{"entry", check.entry}, {"check", check.check}, {"pass", check.pass}};
        if (!check.detail.empty()) c["detail"] = check.detail;
        out["checks"].push_back(std::move(c));
    }
    out["mismatches"] = report.mismatches;
    out["pass"] = report.all_pass();
    return out;
}

std::string report_to_text(const LocalizationReport& report) {
    std::ostringstream out;
    for (const auto& [name, value] : report.contributions)
        out << "  " << name << ": " << value.str() << "\n";
    out << "total: " << report.total.str() << "\n";
    out << "rigid: " << (report.constant ? "true" : "false") << "\n";
    if (report.constant_value) out << "signature: " << report.constant_value->str() << "\n";
    return out.str();
}

std::string report_to_text(const PrimeDecision& decision) {
    std::ostringstream out;
    if (decision.is_prime()) {
        out << "prime: true\n";
        out << "t: " << decision.certificate->t.str() << "\n";
        out << "order: " << decision.certificate->order << "\n";
        if (decision.certificate->vacuous) out << "vacuous: true (empty weight multiset)\n";
    } else {
        out << "prime: false\n";
        out << "witness:";
        for (int w : decision.witness) out << " " << w;
        out << "\n";
    }
    return out.str();
}

std::string report_to_text(const TwistedSeriesReport& report) {
    std::ostringstream out;
    for (std::size_t i = 0; i < report.coefficients.size(); ++i) {
        out << "q^" << i << ": " << report.coefficients[i].str();
        if (report.mode == EvalMode::Kind::Symbolic)
            out << "  (constant: " << (report.constant[i] ? "true" : "false") << ")";
        out << "\n";
    }
    return out.str();
}

std::string report_to_text(const SignatureVanishingVerdict& verdict) {
    std::ostringstream out;
    out << "signature vanishing check (dimension 4k, fixed set below half dimension):\n";
    out << "  prime: " << (verdict.prime.is_prime() ? "true" : "false");
    if (!verdict.prime.is_prime()) {
        out << " (witness:";
        for (int w : verdict.prime.witness) out << " " << w;
        out << ")";
    }
    out << "\n  fixed set dimension: ";
    if (verdict.fixed_set_dim)
        out << *verdict.fixed_set_dim;
    else
        out << "empty";
    out << (verdict.dim_hypothesis ? " (below half)" : " (not below half)") << "\n";
    out << "  hypotheses hold: " << (verdict.hypotheses_hold ? "true" : "false") << "\n";
    out << "  signature total: " << verdict.symbolic.total.str() << "\n";
    if (verdict.at_xi) out << "  at xi: " << verdict.at_xi->total.str() << "\n";
    if (verdict.hypotheses_hold)
        out << "  vanishing verified: " << (verdict.vanishing_verified ? "true" : "false") << "\n";
    return out.str();
}

std::string report_to_text(const TwistedVanishingVerdict& verdict) {
    std::ostringstream out;
    out << "twisted vanishing check (spin, prime, fixed set below half dimension):\n";
    out << "  spin (asserted): " << (verdict.spin ? "true" : "false") << "\n";
    out << "  prime: " << (verdict.prime.is_prime() ? "true" : "false") << "\n";
    out << "  hypotheses hold: " << (verdict.hypotheses_hold ? "true" : "false") << "\n";
    for (std::size_t i = 0; i < verdict.symbolic.coefficients.size(); ++i)
        out << "  q^" << i << ": " << verdict.symbolic.coefficients[i].str() << "\n";
    if (verdict.hypotheses_hold)
        out << "  vanishing verified: " << (verdict.vanishing_verified ? "true" : "false") << "\n";
    return out.str();
}

std::string report_to_text(const CatalogReport& report) {
    std::ostringstream out;
    for (const auto& check : report.checks) {
        out << (check.pass ? "PASS" : "FAIL") << "  " << check.entry << ": " << check.check;
        if (!check.detail.empty()) out << "  [" << check.detail << "]";
        out << "\n";
    }
    out << (report.all_pass() ? "all checks passed" : std::to_string(report.mismatches) + " mismatches")
        << "\n";
    return out.str();
}

}  // namespace sigloc
