// krs: finite-model checks for realizability lattices, abstract Krivine
// structures and ordered combinatory algebras.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "krs/krs.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write file: " + path);
    out << text;
}

krs::Instance load(const std::string& path, const krs::ParseOptions& opts = {}) {
    return krs::parse_instance(read_file(path), opts);
}

const char* kind_name(const krs::Instance& inst) {
    if (std::holds_alternative<krs::RealizabilityLattice>(inst)) return "RL";
    if (std::holds_alternative<krs::Aks>(inst)) return "AKS";
    return "OCA";
}

ordered_json report_to_json(const krs::SuiteReport& rep) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["passed"] = c.passed;
        jc["cases"] = c.cases;
        jc["sampled"] = c.sampled;
        jc["counterexamples"] = c.counterexamples;
        jc["notes"] = c.notes;
        checks.push_back(std::move(jc));
    }
    ordered_json j;
    j["passed"] = rep.all_passed();
    j["checks"] = std::move(checks);
    return j;
}

void print_report(const krs::SuiteReport& rep) {
    for (const auto& c : rep.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases"
                  << (c.sampled ? ", sampled" : "") << ")\n";
        for (const auto& w : c.counterexamples) std::cout << "  counterexample: " << w << "\n";
        for (const auto& n : c.notes) std::cout << "  note: " << n << "\n";
    }
    std::cout << (rep.all_passed() ? "all checks passed" : "some checks FAILED") << "\n";
}

void emit_json_report(const std::string& path, ordered_json j) {
    if (path.empty()) return;
    write_output(path, j.dump(2) + "\n");
}

std::array<int, 3> parse_shift(const std::string& text) {
    std::array<int, 3> out{};
    std::istringstream ss(text);
    std::string part;
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(ss, part, ',')) throw UsageError("--shift expects x,y,z");
        out[i] = std::stoi(part);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-model checks for realizability structures"};
    app.require_subcommand(1);

    std::string in_path, out_path, json_path, suite_name, variant_name = "bullet", shift_text;
    krs::CheckOptions opt;
    krs::GeneratorParams gen;
    int prime = 2;
    bool saturate_flag = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", opt.seed, "seed for sampled checks");
        cmd->add_option("--cap", opt.cap, "closed-family enumeration cap");
        cmd->add_option("--samples", opt.samples, "sample count beyond the exhaustive budget");
        cmd->add_option("--json-report", json_path, "write a JSON report to this file");
    };

    auto* c_check = app.add_subcommand("check", "validate an instance file");
    c_check->add_option("file", in_path)->required();
    c_check->add_flag("--saturate", saturate_flag, "repair a failing pole instead of rejecting");
    add_common(c_check);

    auto* c_sat = app.add_subcommand("saturate", "saturate the pole of an AKS");
    c_sat->add_option("file", in_path)->required();
    c_sat->add_option("-o,--out", out_path, "output path (default stdout)");

    auto* c_gen = app.add_subcommand("gen-aks", "generate a random saturated AKS");
    c_gen->add_option("--terms", gen.n_terms);
    c_gen->add_option("--stacks", gen.n_stacks);
    c_gen->add_option("--density", gen.pole_density);
    c_gen->add_option("--qp-seed", gen.qp_seed_size);
    c_gen->add_option("--seed", gen.rng_seed);
    c_gen->add_option("-o,--out", out_path);

    auto* c_vec = app.add_subcommand("gen-vec", "generate the F_p^3 vector polarity");
    c_vec->add_option("--prime", prime)->check(CLI::IsMember({2, 3}));
    c_vec->add_option("--shift", shift_text, "shift vector x,y,z for the shifted push");
    c_vec->add_option("-o,--out", out_path);

    auto* c_foca = app.add_subcommand("build-foca", "A_Kbullet from an AKS");
    c_foca->add_option("file", in_path)->required();
    c_foca->add_option("-o,--out", out_path);
    c_foca->add_option("--cap", opt.cap);

    auto* c_ioca = app.add_subcommand("build-ioca", "A_Kperp from an AKS");
    c_ioca->add_option("file", in_path)->required();
    c_ioca->add_option("-o,--out", out_path);
    c_ioca->add_option("--cap", opt.cap);

    auto* c_aks = app.add_subcommand("build-aks", "K_A from a FOCA");
    c_aks->add_option("file", in_path)->required();
    c_aks->add_option("-o,--out", out_path);

    auto* c_hey = app.add_subcommand("heyting", "realizability preorder of an instance");
    c_hey->add_option("file", in_path)->required();
    c_hey->add_option("--variant", variant_name)->check(CLI::IsMember({"bullet", "perp"}));
    add_common(c_hey);

    auto* c_laws = app.add_subcommand("laws", "run a law suite against an instance");
    c_laws->add_option("suite", suite_name, "polarity|stackops|aks|oca|constructions|indexed|all")
        ->required();
    c_laws->add_option("file", in_path)->required();
    add_common(c_laws);

    auto* c_round = app.add_subcommand("roundtrip", "parse, re-serialize and compare");
    c_round->add_option("file", in_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*c_check) {
            try {
                krs::Instance inst = load(in_path, {true, saturate_flag});
                std::cout << kind_name(inst) << " instance ok";
                if (saturate_flag) std::cout << " (saturated on load if needed)";
                std::cout << "\n";
                return kExitPass;
            } catch (const krs::ValidationError& e) {
                std::cout << "invalid instance: " << e.what() << "\n";
                for (const auto& w : e.details.counterexamples)
                    std::cout << "  witness: " << w << "\n";
                return kExitFail;
            }
        }
        if (*c_sat) {
            krs::Instance inst = load(in_path, {false, false});
            auto* aks = std::get_if<krs::Aks>(&inst);
            if (!aks) throw UsageError("saturate expects an AKS instance");
            write_output(out_path, krs::serialize(krs::saturate(*aks)));
            return kExitPass;
        }
        if (*c_gen) {
            write_output(out_path, krs::serialize(krs::gen_random_aks(gen)));
            return kExitPass;
        }
        if (*c_vec) {
            krs::VectorPolarityParams vp;
            vp.prime = prime;
            if (!shift_text.empty()) vp.shift = parse_shift(shift_text);
            write_output(out_path, krs::serialize(krs::gen_vector_polarity(vp)));
            return kExitPass;
        }
        if (*c_foca || *c_ioca) {
            krs::Instance inst = load(in_path);
            auto* aks = std::get_if<krs::Aks>(&inst);
            if (!aks) throw UsageError("build-foca/build-ioca expect an AKS instance");
            krs::OcaFromAks built = *c_foca ? krs::aks_to_foca_bullet(*aks, opt.cap)
                                            : krs::aks_to_ioca_perp(*aks, opt.cap);
            write_output(out_path, krs::serialize(built.oca));
            return kExitPass;
        }
        if (*c_aks) {
            krs::Instance inst = load(in_path);
            auto* oca = std::get_if<krs::FiniteOca>(&inst);
            if (!oca) throw UsageError("build-aks expects an OCA instance");
            write_output(out_path, krs::serialize(krs::foca_to_aks(*oca)));
            return kExitPass;
        }
        if (*c_hey) {
            krs::Instance inst = load(in_path);
            ordered_json j;
            if (auto* aks = std::get_if<krs::Aks>(&inst)) {
                krs::Variant v =
                    variant_name == "perp" ? krs::Variant::Perp : krs::Variant::Bullet;
                krs::AksHeyting h = krs::heyting_from_aks(*aks, v, opt.cap);
                j["kind"] = "aks";
                j["variant"] = variant_name;
                ordered_json fam = ordered_json::array();
                for (const auto& s : h.family) fam.push_back(krs::subset_to_string(s));
                j["family"] = std::move(fam);
                ordered_json rows = ordered_json::array();
                for (int a = 0; a < h.size; ++a) {
                    std::string row;
                    for (int b = 0; b < h.size; ++b) row += h.holds(a, b) ? '1' : '0';
                    rows.push_back(row);
                }
                j["order"] = std::move(rows);
            } else if (auto* oca = std::get_if<krs::FiniteOca>(&inst)) {
                krs::HeytingPreorder h = krs::heyting_preorder(*oca);
                j["kind"] = "oca";
                j["pairing"] = h.pairing;
                j["top"] = h.top;
                j["top_in_filter"] = h.top_in_filter;
                j["k_is_order_max"] = h.k_is_order_max;
                ordered_json rows = ordered_json::array();
                for (int a = 0; a < h.size; ++a) {
                    std::string row;
                    for (int b = 0; b < h.size; ++b) row += h.holds(a, b) ? '1' : '0';
                    rows.push_back(row);
                }
                j["order"] = std::move(rows);
            } else {
                throw UsageError("heyting expects an AKS or OCA instance");
            }
            std::cout << j.dump(2) << "\n";
            emit_json_report(json_path, std::move(j));
            return kExitPass;
        }
        if (*c_laws) {
            auto kind = krs::suite_from_name(suite_name);
            if (!kind) throw UsageError("unknown suite: " + suite_name);
            krs::Instance inst = load(in_path);
            krs::SuiteReport rep;
            try {
                rep = krs::run_suite(inst, *kind, opt);
            } catch (const krs::structural_error& e) {
                throw UsageError(e.what());
            }
            print_report(rep);
            ordered_json j = report_to_json(rep);
            j["suite"] = suite_name;
            j["instance"] = in_path;
            j["seed"] = opt.seed;
            j["cap"] = opt.cap;
            j["samples"] = opt.samples;
            emit_json_report(json_path, std::move(j));
            return rep.all_passed() ? kExitPass : kExitFail;
        }
        if (*c_round) {
            std::string text = read_file(in_path);
            krs::Instance inst = krs::parse_instance(text, {false, false});
            std::string once = krs::serialize(inst);
            krs::Instance again = krs::parse_instance(once, {false, false});
            std::string twice = krs::serialize(again);
            if (once != twice) {
                std::cout << "round trip is not stable\n";
                return kExitFail;
            }
            if (text == once)
                std::cout << "file is already canonical\n";
            else
                std::cout << "file is canonicalized by one round trip\n";
            return kExitPass;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const krs::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitFail;
    } catch (const krs::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitFail;
    } catch (const krs::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
