#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subalg/bounds.hpp"
#include "subalg/counter.hpp"
#include "subalg/instance_io.hpp"
#include "subalg/reductions.hpp"
#include "subalg/sagbi.hpp"

namespace subalg::cli {

using nlohmann::json;

constexpr int kExitMember = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitError = 2;
constexpr int kExitUnknown = 3;  // sagbi --check only

namespace detail {

inline InstanceFile load_instance(const std::string& path,
                                  const std::optional<std::string>& field_override,
                                  const std::optional<std::string>& order_override) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    InstanceFile file = parse_instance_file(in);
    if (field_override) file.field = FieldSpec::parse(*field_override, 0);
    if (order_override) {
        file.order_text = *order_override;
        file.order_line = 0;
    }
    return file;
}

template <class Fn>
int with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.rational) return fn(Rational(1));
    return fn(GFp(1, spec.p));
}

inline std::string basename_of(const std::string& path) {
    auto pos = path.find_last_of("/\\");
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

template <class F>
json verdict_to_json(const MembershipVerdict<F>& v, bool with_cert) {
    json j;
    j["member"] = v.member ? "yes" : "no";
    if (v.member && v.certificate) {
        if (with_cert) j["certificate"] = to_string(v.certificate->p);
        j["certificate_degree"] = v.certificate->degree;
        j["certificate_terms"] = v.certificate->terms;
    }
    if (!v.member && v.witness) j["witness"] = to_string(*v.witness);
    return j;
}

template <class F>
void verdict_to_text(std::ostream& out, const MembershipVerdict<F>& v, bool with_cert) {
    out << "member: " << (v.member ? "yes" : "no") << "\n";
    if (v.member && v.certificate) {
        if (with_cert) out << "certificate: " << to_string(v.certificate->p) << "\n";
        out << "certificate_degree: " << v.certificate->degree << "\n";
        out << "certificate_terms: " << v.certificate->terms << "\n";
    }
    if (!v.member && v.witness) out << "witness: " << to_string(*v.witness) << "\n";
}

}  // namespace detail

struct StreamPair {
    std::ostream& out;
    std::ostream& err;
};

/// Full command-line front end; returns the process exit code.
/// Exit codes: 0 member/success, 1 non-member, 2 error (3: sagbi unknown).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact subalgebra membership toolkit"};
    app.require_subcommand(1);
    long long seed = 0;
    app.add_option("--seed", seed,
                   "seed for randomized tooling (built-in commands are deterministic)");

    std::string input, output, kind, name;
    bool json_out = false, homogeneous = false, with_cert = false, do_verify = false,
         check = false;
    std::optional<std::string> field_override, order_override;
    std::optional<long long> cap;
    long long rounds = 50;
    unsigned gen_n = 1;
    std::optional<unsigned long> b_n, b_s, b_d, b_degg, b_r;
    std::string b_degrees;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) cmd->add_option("file", input, "instance file")->required();
        cmd->add_flag("--json", json_out, "structured output");
        cmd->add_option("--field", field_override, "override the declared field (Q | 'Fp <p>')");
        cmd->add_option("--order", order_override, "override the declared order");
    };

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of the generators");
    add_common(gb, true);
    gb->add_option("--cap", cap, "degree-truncated basis (homogeneous input only)");

    auto* algmem = app.add_subcommand("algmem", "subalgebra membership of the target");
    add_common(algmem, true);
    algmem->add_flag("--homogeneous", homogeneous, "use the degree-truncated homogeneous engine");
    algmem->add_flag("--certificate", with_cert, "print the certificate polynomial");
    algmem->add_flag("--verify", do_verify, "verify the certificate stored in the file");

    auto* monmem = app.add_subcommand("monmem", "monomial-algebra membership of the target");
    add_common(monmem, true);

    auto* subduct_cmd = app.add_subcommand("subduct", "subduct the target against the generators");
    add_common(subduct_cmd, true);

    auto* sagbi_cmd = app.add_subcommand("sagbi", "SAGBI completion / check of the generators");
    add_common(sagbi_cmd, true);
    sagbi_cmd->add_flag("--check", check, "test SAGBI-ness instead of completing");
    sagbi_cmd->add_option("--cap", cap, "degree cap (default 20)");
    sagbi_cmd->add_option("--rounds", rounds, "round cap (default 50)");

    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->add_option("kind", kind, "binary-counter | ideal-to-algebra | csg-to-ideal | 1in3sat")
        ->required();
    gen->add_option("--n", gen_n, "size parameter (binary-counter)");
    gen->add_option("--input", input, "input file (reductions and 1in3sat)");
    gen->add_option("-o,--output", output, "write to file instead of stdout");
    gen->add_option("--field", field_override, "coefficient field of generated instances");
    gen->add_flag("--json", json_out, "structured output");

    auto* bounds = app.add_subcommand("bounds", "degree-bound calculators");
    bounds->add_option("name", name, "hermann | ci | dube | mayr-ritscher | certification")
        ->required();
    bounds->add_option("--n", b_n, "number of variables");
    bounds->add_option("--s", b_s, "number of generators");
    bounds->add_option("--d", b_d, "max generator degree");
    bounds->add_option("--degg", b_degg, "degree of the tested element");
    bounds->add_option("--r", b_r, "ideal dimension");
    bounds->add_option("--degrees", b_degrees, "comma-separated degrees, nonincreasing");
    bounds->add_flag("--json", json_out, "structured output");

    std::vector<const char*> argv{"subalg"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (*gb) {
            InstanceFile file = detail::load_instance(input, field_override, order_override);
            return detail::with_field(file.field, [&](auto one) {
                using F = decltype(one);
                auto inst = bind_instance(file, one);
                GroebnerBasis<F> basis =
                    cap ? truncated_groebner(inst.generators, inst.ord, *cap,
                                             std::vector<long long>(inst.ctx->size(), 1))
                        : reduced_groebner(inst.generators, inst.ord);
                if (json_out) {
                    json j;
                    j["field"] = file.field.str();
                    j["vars"] = inst.ctx->names();
                    j["order"] = order_descriptor(inst.ord);
                    j["gb"] = json::array();
                    for (const auto& g : basis.elements()) j["gb"].push_back(to_string(g, inst.ord));
                    out << j.dump(2) << "\n";
                } else {
                    out << "field: " << file.field.str() << "\n";
                    out << "order: " << order_descriptor(inst.ord) << "\n";
                    out << "gb:\n";
                    for (const auto& g : basis.elements()) out << to_string(g, inst.ord) << "\n";
                }
                return 0;
            });
        }
        if (*algmem) {
            InstanceFile file = detail::load_instance(input, field_override, order_override);
            return detail::with_field(file.field, [&](auto one) {
                using F = decltype(one);
                auto inst = bind_instance(file, one);
                if (!inst.target) throw std::runtime_error("instance has no target");
                auto a = SubalgebraPresentation<F>::make(inst.ctx, inst.generators);
                if (do_verify) {
                    if (!inst.certificate_poly)
                        throw std::runtime_error("--verify needs a certificate in the file");
                    auto rep = verify_certificate(*inst.certificate_poly, a, *inst.target);
                    if (json_out) {
                        json j;
                        j["verified"] = rep.ok ? "yes" : "no";
                        j["certificate_degree"] = rep.degree;
                        j["certificate_terms"] = rep.terms;
                        out << j.dump(2) << "\n";
                    } else {
                        out << "verified: " << (rep.ok ? "yes" : "no") << "\n";
                        out << "certificate_degree: " << rep.degree << "\n";
                        out << "certificate_terms: " << rep.terms << "\n";
                    }
                    return rep.ok ? kExitMember : kExitNonMember;
                }
                auto verdict =
                    homogeneous ? decide_membership_homogeneous(a, *inst.target)
                                : decide_membership(a, *inst.target);
                if (json_out)
                    out << detail::verdict_to_json(verdict, with_cert).dump(2) << "\n";
                else
                    detail::verdict_to_text(out, verdict, with_cert);
                return verdict.member ? kExitMember : kExitNonMember;
            });
        }
        if (*monmem) {
            InstanceFile file = detail::load_instance(input, field_override, order_override);
            return detail::with_field(file.field, [&](auto one) {
                using F = decltype(one);
                auto inst = bind_instance(file, one);
                if (!inst.target) throw std::runtime_error("instance has no target");
                std::vector<std::vector<long long>> gens;
                for (std::size_t i = 0; i < inst.generators.size(); ++i) {
                    const auto& g = inst.generators[i];
                    if (!g.is_monomial() || !g.terms()[0].coeff.is_one())
                        throw std::runtime_error("generator " + std::to_string(i + 1) +
                                                 " is not a monomial");
                    gens.push_back(g.terms()[0].mono.exponents());
                }
                auto alg = MonomialAlgebra::make(inst.ctx->size(), std::move(gens));
                json j;
                std::ostringstream text;
                bool member;
                if (inst.target->is_monomial()) {
                    auto witness = monomial_membership(alg, inst.target->terms()[0].mono.exponents());
                    member = witness.has_value();
                    text << "member: " << (member ? "yes" : "no") << "\n";
                    j["member"] = member ? "yes" : "no";
                    if (witness) {
                        text << "witness: " << format_coefficient_vector(*witness) << "\n";
                        j["witness"] = format_coefficient_vector(*witness);
                    }
                } else {
                    auto breakdown = poly_in_monomial_algebra(alg, *inst.target);
                    member = breakdown.member;
                    text << "member: " << (member ? "yes" : "no") << "\n";
                    j["member"] = member ? "yes" : "no";
                    j["monomials"] = json::array();
                    for (const auto& [mono, ok] : breakdown.per_monomial) {
                        auto mono_str =
                            to_string(Polynomial<F>::single_term(inst.ctx, mono, one));
                        text << "monomial " << mono_str << ": " << (ok ? "yes" : "no") << "\n";
                        j["monomials"].push_back({{"monomial", mono_str}, {"member", ok ? "yes" : "no"}});
                    }
                }
                out << (json_out ? j.dump(2) + "\n" : text.str());
                return member ? kExitMember : kExitNonMember;
            });
        }
        if (*subduct_cmd) {
            InstanceFile file = detail::load_instance(input, field_override, order_override);
            return detail::with_field(file.field, [&](auto one) {
                using F = decltype(one);
                auto inst = bind_instance(file, one);
                if (!inst.target) throw std::runtime_error("instance has no target");
                auto cand = SagbiCandidate<F>::make(inst.ctx, inst.ord, inst.generators);
                auto res = subduct(*inst.target, cand);
                if (json_out) {
                    json j;
                    j["remainder"] = to_string(res.remainder, inst.ord);
                    j["certificate"] = to_string(res.certificate);
                    out << j.dump(2) << "\n";
                } else {
                    out << "remainder: " << to_string(res.remainder, inst.ord) << "\n";
                    out << "certificate: " << to_string(res.certificate) << "\n";
                }
                return res.remainder.is_zero() ? kExitMember : kExitNonMember;
            });
        }
        if (*sagbi_cmd) {
            InstanceFile file = detail::load_instance(input, field_override, order_override);
            return detail::with_field(file.field, [&](auto one) {
                using F = decltype(one);
                auto inst = bind_instance(file, one);
                long long degree_cap = cap.value_or(20);
                if (check) {
                    auto cand = SagbiCandidate<F>::make(inst.ctx, inst.ord, inst.generators);
                    auto result = is_sagbi(cand, degree_cap);
                    std::string s = result.status == SagbiStatus::yes
                                        ? "yes"
                                        : result.status == SagbiStatus::no ? "no" : "unknown";
                    if (json_out) {
                        json j;
                        j["sagbi"] = s;
                        if (result.witness_remainder)
                            j["witness_remainder"] = to_string(*result.witness_remainder, inst.ord);
                        out << j.dump(2) << "\n";
                    } else {
                        out << "sagbi: " << s << "\n";
                        if (result.witness_remainder)
                            out << "witness_remainder: "
                                << to_string(*result.witness_remainder, inst.ord) << "\n";
                    }
                    return result.status == SagbiStatus::yes
                               ? kExitMember
                               : result.status == SagbiStatus::no ? kExitNonMember : kExitUnknown;
                }
                auto result = sagbi_completion(inst.generators, inst.ord, degree_cap,
                                               static_cast<unsigned>(rounds));
                if (json_out) {
                    json j;
                    j["status"] = result.status == CompletionStatus::finished ? "finished"
                                                                              : "cap_reached";
                    j["rounds"] = result.rounds;
                    j["log"] = json::array();
                    for (const auto& entry : result.log) {
                        auto ini_str = to_string(
                            Polynomial<F>::single_term(inst.ctx, entry.initial, one), inst.ord);
                        j["log"].push_back({{"round", entry.round},
                                            {"added", to_string(entry.element, inst.ord)},
                                            {"ini", ini_str}});
                    }
                    j["basis"] = json::array();
                    for (const auto& b : result.candidate.basis)
                        j["basis"].push_back(to_string(b, inst.ord));
                    out << j.dump(2) << "\n";
                } else {
                    for (const auto& entry : result.log) {
                        out << "round " << entry.round << ": added "
                            << to_string(entry.element, inst.ord) << " (ini = "
                            << to_string(Polynomial<F>::single_term(inst.ctx, entry.initial, one),
                                         inst.ord)
                            << ")\n";
                    }
                    out << "status: "
                        << (result.status == CompletionStatus::finished ? "finished"
                                                                        : "cap_reached")
                        << "\n";
                    out << "basis:\n";
                    for (const auto& b : result.candidate.basis)
                        out << to_string(b, inst.ord) << "\n";
                }
                return 0;
            });
        }
        if (*gen) {
            std::ostringstream buffer;
            FieldSpec field = field_override ? FieldSpec::parse(*field_override, 0) : FieldSpec{};
            int rc = detail::with_field(field, [&](auto one) {
                using F = decltype(one);
                if (kind == "binary-counter") {
                    auto inst = binary_counting_subalgebra<F>(gen_n, one);
                    write_instance<F>(buffer, field, inst.ctx, MonomialOrder::grlex(),
                                      inst.generators, inst.target,
                                      "binary-counter n=" + std::to_string(gen_n), inst.labels);
                    return 0;
                }
                if (kind == "ideal-to-algebra") {
                    if (input.empty()) throw std::runtime_error("--input required for this kind");
                    InstanceFile file = detail::load_instance(input, field_override, order_override);
                    auto typed = bind_instance(file, one);
                    if (!typed.target) throw std::runtime_error("input instance has no target");
                    auto reduced = ideal_to_algebra(typed.generators, *typed.target);
                    write_instance<F>(buffer, file.field, reduced.ctx, MonomialOrder::lex(),
                                      reduced.generators, reduced.target,
                                      "ideal-to-algebra of " + detail::basename_of(input));
                    return 0;
                }
                if (kind == "csg-to-ideal") {
                    if (input.empty()) throw std::runtime_error("--input required for this kind");
                    InstanceFile file = detail::load_instance(input, field_override, order_override);
                    auto typed = bind_instance(file, one);
                    if (!typed.csg || !typed.start || !typed.goal)
                        throw std::runtime_error("input must declare rules, start and goal");
                    auto [gens, target] = csg_to_ideal(*typed.csg, *typed.start, *typed.goal, one);
                    write_instance<F>(buffer, file.field, typed.ctx, typed.ord, gens, {target},
                                      "csg-to-ideal of " + detail::basename_of(input));
                    return 0;
                }
                if (kind == "1in3sat") {
                    if (input.empty()) throw std::runtime_error("--input required for this kind");
                    std::ifstream satin(input);
                    if (!satin) throw std::runtime_error("cannot open '" + input + "'");
                    SatInstance sat = parse_sat_file(satin);
                    SatEncoding enc = encode_1in3sat(sat);
                    std::vector<std::string> ys;
                    for (std::size_t j = 1; j <= enc.algebra.dim; ++j)
                        ys.push_back("y" + std::to_string(j));
                    ContextPtr ctx = VariableContext::make(ys);
                    std::vector<Polynomial<F>> gens;
                    for (const auto& alpha : enc.algebra.generators)
                        gens.push_back(Polynomial<F>::single_term(
                            ctx, Monomial(std::vector<long long>(alpha)), one));
                    Polynomial<F> target = Polynomial<F>::single_term(
                        ctx, Monomial(std::vector<long long>(enc.target)), one);
                    write_instance<F>(buffer, field, ctx, MonomialOrder::grlex(), gens, {target},
                                      "1in3sat of " + detail::basename_of(input));
                    return 0;
                }
                throw std::runtime_error(
                    "unknown kind '" + kind +
                    "' (available: binary-counter, ideal-to-algebra, csg-to-ideal, 1in3sat)");
            });
            if (rc != 0) return rc;
            if (!output.empty()) {
                std::ofstream f(output);
                if (!f) throw std::runtime_error("cannot write '" + output + "'");
                f << buffer.str();
            } else {
                out << buffer.str();
            }
            return 0;
        }
        if (*bounds) {
            auto need = [&](const std::optional<unsigned long>& v, const char* flag) {
                if (!v) throw std::runtime_error(std::string("missing required option ") + flag);
                return *v;
            };
            mpz_class value;
            if (name == "hermann") {
                value = bound_hermann(static_cast<unsigned>(need(b_n, "--n")), need(b_s, "--s"),
                                      need(b_d, "--d"), need(b_degg, "--degg"));
            } else if (name == "ci") {
                value = bound_ci(need(b_s, "--s"), need(b_d, "--d"), need(b_degg, "--degg"));
            } else if (name == "dube") {
                value = bound_dube(static_cast<unsigned>(need(b_n, "--n")), need(b_d, "--d"));
            } else if (name == "mayr-ritscher") {
                std::vector<unsigned long> degrees;
                std::istringstream ds(b_degrees);
                std::string tok;
                while (std::getline(ds, tok, ',')) {
                    if (!tok.empty()) degrees.push_back(std::stoul(tok));
                }
                if (degrees.empty()) throw std::runtime_error("missing required option --degrees");
                value = bound_mayr_ritscher(static_cast<unsigned>(need(b_n, "--n")),
                                            static_cast<unsigned>(need(b_r, "--r")), degrees);
            } else if (name == "certification") {
                value = bound_certification(static_cast<unsigned>(need(b_n, "--n")),
                                            need(b_s, "--s"), need(b_d, "--d"),
                                            need(b_degg, "--degg"));
            } else {
                throw std::runtime_error(
                    "unknown bound '" + name +
                    "' (available: hermann, ci, dube, mayr-ritscher, certification)");
            }
            if (json_out) {
                json j;
                j["name"] = name;
                j["value"] = value.get_str();
                out << j.dump(2) << "\n";
            } else {
                out << value.get_str() << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    err << "error: no command\n";
    return kExitError;
}

}  // namespace subalg::cli
