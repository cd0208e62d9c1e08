#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "subalg/algmem.hpp"
#include "subalg/csg.hpp"
#include "subalg/field.hpp"
#include "subalg/monalg.hpp"
#include "subalg/parse.hpp"
#include "subalg/polynomial.hpp"

namespace subalg {

struct FileParseError : std::runtime_error {
    FileParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

/// Coefficient field declared in a file header: "Q" or "Fp <prime>".
struct FieldSpec {
    bool rational = true;
    std::uint64_t p = 0;

    static FieldSpec parse(const std::string& text, std::size_t line) {
        std::istringstream in(text);
        std::string name;
        in >> name;
        if (name == "Q") {
            std::string rest;
            if (in >> rest) throw FileParseError(line, "unexpected token after 'Q'");
            return FieldSpec{};
        }
        if (name == "Fp") {
            unsigned long long p = 0;
            if (!(in >> p)) throw FileParseError(line, "expected a prime after 'Fp'");
            std::string rest;
            if (in >> rest) throw FileParseError(line, "unexpected token after the modulus");
            try {
                GFp::check_modulus(p);
            } catch (const std::exception& e) {
                throw FileParseError(line, e.what());
            }
            return FieldSpec{false, p};
        }
        throw FileParseError(line, "unknown field '" + name + "' (expected Q or Fp <p>)");
    }
    std::string str() const { return rational ? "Q" : "Fp " + std::to_string(p); }
};

inline MonomialOrder parse_order_descriptor(const std::string& text,
                                            const std::vector<std::size_t>& block_widths,
                                            std::size_t line) {
    std::istringstream in(text);
    std::vector<std::string> tok;
    std::string t;
    while (in >> t) tok.push_back(t);
    auto simple = [&](const std::string& s) -> std::optional<OrderKind> {
        if (s == "lex") return OrderKind::lex;
        if (s == "grlex") return OrderKind::grlex;
        if (s == "grevlex") return OrderKind::grevlex;
        return std::nullopt;
    };
    if (tok.empty()) throw FileParseError(line, "empty order descriptor");
    if (tok.size() == 1) {
        if (auto k = simple(tok[0])) {
            switch (*k) {
                case OrderKind::lex: return MonomialOrder::lex();
                case OrderKind::grlex: return MonomialOrder::grlex();
                case OrderKind::grevlex: return MonomialOrder::grevlex();
                default: break;
            }
        }
        throw FileParseError(line, "unknown order '" + tok[0] + "'");
    }
    if (tok[0] != "block")
        throw FileParseError(line, "unknown order descriptor '" + text + "'");
    if (tok.size() != block_widths.size() + 1)
        throw FileParseError(line, "block order needs one sub-order per variable block (" +
                                       std::to_string(block_widths.size()) + " blocks declared)");
    std::vector<OrderKind> sub;
    for (std::size_t i = 1; i < tok.size(); ++i) {
        auto k = simple(tok[i]);
        if (!k) throw FileParseError(line, "unknown sub-order '" + tok[i] + "'");
        sub.push_back(*k);
    }
    return MonomialOrder::block(block_widths, sub);
}

inline std::string order_descriptor(const MonomialOrder& ord) {
    if (ord.kind() != OrderKind::block) return order_kind_name(ord.kind());
    std::string s = "block";
    for (OrderKind k : ord.block_orders()) s += " " + order_kind_name(k);
    return s;
}

/// Parsed instance file. Header keys (field, vars, order) must precede the
/// sections; unknown keys are rejected. Lines starting with '#' and blank
/// lines are ignored.
struct InstanceFile {
    FieldSpec field;
    std::vector<std::vector<std::string>> var_blocks;
    std::string order_text = "lex";
    std::size_t order_line = 0;
    std::vector<std::pair<std::string, std::size_t>> generators;
    std::optional<std::pair<std::string, std::size_t>> target;
    std::optional<std::pair<std::string, std::size_t>> certificate;
    std::vector<std::tuple<std::string, std::string, std::size_t>> rules;
    std::optional<std::pair<std::string, std::size_t>> start;
    std::optional<std::pair<std::string, std::size_t>> goal;
    std::optional<std::string> source;

    ContextPtr context() const {
        if (var_blocks.empty()) throw std::invalid_argument("instance has no vars line");
        if (var_blocks.size() == 1) return VariableContext::make(var_blocks[0]);
        std::vector<std::pair<std::string, std::vector<std::string>>> groups;
        for (std::size_t i = 0; i < var_blocks.size(); ++i) {
            std::string name = var_blocks.size() == 2 ? (i == 0 ? "x" : "t")
                                                      : "b" + std::to_string(i + 1);
            groups.emplace_back(name, var_blocks[i]);
        }
        return VariableContext::make_blocks(groups);
    }
    std::vector<std::size_t> block_widths() const {
        std::vector<std::size_t> w;
        for (const auto& b : var_blocks) w.push_back(b.size());
        return w;
    }
    MonomialOrder order() const {
        return parse_order_descriptor(order_text, block_widths(), order_line);
    }
};

inline InstanceFile parse_instance_file(std::istream& in) {
    InstanceFile file;
    bool saw_field = false, saw_vars = false, in_sections = false;
    std::string section;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto is_space = [](unsigned char c) { return std::isspace(c); };
        while (!line.empty() && is_space(line.front())) line.erase(line.begin());
        while (!line.empty() && is_space(line.back())) line.pop_back();
        if (line.empty()) continue;

        std::string key, value;
        auto colon = line.find(':');
        if (colon != std::string::npos) {
            key = line.substr(0, colon);
            value = line.substr(colon + 1);
            while (!value.empty() && is_space(value.front())) value.erase(value.begin());
        }

        if (key == "field") {
            if (in_sections) throw FileParseError(lineno, "header key after a section");
            file.field = FieldSpec::parse(value, lineno);
            saw_field = true;
        } else if (key == "vars") {
            if (in_sections) throw FileParseError(lineno, "header key after a section");
            std::istringstream vs(value);
            std::vector<std::string> block;
            std::string tok;
            while (vs >> tok) {
                if (tok == ";") {
                    file.var_blocks.push_back(block);
                    block.clear();
                } else {
                    block.push_back(tok);
                }
            }
            file.var_blocks.push_back(block);
            for (const auto& b : file.var_blocks)
                if (b.empty()) throw FileParseError(lineno, "empty variable block");
            saw_vars = true;
        } else if (key == "order") {
            if (in_sections) throw FileParseError(lineno, "header key after a section");
            file.order_text = value;
            file.order_line = lineno;
        } else if (key == "generators" || key == "rules" || key == "metadata") {
            if (!value.empty()) throw FileParseError(lineno, "section key takes no inline value");
            section = key;
            in_sections = true;
        } else if (key == "target") {
            file.target = {value, lineno};
            in_sections = true;
        } else if (key == "certificate") {
            file.certificate = {value, lineno};
            in_sections = true;
        } else if (key == "start") {
            file.start = {value, lineno};
            in_sections = true;
        } else if (key == "goal") {
            file.goal = {value, lineno};
            in_sections = true;
        } else if (key == "source") {
            if (section != "metadata") throw FileParseError(lineno, "'source' belongs to metadata");
            file.source = value;
        } else if (colon != std::string::npos && key.find(' ') == std::string::npos &&
                   key.find('*') == std::string::npos && section != "rules") {
            throw FileParseError(lineno, "unknown key '" + key + "'");
        } else if (section == "generators") {
            file.generators.emplace_back(line, lineno);
        } else if (section == "rules") {
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw FileParseError(lineno, "rule must have the form '<monomial> = <monomial>'");
            file.rules.emplace_back(line.substr(0, eq), line.substr(eq + 1), lineno);
        } else {
            throw FileParseError(lineno, "content outside any section");
        }
    }
    if (!saw_field) throw FileParseError(lineno, "missing 'field:' header");
    if (!saw_vars) throw FileParseError(lineno, "missing 'vars:' header");
    return file;
}

inline InstanceFile parse_instance_file(const std::string& text) {
    std::istringstream in(text);
    return parse_instance_file(in);
}

/// Instance data bound to a concrete coefficient type.
template <class F>
struct TypedInstance {
    ContextPtr ctx;
    MonomialOrder ord = MonomialOrder::lex();
    std::vector<Polynomial<F>> generators;
    std::optional<Polynomial<F>> target;
    std::optional<Polynomial<F>> certificate_poly;  // parsed over the tag context
    std::optional<CsgSystem> csg;
    std::optional<Monomial> start;
    std::optional<Monomial> goal;
};

template <class F>
Polynomial<F> parse_line_poly(const std::pair<std::string, std::size_t>& line,
                              const ContextPtr& ctx, const F& one) {
    try {
        return parse_polynomial<F>(line.first, ctx, one);
    } catch (const ParseError& e) {
        throw FileParseError(line.second, e.what());
    }
}

template <class F>
Monomial parse_line_monomial(const std::pair<std::string, std::size_t>& line,
                             const ContextPtr& ctx, const F& one) {
    Polynomial<F> p = parse_line_poly(line, ctx, one);
    if (!p.is_monomial() || !p.terms()[0].coeff.is_one())
        throw FileParseError(line.second, "expected a monomial with coefficient 1");
    return p.terms()[0].mono;
}

template <class F>
TypedInstance<F> bind_instance(const InstanceFile& file, const F& one) {
    TypedInstance<F> inst;
    inst.ctx = file.context();
    inst.ord = file.order();
    for (const auto& g : file.generators)
        inst.generators.push_back(parse_line_poly(g, inst.ctx, one));
    if (file.target) inst.target = parse_line_poly(*file.target, inst.ctx, one);
    if (!file.rules.empty()) {
        std::vector<std::pair<Monomial, Monomial>> rules;
        for (const auto& [lhs, rhs, lineno] : file.rules) {
            rules.emplace_back(parse_line_monomial(std::pair{lhs, lineno}, inst.ctx, one),
                               parse_line_monomial(std::pair{rhs, lineno}, inst.ctx, one));
        }
        inst.csg = CsgSystem::make(inst.ctx, std::move(rules));
    }
    if (file.start) inst.start = parse_line_monomial(*file.start, inst.ctx, one);
    if (file.goal) inst.goal = parse_line_monomial(*file.goal, inst.ctx, one);
    if (file.certificate) {
        std::vector<std::string> tags;
        std::string base = "t";
        while (true) {
            tags.clear();
            bool clash = false;
            for (std::size_t i = 1; i <= inst.generators.size(); ++i) {
                tags.push_back(base + std::to_string(i));
                if (inst.ctx->has(tags.back())) clash = true;
            }
            if (!clash) break;
            base += "_";
        }
        ContextPtr tag_ctx = VariableContext::make_blocks({{"t", tags}});
        inst.certificate_poly = parse_line_poly(*file.certificate, tag_ctx, one);
    }
    return inst;
}

/// Canonical file form: header, generators, target, metadata. Labels, when
/// given, annotate the generator lines as comments (stripped on re-parse).
template <class F>
void write_instance(std::ostream& out, const FieldSpec& field, const ContextPtr& ctx,
                    const MonomialOrder& ord, const std::vector<Polynomial<F>>& generators,
                    const std::optional<Polynomial<F>>& target,
                    const std::optional<std::string>& source,
                    const std::vector<std::string>& labels = {}) {
    out << "field: " << field.str() << "\n";
    out << "vars:";
    const auto& blocks = ctx->blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b > 0) out << " ;";
        for (std::size_t i = blocks[b].first; i < blocks[b].first + blocks[b].count; ++i)
            out << " " << ctx->name(i);
    }
    out << "\n";
    out << "order: " << order_descriptor(ord) << "\n";
    out << "generators:\n";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        out << to_string(generators[i], ord);
        if (i < labels.size()) out << "  # " << labels[i];
        out << "\n";
    }
    if (target) out << "target: " << to_string(*target, ord) << "\n";
    if (source) out << "metadata:\nsource: " << *source << "\n";
}

/// 1in3Sat files: one line per set, "S1: 1 2 5", in order.
inline SatInstance parse_sat_file(std::istream& in) {
    std::vector<std::vector<int>> sets;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        std::string expected = "S" + std::to_string(sets.size() + 1) + ":";
        if (key != expected)
            throw FileParseError(lineno, "expected '" + expected + "'");
        std::vector<int> set;
        int v;
        while (ls >> v) set.push_back(v);
        if (set.size() > 3) throw FileParseError(lineno, "sets have at most 3 elements");
        for (int e : set)
            if (e <= 0) throw FileParseError(lineno, "elements must be positive");
        sets.push_back(std::move(set));
    }
    return SatInstance::make(std::move(sets));
}

inline std::string format_coefficient_vector(const std::vector<long long>& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

}  // namespace subalg
