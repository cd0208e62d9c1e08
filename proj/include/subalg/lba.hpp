#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subalg {

/// Deterministic linearly bounded automaton over the tape alphabet
/// {0, 1, >, <} ('>' and '<' are the end markers). Transitions may be left
/// undefined; markers can never be overwritten and the head cannot move past
/// them.
struct Lba {
    enum class Move { left, right };
    struct Transition {
        std::string next;
        char write;
        Move move;
    };

    std::vector<std::string> states;  // includes start and halt
    std::string start = "q0";
    std::string halt = "halt";
    std::map<std::pair<std::string, char>, Transition> delta;

    static constexpr char kLeft = '>';
    static constexpr char kRight = '<';

    void validate() const {
        std::set<std::string> known(states.begin(), states.end());
        if (!known.count(start) || !known.count(halt))
            throw std::invalid_argument("lba: start/halt state missing from the state set");
        for (const auto& [key, tr] : delta) {
            const auto& [state, sym] = key;
            if (!known.count(state) || !known.count(tr.next))
                throw std::invalid_argument("lba: transition uses an unknown state");
            if (state == halt)
                throw std::invalid_argument("lba: halting state has no outgoing transitions");
            if (std::string("01><").find(sym) == std::string::npos ||
                std::string("01><").find(tr.write) == std::string::npos)
                throw std::invalid_argument("lba: symbol outside the tape alphabet");
            if (sym == kLeft && (tr.write != kLeft || tr.move != Move::right))
                throw std::invalid_argument("lba: the left marker must be kept and exited rightward");
            if (sym == kRight && (tr.write != kRight || tr.move != Move::left))
                throw std::invalid_argument("lba: the right marker must be kept and exited leftward");
            if (sym != kLeft && tr.write == kLeft)
                throw std::invalid_argument("lba: cannot write the left marker");
            if (sym != kRight && tr.write == kRight)
                throw std::invalid_argument("lba: cannot write the right marker");
        }
    }

    /// Two-state machine that counts its input 0^n up in binary and halts.
    static Lba binary_counter() {
        Lba m;
        m.states = {"q0", "q1", "halt"};
        m.delta[{"q0", '0'}] = {"q1", '1', Move::left};
        m.delta[{"q0", '1'}] = {"q0", '0', Move::right};
        m.delta[{"q0", kRight}] = {"halt", kRight, Move::left};
        m.delta[{"q1", kLeft}] = {"q0", kLeft, Move::right};
        m.delta[{"q1", '0'}] = {"q1", '0', Move::left};
        m.validate();
        return m;
    }
};

struct LbaConfig {
    std::string state;
    long long head;
    std::string tape;

    bool operator==(const LbaConfig& o) const {
        return state == o.state && head == o.head && tape == o.tape;
    }
    bool operator<(const LbaConfig& o) const {
        if (state != o.state) return state < o.state;
        if (head != o.head) return head < o.head;
        return tape < o.tape;
    }
};

enum class LbaStop { halted, step_cap, undefined_transition, cycle };

/// Step-by-step trace; consecutive configurations are related by delta.
struct LbaTrace {
    std::vector<LbaConfig> configurations;
    bool halted = false;
    std::size_t steps = 0;
    LbaStop reason = LbaStop::step_cap;
};

/// Run M on the word w (over {0,1}), starting in (start, 1, >w<). Stops on
/// the halting state, the step cap, an undefined transition, or a repeated
/// configuration; each cause is flagged distinctly.
inline LbaTrace lba_simulate(const Lba& m, std::string_view word, std::size_t step_cap) {
    for (char c : word)
        if (c != '0' && c != '1') throw std::invalid_argument("lba: input must be over {0,1}");
    m.validate();
    LbaTrace trace;
    LbaConfig cfg{m.start, 1, std::string(1, Lba::kLeft) + std::string(word) + Lba::kRight};
    trace.configurations.push_back(cfg);
    std::set<LbaConfig> seen{cfg};
    while (true) {
        if (cfg.state == m.halt) {
            trace.halted = true;
            trace.reason = LbaStop::halted;
            return trace;
        }
        if (trace.steps >= step_cap) {
            trace.reason = LbaStop::step_cap;
            return trace;
        }
        auto it = m.delta.find({cfg.state, cfg.tape[static_cast<std::size_t>(cfg.head)]});
        if (it == m.delta.end()) {
            trace.reason = LbaStop::undefined_transition;
            return trace;
        }
        const auto& tr = it->second;
        cfg.state = tr.next;
        cfg.tape[static_cast<std::size_t>(cfg.head)] = tr.write;
        cfg.head += tr.move == Lba::Move::right ? 1 : -1;
        if (cfg.head < 0 || cfg.head >= static_cast<long long>(cfg.tape.size()))
            throw std::logic_error("lba: head left the tape");
        ++trace.steps;
        trace.configurations.push_back(cfg);
        if (!seen.insert(cfg).second) {
            trace.reason = LbaStop::cycle;
            return trace;
        }
    }
}

inline std::string to_string(const LbaConfig& c) {
    return c.state + " " + std::to_string(c.head) + " " + c.tape;
}

}  // namespace subalg
