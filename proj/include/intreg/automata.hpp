#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace intreg {

using Nat = boost::multiprecision::cpp_int;

// Enumerator order equals shortlex order: '#' < '$' < '1' < '>' < 'a'.
enum class Symbol : std::uint8_t { Hash = 0, Dollar = 1, One = 2, Start = 3, A = 4 };

inline constexpr int kNumSymbols = 5;
inline constexpr Symbol kAllSymbols[kNumSymbols] = {Symbol::Hash, Symbol::Dollar, Symbol::One,
                                                    Symbol::Start, Symbol::A};

char to_char(Symbol s);
std::optional<Symbol> symbol_from_char(char c);

using Word = std::vector<Symbol>;

// Throws std::invalid_argument on characters outside the alphabet.
Word to_word(std::string_view text);
std::string to_string(const Word& w);
bool shortlex_less(const Word& a, const Word& b);

using State = int;

struct Transition {
    State src;
    Symbol sym;
    State dst;
    auto operator<=>(const Transition&) const = default;
};

class AutomatonError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RegexError : public std::runtime_error {
public:
    RegexError(const std::string& msg, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Epsilon-free NFA with dense states 0..n-1. Immutable after construction.
class Nfa {
public:
    Nfa(int num_states, State initial, std::vector<State> finals, std::vector<Transition> transitions);

    // One non-accepting state, no transitions.
    static Nfa empty_language();

    int num_states() const { return num_states_; }
    State initial() const { return initial_; }
    const std::vector<State>& finals() const { return finals_; }
    bool is_final(State q) const { return final_mask_[q]; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    // Outgoing transitions of q, sorted by (symbol, target).
    const std::vector<Transition>& out(State q) const { return out_[q]; }
    std::size_t num_transitions() const { return transitions_.size(); }

private:
    int num_states_;
    State initial_;
    std::vector<State> finals_;
    std::vector<bool> final_mask_;
    std::vector<Transition> transitions_;
    std::vector<std::vector<Transition>> out_;
};

using StateSet = std::vector<bool>;

StateSet step(const Nfa& m, const StateSet& from, Symbol s);
StateSet run(const Nfa& m, const StateSet& from, const Word& w);
StateSet singleton(const Nfa& m, State q);
bool intersects_finals(const Nfa& m, const StateSet& s);

// Eventually periodic sequence S_j = delta(start, c^j).
class PowerOrbit {
public:
    PowerOrbit(const Nfa& m, StateSet start, Symbol c);

    const StateSet& at(std::size_t j) const;
    StateSet at(const Nat& j) const;
    std::size_t preperiod() const { return preperiod_; }
    std::size_t period() const { return period_; }
    // Index in [0, preperiod+period) equivalent to j.
    std::size_t reduce(const Nat& j) const;

private:
    std::vector<StateSet> seq_;
    std::size_t preperiod_ = 0;
    std::size_t period_ = 1;
};

Nfa compile_regex(std::string_view pattern);
Nfa from_word(const Word& w);

Nfa intersect(const Nfa& a, const Nfa& b);
Nfa trim(const Nfa& m);
Nfa sub_automaton(const Nfa& m, State p, State q);
Nfa strip_suffix(const Nfa& m, std::size_t k);
Nfa concat(const Nfa& a, const Nfa& b);

bool is_empty(const Nfa& m);
bool is_finite(const Nfa& m);
bool contains(const Nfa& m, const Word& w);

inline constexpr int kDefaultSubsetBound = 12;
// Refuses (AutomatonError) when b has more than max_states states.
bool is_subset(const Nfa& a, const Nfa& b, int max_states = kDefaultSubsetBound);

// Lazily yields L(m) in shortlex order. Terminates iff L(m) is finite.
class ShortlexEnumerator {
public:
    explicit ShortlexEnumerator(const Nfa& m);

    std::optional<Word> next();
    // Stops once words longer than max_len would be produced.
    std::optional<Word> next(std::size_t max_len);

private:
    struct Frame {
        StateSet set;
        int next_sym;
    };
    bool advance_length();
    const StateSet& can_finish(std::size_t remaining);

    Nfa m_;
    bool finite_;
    std::size_t max_len_ = 0;
    std::size_t len_ = 0;
    bool started_ = false;
    bool done_ = false;
    std::vector<StateSet> finish_;
    std::vector<Frame> stack_;
    Word cur_;
};

std::vector<Word> enumerate_up_to(const Nfa& m, std::size_t max_len, std::size_t max_count = SIZE_MAX);

}  // namespace intreg
