#include "intreg/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace intreg {

char to_char(Symbol s) {
    switch (s) {
        case Symbol::Hash: return '#';
        case Symbol::Dollar: return '$';
        case Symbol::One: return '1';
        case Symbol::Start: return '>';
        case Symbol::A: return 'a';
    }
    return '?';
}

std::optional<Symbol> symbol_from_char(char c) {
    switch (c) {
        case '#': return Symbol::Hash;
        case '$': return Symbol::Dollar;
        case '1': return Symbol::One;
        case '>': return Symbol::Start;
        case 'a': return Symbol::A;
        default: return std::nullopt;
    }
}

Word to_word(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto s = symbol_from_char(text[i]);
        if (!s) throw std::invalid_argument("symbol outside alphabet at position " + std::to_string(i + 1));
        w.push_back(*s);
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(to_char(s));
    return out;
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

RegexError::RegexError(const std::string& msg, std::size_t position)
    : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}

Nfa::Nfa(int num_states, State initial, std::vector<State> finals, std::vector<Transition> transitions)
    : num_states_(num_states), initial_(initial) {
    if (num_states < 1) throw AutomatonError("automaton needs at least one state");
    auto check = [&](State q) {
        if (q < 0 || q >= num_states) throw AutomatonError("state id out of range: " + std::to_string(q));
    };
    check(initial);
    final_mask_.assign(num_states, false);
    for (State f : finals) {
        check(f);
        final_mask_[f] = true;
    }
    for (State q = 0; q < num_states; ++q)
        if (final_mask_[q]) finals_.push_back(q);
    for (const auto& t : transitions) {
        check(t.src);
        check(t.dst);
    }
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
    transitions_ = std::move(transitions);
    out_.resize(num_states);
    for (const auto& t : transitions_) out_[t.src].push_back(t);
}

Nfa Nfa::empty_language() { return Nfa(1, 0, {}, {}); }

StateSet step(const Nfa& m, const StateSet& from, Symbol s) {
    StateSet to(m.num_states(), false);
    for (State q = 0; q < m.num_states(); ++q) {
        if (!from[q]) continue;
        for (const auto& t : m.out(q))
            if (t.sym == s) to[t.dst] = true;
    }
    return to;
}

StateSet run(const Nfa& m, const StateSet& from, const Word& w) {
    StateSet cur = from;
    for (Symbol s : w) cur = step(m, cur, s);
    return cur;
}

StateSet singleton(const Nfa& m, State q) {
    StateSet s(m.num_states(), false);
    s[q] = true;
    return s;
}

bool intersects_finals(const Nfa& m, const StateSet& s) {
    for (State f : m.finals())
        if (s[f]) return true;
    return false;
}

PowerOrbit::PowerOrbit(const Nfa& m, StateSet start, Symbol c) {
    std::map<StateSet, std::size_t> seen;
    StateSet cur = std::move(start);
    while (true) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            preperiod_ = it->second;
            period_ = seq_.size() - it->second;
            return;
        }
        seen.emplace(cur, seq_.size());
        seq_.push_back(cur);
        cur = step(m, cur, c);
    }
}

const StateSet& PowerOrbit::at(std::size_t j) const {
    if (j >= seq_.size()) j = preperiod_ + (j - preperiod_) % period_;
    return seq_[j];
}

std::size_t PowerOrbit::reduce(const Nat& j) const {
    if (j < seq_.size()) return static_cast<std::size_t>(j);
    Nat r = (j - preperiod_) % period_;
    return preperiod_ + static_cast<std::size_t>(r);
}

StateSet PowerOrbit::at(const Nat& j) const { return seq_[reduce(j)]; }

namespace {

// Thompson construction with explicit epsilon edges, eliminated afterwards.
struct EpsNfa {
    std::vector<std::vector<std::pair<Symbol, int>>> edges;
    std::vector<std::vector<int>> eps;

    int add() {
        edges.emplace_back();
        eps.emplace_back();
        return static_cast<int>(edges.size()) - 1;
    }
};

struct Frag {
    int in;
    int out;
};

class RegexParser {
public:
    explicit RegexParser(std::string_view p) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            char c = p[i];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
            chars_.push_back(c);
            pos_.push_back(i + 1);
        }
    }

    Nfa parse() {
        Frag f = parse_alt();
        if (i_ < chars_.size()) throw RegexError("unexpected ')'", pos_[i_]);
        return finish(f);
    }

private:
    bool at_end() const { return i_ >= chars_.size(); }

    Frag epsilon() {
        int s = g_.add();
        return {s, s};
    }

    Frag parse_alt() {
        Frag left = parse_concat();
        while (!at_end() && chars_[i_] == '|') {
            ++i_;
            Frag right = parse_concat();
            int s = g_.add();
            int t = g_.add();
            g_.eps[s].push_back(left.in);
            g_.eps[s].push_back(right.in);
            g_.eps[left.out].push_back(t);
            g_.eps[right.out].push_back(t);
            left = {s, t};
        }
        return left;
    }

    Frag parse_concat() {
        Frag acc = epsilon();
        while (!at_end() && chars_[i_] != '|' && chars_[i_] != ')') {
            Frag f = parse_repeat();
            g_.eps[acc.out].push_back(f.in);
            acc.out = f.out;
        }
        return acc;
    }

    Frag parse_repeat() {
        Frag f = parse_atom();
        while (!at_end() && (chars_[i_] == '*' || chars_[i_] == '+' || chars_[i_] == '?')) {
            char op = chars_[i_++];
            int s = g_.add();
            int t = g_.add();
            g_.eps[s].push_back(f.in);
            g_.eps[f.out].push_back(t);
            if (op != '+') g_.eps[s].push_back(t);
            if (op != '?') g_.eps[f.out].push_back(f.in);
            f = {s, t};
        }
        return f;
    }

    Frag parse_atom() {
        char c = chars_[i_];
        std::size_t where = pos_[i_];
        if (c == '(') {
            ++i_;
            Frag inner = parse_alt();
            if (at_end() || chars_[i_] != ')') throw RegexError("unmatched '('", where);
            ++i_;
            return inner;
        }
        if (c == '*' || c == '+' || c == '?') throw RegexError("quantifier without operand", where);
        auto sym = symbol_from_char(c);
        if (!sym) throw RegexError(std::string("unknown character '") + c + "'", where);
        ++i_;
        int s = g_.add();
        int t = g_.add();
        g_.edges[s].push_back({*sym, t});
        return {s, t};
    }

    Nfa finish(Frag f) {
        int n = static_cast<int>(g_.edges.size());
        std::vector<std::vector<int>> closure(n);
        for (int q = 0; q < n; ++q) {
            std::vector<bool> seen(n, false);
            std::vector<int> todo{q};
            seen[q] = true;
            while (!todo.empty()) {
                int x = todo.back();
                todo.pop_back();
                closure[q].push_back(x);
                for (int y : g_.eps[x])
                    if (!seen[y]) {
                        seen[y] = true;
                        todo.push_back(y);
                    }
            }
        }
        std::vector<Transition> ts;
        std::vector<State> finals;
        for (int q = 0; q < n; ++q) {
            for (int x : closure[q]) {
                if (x == f.out) finals.push_back(q);
                for (auto [sym, y] : g_.edges[x]) ts.push_back({q, sym, y});
            }
        }
        return trim(Nfa(n, f.in, finals, ts));
    }

    EpsNfa g_;
    std::vector<char> chars_;
    std::vector<std::size_t> pos_;
    std::size_t i_ = 0;
};

std::vector<bool> reachable_from(const Nfa& m, State start) {
    std::vector<bool> seen(m.num_states(), false);
    std::vector<State> todo{start};
    seen[start] = true;
    while (!todo.empty()) {
        State q = todo.back();
        todo.pop_back();
        for (const auto& t : m.out(q))
            if (!seen[t.dst]) {
                seen[t.dst] = true;
                todo.push_back(t.dst);
            }
    }
    return seen;
}

std::vector<bool> coreachable(const Nfa& m) {
    std::vector<std::vector<State>> rev(m.num_states());
    for (const auto& t : m.transitions()) rev[t.dst].push_back(t.src);
    std::vector<bool> seen(m.num_states(), false);
    std::vector<State> todo;
    for (State f : m.finals()) {
        seen[f] = true;
        todo.push_back(f);
    }
    while (!todo.empty()) {
        State q = todo.back();
        todo.pop_back();
        for (State p : rev[q])
            if (!seen[p]) {
                seen[p] = true;
                todo.push_back(p);
            }
    }
    return seen;
}

}  // namespace

Nfa compile_regex(std::string_view pattern) { return RegexParser(pattern).parse(); }

Nfa from_word(const Word& w) {
    std::vector<Transition> ts;
    for (std::size_t i = 0; i < w.size(); ++i)
        ts.push_back({static_cast<State>(i), w[i], static_cast<State>(i + 1)});
    return Nfa(static_cast<int>(w.size()) + 1, 0, {static_cast<State>(w.size())}, ts);
}

Nfa trim(const Nfa& m) {
    auto fwd = reachable_from(m, m.initial());
    auto bwd = coreachable(m);
    if (!(fwd[m.initial()] && bwd[m.initial()])) return Nfa::empty_language();
    // Renumber in BFS order from the initial state so the result is canonical.
    std::vector<State> id(m.num_states(), -1);
    std::deque<State> queue{m.initial()};
    id[m.initial()] = 0;
    int next = 1;
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (const auto& t : m.out(q)) {
            if (!bwd[t.dst] || id[t.dst] >= 0) continue;
            id[t.dst] = next++;
            queue.push_back(t.dst);
        }
    }
    std::vector<Transition> ts;
    for (const auto& t : m.transitions())
        if (id[t.src] >= 0 && id[t.dst] >= 0) ts.push_back({id[t.src], t.sym, id[t.dst]});
    std::vector<State> finals;
    for (State f : m.finals())
        if (id[f] >= 0) finals.push_back(id[f]);
    return Nfa(next, 0, finals, ts);
}

Nfa intersect(const Nfa& a, const Nfa& b) {
    std::map<std::pair<State, State>, State> id;
    std::vector<std::pair<State, State>> pairs;
    auto get = [&](State x, State y) {
        auto [it, fresh] = id.emplace(std::make_pair(x, y), static_cast<State>(pairs.size()));
        if (fresh) pairs.emplace_back(x, y);
        return it->second;
    };
    get(a.initial(), b.initial());
    std::vector<Transition> ts;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [x, y] = pairs[i];
        for (const auto& ta : a.out(x))
            for (const auto& tb : b.out(y))
                if (ta.sym == tb.sym) ts.push_back({static_cast<State>(i), ta.sym, get(ta.dst, tb.dst)});
    }
    std::vector<State> finals;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (a.is_final(pairs[i].first) && b.is_final(pairs[i].second)) finals.push_back(static_cast<State>(i));
    return trim(Nfa(static_cast<int>(pairs.size()), 0, finals, ts));
}

Nfa sub_automaton(const Nfa& m, State p, State q) {
    if (p < 0 || p >= m.num_states() || q < 0 || q >= m.num_states())
        throw AutomatonError("unknown state in sub_automaton");
    return Nfa(m.num_states(), p, {q}, m.transitions());
}

Nfa strip_suffix(const Nfa& m, std::size_t k) {
    StateSet cur(m.num_states(), false);
    for (State f : m.finals()) cur[f] = true;
    for (std::size_t j = 0; j < k; ++j) {
        StateSet prev(m.num_states(), false);
        for (const auto& t : m.transitions())
            if (cur[t.dst]) prev[t.src] = true;
        if (prev == cur) break;  // fixed point: further steps change nothing
        cur = std::move(prev);
    }
    std::vector<State> finals;
    for (State q = 0; q < m.num_states(); ++q)
        if (cur[q]) finals.push_back(q);
    return trim(Nfa(m.num_states(), m.initial(), finals, m.transitions()));
}

Nfa concat(const Nfa& a, const Nfa& b) {
    int off = a.num_states();
    std::vector<Transition> ts(a.transitions().begin(), a.transitions().end());
    for (const auto& t : b.transitions()) ts.push_back({t.src + off, t.sym, t.dst + off});
    // Every final of a also behaves like b's initial state.
    for (State f : a.finals())
        for (const auto& t : b.out(b.initial())) ts.push_back({f, t.sym, t.dst + off});
    std::vector<State> finals;
    for (State f : b.finals()) finals.push_back(f + off);
    if (b.is_final(b.initial()))
        for (State f : a.finals()) finals.push_back(f);
    return trim(Nfa(a.num_states() + b.num_states(), a.initial(), finals, ts));
}

bool is_empty(const Nfa& m) {
    auto fwd = reachable_from(m, m.initial());
    for (State f : m.finals())
        if (fwd[f]) return false;
    return true;
}

bool is_finite(const Nfa& m) {
    Nfa t = trim(m);
    int n = t.num_states();
    std::vector<int> color(n, 0);
    for (State root = 0; root < n; ++root) {
        if (color[root]) continue;
        std::vector<std::pair<State, std::size_t>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [q, i] = stack.back();
            if (i == t.out(q).size()) {
                color[q] = 2;
                stack.pop_back();
                continue;
            }
            State r = t.out(q)[i++].dst;
            if (color[r] == 1) return false;
            if (color[r] == 0) {
                color[r] = 1;
                stack.push_back({r, 0});
            }
        }
    }
    return true;
}

bool contains(const Nfa& m, const Word& w) {
    return intersects_finals(m, run(m, singleton(m, m.initial()), w));
}

bool is_subset(const Nfa& a, const Nfa& b, int max_states) {
    if (b.num_states() > max_states)
        throw AutomatonError("is_subset: right operand has " + std::to_string(b.num_states()) +
                             " states, bound is " + std::to_string(max_states));
    using Key = std::pair<State, StateSet>;
    std::set<Key> seen;
    std::vector<Key> todo{{a.initial(), singleton(b, b.initial())}};
    seen.insert(todo.front());
    while (!todo.empty()) {
        auto [x, ys] = todo.back();
        todo.pop_back();
        if (a.is_final(x) && !intersects_finals(b, ys)) return false;
        for (const auto& t : a.out(x)) {
            Key next{t.dst, step(b, ys, t.sym)};
            if (seen.insert(next).second) todo.push_back(std::move(next));
        }
    }
    return true;
}

ShortlexEnumerator::ShortlexEnumerator(const Nfa& m) : m_(trim(m)), finite_(is_finite(m_)) {
    max_len_ = static_cast<std::size_t>(m_.num_states() - 1);
    StateSet f(m_.num_states(), false);
    for (State q : m_.finals()) f[q] = true;
    finish_.push_back(std::move(f));
}

const StateSet& ShortlexEnumerator::can_finish(std::size_t remaining) {
    while (finish_.size() <= remaining) {
        const StateSet& last = finish_.back();
        StateSet prev(m_.num_states(), false);
        for (const auto& t : m_.transitions())
            if (last[t.dst]) prev[t.src] = true;
        finish_.push_back(std::move(prev));
    }
    return finish_[remaining];
}

namespace {
bool overlaps(const StateSet& a, const StateSet& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return true;
    return false;
}
}  // namespace

bool ShortlexEnumerator::advance_length() {
    if (started_) ++len_;
    started_ = true;
    if (finite_ && len_ > max_len_) return false;
    StateSet init = singleton(m_, m_.initial());
    if (overlaps(init, can_finish(len_))) stack_.push_back({std::move(init), 0});
    return true;
}

std::optional<Word> ShortlexEnumerator::next(std::size_t max_len) {
    if (done_) return std::nullopt;
    auto pop = [&] {
        stack_.pop_back();
        if (!cur_.empty()) cur_.pop_back();
    };
    while (true) {
        if (stack_.empty()) {
            if (started_ && len_ >= max_len) return std::nullopt;
            if (!advance_length()) {
                done_ = true;
                return std::nullopt;
            }
            continue;
        }
        Frame& f = stack_.back();
        std::size_t depth = stack_.size() - 1;
        if (depth == len_) {
            bool accept = intersects_finals(m_, f.set);
            Word out = cur_;
            pop();
            if (accept) return out;
            continue;
        }
        if (f.next_sym >= kNumSymbols) {
            pop();
            continue;
        }
        Symbol c = kAllSymbols[f.next_sym++];
        StateSet ns = step(m_, f.set, c);
        if (overlaps(ns, can_finish(len_ - depth - 1))) {
            cur_.push_back(c);
            stack_.push_back({std::move(ns), 0});
        }
    }
}

std::optional<Word> ShortlexEnumerator::next() { return next(SIZE_MAX); }

std::vector<Word> enumerate_up_to(const Nfa& m, std::size_t max_len, std::size_t max_count) {
    ShortlexEnumerator it(m);
    std::vector<Word> out;
    while (out.size() < max_count) {
        auto w = it.next(max_len);
        if (!w) break;
        out.push_back(std::move(*w));
    }
    return out;
}

}  // namespace intreg
