#include "intreg/io.hpp"

namespace intreg::io {

json nat_to_json(const Nat& n) {
    if (n <= Nat(std::uint64_t{1} << 53)) return static_cast<std::uint64_t>(n);
    return n.str();
}

Nat nat_from_json(const json& j) {
    if (j.is_number_unsigned()) return Nat(j.get<std::uint64_t>());
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Nat(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("expected a non-negative integer, got \"" + s + "\"");
        return Nat(s);
    }
    throw std::invalid_argument("expected a non-negative integer");
}

json nfa_to_json(const Nfa& m) {
    json ts = json::array();
    for (const auto& t : m.transitions()) ts.push_back({t.src, std::string(1, to_char(t.sym)), t.dst});
    return {{"states", m.num_states()}, {"initial", m.initial()}, {"finals", m.finals()}, {"transitions", ts}};
}

Nfa nfa_from_json(const json& j) {
    try {
        int n = j.at("states").get<int>();
        State init = j.at("initial").get<State>();
        auto finals = j.at("finals").get<std::vector<State>>();
        std::vector<Transition> ts;
        for (const auto& t : j.at("transitions")) {
            if (!t.is_array() || t.size() != 3) throw std::invalid_argument("transition must be [src, symbol, dst]");
            auto sym = t[1].get<std::string>();
            auto s = sym.size() == 1 ? symbol_from_char(sym[0]) : std::nullopt;
            if (!s) throw std::invalid_argument("unknown symbol \"" + sym + "\"");
            ts.push_back({t[0].get<State>(), *s, t[2].get<State>()});
        }
        return Nfa(n, init, finals, ts);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed automaton JSON: ") + e.what());
    } catch (const AutomatonError& e) {
        throw std::invalid_argument(std::string("malformed automaton JSON: ") + e.what());
    }
}

json graph_to_json(const GraphInstance& inst) {
    json edges = json::array();
    for (const auto& [u, v] : inst.graph.edges) edges.push_back({u, v});
    return {{"vertices", inst.graph.vertices}, {"edges", edges}, {"k", nat_to_json(inst.k)}};
}

json red_blue_to_json(const RedBlueInstance& inst) {
    json edges = json::array();
    for (const auto& [r, b] : inst.graph.edges) edges.push_back({r, b});
    return {{"red", inst.graph.red}, {"blue", inst.graph.blue}, {"edges", edges}, {"k", nat_to_json(inst.k)}};
}

GraphInstance graph_from_json(const json& j) {
    try {
        GraphInstance inst;
        inst.k = j.contains("k") ? nat_from_json(j.at("k")) : Nat(0);
        for (Vertex v : j.at("vertices").get<std::vector<Vertex>>()) inst.graph.add_vertex(v);
        for (const auto& e : j.at("edges")) {
            auto uv = e.get<std::vector<Vertex>>();
            if (uv.size() != 2) throw std::invalid_argument("edge must have two endpoints");
            inst.graph.add_edge(uv[0], uv[1]);
        }
        return inst;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
    } catch (const GraphError& e) {
        throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
    }
}

RedBlueInstance red_blue_from_json(const json& j) {
    try {
        RedBlueInstance inst;
        inst.k = j.contains("k") ? nat_from_json(j.at("k")) : Nat(0);
        for (Vertex v : j.value("red", std::vector<Vertex>{})) inst.graph.red.insert(v);
        for (Vertex v : j.value("blue", std::vector<Vertex>{})) inst.graph.blue.insert(v);
        for (const auto& e : j.at("edges")) {
            auto rb = e.get<std::vector<Vertex>>();
            if (rb.size() != 2) throw std::invalid_argument("edge must have two endpoints");
            inst.graph.add_edge(rb[0], rb[1]);
        }
        return inst;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed red-blue graph JSON: ") + e.what());
    }
}

json certificate_to_json(const std::optional<Certificate>& c) {
    if (!c) return nullptr;
    json out = {{"kind", c->kind}};
    if (!c->sets.empty()) out["sets"] = c->sets;
    if (!c->edge_sets.empty()) {
        json es = json::array();
        for (const auto& set : c->edge_sets) {
            json one = json::array();
            for (const auto& [u, v] : set) one.push_back({u, v});
            es.push_back(one);
        }
        out["edge_sets"] = es;
    }
    return out;
}

json verdict_to_json(const Verdict& v) {
    return {{"positive", v.positive}, {"certificate", certificate_to_json(v.certificate)}};
}

json rep_to_json(const RepFunction& rep) {
    json out = json::object();
    for (const auto& [pq, toks] : rep.table()) {
        json list = json::array();
        for (const auto& t : toks) list.push_back(render(t));
        out["(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")"] = list;
    }
    return out;
}

json core_to_json(const FiniteCore& core) {
    json out = json::array();
    for (const auto& inst : core.instances) {
        bool rb = core.interpretation == Interpretation::RedBlue;
        json g = rb ? red_blue_to_json(inst.rb_instance) : graph_to_json(inst.instance);
        out.push_back({{"graph", g}, {"k", g["k"]}, {"witness", render(inst.witness)}});
    }
    return out;
}

json decision_to_json(const Decision& d, const ProblemSpec& p) {
    json out;
    out["answer"] = d.answer == Answer::NonEmpty ? "nonempty" : "empty";
    if (d.witness) {
        json g = p.red_blue ? red_blue_to_json(d.witness->rb_instance) : graph_to_json(d.witness->instance);
        out["witness"] = {{"word", render(d.witness->word)},
                          {"graph", g},
                          {"k", g["k"]},
                          {"certificate", certificate_to_json(d.witness->verdict.certificate)}};
    } else {
        out["witness"] = nullptr;
    }
    out["stats"] = {{"core_size", d.stats.core_size},
                    {"ell", nat_to_json(d.stats.ell)},
                    {"rep_tokens", d.stats.rep_tokens},
                    {"states", d.stats.states},
                    {"configs", d.stats.configs},
                    {"exhausted", d.stats.exhausted}};
    return out;
}

json registry_to_json() {
    json out = json::array();
    for (const auto& p : registry()) {
        out.push_back({{"name", p.name},
                       {"title", p.title},
                       {"case", to_string(p.kind)},
                       {"param_role", to_string(p.role)},
                       {"supported", p.supported()},
                       {"red_blue", p.red_blue},
                       {"note", p.note}});
    }
    return out;
}

}  // namespace intreg::io
