#include "pp/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

using json = nlohmann::json;

namespace pp {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(ErrorCode::ParseError, what);
}

Nat nat_from_string(const std::string& s) {
    try {
        return Nat(s);
    } catch (const std::exception&) {
        parse_fail("bad number '" + s + "'");
    }
}

int state_index(const Protocol& p, const std::string& name) {
    for (std::size_t q = 0; q < p.states.size(); ++q)
        if (p.states[q] == name) return static_cast<int>(q);
    parse_fail("unknown state '" + name + "'");
}

json config_to_json(const Protocol& p, const Config& c) {
    json out = json::object();
    for (std::size_t q = 0; q < c.dim(); ++q)
        if (c[q] != 0) out[p.states[q]] = c[q].str();
    return out;
}

Config config_from_json(const Protocol& p, const json& j) {
    if (!j.is_object()) parse_fail("configuration must be an object");
    Config c(p.state_count());
    for (const auto& [name, count] : j.items())
        c[static_cast<std::size_t>(state_index(p, name))] =
            nat_from_string(count.get<std::string>());
    return c;
}

json transition_to_json(const Protocol& p, const Transition& t) {
    return json::array({p.states[static_cast<std::size_t>(t.p)],
                        p.states[static_cast<std::size_t>(t.q)],
                        p.states[static_cast<std::size_t>(t.r)],
                        p.states[static_cast<std::size_t>(t.s)]});
}

Transition transition_from_json(const Protocol& p, const json& j) {
    if (!j.is_array() || j.size() != 4) parse_fail("transition must be a 4-element array");
    return Transition(state_index(p, j[0].get<std::string>()),
                      state_index(p, j[1].get<std::string>()),
                      state_index(p, j[2].get<std::string>()),
                      state_index(p, j[3].get<std::string>()));
}

json states_to_json(const Protocol& p, const std::vector<char>& indicator) {
    json out = json::array();
    for (std::size_t q = 0; q < p.state_count(); ++q)
        if (q < indicator.size() && indicator[q]) out.push_back(p.states[q]);
    return out;
}

std::vector<char> states_from_json(const Protocol& p, const json& j) {
    std::vector<char> out(p.state_count(), 0);
    for (const auto& name : j)
        out[static_cast<std::size_t>(state_index(p, name.get<std::string>()))] = 1;
    return out;
}

json multiset_to_json(const Protocol& p, const TransitionMultiset& pi) {
    json out = json::array();
    for (std::size_t i = 0; i < pi.mult.size(); ++i) {
        if (pi.mult[i] == 0) continue;
        json entry;
        entry["transition"] = transition_to_json(p, p.transitions[i]);
        entry["count"] = pi.mult[i].str();
        out.push_back(entry);
    }
    return out;
}

TransitionMultiset multiset_from_json(const Protocol& p, const json& j) {
    TransitionMultiset pi(p.transitions.size());
    for (const auto& entry : j) {
        Transition t = transition_from_json(p, entry.at("transition"));
        int idx = p.transition_index(t);
        if (idx < 0) parse_fail("multiset names a transition the protocol lacks");
        pi.mult[static_cast<std::size_t>(idx)] =
            nat_from_string(entry.at("count").get<std::string>());
    }
    return pi;
}

json witness_to_json(const Protocol& p, const WitnessPtr& w);

json witness_node_to_json(const Protocol& p, const Witness& w) {
    json out;
    if (const auto* steps = std::get_if<StepsWitness>(&w.node)) {
        out["kind"] = "steps";
        json arr = json::array();
        for (const Transition& t : steps->steps) arr.push_back(transition_to_json(p, t));
        out["steps"] = arr;
    } else if (const auto* concat = std::get_if<ConcatWitness>(&w.node)) {
        out["kind"] = "concat";
        json arr = json::array();
        for (const auto& part : concat->parts) arr.push_back(witness_to_json(p, part));
        out["parts"] = arr;
    } else {
        const auto& rep = std::get<RepeatWitness>(w.node);
        out["kind"] = "repeat";
        out["count"] = rep.count.str();
        out["base"] = config_to_json(p, rep.base);
        out["consume"] = config_to_json(p, rep.consume);
        out["produce"] = config_to_json(p, rep.produce);
        out["body"] = witness_to_json(p, rep.body);
    }
    return out;
}

json witness_to_json(const Protocol& p, const WitnessPtr& w) {
    if (!w) parse_fail("null witness");
    return witness_node_to_json(p, *w);
}

WitnessPtr witness_from_json(const Protocol& p, const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "steps") {
        std::vector<Transition> steps;
        for (const auto& t : j.at("steps")) steps.push_back(transition_from_json(p, t));
        return make_steps(std::move(steps));
    }
    if (kind == "concat") {
        std::vector<WitnessPtr> parts;
        for (const auto& part : j.at("parts")) parts.push_back(witness_from_json(p, part));
        return make_concat(std::move(parts));
    }
    if (kind == "repeat") {
        return make_repeat(witness_from_json(p, j.at("body")),
                           nat_from_string(j.at("count").get<std::string>()),
                           config_from_json(p, j.at("base")),
                           config_from_json(p, j.at("consume")),
                           config_from_json(p, j.at("produce")));
    }
    parse_fail("unknown witness kind '" + kind + "'");
}

}  // namespace

std::string protocol_to_json(const Protocol& p) {
    json out;
    out["states"] = p.states;
    out["input"] = p.states[static_cast<std::size_t>(p.input_state)];
    out["leaders"] = config_to_json(p, p.leaders);
    json outputs = json::object();
    for (std::size_t q = 0; q < p.state_count(); ++q) out["outputs"][p.states[q]] = p.output[q];
    json transitions = json::array();
    for (const Transition& t : p.transitions) transitions.push_back(transition_to_json(p, t));
    out["transitions"] = transitions;
    return out.dump(2) + "\n";
}

Protocol protocol_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        parse_fail(e.what());
    }
    try {
        Protocol p;
        p.states = j.at("states").get<std::vector<std::string>>();
        if (p.states.empty()) parse_fail("protocol needs at least one state");
        p.input_state = state_index(p, j.at("input").get<std::string>());
        p.leaders = j.contains("leaders") ? config_from_json(p, j.at("leaders"))
                                          : Config(p.state_count());
        p.output.assign(p.state_count(), 0);
        for (const auto& [name, v] : j.at("outputs").items()) {
            int b = v.get<int>();
            if (b != 0 && b != 1) parse_fail("outputs must be 0 or 1");
            p.output[static_cast<std::size_t>(state_index(p, name))] = b;
        }
        for (const auto& t : j.at("transitions"))
            p.transitions.push_back(transition_from_json(p, t));
        p.sort_transitions();
        return p;
    } catch (const json::exception& e) {
        parse_fail(e.what());
    }
}

std::string certificate_to_json(const Protocol& p, const Certificate& cert) {
    json out;
    out["variant"] = cert.variant == CertVariant::leaderless ? "leaderless" : "withLeaders";
    out["a"] = cert.a.str();
    out["b"] = cert.b.str();
    out["S"] = states_to_json(p, cert.S);
    out["E"] = config_to_json(p, cert.E);
    out["D_b"] = config_to_json(p, cert.D_b);
    if (cert.variant == CertVariant::leaderless) {
        out["D"] = config_to_json(p, cert.D);
        out["pi"] = multiset_to_json(p, cert.pi);
    }
    json witnesses = json::object();
    for (const auto& [name, w] : cert.witnesses) witnesses[name] = witness_to_json(p, w);
    out["witnesses"] = witnesses;
    return out.dump(2) + "\n";
}

Certificate certificate_from_json(const Protocol& p, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        parse_fail(e.what());
    }
    try {
        Certificate cert;
        std::string variant = j.at("variant").get<std::string>();
        if (variant == "leaderless")
            cert.variant = CertVariant::leaderless;
        else if (variant == "withLeaders")
            cert.variant = CertVariant::withLeaders;
        else
            parse_fail("unknown variant '" + variant + "'");
        cert.a = nat_from_string(j.at("a").get<std::string>());
        cert.b = nat_from_string(j.at("b").get<std::string>());
        cert.S = states_from_json(p, j.at("S"));
        cert.E = config_from_json(p, j.at("E"));
        cert.D_b = config_from_json(p, j.at("D_b"));
        cert.D = j.contains("D") ? config_from_json(p, j.at("D")) : Config(p.state_count());
        cert.pi = j.contains("pi") ? multiset_from_json(p, j.at("pi"))
                                   : TransitionMultiset(p.transitions.size());
        for (const auto& [name, w] : j.at("witnesses").items())
            cert.witnesses[name] = witness_from_json(p, w);
        return cert;
    } catch (const json::exception& e) {
        parse_fail(e.what());
    }
}

std::string decomposition_to_json(const Protocol& p, const IdealDecomposition& d) {
    json out;
    out["polarity"] = std::string(1, d.polarity);
    json ideals = json::array();
    for (const Ideal& ideal : d.ideals) {
        json entry;
        entry["form"] =
            ideal.form == IdealForm::downCylinder ? "downCylinder" : "paperCylinder";
        entry["bound"] = config_to_json(p, ideal.bound);
        entry["free"] = states_to_json(p, ideal.free);
        ideals.push_back(entry);
    }
    out["ideals"] = ideals;
    return out.dump(2) + "\n";
}

std::string matrix_to_json(const DiophSystem& sys) {
    json rows = json::array();
    for (const auto& row : sys.rows) {
        json r = json::array();
        for (const Int& a : row) r.push_back(a.str());
        rows.push_back(r);
    }
    json out;
    out["rows"] = rows;
    out["vars"] = sys.vars;
    return out.dump(2) + "\n";
}

DiophSystem matrix_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        parse_fail(e.what());
    }
    try {
        DiophSystem sys;
        sys.vars = j.at("vars").get<std::size_t>();
        for (const auto& row : j.at("rows")) {
            std::vector<Int> r;
            for (const auto& a : row) {
                std::string s = a.get<std::string>();
                bool neg = !s.empty() && s[0] == '-';
                Int v = nat_from_string(neg ? s.substr(1) : s);
                r.push_back(neg ? -v : v);
            }
            if (r.size() != sys.vars) parse_fail("row width does not match vars");
            sys.rows.push_back(std::move(r));
        }
        return sys;
    } catch (const json::exception& e) {
        parse_fail(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_fail("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) parse_fail("cannot write '" + path + "'");
    out << content;
}

}  // namespace pp
