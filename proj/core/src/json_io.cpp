#include "xent/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace xent {

namespace {

using nlohmann::json;

json parse_document(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError(std::string(what) + ": not valid JSON");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    return buf.str();
}

}  // namespace

XState parse_state_json(const std::string& text) {
    const json j = parse_document(text, "state");
    if (!j.is_object() || !j.contains("n") || !j.contains("diag") || !j.contains("anti"))
        throw IoError("state: expected object with n, diag, anti");
    if (!j["n"].is_number_integer())
        throw IoError("state: n must be an integer");
    const int n = j["n"].get<int>();
    if (n < 1 || n > 30) throw IoError("state: n out of range");
    const std::size_t dim = std::size_t{1} << n;

    const json& jd = j["diag"];
    if (!jd.is_array() || jd.size() != dim)
        throw IoError("state: diag must hold 2^n numbers");
    std::vector<double> d(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!jd[i].is_number()) throw IoError("state: diag entries must be numbers");
        d[i] = jd[i].get<double>();
    }

    const json& je = j["anti"];
    if (!je.is_array() || je.size() != dim / 2)
        throw IoError("state: anti must hold 2^{n-1} [re, im] pairs");
    std::vector<cx> e(dim / 2);
    for (std::size_t i = 0; i < dim / 2; ++i) {
        const json& pair = je[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw IoError("state: anti entries must be [re, im] pairs");
        e[i] = cx{pair[0].get<double>(), pair[1].get<double>()};
    }

    try {
        XState s(n, std::move(d), std::move(e));
        const ValidationReport report = validate(s);
        if (!report.ok()) throw IoError("state: not a valid density matrix: " + report.summary());
        return s;
    } catch (const std::invalid_argument& ex) {
        throw IoError(std::string("state: ") + ex.what());
    }
}

std::string state_to_json(const XState& s) {
    json j;
    j["n"] = s.qubits();
    j["diag"] = s.diag();
    json anti = json::array();
    for (const cx& z : s.anti_top()) anti.push_back({z.real(), z.imag()});
    j["anti"] = std::move(anti);
    return j.dump(2) + "\n";
}

XState read_state_json(const std::string& path) {
    return parse_state_json(read_file(path));
}

void write_state_json(const XState& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << state_to_json(s);
    if (!out) throw IoError("cannot write " + path);
}

ChannelSpec parse_channel_json(const std::string& text) {
    const json j = parse_document(text, "channel");
    if (!j.is_object() || !j.contains("kind") || !j.contains("p"))
        throw IoError("channel: expected object with kind, p");
    if (!j["kind"].is_string() || !j["p"].is_number())
        throw IoError("channel: kind must be a string and p a number");
    const std::string kind = j["kind"].get<std::string>();
    ChannelSpec spec{};
    if (kind == "dephasing") spec.kind = ChannelKind::dephasing;
    else if (kind == "depolarizing") spec.kind = ChannelKind::depolarizing;
    else throw IoError("channel: unknown kind \"" + kind + "\"");
    spec.p = j["p"].get<double>();
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw IoError("channel: p must lie in [0, 1]");
    return spec;
}

ChannelSpec read_channel_json(const std::string& path) {
    return parse_channel_json(read_file(path));
}

std::string format_number(double v) {
    if (v == 0.0) return "0";  // collapses -0 as well
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

}  // namespace xent
