#include "flatchain/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace flatchain {

namespace {

const char* const kModule = "io";

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Error::Kind::Parse, kModule, what); }

Rational rational_field(const nlohmann::json& j, const std::string& where)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    parse_fail(where + ": expected a rational string or an integer");
}

int int_field(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer())
        parse_fail(std::string("missing integer field \"") + key + "\"");
    return j.at(key).get<int>();
}

}   // namespace

PolyChain parse_chain(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail("malformed chain file at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object())
        parse_fail("chain file must be a JSON object");
    const int d = int_field(j, "ambient_dim");
    const int k = int_field(j, "dim");
    if (d < 1 || k < 0 || k > d)
        parse_fail("need 0 ≤ dim ≤ ambient_dim and ambient_dim ≥ 1");
    if (!j.contains("group") || !j.at("group").is_string())
        parse_fail("missing string field \"group\"");
    GroupTag group = GroupTag::parse(j.at("group").get<std::string>());

    std::optional<int> n;
    if (j.contains("complex") && !j.at("complex").is_null()) {
        const auto& cx = j.at("complex");
        if (!cx.is_object() || cx.value("type", std::string()) != "kuhn")
            parse_fail("complex must be {\"type\": \"kuhn\", \"n\": …}");
        n = int_field(cx, "n");
    }
    PolyChain out(group, d, k, n);
    if (!j.contains("simplices") || !j.at("simplices").is_array())
        parse_fail("missing array field \"simplices\"");
    std::size_t index = 0;
    for (const auto& t : j.at("simplices")) {
        const std::string where = "simplices[" + std::to_string(index++) + "]";
        if (!t.is_object() || !t.contains("vertices") || !t.at("vertices").is_array() || !t.contains("coeff"))
            parse_fail(where + ": expected {vertices, coeff}");
        std::vector<Point> verts;
        for (const auto& v : t.at("vertices")) {
            if (!v.is_array() || static_cast<int>(v.size()) != d)
                parse_fail(where + ": every vertex needs " + std::to_string(d) + " coordinates");
            Point p;
            for (const auto& x : v)
                p.push_back(rational_field(x, where));
            verts.push_back(std::move(p));
        }
        if (static_cast<int>(verts.size()) != k + 1)
            parse_fail(where + ": a " + std::to_string(k) + "-simplex needs " + std::to_string(k + 1) + " vertices");
        out.add_term(Simplex(std::move(verts)), Coefficient(group, rational_field(t.at("coeff"), where)));
    }
    if (n)
        out = attach(out, *kuhn_complex(d, *n));
    return out;
}

std::string emit_chain(const PolyChain& c)
{
    nlohmann::ordered_json j;
    j["ambient_dim"] = c.ambient_dim();
    j["dim"] = c.dim();
    j["group"] = c.group().name();
    if (c.complex_resolution())
        j["complex"] = {{"type", "kuhn"}, {"n", *c.complex_resolution()}};
    auto simplices = nlohmann::ordered_json::array();
    for (const auto& [s, g] : c.terms()) {
        auto verts = nlohmann::ordered_json::array();
        for (const auto& p : s.vertices()) {
            auto coords = nlohmann::ordered_json::array();
            for (const auto& x : p)
                coords.push_back(to_string(x));
            verts.push_back(coords);
        }
        simplices.push_back({{"vertices", verts}, {"coeff", to_string(g.value())}});
    }
    j["simplices"] = simplices;
    return j.dump(1) + "\n";
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        parse_fail("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        parse_fail("cannot write " + path);
}

PolyChain read_chain_file(const std::string& path) { return parse_chain(read_text_file(path)); }
void write_chain_file(const std::string& path, const PolyChain& c) { write_text_file(path, emit_chain(c)); }

GridFunction parse_grid_function(const std::string& text)
{
    std::istringstream in(text);
    GridFunction u;
    if (!(in >> u.d >> u.n))
        parse_fail("grid function header must be \"d n\"");
    std::string tok;
    while (in >> tok)
        u.values.push_back(parse_rational(tok));
    try {
        validate(u);
    } catch (const Error& e) {
        parse_fail(e.what());
    }
    return u;
}

std::string emit_grid_function(const GridFunction& u)
{
    std::ostringstream out;
    out << u.d << ' ' << u.n << '\n';
    const std::size_t row = static_cast<std::size_t>(u.n);
    for (std::size_t i = 0; i < u.values.size(); ++i)
        out << to_string(u.values[i]) << ((i + 1) % row == 0 ? '\n' : ' ');
    return out.str();
}

std::string decimal(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void Report::add(const std::string& key, const SurdSum& value)
{
    add(key, value.str());
    add(key + "_decimal", decimal(value.to_double()));
}

void Report::add(const std::string& key, double value) { add(key, decimal(value)); }

std::string Report::str() const
{
    std::ostringstream out;
    for (const auto& [k, v] : lines_)
        out << k << " = " << v << '\n';
    out << "VERDICT = " << (verdict_ ? "PASS" : "FAIL") << '\n';
    return out.str();
}

}   // namespace flatchain
