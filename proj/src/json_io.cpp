#include "laygraph/json_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>

namespace laygraph {

using nlohmann::json;

namespace {

void reject_unknown_fields(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw Error(ErrorKind::Syntax, "unknown field \"" + key + "\" in " + std::string(where));
    }
}

const json& require(const json& obj, const char* key, std::string_view where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw Error(ErrorKind::Syntax, "missing field \"" + std::string(key) + "\" in " + std::string(where));
    return *it;
}

std::string require_string(const json& obj, const char* key, std::string_view where) {
    const json& v = require(obj, key, where);
    if (!v.is_string()) throw Error(ErrorKind::Syntax, "field \"" + std::string(key) + "\" in " + std::string(where) + " must be a string");
    return v.get<std::string>();
}

/// Keeps the digits of integers too large for 64 bits.
class ExactIntegerSax : public nlohmann::detail::json_sax_dom_parser<json> {
public:
    using json_sax_dom_parser::json_sax_dom_parser;

    bool number_float(number_float_t val, const string_t& s) {
        const bool integral = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                                         [](char c) { return c >= '0' && c <= '9'; });
        if (integral) {
            string_t digits = s;
            return json_sax_dom_parser::string(digits);
        }
        return json_sax_dom_parser::number_float(val, s);
    }
};

class ObjectWriter {
public:
    ObjectWriter() { os_ << "{"; }

    ObjectWriter& ints(std::string_view key, const std::vector<Int>& values) {
        open(key);
        os_ << "[";
        for (std::size_t i = 0; i < values.size(); ++i) os_ << (i ? ", " : "") << values[i];
        os_ << "]";
        return *this;
    }
    ObjectWriter& number(std::string_view key, std::size_t value) {
        open(key);
        os_ << value;
        return *this;
    }
    ObjectWriter& string(std::string_view key, std::string_view value) {
        open(key);
        os_ << json(value).dump();
        return *this;
    }
    ObjectWriter& null(std::string_view key) {
        open(key);
        os_ << "null";
        return *this;
    }
    std::string finish() {
        os_ << "}";
        return os_.str();
    }

private:
    void open(std::string_view key) {
        os_ << (first_ ? "" : ", ") << json(key).dump() << ": ";
        first_ = false;
    }

    std::ostringstream os_;
    bool first_ = true;
};

}  // namespace

RawGraph parse_raw_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Syntax, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::Syntax, "graph document must be an object");
    reject_unknown_fields(doc, {"name", "vertices", "edges"}, "graph");

    RawGraph raw;
    if (auto it = doc.find("name"); it != doc.end() && !it->is_null()) {
        if (!it->is_string()) throw Error(ErrorKind::Syntax, "\"name\" must be a string");
        raw.name = it->get<std::string>();
    }

    const json& vertices = require(doc, "vertices", "graph");
    if (!vertices.is_array()) throw Error(ErrorKind::Syntax, "\"vertices\" must be an array");
    for (const json& v : vertices) {
        if (!v.is_object()) throw Error(ErrorKind::Syntax, "vertex entries must be objects");
        reject_unknown_fields(v, {"id", "level"}, "vertex");
        Vertex vertex;
        vertex.id = require_string(v, "id", "vertex");
        const json& level = require(v, "level", "vertex " + vertex.id);
        if (!level.is_number_integer() || level.get<std::int64_t>() < 0)
            throw Error(ErrorKind::Syntax, "level of vertex " + vertex.id + " must be a nonnegative integer");
        vertex.level = level.get<std::size_t>();
        raw.vertices.push_back(std::move(vertex));
    }

    if (auto it = doc.find("edges"); it != doc.end()) {
        if (!it->is_array()) throw Error(ErrorKind::Syntax, "\"edges\" must be an array");
        for (const json& e : *it) {
            if (!e.is_object()) throw Error(ErrorKind::Syntax, "edge entries must be objects");
            reject_unknown_fields(e, {"tail", "head"}, "edge");
            raw.edges.push_back({require_string(e, "tail", "edge"), require_string(e, "head", "edge")});
        }
    }
    return raw;
}

LayeredGraph parse_graph(std::string_view text) { return LayeredGraph::validate(parse_raw_graph(text)); }

std::string serialize_graph(const LayeredGraph& g) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    if (g.name()) doc["name"] = *g.name();
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const Vertex& v : g.vertices()) doc["vertices"].push_back({{"id", v.id}, {"level", v.level}});
    doc["edges"] = nlohmann::ordered_json::array();
    for (auto [tail, head] : g.edges()) doc["edges"].push_back({{"tail", g.id(tail)}, {"head", g.id(head)}});
    return doc.dump(2) + "\n";
}

std::string to_json(const IntSeries& s) {
    return ObjectWriter().ints("coefficients", s.coeffs()).number("truncation", s.truncation()).finish();
}

std::string to_json(const HilbertResult& r) {
    return ObjectWriter()
        .ints("denominator", r.denominator.coeffs())
        .ints("series", r.series.coeffs())
        .number("truncation", r.series.truncation())
        .string("method", to_string(r.method))
        .finish();
}

std::string to_json(const DualResult& d) {
    ObjectWriter w;
    w.ints("denominator", d.denominator.coeffs())
        .ints("series", d.series.coeffs())
        .number("truncation", d.series.truncation())
        .string("method", to_string(Method::mobius));
    if (d.polynomial) {
        w.ints("dual_polynomial", d.polynomial->coeffs());
    } else {
        w.null("dual_polynomial");
    }
    return w.finish();
}

std::string to_json(const WordCount& wc) {
    return ObjectWriter().ints("counts", wc.counts).number("truncation", wc.truncation).finish();
}

std::string to_json(const RationalFn& f, std::size_t truncation) {
    return ObjectWriter()
        .ints("numerator", f.numerator().coeffs())
        .ints("denominator", f.denominator().coeffs())
        .ints("series", f.expand(truncation).coeffs())
        .number("truncation", truncation)
        .finish();
}

json parse_exact(std::string_view text) {
    json result;
    ExactIntegerSax sax(result);
    try {
        json::sax_parse(text, &sax);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Syntax, e.what());
    }
    return result;
}

std::vector<Int> int_array(const json& j) {
    if (!j.is_array()) throw Error(ErrorKind::Syntax, "expected an array of integers");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const json& v : j) {
        if (v.is_number_unsigned()) {
            out.emplace_back(v.get<std::uint64_t>());
        } else if (v.is_number_integer()) {
            out.emplace_back(v.get<std::int64_t>());
        } else if (v.is_string()) {
            out.emplace_back(v.get<std::string>());
        } else {
            throw Error(ErrorKind::Syntax, "expected an integer, got " + v.dump());
        }
    }
    return out;
}

}  // namespace laygraph
