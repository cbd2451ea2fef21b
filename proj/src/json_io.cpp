#include "fpt/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "fpt/errors.hpp"

namespace fpt {

using nlohmann::json;

namespace {

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const json& expect_key(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ParseError("expected an object", where.empty() ? "/" : where);
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing required key \"") + key + '"',
                         where.empty() ? "/" : where);
    return *it;
}

std::uint64_t expect_u64(const json& j, const std::string& where) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
        return static_cast<std::uint64_t>(j.get<std::int64_t>());
    throw ParseError("expected a nonnegative integer", where);
}

double expect_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError("expected a number", where);
    return j.get<double>();
}

std::string expect_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError("expected a string", where);
    return j.get<std::string>();
}

Rational corner_value(const json& j, const std::string& where) {
    if (j.is_string()) return parse_rational(j.get<std::string>(), where);
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw ParseError("expected a rational as \"p/q\" string or integer", where);
}

}  // namespace

RootedTree tree_from_json(const std::string& text, std::size_t vertex_cap) {
    const json doc = parse_document(text);
    RootedTree t;
    std::function<void(const json&, std::uint32_t, const std::string&)> add =
        [&](const json& node, std::uint32_t vertex, const std::string& where) {
            if (!node.is_object())
                throw ParseError("tree node must be an object", where.empty() ? "/" : where);
            for (auto it = node.begin(); it != node.end(); ++it)
                if (it.key() != "children")
                    throw ParseError("unknown key \"" + it.key() + "\" in tree node",
                                     where.empty() ? "/" : where);
            if (!node.contains("children")) return;
            const json& kids = node.at("children");
            if (!kids.is_array())
                throw ParseError("\"children\" must be an array", where + "/children");
            for (std::size_t i = 0; i < kids.size(); ++i) {
                const std::uint32_t child = t.add_child(vertex, vertex_cap);
                add(kids[i], child, where + "/children/" + std::to_string(i));
            }
        };
    add(doc, 0, "");
    return t;
}

std::string tree_to_json(const RootedTree& t) {
    std::function<json(std::uint32_t)> node = [&](std::uint32_t v) {
        json kids = json::array();
        for (std::uint32_t c : t.children(v)) kids.push_back(node(c));
        return json{{"children", std::move(kids)}};
    };
    return node(0).dump();
}

GrowthFunction growth_from_json(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError("growth document must be an object", "/");
    const json& pj = expect_key(doc, "prefix", "/");
    if (!pj.is_array()) throw ParseError("\"prefix\" must be an array", "/prefix");
    std::vector<std::uint64_t> prefix;
    for (std::size_t i = 0; i < pj.size(); ++i)
        prefix.push_back(expect_u64(pj[i], "/prefix/" + std::to_string(i)));

    GrowthTail tail;
    if (doc.contains("tail") && !doc.at("tail").is_null()) {
        const json& tj = doc.at("tail");
        const std::string kind = expect_string(expect_key(tj, "kind", "/tail"), "/tail/kind");
        if (kind == "none") {
            // explicit spelling of a table-only function
        } else if (kind == "constant") {
            tail.kind = GrowthTail::Kind::Constant;
            tail.constant_value = expect_u64(expect_key(tj, "value", "/tail"), "/tail/value");
        } else if (kind == "polynomial") {
            tail.kind = GrowthTail::Kind::Polynomial;
            tail.poly_degree = expect_number(expect_key(tj, "degree", "/tail"), "/tail/degree");
            if (tj.contains("scale"))
                tail.poly_scale = expect_number(tj.at("scale"), "/tail/scale");
        } else if (kind == "exponential") {
            tail.kind = GrowthTail::Kind::Exponential;
            tail.exp_base = expect_number(expect_key(tj, "base", "/tail"), "/tail/base");
        } else if (kind == "alternating") {
            tail.kind = GrowthTail::Kind::Alternating;
            tail.alt_low = expect_u64(expect_key(tj, "low", "/tail"), "/tail/low");
            tail.alt_base = expect_number(expect_key(tj, "base", "/tail"), "/tail/base");
        } else {
            throw ParseError("unknown tail kind \"" + kind + '"', "/tail/kind");
        }
    }
    try {
        return GrowthFunction(std::move(prefix), tail);
    } catch (const ContractError& e) {
        throw ParseError(e.what(), "/");
    }
}

std::string growth_to_json(const GrowthFunction& f) {
    json doc;
    doc["prefix"] = f.prefix();
    const GrowthTail& tail = f.tail();
    switch (tail.kind) {
        case GrowthTail::Kind::None:
            doc["tail"] = {{"kind", "none"}};
            break;
        case GrowthTail::Kind::Constant:
            doc["tail"] = {{"kind", "constant"}, {"value", tail.constant_value}};
            break;
        case GrowthTail::Kind::Polynomial:
            doc["tail"] = {{"kind", "polynomial"},
                           {"degree", tail.poly_degree},
                           {"scale", tail.poly_scale}};
            break;
        case GrowthTail::Kind::Exponential:
            doc["tail"] = {{"kind", "exponential"}, {"base", tail.exp_base}};
            break;
        case GrowthTail::Kind::Alternating:
            doc["tail"] = {{"kind", "alternating"}, {"low", tail.alt_low}, {"base", tail.alt_base}};
            break;
    }
    return doc.dump();
}

BoxUnion box_union_from_json(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError("box-union document must be an object", "/");
    const std::uint64_t dim = expect_u64(expect_key(doc, "dim", "/"), "/dim");
    const json& bj = expect_key(doc, "boxes", "/");
    if (!bj.is_array()) throw ParseError("\"boxes\" must be an array", "/boxes");

    std::vector<Box> boxes;
    for (std::size_t i = 0; i < bj.size(); ++i) {
        const std::string where = "/boxes/" + std::to_string(i);
        Box b;
        for (const char* side : {"lo", "hi"}) {
            const json& cj = expect_key(bj[i], side, where);
            if (!cj.is_array())
                throw ParseError(std::string("\"") + side + "\" must be an array",
                                 where + "/" + side);
            auto& corner = (side[0] == 'l') ? b.lo : b.hi;
            for (std::size_t d = 0; d < cj.size(); ++d)
                corner.push_back(
                    corner_value(cj[d], where + "/" + side + "/" + std::to_string(d)));
        }
        if (b.lo.size() != dim || b.hi.size() != dim)
            throw ParseError("box corners must have exactly " + std::to_string(dim) +
                                 " coordinates",
                             where);
        try {
            b.validate();
        } catch (const ContractError& e) {
            throw ParseError(e.what(), where);
        }
        boxes.push_back(std::move(b));
    }
    try {
        return BoxUnion(dim, std::move(boxes));
    } catch (const ContractError& e) {
        throw ParseError(e.what(), "/");
    }
}

std::string box_union_to_json(const BoxUnion& u) {
    json boxes = json::array();
    for (const Box& b : u.boxes()) {
        json lo = json::array(), hi = json::array();
        for (const Rational& r : b.lo) lo.push_back(to_fraction_string(r));
        for (const Rational& r : b.hi) hi.push_back(to_fraction_string(r));
        boxes.push_back(json{{"lo", std::move(lo)}, {"hi", std::move(hi)}});
    }
    return json{{"dim", u.dim()}, {"boxes", std::move(boxes)}}.dump();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    if (in.bad()) throw ParseError("cannot read file: " + path);
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw ParseError("cannot write file: " + path);
}

}  // namespace fpt
