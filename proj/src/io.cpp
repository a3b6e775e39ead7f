#include "khinlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "khinlab/errors.hpp"

namespace khinlab::io {

namespace {

void dump_into(const Json& value, std::string& out, int indent, int level)
{
    const auto newline = [&](int lvl) {
        if (indent >= 0) {
            out += '\n';
            out.append(static_cast<std::size_t>(indent * lvl), ' ');
        }
    };
    switch (value.type()) {
    case Json::value_t::number_float: {
        const double x = value.get<double>();
        out += std::isfinite(x) ? format_number(x) : "null";
        return;
    }
    case Json::value_t::object: {
        if (value.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (const auto& [key, item] : value.items()) {
            if (!first) {
                out += ',';
            }
            first = false;
            newline(level + 1);
            out += Json(key).dump();
            out += indent >= 0 ? ": " : ":";
            dump_into(item, out, indent, level + 1);
        }
        newline(level);
        out += '}';
        return;
    }
    case Json::value_t::array: {
        if (value.empty()) {
            out += "[]";
            return;
        }
        out += '[';
        bool first = true;
        for (const auto& item : value) {
            if (!first) {
                out += indent >= 0 ? ", " : ",";
            }
            first = false;
            dump_into(item, out, indent, level + 1);
        }
        out += ']';
        return;
    }
    default:
        out += value.dump();
        return;
    }
}

} // namespace

std::string format_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string dump_json(const Json& value, int indent)
{
    std::string out;
    dump_into(value, out, indent, 0);
    return out;
}

CoefficientTensor tensor_from_json(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("shape") || !doc.contains("entries")) {
        throw ParseError("tensor document must be an object with \"shape\" and \"entries\"");
    }
    const auto& shape_node = doc.at("shape");
    const auto& entries_node = doc.at("entries");
    if (!shape_node.is_array() || shape_node.empty() || !entries_node.is_array()) {
        throw ParseError("\"shape\" must be a non-empty array and \"entries\" an array");
    }
    std::vector<std::size_t> shape;
    for (const auto& d : shape_node) {
        if (!d.is_number_unsigned() || d.get<std::uint64_t>() == 0) {
            throw ParseError("shape entries must be positive integers");
        }
        shape.push_back(d.get<std::size_t>());
    }
    std::vector<double> entries;
    entries.reserve(entries_node.size());
    for (const auto& e : entries_node) {
        if (!e.is_number()) {
            throw ParseError("tensor entries must be numbers");
        }
        entries.push_back(e.get<double>());
    }
    try {
        return CoefficientTensor(std::move(shape), std::move(entries));
    } catch (const std::exception& ex) {
        throw ParseError(std::string("invalid tensor: ") + ex.what());
    }
}

Json tensor_to_json(const CoefficientTensor& tensor)
{
    Json doc;
    doc["shape"] = tensor.shape();
    doc["entries"] = std::vector<double>(tensor.entries().begin(), tensor.entries().end());
    return doc;
}

TensorFile read_tensor_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open tensor file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string bytes = buffer.str();
    Json doc;
    try {
        doc = Json::parse(bytes);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(path.string() + ": " + ex.what());
    }
    return TensorFile{tensor_from_json(doc), fnv1a_hex(bytes)};
}

std::string fnv1a_hex(std::string_view bytes)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

Json exponent_to_json(Exponent p)
{
    if (p.is_infinite()) {
        return "inf";
    }
    return p.value();
}

Json to_json(const MomentResult& result)
{
    Json doc;
    doc["r"] = result.r;
    doc["value"] = result.value;
    doc["configurations_enumerated"] = result.configurations_enumerated;
    doc["method"] = to_string(result.method);
    return doc;
}

Json to_json(const WitnessReport& report)
{
    Json doc;
    doc["N"] = report.N;
    doc["l2"] = report.l2;
    doc["moment"] = report.moment;
    doc["ratio"] = report.ratio;
    doc["bound"] = report.theoretical_bound;
    return doc;
}

Json to_json(const InequalityReport& report)
{
    Json doc;
    doc["theorem"] = to_string(report.theorem);
    doc["lhs"] = report.lhs;
    doc["norm"] = report.norm;
    doc["ratio"] = report.ratio ? Json(*report.ratio) : Json(nullptr);
    doc["constant"] = report.constant;
    doc["holds"] = report.holds;
    return doc;
}

Json to_json(const HaagerupConstant& constant)
{
    Json doc;
    doc["p"] = exponent_to_json(constant.p);
    doc["value"] = constant.value;
    doc["branch"] = to_string(constant.branch);
    return doc;
}

std::string witness_csv(const std::vector<WitnessReport>& reports)
{
    std::string out = "N,l2,moment,ratio,bound\r\n";
    for (const auto& r : reports) {
        out += std::to_string(r.N);
        for (double x : {r.l2, r.moment, r.ratio, r.theoretical_bound}) {
            out += ',';
            out += format_number(x);
        }
        out += "\r\n";
    }
    return out;
}

} // namespace khinlab::io
