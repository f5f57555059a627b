#include "ifv/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ifv {

using nlohmann::json;

static DomainKind parse_kind(const json& j) {
    std::string k = j.value("kind", "");
    if (k == "sym") return DomainKind::Sym;
    if (k == "pm") return DomainKind::PM;
    throw UsageError("family file: kind must be \"sym\" or \"pm\"");
}

FamilyFile parse_family_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("family file: JSON parse error: ") + e.what());
    }
    DomainKind kind = parse_kind(j);
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw UsageError("family file: missing integer field n");
    DomainDescriptor d = make_descriptor(kind, j["n"].get<int>());
    FamilyFile out{d, {}};
    if (!j.contains("elements") || !j["elements"].is_array())
        throw UsageError("family file: missing elements array");
    for (const json& je : j["elements"]) {
        Elem e;
        if (kind == DomainKind::Sym) {
            if (!je.is_array()) throw UsageError("family file: permutation must be an array");
            for (const json& v : je) e.push_back(v.get<int>());
        } else {
            std::vector<std::pair<int, int>> pairs;
            if (!je.is_array()) throw UsageError("family file: matching must be an array of pairs");
            for (const json& jp : je) {
                if (!jp.is_array() || jp.size() != 2)
                    throw UsageError("family file: matching entries are 2-element arrays");
                pairs.emplace_back(jp[0].get<int>(), jp[1].get<int>());
            }
            e = PerfectMatching::from_pairs(d.n, pairs).partner;
        }
        if (!valid_element(d, e)) throw UsageError("family file: element not in the domain");
        out.elements.push_back(std::move(e));
    }
    return out;
}

std::string family_to_json(const DomainDescriptor& d, const std::vector<Elem>& elements) {
    json j;
    j["kind"] = d.kind == DomainKind::Sym ? "sym" : "pm";
    j["n"] = d.n;
    json arr = json::array();
    for (const Elem& e : elements) {
        if (d.kind == DomainKind::Sym) {
            arr.push_back(e);
        } else {
            json pairs = json::array();
            for (auto [a, b] : PerfectMatching(e).pairs()) pairs.push_back(json::array({a, b}));
            arr.push_back(pairs);
        }
    }
    j["elements"] = arr;
    return j.dump();
}

static const char* kB64 = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
    std::string out;
    out.reserve((bytes.size() + 2) / 3 * 4);
    for (std::size_t i = 0; i < bytes.size(); i += 3) {
        std::uint32_t v = static_cast<std::uint32_t>(bytes[i]) << 16;
        int have = 1;
        if (i + 1 < bytes.size()) {
            v |= static_cast<std::uint32_t>(bytes[i + 1]) << 8;
            ++have;
        }
        if (i + 2 < bytes.size()) {
            v |= bytes[i + 2];
            ++have;
        }
        out.push_back(kB64[(v >> 18) & 63]);
        out.push_back(kB64[(v >> 12) & 63]);
        out.push_back(have >= 2 ? kB64[(v >> 6) & 63] : '=');
        out.push_back(have >= 3 ? kB64[v & 63] : '=');
    }
    return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
    auto val = [](char c) -> int {
        if (c >= 'A' && c <= 'Z') return c - 'A';
        if (c >= 'a' && c <= 'z') return c - 'a' + 26;
        if (c >= '0' && c <= '9') return c - '0' + 52;
        if (c == '+') return 62;
        if (c == '/') return 63;
        return -1;
    };
    std::vector<std::uint8_t> out;
    std::uint32_t acc = 0;
    int bits = 0;
    for (char c : text) {
        if (c == '=' || c == '\n' || c == '\r') continue;
        int v = val(c);
        if (v < 0) throw UsageError("invalid base64 character");
        acc = (acc << 6) | static_cast<std::uint32_t>(v);
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out.push_back(static_cast<std::uint8_t>((acc >> bits) & 0xff));
        }
    }
    return out;
}

BooleanFunction parse_function_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("function file: JSON parse error: ") + e.what());
    }
    if (j.contains("elements")) {
        FamilyFile fam = parse_family_json(text);
        return indicator_of_family(fam.desc, fam.elements);
    }
    if (!j.contains("bits") || !j["bits"].is_string())
        throw UsageError("function file: need either elements or bits");
    DomainDescriptor d = make_descriptor(parse_kind(j), j.value("n", 0));
    std::vector<std::uint8_t> bytes = base64_decode(j["bits"].get<std::string>());
    if (bytes.size() != (d.size + 7) / 8)
        throw UsageError("function file: bit vector length does not match the domain");
    BooleanFunction f = BooleanFunction::constant(d, 0);
    for (std::uint64_t i = 0; i < d.size; ++i)
        f.truth[static_cast<std::size_t>(i)] = (bytes[static_cast<std::size_t>(i / 8)] >> (i % 8)) & 1u;
    return f;
}

std::string function_to_json_bits(const BooleanFunction& f) {
    json j;
    j["kind"] = f.desc.kind == DomainKind::Sym ? "sym" : "pm";
    j["n"] = f.desc.n;
    std::vector<std::uint8_t> bytes((f.desc.size + 7) / 8, 0);
    for (std::uint64_t i = 0; i < f.desc.size; ++i)
        if (f.truth[static_cast<std::size_t>(i)])
            bytes[static_cast<std::size_t>(i / 8)] |= static_cast<std::uint8_t>(1u << (i % 8));
    j["bits"] = base64_encode(bytes);
    return j.dump();
}

std::string certificate_to_json(const Certificate& c) {
    json arr = json::array();
    for (auto [i, j] : c.pairs) arr.push_back(json::array({i, j}));
    return arr.dump();
}

std::string extended_certificate_to_json(const ExtendedCertificate& ec) {
    json j;
    json arr = json::array();
    for (auto [i, jj] : ec.base.pairs) arr.push_back(json::array({i, jj}));
    j["pairs"] = arr;
    if (ec.forbidden) j["forbidden"] = json::array({(*ec.forbidden)[0], (*ec.forbidden)[1], (*ec.forbidden)[2]});
    return j.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write file: " + path);
    out << content;
}

}  // namespace ifv
