#ifndef IFV_IO_HPP
#define IFV_IO_HPP

#include <string>
#include <vector>

#include "ifv/boolfn.hpp"
#include "ifv/cert.hpp"
#include "ifv/domains.hpp"

namespace ifv {

// Family file: {"kind": "sym"|"pm", "n": int, "elements": [...]} where a
// permutation is an array of images and a matching is an array of sorted
// 2-element arrays.
struct FamilyFile {
    DomainDescriptor desc;
    std::vector<Elem> elements;
};

FamilyFile parse_family_json(const std::string& text);
std::string family_to_json(const DomainDescriptor& d, const std::vector<Elem>& elements);

// Raw truth-vector fixture: {"kind", "n", "bits": base64}, bit i of the
// vector stored at byte i/8, bit i%8.
BooleanFunction parse_function_json(const std::string& text);  // accepts both formats
std::string function_to_json_bits(const BooleanFunction& f);

std::string base64_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> base64_decode(const std::string& text);

// Certificates: sym pairs as [i,j] arrays; pm edges as sorted [i,j];
// extended certificates add "forbidden": [i,j,k].
std::string certificate_to_json(const Certificate& c);
std::string extended_certificate_to_json(const ExtendedCertificate& ec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ifv

#endif
