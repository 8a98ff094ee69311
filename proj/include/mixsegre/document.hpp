#pragma once

#include "mixsegre/ideal.hpp"
#include "mixsegre/surface.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mixsegre {

// Input file grammar:
//
//   document  = { statement } { section } ;
//   statement = "ring" ident { "," ident } ";"
//             | "ambient" "=" polys ";"
//             | "ideal" ident "=" polys ";" ;
//   polys     = poly { "," poly } ;
//   section   = "[surface]" { row | vector } | "[options]" { key "=" integer } ;
//   row       = integer { [","] integer } NEWLINE ;
//   vector    = ("u" | "v" | "w" | "c") "=" rational { "," rational } NEWLINE ;
//
// Polynomials use + - * ^, parentheses and rational literals such as 1/2.
// "#" starts a comment running to the end of the line.

struct SurfaceBlock {
    IntegerMatrix matrix;
    RationalVector u, v, w;
    std::optional<RationalVector> c;

    friend bool operator==(const SurfaceBlock&, const SurfaceBlock&) = default;
};

struct DocumentOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> bound;
    std::optional<unsigned> rounds;
    std::optional<unsigned> nmax;

    friend bool operator==(const DocumentOptions&, const DocumentOptions&) = default;
};

struct InputDocument {
    // Null when the document has no ring declaration.
    Ring ring;
    std::optional<Ideal> ambient;
    std::vector<std::pair<std::string, Ideal>> ideals;
    std::optional<SurfaceBlock> surface;
    DocumentOptions options;

    // Throws InvalidArgument naming the missing ideal.
    const Ideal& ideal(const std::string& name) const;
};

// Throws ParseError with line and column.
InputDocument parse_input(std::string_view text);

// Canonical text that parses back to an equal document.
std::string serialize(const InputDocument& doc);

bool documents_equal(const InputDocument& a, const InputDocument& b);

// One polynomial in `ring`, e.g. "x^2 - 1/2*x".
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

} // namespace mixsegre
