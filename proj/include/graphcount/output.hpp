#pragma once

// Rendering and parsing of result vectors and cycle indices. All numbers
// are exact decimal; nothing here ever rounds.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "graphcount/genfunc.hpp"

namespace graphcount {

enum class OutputFormat {
    Poly,      // human-readable polynomial in z
    CoeffList, // ascending coefficients, comma-separated, one line
    Csv,       // header n,i,count and one row per coefficient
};

/// Parses "poly", "coeff-list" or "csv"; anything else is invalid_argument.
OutputFormat parse_format(const std::string& name);

/// "c0,c1,...,cd\n" with exact decimal integers.
std::string format_coeff_list(const std::vector<mpz_class>& coeffs);

/// Inverse of format_coeff_list (trailing newline optional).
std::vector<mpz_class> parse_coeff_list(const std::string& text);

/// Human form like "1 + z + 2*z^2"; the zero vector renders as "0".
std::string format_poly(const std::vector<mpz_class>& coeffs);

/// "n,i,count" header plus one row per coefficient.
std::string format_csv(unsigned n, const std::vector<mpz_class>& coeffs);

/// Render a coefficient vector in the chosen format, newline-terminated.
std::string render_counts(unsigned n, const std::vector<mpz_class>& coeffs,
                          OutputFormat format);

/// Render a cycle index: Poly gives a single-line sum of terms like
/// "1/2 * s_1 s_2"; CoeffList gives one term per line as
/// "coeff,e1,...,em"; Csv prefixes a "coeff,s_1,...,s_m" header.
std::string format_cycle_index(const CycleIndex& zi, OutputFormat format);

} // namespace graphcount
