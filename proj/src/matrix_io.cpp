#include "codetops/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace codetops {

namespace {

bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

uint64_t parse_uint(const std::string& text, size_t line, size_t col) {
    if (text.empty() || text.size() > 18)
        throw ParseError(line, col, "expected a number, got '" + text + "'");
    uint64_t v = 0;
    for (char c : text) {
        if (c < '0' || c > '9')
            throw ParseError(line, col,
                             "expected a number, got '" + text + "'");
        v = v * 10 + static_cast<uint64_t>(c - '0');
    }
    return v;
}

/// Splits q = p^m into (p, m); ParseError when q is not a prime power.
std::pair<uint64_t, uint32_t> prime_power(uint64_t q, size_t line,
                                          size_t col) {
    if (q < 2) throw ParseError(line, col, "field size must be at least 2");
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    uint32_t m = 0;
    uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1)
        throw ParseError(line, col,
                         std::to_string(q) + " is not a prime power");
    return {p, m};
}

FieldPtr parse_header(const std::string& header, size_t line) {
    std::istringstream hs(header);
    std::string tok;
    hs >> tok;
    if (tok.rfind("q=", 0) != 0)
        throw ParseError(line, 1, "header must start with q=N");
    size_t qcol = header.find(tok) + 1;
    uint64_t q = parse_uint(tok.substr(2), line, qcol + 2);
    auto [p, m] = prime_power(q, line, qcol + 2);

    std::string poly;
    if (hs >> poly) {
        if (poly.rfind("poly=", 0) != 0)
            throw ParseError(line, header.find(poly) + 1,
                             "expected poly=c0,c1,...");
        size_t pcol = header.find(poly) + 1;
        if (m == 1)
            throw ParseError(line, pcol,
                             "poly= is only meaningful for extension fields");
        std::vector<uint32_t> coeffs;
        std::string item;
        std::istringstream ps(poly.substr(5));
        while (std::getline(ps, item, ','))
            coeffs.push_back(static_cast<uint32_t>(
                parse_uint(item, line, pcol)));
        if (coeffs.size() != m + 1)
            throw ParseError(line, pcol,
                             "modulus needs " + std::to_string(m + 1) +
                                 " coefficients");
        for (uint32_t c : coeffs)
            if (c >= p)
                throw ParseError(line, pcol,
                                 "modulus coefficients must be below " +
                                     std::to_string(p));
        std::string extra;
        if (hs >> extra)
            throw ParseError(line, header.find(extra) + 1,
                             "unexpected trailing text");
        try {
            return Field::make(p, m, coeffs);
        } catch (const Error& e) {
            throw ParseError(line, pcol, e.what());
        }
    }
    try {
        return Field::make(p, m);
    } catch (const Error& e) {
        throw ParseError(line, qcol, e.what());
    }
}

}  // namespace

MatrixGF parse_matrix(std::istream& in) {
    std::string lineText;
    size_t lineNo = 0;
    FieldPtr field;
    std::vector<std::vector<uint32_t>> rows;
    size_t width = 0;
    while (std::getline(in, lineText)) {
        ++lineNo;
        if (!lineText.empty() && lineText.back() == '\r')
            lineText.pop_back();
        if (blank(lineText)) continue;
        if (!field) {
            field = parse_header(lineText, lineNo);
            continue;
        }
        std::vector<uint32_t> row;
        size_t i = 0;
        while (i < lineText.size()) {
            if (std::isspace(static_cast<unsigned char>(lineText[i]))) {
                ++i;
                continue;
            }
            size_t start = i;
            while (i < lineText.size() &&
                   !std::isspace(static_cast<unsigned char>(lineText[i])))
                ++i;
            std::string tok = lineText.substr(start, i - start);
            std::optional<uint32_t> v = field->parse_element(tok);
            if (!v)
                throw ParseError(lineNo, start + 1,
                                 "'" + tok + "' is not an element of " +
                                     field->describe());
            row.push_back(*v);
        }
        if (width == 0)
            width = row.size();
        else if (row.size() != width)
            throw ParseError(lineNo, 1,
                             "row has " + std::to_string(row.size()) +
                                 " entries, expected " +
                                 std::to_string(width));
        rows.push_back(std::move(row));
    }
    if (!field) throw ParseError(lineNo, 1, "missing q=N header");
    if (rows.empty()) throw ParseError(lineNo, 1, "matrix has no rows");
    return MatrixGF::from_rows(field, rows);
}

MatrixGF parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

MatrixGF load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
    return parse_matrix(in);
}

std::string serialize_matrix(const MatrixGF& m) {
    const Field& f = *m.field();
    std::ostringstream out;
    out << "q=" << f.q();
    if (f.m() > 1) {
        out << " poly=";
        const auto& mod = f.modulus();
        for (size_t i = 0; i < mod.size(); ++i) {
            if (i) out << ',';
            out << mod[i];
        }
    }
    out << '\n';
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << f.format(m.at(r, c));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace codetops
