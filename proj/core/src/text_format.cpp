#include "lrpc/text_format.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace lrpc {

namespace {

void write_element(std::ostream& os, const FieldElement& x, std::uint32_t m) {
    for (std::uint32_t i = 0; i < m; ++i) {
        if (i) os << ',';
        os << x.coeff(i);
    }
}

void write_header(std::ostream& os, std::string_view kind, const Field& f) {
    os << "lrpc-text " << kTextFormatVersion << '\n' << "kind " << kind << '\n' << "field " << f.q() << ' ' << f.m() << ' ';
    for (std::size_t i = 0; i < f.modulus().size(); ++i) {
        if (i) os << ',';
        os << f.modulus()[i];
    }
    os << '\n';
}

void write_elements_line(std::ostream& os, const Vector& v, std::uint32_t m) {
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) os << ' ';
        write_element(os, v[j], m);
    }
    os << '\n';
}

// Reads the input one whitespace-separated line at a time.
class LineReader {
public:
    explicit LineReader(std::istream& is) : is_(is) {}

    std::vector<std::string> next() {
        std::string line;
        while (std::getline(is_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::istringstream ss(line);
            std::vector<std::string> tokens;
            for (std::string tok; ss >> tok;) tokens.push_back(tok);
            if (!tokens.empty()) return tokens;
        }
        fail("unexpected end of input");
    }

    std::vector<std::string> expect(std::string_view keyword, std::size_t args) {
        auto tokens = next();
        if (tokens.front() != keyword) fail("expected '" + std::string(keyword) + "', found '" + tokens.front() + "'");
        if (tokens.size() != args + 1) fail("'" + std::string(keyword) + "' takes " + std::to_string(args) + " arguments");
        return tokens;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw FormatError("line " + std::to_string(line_no_) + ": " + msg);
    }

private:
    std::istream& is_;
    std::size_t line_no_ = 0;
};

std::uint64_t parse_uint(const LineReader& in, std::string_view tok) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) in.fail("not an unsigned integer: '" + std::string(tok) + "'");
    return v;
}

std::vector<std::uint32_t> parse_list(const LineReader& in, std::string_view tok) {
    std::vector<std::uint32_t> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = tok.find(',', start);
        const auto part = tok.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const std::uint64_t v = parse_uint(in, part);
        if (v > 0xFFFFFFFFULL) in.fail("coefficient too large");
        out.push_back(static_cast<std::uint32_t>(v));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

FieldElement parse_element(const LineReader& in, const Field& f, std::string_view tok) {
    const auto coeffs = parse_list(in, tok);
    if (coeffs.size() != f.m()) in.fail("field element needs " + std::to_string(f.m()) + " coefficients");
    for (auto c : coeffs)
        if (c >= f.q()) in.fail("coefficient out of range");
    return f.from_coeffs(coeffs);
}

FieldPtr read_header(LineReader& in, std::string_view kind) {
    auto magic = in.expect("lrpc-text", 1);
    if (parse_uint(in, magic[1]) != static_cast<std::uint64_t>(kTextFormatVersion)) in.fail("unsupported format version");
    auto kind_line = in.expect("kind", 1);
    if (kind_line[1] != kind) in.fail("expected kind '" + std::string(kind) + "', found '" + kind_line[1] + "'");
    auto field_line = in.expect("field", 3);
    const auto q = parse_uint(in, field_line[1]);
    const auto m = parse_uint(in, field_line[2]);
    if (q > kMaxBaseField || m > kMaxExtensionDegree) in.fail("field parameters out of range");
    FieldPtr field;
    try {
        field = Field::make(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(m));
    } catch (const std::invalid_argument& e) {
        in.fail(e.what());
    }
    if (parse_list(in, field_line[3]) != field->modulus()) in.fail("modulus differs from the canonical one for (q, m)");
    return field;
}

std::vector<FieldElement> read_element_lines(LineReader& in, const Field& f, std::size_t count) {
    std::vector<FieldElement> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto tokens = in.next();
        if (tokens.size() != 1) in.fail("expected one field element per line");
        out.push_back(parse_element(in, f, tokens[0]));
    }
    return out;
}

Vector read_vector(LineReader& in, const Field& f, std::size_t expected_len) {
    auto head = in.expect("vector", 1);
    if (parse_uint(in, head[1]) != expected_len) in.fail("vector length mismatch");
    Vector v;
    if (expected_len == 0) return v;
    auto tokens = in.next();
    if (tokens.size() != expected_len) in.fail("vector line has the wrong number of elements");
    for (const auto& t : tokens) v.push_back(parse_element(in, f, t));
    return v;
}

void read_end(LineReader& in) { in.expect("end", 0); }

}  // namespace

void write_text(std::ostream& os, const LrpcCode& code) {
    const Field& f = *code.field;
    write_header(os, "code", f);
    os << "dims " << code.n << ' ' << code.k << ' ' << code.d << '\n';
    os << "support " << code.support.dim() << '\n';
    for (const auto& b : code.support.basis()) {
        write_element(os, b, f.m());
        os << '\n';
    }
    os << "matrix " << code.h.size() << ' ' << code.n << '\n';
    for (const auto& row : code.h) write_elements_line(os, row, f.m());
    os << "end\n";
}

void write_text(std::ostream& os, const RankError& error) {
    const Field& f = *error.support.field();
    const std::uint32_t n = static_cast<std::uint32_t>(error.e.size());
    write_header(os, "error", f);
    os << "dims " << n << ' ' << error.beta.size() << '\n';
    os << "support " << error.beta.size() << '\n';
    for (const auto& b : error.beta) {
        write_element(os, b, f.m());
        os << '\n';
    }
    os << "coords " << error.coords.size() << ' ' << n << '\n';
    for (const auto& row : error.coords) {
        for (std::uint32_t j = 0; j < n; ++j) os << (j ? " " : "") << row.get(j);
        os << '\n';
    }
    os << "vector " << n << '\n';
    if (n) write_elements_line(os, error.e, f.m());
    os << "end\n";
}

void write_text(std::ostream& os, const Syndrome& syndrome) {
    const Field& f = *syndrome.support.field();
    write_header(os, "syndrome", f);
    os << "vector " << syndrome.s.size() << '\n';
    if (!syndrome.s.empty()) write_elements_line(os, syndrome.s, f.m());
    os << "end\n";
}

std::string to_text(const LrpcCode& code) {
    std::ostringstream os;
    write_text(os, code);
    return os.str();
}

std::string to_text(const RankError& error) {
    std::ostringstream os;
    write_text(os, error);
    return os.str();
}

std::string to_text(const Syndrome& syndrome) {
    std::ostringstream os;
    write_text(os, syndrome);
    return os.str();
}

LrpcCode read_code(std::istream& is) {
    LineReader in(is);
    FieldPtr field = read_header(in, "code");
    auto dims = in.expect("dims", 3);
    const auto n = parse_uint(in, dims[1]);
    const auto k = parse_uint(in, dims[2]);
    const auto d = parse_uint(in, dims[3]);
    if (k >= n || n > 1U << 20) in.fail("need k < n");
    auto support_line = in.expect("support", 1);
    if (parse_uint(in, support_line[1]) != d) in.fail("support size differs from d");
    const auto basis = read_element_lines(in, *field, d);
    Subspace support = Subspace::span(field, basis);
    if (support.dim() != d) in.fail("support basis is not linearly independent");
    auto matrix_line = in.expect("matrix", 2);
    if (parse_uint(in, matrix_line[1]) != n - k || parse_uint(in, matrix_line[2]) != n) in.fail("matrix shape mismatch");
    Matrix h;
    for (std::uint64_t i = 0; i < n - k; ++i) {
        auto tokens = in.next();
        if (tokens.size() != n) in.fail("matrix row has the wrong number of entries");
        Vector row;
        for (const auto& t : tokens) {
            row.push_back(parse_element(in, *field, t));
            if (!support.contains(row.back())) in.fail("matrix entry outside the support");
        }
        h.push_back(std::move(row));
    }
    read_end(in);
    return LrpcCode{field, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(d),
                    std::move(support), std::move(h)};
}

RankError read_error(std::istream& is) {
    LineReader in(is);
    FieldPtr field = read_header(in, "error");
    auto dims = in.expect("dims", 2);
    const auto n = parse_uint(in, dims[1]);
    const auto r = parse_uint(in, dims[2]);
    if (n > 1U << 20 || r > field->m()) in.fail("dimensions out of range");
    auto support_line = in.expect("support", 1);
    if (parse_uint(in, support_line[1]) != r) in.fail("support size differs from r");
    auto beta = read_element_lines(in, *field, r);
    Subspace support = Subspace::span(field, beta);
    if (support.dim() != r) in.fail("support basis is not linearly independent");
    auto coords_line = in.expect("coords", 2);
    if (parse_uint(in, coords_line[1]) != r || parse_uint(in, coords_line[2]) != n) in.fail("coords shape mismatch");
    FqMatrix coords;
    for (std::uint64_t l = 0; l < r; ++l) {
        auto tokens = in.next();
        if (tokens.size() != n) in.fail("coords row has the wrong number of entries");
        FqVector row(field->q(), static_cast<std::uint32_t>(n));
        for (std::uint64_t j = 0; j < n; ++j) {
            const auto v = parse_uint(in, tokens[j]);
            if (v >= field->q()) in.fail("coordinate out of range");
            row.set(j, static_cast<std::uint32_t>(v));
        }
        coords.push_back(std::move(row));
    }
    Vector e = read_vector(in, *field, n);
    for (std::uint64_t j = 0; j < n; ++j) {
        FieldElement expect = field->zero();
        for (std::uint64_t l = 0; l < r; ++l) expect.coeffs().add_scaled(beta[l].coeffs(), coords[l].get(j));
        if (expect != e[j]) in.fail("vector is not beta * coords");
    }
    read_end(in);
    return RankError{std::move(support), std::move(beta), std::move(coords), std::move(e)};
}

Syndrome read_syndrome(std::istream& is) {
    LineReader in(is);
    FieldPtr field = read_header(in, "syndrome");
    auto head = in.expect("vector", 1);
    const auto len = parse_uint(in, head[1]);
    if (len > 1U << 20) in.fail("vector too long");
    Vector s;
    if (len) {
        auto tokens = in.next();
        if (tokens.size() != len) in.fail("vector line has the wrong number of elements");
        for (const auto& t : tokens) s.push_back(parse_element(in, *field, t));
    }
    read_end(in);
    Subspace support = Subspace::span(field, s);
    return Syndrome{std::move(s), std::move(support)};
}

LrpcCode code_from_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    return read_code(is);
}

RankError error_from_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    return read_error(is);
}

Syndrome syndrome_from_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    return read_syndrome(is);
}

}  // namespace lrpc
