#include "orthapt/io.hpp"

#include "orthapt/apartments.hpp"

#include <cctype>
#include <istream>
#include <set>
#include <sstream>

namespace orthapt {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// `digits` or `digits/digits` with a positive denominator.
bool parse_unsigned_rat(const std::string& text, Rational& out) {
    const std::size_t slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return false;
    mpz_class d(den);
    if (d == 0) return false;
    out = Rational(mpz_class(num), d);
    out.canonicalize();
    return true;
}

bool parse_signed_rat(const std::string& text, Rational& out) {
    if (!text.empty() && text.front() == '-') {
        if (!parse_unsigned_rat(text.substr(1), out)) return false;
        out = -out;
        return true;
    }
    return parse_unsigned_rat(text, out);
}

std::string format_rat(const Rational& r) { return r.get_str(); }

} // namespace

GaussianRational parse_entry(const std::string& token) {
    const auto fail = [&token]() -> GaussianRational {
        throw std::invalid_argument("malformed entry '" + token + "'");
    };
    if (token.empty()) return fail();
    if (token.back() != 'i') {
        Rational re;
        if (!parse_signed_rat(token, re)) return fail();
        return GaussianRational(re);
    }
    const std::string body = token.substr(0, token.size() - 1);
    // The separating sign is the first +/- after position 0 (a leading
    // minus belongs to the real part).
    std::size_t sep = std::string::npos;
    for (std::size_t p = 1; p < body.size(); ++p)
        if (body[p] == '+' || body[p] == '-') {
            sep = p;
            break;
        }
    if (sep == std::string::npos) return fail();
    Rational re, im;
    if (!parse_signed_rat(body.substr(0, sep), re)) return fail();
    if (!parse_unsigned_rat(body.substr(sep + 1), im)) return fail();
    if (body[sep] == '-') im = -im;
    return GaussianRational(re, im);
}

std::string format_entry(const GaussianRational& z) {
    if (z.im() == 0) return format_rat(z.re());
    std::string out = format_rat(z.re());
    if (z.im() > 0) {
        out += "+" + format_rat(z.im());
    } else {
        Rational flipped = -z.im();
        out += "-" + format_rat(flipped);
    }
    return out + "i";
}

namespace {

// Shared line scanner: skips blanks and # comments, splits on whitespace,
// tracks the 1-based line number for error reporting.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next meaningful line as tokens; empty result means end of input.
    const std::vector<std::string>& next() {
        tokens_.clear();
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            std::istringstream split(line);
            std::string token;
            while (split >> token) tokens_.push_back(token);
            if (!tokens_.empty() && tokens_.front()[0] == '#') tokens_.clear();
            if (!tokens_.empty()) return tokens_;
        }
        return tokens_;
    }

    int line() const { return line_; }

private:
    std::istream& in_;
    int line_ = 0;
    std::vector<std::string> tokens_;
};

int parse_header_int(const std::vector<std::string>& tokens, const LineReader& reader,
                     const char* directive) {
    if (tokens.size() != 2)
        throw parse_error(reader.line(), std::string(directive) + " takes exactly one value");
    try {
        std::size_t used = 0;
        const int value = std::stoi(tokens[1], &used);
        if (used != tokens[1].size()) throw std::invalid_argument(tokens[1]);
        return value;
    } catch (const std::exception&) {
        throw parse_error(reader.line(), std::string(directive) + ": '" + tokens[1] +
                                             "' is not a valid integer");
    }
}

CVector parse_vector_line(const std::vector<std::string>& tokens, const LineReader& reader,
                          int ambient) {
    if (static_cast<int>(tokens.size()) - 1 != ambient)
        throw parse_error(reader.line(), "expected " + std::to_string(ambient) +
                                             " entries, found " +
                                             std::to_string(tokens.size() - 1));
    CVector v;
    v.reserve(static_cast<std::size_t>(ambient));
    for (std::size_t t = 1; t < tokens.size(); ++t) {
        try {
            v.push_back(parse_entry(tokens[t]));
        } catch (const std::invalid_argument& e) {
            throw parse_error(reader.line(), e.what());
        }
    }
    return v;
}

} // namespace

SubspaceFileData parse_subspace_file(std::istream& in) {
    LineReader reader(in);
    SubspaceFileData data;

    auto tokens = reader.next();
    if (tokens.empty() || tokens[0] != "ambient")
        throw parse_error(reader.line(), "file must start with 'ambient <n>'");
    data.ambient = parse_header_int(tokens, reader, "ambient");
    if (data.ambient < 1) throw parse_error(reader.line(), "ambient dimension must be positive");

    std::set<std::string> names;
    std::string current_name;
    int current_header_line = 0;
    std::vector<CVector> current_vectors;
    bool in_block = false;
    const auto close_block = [&]() {
        if (!in_block) return;
        if (current_vectors.empty())
            throw parse_error(current_header_line,
                              "subspace block '" + current_name + "' has no vectors");
        data.blocks.emplace_back(current_name, Subspace::span(data.ambient, current_vectors));
        current_vectors.clear();
        in_block = false;
    };

    for (tokens = reader.next(); !tokens.empty(); tokens = reader.next()) {
        if (tokens[0] == "subspace") {
            if (tokens.size() != 2)
                throw parse_error(reader.line(), "subspace takes exactly one name");
            close_block();
            current_name = tokens[1];
            current_header_line = reader.line();
            if (!names.insert(current_name).second)
                throw parse_error(reader.line(), "duplicate subspace name '" + current_name + "'");
            in_block = true;
        } else if (tokens[0] == "vector") {
            if (!in_block)
                throw parse_error(reader.line(), "vector outside of a subspace block");
            current_vectors.push_back(parse_vector_line(tokens, reader, data.ambient));
        } else {
            throw parse_error(reader.line(), "unknown directive '" + tokens[0] + "'");
        }
    }
    close_block();
    return data;
}

std::string print_subspace_file(const SubspaceFileData& data) {
    std::string out = "ambient " + std::to_string(data.ambient) + "\n";
    for (const auto& [name, space] : data.blocks) {
        out += "subspace " + name + "\n";
        for (const auto& row : space.basis()) {
            out += "vector";
            for (const auto& entry : row) out += " " + format_entry(entry);
            out += "\n";
        }
    }
    return out;
}

FixtureFileData parse_fixture_file(std::istream& in) {
    LineReader reader(in);

    auto tokens = reader.next();
    if (tokens.empty() || tokens[0] != "rank")
        throw parse_error(reader.line(), "file must start with 'rank <k>'");
    const int rank = parse_header_int(tokens, reader, "rank");
    tokens = reader.next();
    if (tokens.empty() || tokens[0] != "ambient")
        throw parse_error(reader.line(), "'rank' must be followed by 'ambient <n>'");
    const int ambient = parse_header_int(tokens, reader, "ambient");
    if (ambient < 1) throw parse_error(reader.line(), "ambient dimension must be positive");
    if (rank < 1 || rank >= ambient)
        throw parse_error(reader.line(), "rank must satisfy 1 <= k < n");

    std::vector<std::pair<Subspace, Subspace>> pairs;
    std::vector<std::vector<CVector>> sides; // [0] = source rows, [1] = image rows
    int side = -1;
    bool in_pair = false;
    int pair_line = 0;
    const auto close_pair = [&]() {
        if (!in_pair) return;
        if (sides[0].empty() || sides[1].empty())
            throw parse_error(pair_line, "pair block needs a source and an image with vectors");
        pairs.emplace_back(Subspace::span(ambient, sides[0]), Subspace::span(ambient, sides[1]));
        in_pair = false;
    };

    for (tokens = reader.next(); !tokens.empty(); tokens = reader.next()) {
        if (tokens[0] == "pair") {
            if (tokens.size() != 1) throw parse_error(reader.line(), "pair takes no value");
            close_pair();
            in_pair = true;
            pair_line = reader.line();
            side = -1;
            sides.assign(2, {});
        } else if (tokens[0] == "source" || tokens[0] == "image") {
            if (!in_pair)
                throw parse_error(reader.line(), tokens[0] + " outside of a pair block");
            if (tokens.size() != 1)
                throw parse_error(reader.line(), tokens[0] + " takes no value");
            side = tokens[0] == "source" ? 0 : 1;
        } else if (tokens[0] == "vector") {
            if (!in_pair || side < 0)
                throw parse_error(reader.line(), "vector outside of a source or image block");
            sides[static_cast<std::size_t>(side)].push_back(
                parse_vector_line(tokens, reader, ambient));
        } else if (tokens[0] == "unitary") {
            if (in_pair || !pairs.empty())
                throw parse_error(reader.line(), "unitary block cannot be mixed with pair blocks");
            // A unitary block expands to one pair per apartment member;
            // keep that count sane.
            if (ambient > 12)
                throw parse_error(reader.line(),
                                  "unitary blocks support ambient dimensions up to 12");
            bool conjugating = false;
            if (tokens.size() == 2 && tokens[1] == "conjugate") conjugating = true;
            else if (tokens.size() != 1)
                throw parse_error(reader.line(), "unitary takes at most the flag 'conjugate'");
            CMatrix m(ambient, ambient);
            for (int r = 0; r < ambient; ++r) {
                tokens = reader.next();
                if (tokens.empty() || tokens[0] != "row")
                    throw parse_error(reader.line() + (tokens.empty() ? 1 : 0),
                                      "unitary block needs " + std::to_string(ambient) +
                                          " 'row' lines");
                CVector row = parse_vector_line(tokens, reader, ambient);
                for (int c = 0; c < ambient; ++c) m(r, c) = row[static_cast<std::size_t>(c)];
            }
            tokens = reader.next();
            if (!tokens.empty())
                throw parse_error(reader.line(), "unexpected content after the unitary block");
            try {
                const ExactUnitary u(std::move(m), conjugating);
                return {ambient, apartment_fixture(u, GeometricApartment::standard(ambient, rank))};
            } catch (const std::invalid_argument& e) {
                throw parse_error(reader.line(), e.what());
            }
        } else {
            throw parse_error(reader.line(), "unknown directive '" + tokens[0] + "'");
        }
    }
    close_pair();
    if (pairs.empty())
        throw parse_error(reader.line(), "fixture holds neither pair blocks nor a unitary block");
    try {
        return {ambient, MapFixture(rank, std::move(pairs), "pair blocks")};
    } catch (const std::invalid_argument& e) {
        throw parse_error(reader.line(), e.what());
    }
}

} // namespace orthapt
