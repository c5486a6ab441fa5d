#include "gwzeta/spec_parser.hpp"

#include <cctype>

#include "gwzeta/json_io.hpp"

namespace gwzeta {

namespace {

class SpecParser {
public:
    SpecParser(const std::string& text, const FqTag& f) : text_(text), f_(f) {}

    Variety parse() {
        Variety v = parse_spec();
        skip_space();
        if (pos_ != text_.size()) fail("end of input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        std::string got = pos_ < text_.size() ? "'" + text_.substr(pos_, 1) + "'" : "end of input";
        throw ParseError("parse error at position " + std::to_string(pos_) + ": expected " +
                         expected + ", got " + got);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("'") + c + "'");
        ++pos_;
    }

    std::string ident() {
        skip_space();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("a variety name (Pn, A, Gr, prod, disj, P1xP1, resP1, ell, table, weil)");
        return text_.substr(start, pos_ - start);
    }

    long integer() {
        skip_space();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("an integer");
        try {
            return std::stol(text_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            throw ParseError("parse error at position " + std::to_string(start) +
                             ": integer out of range");
        }
    }

    std::string path_arg() {
        skip_space();
        size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
        if (pos_ == start) fail("a file path");
        std::string p = text_.substr(start, pos_ - start);
        while (!p.empty() && std::isspace(static_cast<unsigned char>(p.back()))) p.pop_back();
        return p;
    }

    Variety parse_spec() {
        std::string name = ident();
        if (name == "P1xP1") {
            return product(projective_space(f_, 1), projective_space(f_, 1));
        } else if (name == "resP1") {
            return weil_restriction_p1(f_);
        } else if (name == "Pn") {
            expect('(');
            long n = integer();
            expect(')');
            return projective_space(f_, static_cast<int>(n));
        } else if (name == "A") {
            expect('(');
            long n = integer();
            expect(')');
            return affine_space(f_, static_cast<int>(n));
        } else if (name == "Gr") {
            expect('(');
            long r = integer();
            expect(',');
            long n = integer();
            expect(')');
            return grassmannian(f_, static_cast<int>(r), static_cast<int>(n));
        } else if (name == "ell") {
            expect('(');
            long a = integer();
            expect(',');
            long b = integer();
            expect(')');
            return elliptic_curve(f_, a, b);
        } else if (name == "prod" || name == "disj") {
            expect('(');
            Variety lhs = parse_spec();
            expect(',');
            Variety rhs = parse_spec();
            expect(')');
            return name == "prod" ? product(lhs, rhs) : disjoint_union(lhs, rhs);
        } else if (name == "table" || name == "weil") {
            expect('(');
            std::string path = path_arg();
            expect(')');
            Variety v = load_variety_file(path, f_.q);
            if (name == "weil" && v.label() != "weil")
                throw ParseError("file " + path + " does not contain Weil data");
            return v;
        }
        pos_ -= name.size();
        fail("one of Pn, A, Gr, prod, disj, P1xP1, resP1, ell, table, weil");
    }

    const std::string& text_;
    FqTag f_;
    size_t pos_ = 0;
};

}  // namespace

Variety parse_variety(const std::string& spec, const FqTag& f) {
    return SpecParser(spec, f).parse();
}

}  // namespace gwzeta
