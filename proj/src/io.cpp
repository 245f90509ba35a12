#include "pcw/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "pcw/errors.hpp"

namespace pcw {

namespace {

// Line-oriented tokenizer that remembers positions for error messages.
struct LineReader {
    std::istream& in;
    int line_no = 0;

    // Next non-blank line split into integer tokens.
    std::vector<long long> next_ints(const std::string& what) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            std::vector<long long> out;
            std::string tok;
            bool bad = false;
            while (ls >> tok) {
                try {
                    std::size_t used = 0;
                    long long v = std::stoll(tok, &used);
                    if (used != tok.size()) bad = true;
                    out.push_back(v);
                } catch (const std::exception&) {
                    bad = true;
                }
                if (bad) throw ParseError("expected integers for " + what +
                                          ", found '" + tok + "'", line_no);
            }
            if (!out.empty()) return out;
        }
        throw ParseError("unexpected end of file, expected " + what, line_no + 1);
    }
};

} // namespace

BinaryMatrix read_matrix_plain(std::istream& in) {
    LineReader rd{in};
    auto header = rd.next_ints("the 'rows cols' header");
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        throw ParseError("header must be 'rows cols'", rd.line_no);
    int r = static_cast<int>(header[0]), n = static_cast<int>(header[1]);
    BinaryMatrix h(r, n);
    for (int j = 0; j < r; ++j) {
        auto row = rd.next_ints("row " + std::to_string(j + 1));
        if (static_cast<int>(row.size()) != n)
            throw ParseError("row " + std::to_string(j + 1) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(n), rd.line_no);
        for (int i = 0; i < n; ++i) {
            if (row[i] != 0 && row[i] != 1)
                throw ParseError("entries must be 0 or 1", rd.line_no);
            h.set(j, i, static_cast<std::uint8_t>(row[i]));
        }
    }
    return h;
}

std::string write_matrix_plain(const BinaryMatrix& h) {
    std::ostringstream os;
    os << h.rows() << ' ' << h.cols() << '\n';
    for (int j = 0; j < h.rows(); ++j) {
        for (int i = 0; i < h.cols(); ++i) {
            if (i) os << ' ';
            os << int(h.at(j, i));
        }
        os << '\n';
    }
    return os.str();
}

BinaryMatrix read_matrix_alist(std::istream& in) {
    LineReader rd{in};
    auto header = rd.next_ints("the 'cols rows' header");
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        throw ParseError("header must be 'cols rows'", rd.line_no);
    int n = static_cast<int>(header[0]), r = static_cast<int>(header[1]);

    auto maxdeg = rd.next_ints("the maximum degrees");
    if (maxdeg.size() != 2)
        throw ParseError("expected 'max_col_degree max_row_degree'", rd.line_no);

    auto col_deg = rd.next_ints("the column degrees");
    if (static_cast<int>(col_deg.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " column degrees",
                         rd.line_no);
    auto row_deg = rd.next_ints("the row degrees");
    if (static_cast<int>(row_deg.size()) != r)
        throw ParseError("expected " + std::to_string(r) + " row degrees", rd.line_no);

    BinaryMatrix h(r, n);
    for (int i = 0; i < n; ++i) {
        auto entries = rd.next_ints("the checks of column " + std::to_string(i + 1));
        long long listed = 0;
        for (long long j : entries) {
            if (j == 0) continue; // zero padding
            if (j < 1 || j > r)
                throw ParseError("check index " + std::to_string(j) + " out of range",
                                 rd.line_no);
            if (h.at(static_cast<int>(j) - 1, i))
                throw ParseError("duplicate entry in column " + std::to_string(i + 1),
                                 rd.line_no);
            h.set(static_cast<int>(j) - 1, i, 1);
            ++listed;
        }
        if (listed != col_deg[i])
            throw ParseError("column " + std::to_string(i + 1) + " lists " +
                             std::to_string(listed) + " checks, degree says " +
                             std::to_string(col_deg[i]), rd.line_no);
    }
    for (int j = 0; j < r; ++j) {
        auto entries = rd.next_ints("the bits of row " + std::to_string(j + 1));
        long long listed = 0;
        for (long long i : entries) {
            if (i == 0) continue;
            if (i < 1 || i > n)
                throw ParseError("bit index " + std::to_string(i) + " out of range",
                                 rd.line_no);
            if (!h.at(j, static_cast<int>(i) - 1))
                throw ParseError("row " + std::to_string(j + 1) + " lists bit " +
                                 std::to_string(i) + " absent from the column lists",
                                 rd.line_no);
            ++listed;
        }
        if (listed != row_deg[j] || listed != h.row_weight(j))
            throw ParseError("row " + std::to_string(j + 1) +
                             " disagrees with the column lists", rd.line_no);
    }
    return h;
}

std::string write_matrix_alist(const BinaryMatrix& h) {
    std::ostringstream os;
    int n = h.cols(), r = h.rows();
    os << n << ' ' << r << '\n';
    int maxc = 0, maxr = 0;
    for (int i = 0; i < n; ++i) maxc = std::max(maxc, h.col_weight(i));
    for (int j = 0; j < r; ++j) maxr = std::max(maxr, h.row_weight(j));
    os << maxc << ' ' << maxr << '\n';
    for (int i = 0; i < n; ++i) os << h.col_weight(i) << (i + 1 < n ? ' ' : '\n');
    if (n == 0) os << '\n';
    for (int j = 0; j < r; ++j) os << h.row_weight(j) << (j + 1 < r ? ' ' : '\n');
    if (r == 0) os << '\n';
    // Empty lists are written as a lone 0 so the reader, which skips blank
    // lines, still sees one line per column/row.
    for (int i = 0; i < n; ++i) {
        bool first = true;
        for (int j = 0; j < r; ++j)
            if (h.at(j, i)) {
                os << (first ? "" : " ") << j + 1;
                first = false;
            }
        if (first) os << 0;
        os << '\n';
    }
    for (int j = 0; j < r; ++j) {
        bool first = true;
        for (int i = 0; i < n; ++i)
            if (h.at(j, i)) {
                os << (first ? "" : " ") << i + 1;
                first = false;
            }
        if (first) os << 0;
        os << '\n';
    }
    return os.str();
}

BinaryMatrix load_matrix(const std::string& path, MatrixFormat format) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    if (format == MatrixFormat::automatic) {
        format = path.size() >= 6 && path.substr(path.size() - 6) == ".alist"
                     ? MatrixFormat::alist
                     : MatrixFormat::plain;
    }
    return format == MatrixFormat::alist ? read_matrix_alist(in)
                                         : read_matrix_plain(in);
}

std::string matrix_digest(const BinaryMatrix& h) {
    std::string bytes = write_matrix_plain(h);
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[hash & 0xF];
        hash >>= 4;
    }
    return out;
}

} // namespace pcw
