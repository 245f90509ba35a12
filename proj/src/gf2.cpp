#include "pcw/gf2.hpp"

#include <algorithm>
#include <stdexcept>

#include "pcw/errors.hpp"

namespace pcw {

BitVector bitvector_from_string(const std::string& bits) {
    BitVector v;
    v.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw DomainError(std::string("bad bit character '") + c + "'");
        v.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return v;
}

std::string to_string(const BitVector& v) {
    std::string s;
    s.reserve(v.size());
    for (auto b : v) s.push_back(b ? '1' : '0');
    return s;
}

int weight(const BitVector& v) {
    int w = 0;
    for (auto b : v) w += b;
    return w;
}

BitVector xor_vectors(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size())
        throw DimensionError("xor of vectors of lengths " + std::to_string(a.size()) +
                             " and " + std::to_string(b.size()));
    BitVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

BinaryMatrix::BinaryMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimensions");
}

BinaryMatrix::BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw DimensionError("ragged initializer rows");
        for (int v : r) {
            if (v != 0 && v != 1) throw DomainError("matrix entries must be 0 or 1");
            data_.push_back(static_cast<std::uint8_t>(v));
        }
    }
}

std::size_t BinaryMatrix::idx(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw DimensionError("matrix index (" + std::to_string(r) + "," +
                             std::to_string(c) + ") out of range for " +
                             std::to_string(rows_) + "x" + std::to_string(cols_));
    return static_cast<std::size_t>(r) * cols_ + c;
}

void BinaryMatrix::set(int r, int c, std::uint8_t v) {
    if (v > 1) throw DomainError("matrix entries must be 0 or 1");
    data_[idx(r, c)] = v;
}

BitVector BinaryMatrix::row(int r) const {
    BitVector out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

int BinaryMatrix::row_weight(int r) const {
    int w = 0;
    for (int c = 0; c < cols_; ++c) w += at(r, c);
    return w;
}

int BinaryMatrix::col_weight(int c) const {
    int w = 0;
    for (int r = 0; r < rows_; ++r) w += at(r, c);
    return w;
}

BitVector syndrome(const BinaryMatrix& h, const BitVector& x) {
    if (static_cast<int>(x.size()) != h.cols())
        throw DimensionError("syndrome: vector length " + std::to_string(x.size()) +
                             " does not match " + std::to_string(h.cols()) + " columns");
    BitVector s(h.rows(), 0);
    for (int r = 0; r < h.rows(); ++r) {
        std::uint8_t acc = 0;
        for (int c = 0; c < h.cols(); ++c) acc ^= static_cast<std::uint8_t>(h.at(r, c) & x[c]);
        s[r] = acc;
    }
    return s;
}

BitVector mod2(const std::vector<long long>& p) {
    BitVector out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i] = static_cast<std::uint8_t>(((p[i] % 2) + 2) % 2);
    return out;
}

namespace {

// Row-reduces a copy of h; returns the pivot column of each eliminated row.
std::vector<int> pivot_columns(const BinaryMatrix& h, std::vector<BitVector>& reduced) {
    reduced.clear();
    for (int r = 0; r < h.rows(); ++r) reduced.push_back(h.row(r));
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < h.cols() && r < h.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < h.rows(); ++i)
            if (reduced[i][c]) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(reduced[r], reduced[pivot]);
        for (int i = 0; i < h.rows(); ++i)
            if (i != r && reduced[i][c]) reduced[i] = xor_vectors(reduced[i], reduced[r]);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int gf2_rank(const BinaryMatrix& h) {
    std::vector<BitVector> scratch;
    return static_cast<int>(pivot_columns(h, scratch).size());
}

std::vector<BitVector> nullspace_basis(const BinaryMatrix& h) {
    std::vector<BitVector> reduced;
    std::vector<int> pivots = pivot_columns(h, reduced);

    std::vector<std::uint8_t> is_pivot(h.cols(), 0);
    for (int c : pivots) is_pivot[c] = 1;

    // One basis vector per free column: set it to 1, read pivot entries off
    // the reduced rows.
    std::vector<BitVector> basis;
    for (int free = 0; free < h.cols(); ++free) {
        if (is_pivot[free]) continue;
        BitVector v(h.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (reduced[r][free]) v[pivots[r]] = 1;
        basis.push_back(v);
    }
    return basis;
}

CodeDescription describe_code(const BinaryMatrix& h) {
    CodeDescription d;
    d.parity = h;
    d.basis = nullspace_basis(h);
    d.dimension = static_cast<int>(d.basis.size());
    return d;
}

std::vector<BitVector> enumerate_codewords(const BinaryMatrix& h, int max_dimension) {
    auto basis = nullspace_basis(h);
    int k = static_cast<int>(basis.size());
    if (k > max_dimension)
        throw CapacityError("code dimension " + std::to_string(k) +
                            " exceeds enumeration bound " + std::to_string(max_dimension) +
                            " (raise max_dimension to override)");
    std::vector<BitVector> words;
    words.reserve(std::size_t{1} << k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        BitVector w(h.cols(), 0);
        for (int b = 0; b < k; ++b)
            if (mask & (std::uint64_t{1} << b)) w = xor_vectors(w, basis[b]);
        words.push_back(std::move(w));
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

MlDecodeResult ml_decode_bsc(const BinaryMatrix& h, const BitVector& received,
                             int max_dimension) {
    if (static_cast<int>(received.size()) != h.cols())
        throw DimensionError("ml_decode_bsc: received word length " +
                             std::to_string(received.size()) + " does not match " +
                             std::to_string(h.cols()) + " columns");
    auto words = enumerate_codewords(h, max_dimension);
    MlDecodeResult best;
    bool first = true;
    int ties = 0;
    for (const auto& w : words) {
        int d = weight(xor_vectors(w, received));
        if (first || d < best.distance) {
            best.codeword = w;
            best.distance = d;
            ties = 1;
            first = false;
        } else if (d == best.distance) {
            ++ties; // words are sorted, so the first minimizer stays
        }
    }
    best.unique = (ties == 1);
    return best;
}

} // namespace pcw
