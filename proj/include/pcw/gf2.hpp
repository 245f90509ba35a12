#ifndef PCW_GF2_HPP
#define PCW_GF2_HPP

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace pcw {

// Vector over GF(2); entries are 0/1 bytes.
using BitVector = std::vector<std::uint8_t>;

BitVector bitvector_from_string(const std::string& bits); // "1011" -> {1,0,1,1}
std::string to_string(const BitVector& v);
int weight(const BitVector& v);
BitVector xor_vectors(const BitVector& a, const BitVector& b);

// Dense 0/1 matrix, row-major.  Rows index checks, columns index bits.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);
    // Rows listed top to bottom, e.g. {{1,1,0},{0,1,1}}.
    BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint8_t at(int r, int c) const { return data_[idx(r, c)]; }
    void set(int r, int c, std::uint8_t v);

    BitVector row(int r) const;
    int row_weight(int r) const;
    int col_weight(int c) const;

    bool operator==(const BinaryMatrix& other) const = default;

private:
    std::size_t idx(int r, int c) const;
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint8_t> data_;
};

// H * x over GF(2).  Throws DimensionError on length mismatch.
BitVector syndrome(const BinaryMatrix& h, const BitVector& x);

// Componentwise parity of an integer vector.
BitVector mod2(const std::vector<long long>& p);

int gf2_rank(const BinaryMatrix& h);

// Basis of the right null space (the code), via Gaussian elimination.
std::vector<BitVector> nullspace_basis(const BinaryMatrix& h);

// Null space data bundled with the matrix it came from.
struct CodeDescription {
    BinaryMatrix parity;
    int dimension = 0;
    std::vector<BitVector> basis;
};

CodeDescription describe_code(const BinaryMatrix& h);

inline constexpr int kDefaultMaxDimension = 24;

// All 2^k codewords in lexicographic order.  Throws CapacityError when the
// code dimension exceeds max_dimension.
std::vector<BitVector> enumerate_codewords(const BinaryMatrix& h,
                                           int max_dimension = kDefaultMaxDimension);

struct MlDecodeResult {
    BitVector codeword;  // lexicographically least among minimizers
    int distance = 0;
    bool unique = false;
};

// Exhaustive maximum-likelihood decoding for the binary symmetric channel:
// nearest codeword in Hamming distance.
MlDecodeResult ml_decode_bsc(const BinaryMatrix& h, const BitVector& received,
                             int max_dimension = kDefaultMaxDimension);

} // namespace pcw

#endif
