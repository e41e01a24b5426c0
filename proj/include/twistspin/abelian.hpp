#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "twistspin/presentation.hpp"
#include "twistspin/word.hpp"

namespace twistspin {

  // Dense row-major matrix of arbitrary-precision integers.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _entries(rows * cols, BigInt(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    BigInt& operator()(std::size_t r, std::size_t c) {
      return _entries[r * _cols + c];
    }
    BigInt const& operator()(std::size_t r, std::size_t c) const {
      return _entries[r * _cols + c];
    }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, BigInt const& k);
    // col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, BigInt const& k);
    void negate_row(std::size_t r);

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

   private:
    std::size_t         _rows = 0;
    std::size_t         _cols = 0;
    std::vector<BigInt> _entries;
  };

  // One line per row, entries separated by single spaces.
  std::string to_string(IntMatrix const& m);
  // Inverse of to_string; ragged rows are a ParseError.
  IntMatrix parse_int_matrix(std::string_view text);

  // Entry (i, j) is the exponent sum of generator j in relator i.
  IntMatrix relation_matrix(Presentation const& p);

  struct SmithFactors {
    std::vector<BigInt> factors;  // nonzero diagonal, each dividing the next
    std::size_t         rank = 0;
  };

  // D = U * m * V with U, V unimodular and D diagonal. Only V is kept since
  // the cokernel coordinates need nothing else.
  struct SmithDecomposition {
    std::vector<BigInt> diagonal;  // positive, divisibility chain
    IntMatrix           column_transform;
  };

  // Pivot: nonzero entry of least absolute value in the trailing block, ties
  // to the lowest (row, col).
  SmithDecomposition smith_decompose(IntMatrix m);
  SmithFactors       smith_invariant_factors(IntMatrix const& m);

  struct AbelianInvariants {
    std::size_t         free_rank = 0;
    std::vector<BigInt> torsion;  // each >= 2, each dividing the next

    friend bool operator==(AbelianInvariants const&,
                           AbelianInvariants const&) = default;
  };

  // `Z^r + Z/d1 + ... + Z/dk`; the trivial group prints as `0`.
  std::string to_string(AbelianInvariants const& a);

  struct AbelianElement {
    std::vector<BigInt> free_part;
    std::vector<BigInt> torsion_part;  // component i lies in [0, torsion[i])

    bool is_zero() const;
    friend bool operator==(AbelianElement const&,
                           AbelianElement const&) = default;
  };

  // Abelianization of a presentation together with the coordinate change
  // needed to read off images of words.
  class Abelianization {
   public:
    explicit Abelianization(Presentation const& p);

    AbelianInvariants const& invariants() const noexcept {
      return _invariants;
    }
    std::size_t num_generators() const noexcept {
      return _num_generators;
    }

    AbelianElement image(Word const& w) const;
    AbelianElement add(AbelianElement const& a, AbelianElement const& b) const;
    AbelianElement zero() const;

   private:
    AbelianElement coordinates(std::vector<BigInt> const& exponent_sums) const;

    std::size_t         _num_generators = 0;
    std::size_t         _rank           = 0;
    std::vector<BigInt> _diagonal;
    IntMatrix           _transform;
    AbelianInvariants   _invariants;
  };

  inline Abelianization abelianization(Presentation const& p) {
    return Abelianization(p);
  }

  // Throws Error when `w` does not fit the presentation's generator table.
  AbelianElement abelian_image(Word const& w, Abelianization const& ab);
  AbelianElement abelian_image(Word const& w, Presentation const& p);

}  // namespace twistspin
