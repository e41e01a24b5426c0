#include "twistspin/abelian.hpp"

#include <optional>
#include <sstream>
#include <utility>

#include "twistspin/error.hpp"

namespace twistspin {

  ////////////////////////////////////////////////////////////////////////
  // IntMatrix
  ////////////////////////////////////////////////////////////////////////

  IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
      : _rows(rows.size()), _cols(rows.size() == 0 ? 0 : rows.begin()->size()) {
    _entries.reserve(_rows * _cols);
    for (auto const& row : rows) {
      if (row.size() != _cols) {
        throw Error("ragged IntMatrix initializer");
      }
      for (long x : row) {
        _entries.emplace_back(x);
      }
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t c = 0; c < _cols; ++c) {
      std::swap((*this)(a, c), (*this)(b, c));
    }
  }

  void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t r = 0; r < _rows; ++r) {
      std::swap((*this)(r, a), (*this)(r, b));
    }
  }

  void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                   BigInt const& k) {
    for (std::size_t c = 0; c < _cols; ++c) {
      (*this)(dst, c) += k * (*this)(src, c);
    }
  }

  void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                   BigInt const& k) {
    for (std::size_t r = 0; r < _rows; ++r) {
      (*this)(r, dst) += k * (*this)(r, src);
    }
  }

  void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < _cols; ++c) {
      (*this)(r, c) = -(*this)(r, c);
    }
  }

  std::string to_string(IntMatrix const& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c > 0) {
          out += ' ';
        }
        out += m(r, c).get_str();
      }
      out += '\n';
    }
    return out;
  }

  IntMatrix parse_int_matrix(std::string_view text) {
    std::vector<std::vector<BigInt>> rows;
    std::istringstream               in{std::string(text)};
    std::string                      line;
    while (std::getline(in, line)) {
      std::istringstream  ls(line);
      std::string         tok;
      std::vector<BigInt> row;
      while (ls >> tok) {
        BigInt v;
        if (v.set_str(tok, 10) != 0) {
          throw ParseError("not an integer: '" + tok + "'");
        }
        row.push_back(v);
      }
      if (!row.empty()) {
        rows.push_back(std::move(row));
      }
    }
    std::size_t const cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix         m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) {
        throw ParseError("matrix rows have different lengths");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = rows[r][c];
      }
    }
    return m;
  }

  IntMatrix relation_matrix(Presentation const& p) {
    IntMatrix m(p.num_relators(), p.num_generators());
    for (std::size_t i = 0; i < p.num_relators(); ++i) {
      for (auto const& s : p.relators()[i].syllables()) {
        m(i, s.gen) += s.exp;
      }
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Smith normal form
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Pivot {
      std::size_t row;
      std::size_t col;
    };

    std::optional<Pivot> least_entry(IntMatrix const& a, std::size_t t) {
      std::optional<Pivot> best;
      BigInt               best_abs;
      for (std::size_t r = t; r < a.rows(); ++r) {
        for (std::size_t c = t; c < a.cols(); ++c) {
          if (a(r, c) == 0) {
            continue;
          }
          BigInt v = abs(a(r, c));
          if (!best || v < best_abs) {
            best     = Pivot{r, c};
            best_abs = v;
          }
        }
      }
      return best;
    }
  }  // namespace

  SmithDecomposition smith_decompose(IntMatrix a) {
    SmithDecomposition out;
    out.column_transform = IntMatrix::identity(a.cols());
    IntMatrix&        v  = out.column_transform;
    std::size_t const n  = std::min(a.rows(), a.cols());
    BigInt            q;

    for (std::size_t t = 0; t < n; ++t) {
      bool clean = false;
      while (!clean) {
        auto pivot = least_entry(a, t);
        if (!pivot) {
          return out;
        }
        a.swap_rows(t, pivot->row);
        a.swap_cols(t, pivot->col);
        v.swap_cols(t, pivot->col);

        clean = true;
        for (std::size_t r = t + 1; r < a.rows(); ++r) {
          if (a(r, t) == 0) {
            continue;
          }
          mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
          a.add_row_multiple(r, t, -q);
          clean = clean && a(r, t) == 0;
        }
        for (std::size_t c = t + 1; c < a.cols(); ++c) {
          if (a(t, c) == 0) {
            continue;
          }
          mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
          a.add_col_multiple(c, t, -q);
          v.add_col_multiple(c, t, -q);
          clean = clean && a(t, c) == 0;
        }
        if (!clean) {
          continue;
        }
        // The pivot must divide the whole trailing block; otherwise fold an
        // offending row into row t and go again.
        for (std::size_t r = t + 1; r < a.rows() && clean; ++r) {
          for (std::size_t c = t + 1; c < a.cols(); ++c) {
            if (!mpz_divisible_p(a(r, c).get_mpz_t(), a(t, t).get_mpz_t())) {
              a.add_row_multiple(t, r, 1);
              clean = false;
              break;
            }
          }
        }
      }
      if (a(t, t) < 0) {
        a.negate_row(t);
      }
      out.diagonal.push_back(a(t, t));
    }
    return out;
  }

  SmithFactors smith_invariant_factors(IntMatrix const& m) {
    SmithDecomposition d = smith_decompose(m);
    SmithFactors       f;
    f.rank    = d.diagonal.size();
    f.factors = std::move(d.diagonal);
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Abelianization
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(AbelianInvariants const& a) {
    std::string out;
    if (a.free_rank > 0) {
      out = "Z^" + std::to_string(a.free_rank);
    }
    for (auto const& d : a.torsion) {
      if (!out.empty()) {
        out += " + ";
      }
      out += "Z/" + d.get_str();
    }
    return out.empty() ? "0" : out;
  }

  bool AbelianElement::is_zero() const {
    for (auto const& x : free_part) {
      if (x != 0) {
        return false;
      }
    }
    for (auto const& x : torsion_part) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  Abelianization::Abelianization(Presentation const& p)
      : _num_generators(p.num_generators()) {
    SmithDecomposition d = smith_decompose(relation_matrix(p));
    _rank                = d.diagonal.size();
    _diagonal            = std::move(d.diagonal);
    _transform           = std::move(d.column_transform);
    _invariants.free_rank = _num_generators - _rank;
    for (auto const& x : _diagonal) {
      if (x > 1) {
        _invariants.torsion.push_back(x);
      }
    }
  }

  AbelianElement
  Abelianization::coordinates(std::vector<BigInt> const& sums) const {
    AbelianElement e;
    for (std::size_t j = 0; j < _num_generators; ++j) {
      BigInt c = 0;
      for (std::size_t i = 0; i < _num_generators; ++i) {
        c += sums[i] * _transform(i, j);
      }
      if (j >= _rank) {
        e.free_part.push_back(c);
      } else if (_diagonal[j] > 1) {
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), _diagonal[j].get_mpz_t());
        e.torsion_part.push_back(r);
      }
    }
    return e;
  }

  AbelianElement Abelianization::image(Word const& w) const {
    if (w.generator_bound() > _num_generators) {
      throw Error("word uses a generator outside the presentation");
    }
    std::vector<BigInt> sums(_num_generators, BigInt(0));
    for (auto const& s : w.syllables()) {
      sums[s.gen] += s.exp;
    }
    return coordinates(sums);
  }

  AbelianElement Abelianization::add(AbelianElement const& a,
                                     AbelianElement const& b) const {
    AbelianElement out = a;
    for (std::size_t i = 0; i < out.free_part.size(); ++i) {
      out.free_part[i] += b.free_part[i];
    }
    for (std::size_t i = 0; i < out.torsion_part.size(); ++i) {
      out.torsion_part[i] += b.torsion_part[i];
      out.torsion_part[i] %= _invariants.torsion[i];
    }
    return out;
  }

  AbelianElement Abelianization::zero() const {
    return image(Word());
  }

  AbelianElement abelian_image(Word const& w, Abelianization const& ab) {
    return ab.image(w);
  }

  AbelianElement abelian_image(Word const& w, Presentation const& p) {
    p.check_word(w);
    return Abelianization(p).image(w);
  }

}  // namespace twistspin
